use std::collections::BTreeSet;

use castella::word::{normalize, Element, Word};
use rand::rngs::StdRng;
use rand::Rng;

pub fn elem(indices: &[u32]) -> Element {
    normalize(&Word::from_indices(indices))
}

/// All elements with `ind <= max_ind` over letter indices `0..=max_idx`
/// (normal forms are multisets of indices).
pub fn elements_up_to(max_ind: usize, max_idx: u32) -> Vec<Element> {
    let mut multisets: BTreeSet<Vec<u32>> = BTreeSet::new();
    multisets.insert(Vec::new());
    let mut frontier: Vec<Vec<u32>> = vec![Vec::new()];
    for _ in 0..max_ind {
        let mut next = Vec::new();
        for m in &frontier {
            let lo = m.last().copied().unwrap_or(0);
            for i in lo..=max_idx {
                let mut m2 = m.clone();
                m2.push(i);
                if multisets.insert(m2.clone()) {
                    next.push(m2);
                }
            }
        }
        frontier = next;
    }
    multisets
        .into_iter()
        .map(|m| elem(&m))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect()
}

pub fn random_element(rng: &mut StdRng, max_ind: usize, max_idx: u32) -> Element {
    let len = rng.gen_range(0..=max_ind);
    let ix: Vec<u32> = (0..len).map(|_| rng.gen_range(0..=max_idx)).collect();
    elem(&ix)
}
