//! Divisibility, divisor and co-divisor sets, lcm/gcd and their co-
//! variants, prime multiplicities, and fully castlable structure.
//!
//! `d | u` is decided by reducing `d^{-1} u` and checking positivity;
//! `lcm[u, v] = u * y` where `x y^{-1}` is the lowest-terms fraction of
//! `v^{-1} u`. Prime multiplicities come from strong castlings of the
//! prefixes (resp. suffixes) of any word of the element; the multiset does
//! not depend on the word chosen.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::{Arc, RwLock};

use crate::castle::strong_castle;
use crate::error::Error;
use crate::group::{inverse_word, positive_word, reduce};
use crate::word::{max_word, multiply, normalize, Element, Word, DEFAULT_NODE_CAP};

/// A multiset of prime indices with multiplicities >= 1.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PrimeMultiset {
    counts: BTreeMap<u32, u32>,
}

impl PrimeMultiset {
    pub fn new() -> PrimeMultiset {
        PrimeMultiset::default()
    }

    pub fn insert(&mut self, prime: u32) {
        *self.counts.entry(prime).or_insert(0) += 1;
    }

    pub fn multiplicity(&self, prime: u32) -> u32 {
        self.counts.get(&prime).copied().unwrap_or(0)
    }

    /// Distinct primes, in increasing index order.
    pub fn support(&self) -> Vec<u32> {
        self.counts.keys().copied().collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.counts.iter().map(|(&p, &m)| (p, m))
    }

    /// Total multiplicity (big omega).
    pub fn total(&self) -> u64 {
        self.counts.values().map(|&m| u64::from(m)).sum()
    }

    /// Support size (little omega).
    pub fn distinct(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }
}

impl fmt::Display for PrimeMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (t, (&p, &m)) in self.counts.iter().enumerate() {
            if t > 0 {
                write!(f, ", ")?;
            }
            write!(f, "p{p}:{m}")?;
        }
        write!(f, "}}")
    }
}

/// `d | u`: does `d^{-1} u` lie in the monoid?
pub fn divides(d: &Element, u: &Element) -> bool {
    let mut w = inverse_word(d);
    w.extend(positive_word(u));
    reduce(&w).is_positive()
}

/// The unique `e` with `d * e = u`.
pub fn quotient_left(u: &Element, d: &Element) -> Result<Element, Error> {
    let mut w = inverse_word(d);
    w.extend(positive_word(u));
    reduce(&w).to_element().map_err(|_| Error::NotDivisible {
        divisor: d.clone(),
        of: u.clone(),
    })
}

/// `v` co-divides `w`: does `w v^{-1}` lie in the monoid?
pub fn co_divides(v: &Element, w: &Element) -> bool {
    let mut word = positive_word(w);
    word.extend(inverse_word(v));
    reduce(&word).is_positive()
}

/// The unique `e` with `e * v = w`.
pub fn quotient_right(w: &Element, v: &Element) -> Result<Element, Error> {
    let mut word = positive_word(w);
    word.extend(inverse_word(v));
    reduce(&word).to_element().map_err(|_| Error::NotCoDivisor {
        codivisor: v.clone(),
        of: w.clone(),
    })
}

/// Least common right multiple of a pair: `lcm[u, v] = u * y` with
/// `x y^{-1}` the lowest-terms fraction of `v^{-1} u`.
pub fn lcm_pair(u: &Element, v: &Element) -> Element {
    let mut w = inverse_word(v);
    w.extend(positive_word(u));
    let fraction = reduce(&w);
    let out = multiply(u, fraction.denominator());
    debug_assert_eq!(out, multiply(v, fraction.numerator()));
    out
}

/// Left fold of the pairwise lcm; order-independent.
pub fn lcm(items: &[Element]) -> Element {
    assert!(!items.is_empty(), "lcm of an empty list");
    items[1..]
        .iter()
        .fold(items[0].clone(), |acc, v| lcm_pair(&acc, v))
}

/// Prime divisors with multiplicity, read off the normal-form word.
pub fn pdm(u: &Element) -> PrimeMultiset {
    pdm_of_word(&max_word(u))
}

/// Prime divisors with multiplicity from an arbitrary word `q_1 .. q_k`:
/// for each position `j`, if the prefix `q_1 .. q_{j-1}` strongly castles
/// with `q_j`, the castled letter is one prime divisor. The multiset is
/// word-independent.
pub fn pdm_of_word(w: &Word) -> PrimeMultiset {
    let ix = w.indices();
    let mut out = PrimeMultiset::new();
    for j in 0..ix.len() {
        let prefix = normalize(&Word::from_indices(&ix[..j]));
        if let Some(pair) = strong_castle(&prefix, &Element::prime(ix[j])) {
            debug_assert_eq!(pair.left.ind(), 1);
            out.insert(pair.left.runs()[0].0);
        }
    }
    out
}

/// Prime co-divisors with multiplicity, read off the normal-form word.
pub fn pdm_co(u: &Element) -> PrimeMultiset {
    pdm_co_of_word(&max_word(u))
}

/// Co-divisor counterpart of [`pdm_of_word`]: for each position `r`, if
/// `q_r` strongly castles with the suffix `q_{r+1} .. q_k`, the castled
/// letter is one prime co-divisor.
pub fn pdm_co_of_word(w: &Word) -> PrimeMultiset {
    let ix = w.indices();
    let mut out = PrimeMultiset::new();
    for r in 0..ix.len() {
        let suffix = normalize(&Word::from_indices(&ix[r + 1..]));
        if let Some(pair) = strong_castle(&Element::prime(ix[r]), &suffix) {
            debug_assert_eq!(pair.right.ind(), 1);
            out.insert(pair.right.runs()[0].0);
        }
    }
    out
}

/// Distinct prime divisors (the support of [`pdm`]).
pub fn prime_divisors(u: &Element) -> Vec<u32> {
    pdm(u).support()
}

pub fn omega(u: &Element) -> usize {
    pdm(u).distinct()
}

pub fn big_omega(u: &Element) -> u64 {
    pdm(u).total()
}

pub fn omega_co(u: &Element) -> usize {
    pdm_co(u).distinct()
}

pub fn big_omega_co(u: &Element) -> u64 {
    pdm_co(u).total()
}

/// The prime `q` with `p * q = lcm[p, r]` (and `beta(p, p) = p`).
pub fn beta(p: u32, r: u32) -> u32 {
    if p == r {
        return p;
    }
    let pe = Element::prime(p);
    let re = Element::prime(r);
    let l = lcm_pair(&pe, &re);
    let q = quotient_left(&l, &pe).expect("p divides lcm[p, r]");
    debug_assert_eq!(q.ind(), 1);
    q.runs()[0].0
}

/// `u` is fully castlable iff it equals the lcm of its prime powers
/// `q^m` taken over [`pdm`] — equivalently, every two-part factorization
/// of `u` is strongly castlable.
pub fn is_fully_castlable(u: &Element) -> bool {
    u == &prime_power_lcm(u)
}

fn prime_power_lcm(u: &Element) -> Element {
    let parts: Vec<Element> = pdm(u)
        .iter()
        .map(|(p, m)| Element::prime_power(p, m))
        .collect();
    if parts.is_empty() {
        Element::one()
    } else {
        lcm(&parts)
    }
}

/// Factors `u` as `u_1 u_2 ... u_t` where each `u_j` is the greatest fully
/// castlable divisor of what remains.
pub fn gfc_decompose(u: &Element) -> Vec<Element> {
    let mut rest = u.clone();
    let mut out = Vec::new();
    while !rest.is_one() {
        let head = prime_power_lcm(&rest);
        rest = quotient_left(&rest, &head).expect("greatest fully castlable divisor divides");
        out.push(head);
    }
    out
}

/// Memoized divisor sets, with a node cap as an engineering guard.
///
/// The cache is insert-only and idempotent: concurrent readers and writers
/// may duplicate work but never corrupt a result.
pub struct DivisorCache {
    map: RwLock<HashMap<Element, Arc<Vec<Element>>>>,
    cap: usize,
}

impl Default for DivisorCache {
    fn default() -> DivisorCache {
        DivisorCache::with_cap(DEFAULT_NODE_CAP)
    }
}

impl DivisorCache {
    pub fn new() -> DivisorCache {
        DivisorCache::default()
    }

    pub fn with_cap(cap: usize) -> DivisorCache {
        DivisorCache {
            map: RwLock::new(HashMap::new()),
            cap,
        }
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    /// All divisors of `u`, sorted by `(ind, lexicographic normal form)`.
    ///
    /// Computed by prime-peeling: `Div(u) = {1} + union over p in PD(u) of
    /// p * Div(p^{-1} u)`, memoized on the normal form.
    pub fn divisors(&self, u: &Element) -> Result<Arc<Vec<Element>>, Error> {
        if let Some(hit) = self.map.read().expect("divisor cache poisoned").get(u) {
            return Ok(hit.clone());
        }
        let mut set: BTreeSet<Element> = BTreeSet::new();
        set.insert(Element::one());
        for p in prime_divisors(u) {
            let pe = Element::prime(p);
            let rest = quotient_left(u, &pe).expect("prime divisor divides");
            for d in self.divisors(&rest)?.iter() {
                set.insert(multiply(&pe, d));
                if set.len() > self.cap {
                    return Err(Error::CapExceeded { cap: self.cap });
                }
            }
        }
        let out = Arc::new(set.into_iter().collect::<Vec<Element>>());
        let mut map = self.map.write().expect("divisor cache poisoned");
        Ok(map.entry(u.clone()).or_insert(out).clone())
    }

    /// Co-divisors, computed by complementation: `{u d^{-1} : d | u}`.
    pub fn co_divisors(&self, u: &Element) -> Result<Vec<Element>, Error> {
        let divs = self.divisors(u)?;
        let mut out: BTreeSet<Element> = BTreeSet::new();
        for d in divs.iter() {
            out.insert(quotient_left(u, d).expect("divisor divides"));
        }
        debug_assert_eq!(out.len(), divs.len());
        Ok(out.into_iter().collect())
    }

    /// The divisor function: number of ordered factorizations `u = d e`.
    pub fn tau(&self, u: &Element) -> Result<u64, Error> {
        Ok(self.divisors(u)?.len() as u64)
    }

    /// All ordered factorizations `(d, e)` with `d e = u`.
    pub fn divisor_pairs(&self, u: &Element) -> Result<Vec<(Element, Element)>, Error> {
        let divs = self.divisors(u)?;
        divs.iter()
            .map(|d| Ok((d.clone(), quotient_left(u, d)?)))
            .collect()
    }

    /// Greatest common divisor: the maximum-`ind` common divisor, verified
    /// to absorb every common divisor. A verification failure would be an
    /// internal invariant violation and panics.
    pub fn gcd(&self, items: &[Element]) -> Result<Element, Error> {
        assert!(!items.is_empty(), "gcd of an empty list");
        if items.len() == 1 {
            return Ok(items[0].clone());
        }
        let mut common: BTreeSet<Element> =
            self.divisors(&items[0])?.iter().cloned().collect();
        for u in &items[1..] {
            let divs: BTreeSet<Element> = self.divisors(u)?.iter().cloned().collect();
            common = common.intersection(&divs).cloned().collect();
        }
        // Ord is (ind, lex), so the last element has maximal ind
        let best = common.iter().next_back().expect("1 is always common").clone();
        for c in &common {
            if !divides(c, &best) {
                panic!("gcd invariant violated: {c} does not divide candidate {best}");
            }
        }
        Ok(best)
    }

    /// Least common co-multiple of `items` up to `w`:
    /// `(gcd(w u_1^{-1}, ..., w u_k^{-1}))^{-1} w`.
    pub fn lcm_co(&self, w: &Element, items: &[Element]) -> Result<Element, Error> {
        assert!(!items.is_empty(), "lcm_co of an empty list");
        let cofactors = items
            .iter()
            .map(|u| quotient_right(w, u))
            .collect::<Result<Vec<_>, _>>()?;
        let g = self.gcd(&cofactors)?;
        quotient_left(w, &g)
    }

    /// Greatest common co-divisor of `items` up to `w`:
    /// `(lcm[w v_1^{-1}, ..., w v_k^{-1}])^{-1} w`.
    pub fn gcd_co(&self, w: &Element, items: &[Element]) -> Result<Element, Error> {
        assert!(!items.is_empty(), "gcd_co of an empty list");
        let cofactors = items
            .iter()
            .map(|v| quotient_right(w, v))
            .collect::<Result<Vec<_>, _>>()?;
        let l = lcm(&cofactors);
        quotient_left(w, &l)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::Word;

    fn elem(ix: &[u32]) -> Element {
        normalize(&Word::from_indices(ix))
    }

    fn u_golden() -> Element {
        elem(&[0, 0, 1, 4])
    }

    fn v_golden() -> Element {
        elem(&[0, 2, 3])
    }

    #[test]
    fn divides_examples() {
        assert!(divides(&elem(&[0, 2]), &u_golden()));
        assert!(!divides(&elem(&[2]), &u_golden()));
        assert!(co_divides(&u_golden(), &u_golden()));
    }

    #[test]
    fn quotient_examples() {
        assert_eq!(quotient_left(&elem(&[0, 2]), &elem(&[0])).unwrap(), elem(&[2]));
        assert_eq!(quotient_left(&elem(&[0, 2]), &elem(&[1])).unwrap(), elem(&[0]));
        assert_eq!(quotient_right(&elem(&[0, 2]), &elem(&[0])).unwrap(), elem(&[1]));
        assert!(matches!(
            quotient_left(&elem(&[2]), &elem(&[0])),
            Err(Error::NotDivisible { .. })
        ));
    }

    #[test]
    fn divisor_sets_golden() {
        let cache = DivisorCache::new();
        let divs = cache.divisors(&u_golden()).unwrap();
        let expected: Vec<Element> = vec![
            Element::one(),
            elem(&[0]),
            elem(&[1]),
            elem(&[0, 0]),
            elem(&[0, 2]),
            elem(&[0, 0, 1]),
            elem(&[0, 0, 3]),
            elem(&[0, 0, 1, 4]),
        ]
        .into_iter()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
        assert_eq!(divs.as_slice(), expected.as_slice());
        assert_eq!(cache.tau(&u_golden()).unwrap(), 8);

        let divs = cache.divisors(&v_golden()).unwrap();
        let expected: Vec<Element> = vec![
            Element::one(),
            elem(&[0]),
            elem(&[1]),
            elem(&[0, 2]),
            elem(&[1, 2]),
            elem(&[0, 2, 3]),
        ]
        .into_iter()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
        assert_eq!(divs.as_slice(), expected.as_slice());

        assert_eq!(cache.tau(&Element::prime_power(3, 5)).unwrap(), 6);
    }

    #[test]
    fn co_divisor_count_matches_tau() {
        let cache = DivisorCache::new();
        let co = cache.co_divisors(&u_golden()).unwrap();
        assert_eq!(co.len() as u64, cache.tau(&u_golden()).unwrap());
        assert!(co.contains(&u_golden()));
        assert!(co.contains(&Element::one()));
    }

    #[test]
    fn lcm_examples() {
        assert_eq!(lcm_pair(&elem(&[0]), &elem(&[1])), elem(&[0, 2]));
        assert_eq!(lcm_pair(&elem(&[0, 0]), &elem(&[1, 1])), elem(&[0, 0, 3, 3]));
        assert_eq!(
            lcm_pair(&elem(&[0, 1, 2, 8]), &elem(&[3])),
            multiply(&elem(&[0, 1, 2, 8]), &elem(&[6]))
        );
        assert_eq!(lcm(&[u_golden()]), u_golden());
    }

    #[test]
    fn gcd_examples() {
        let cache = DivisorCache::new();
        assert_eq!(cache.gcd(&[u_golden(), v_golden()]).unwrap(), elem(&[0, 2]));
        assert_eq!(cache.gcd(&[u_golden(), Element::one()]).unwrap(), Element::one());
        assert_eq!(
            cache.gcd(&[elem(&[0, 0, 0]), elem(&[0, 0, 1])]).unwrap(),
            elem(&[0, 0])
        );
        assert_eq!(
            cache
                .gcd(&[elem(&[0, 0]), elem(&[0, 1]), elem(&[0, 2])])
                .unwrap(),
            elem(&[0])
        );
    }

    #[test]
    fn lcm_cofactors_need_not_be_coprime() {
        // lcm[p0p1p2p8, p3] = (p0p1p2p8) p6 = p3 (p0p1p2p9), and p6 still
        // divides the second cofactor: p0p1p2p9 = p6 p0p1p2
        let cache = DivisorCache::new();
        let x = elem(&[0, 1, 2, 9]);
        assert!(divides(&elem(&[6]), &x));
        assert_eq!(quotient_left(&x, &elem(&[6])).unwrap(), elem(&[0, 1, 2]));
        assert_eq!(cache.gcd(&[elem(&[6]), x]).unwrap(), elem(&[6]));
    }

    #[test]
    fn co_variant_examples() {
        let cache = DivisorCache::new();
        let w = v_golden(); // p0 p2 p3
        assert_eq!(
            cache.gcd_co(&w, &[elem(&[3]), elem(&[0, 3])]).unwrap(),
            elem(&[3])
        );
        assert_eq!(cache.lcm_co(&w, &[w.clone(), w.clone()]).unwrap(), w);
        assert!(matches!(
            cache.lcm_co(&w, &[elem(&[5])]),
            Err(Error::NotCoDivisor { .. })
        ));
    }

    #[test]
    fn pdm_golden() {
        let u = elem(&[0, 3, 3, 5]);
        let m = pdm(&u);
        assert_eq!(m.multiplicity(0), 1);
        assert_eq!(m.multiplicity(2), 2);
        assert_eq!(m.total(), 3);

        let mc = pdm_co(&u);
        assert_eq!(mc.support(), vec![0, 3, 5]);
        assert_eq!(mc.total(), 3);

        let v = elem(&[0, 1, 1]);
        assert_eq!(big_omega(&v), 1);
        assert_eq!(big_omega_co(&v), 2);
        assert_eq!(pdm(&v).support(), vec![0]);
        assert_eq!(pdm_co(&v).support(), vec![1]);
    }

    #[test]
    fn pdm_word_independent_on_golden() {
        // u = p_0 p_3^2 p_5 has the word p_2 p_0 p_4 p_3
        let w = Word::from_indices(&[2, 0, 4, 3]);
        assert_eq!(normalize(&w), elem(&[0, 3, 3, 5]));
        assert_eq!(pdm_of_word(&w), pdm(&elem(&[0, 3, 3, 5])));
        assert_eq!(pdm_co_of_word(&w), pdm_co(&elem(&[0, 3, 3, 5])));
    }

    #[test]
    fn omega_examples() {
        assert_eq!(big_omega(&u_golden()), 3);
        assert_eq!(
            pdm(&u_golden()).iter().collect::<Vec<_>>(),
            vec![(0, 2), (1, 1)]
        );
        assert_eq!(omega(&Element::one()), 0);
        assert_eq!(omega(&elem(&[0, 2])), 2);
    }

    #[test]
    fn beta_examples() {
        assert_eq!(beta(0, 1), 2);
        assert_eq!(beta(5, 5), 5);
        let q = beta(3, 0);
        assert_eq!(
            multiply(&Element::prime(3), &Element::prime(q)),
            lcm_pair(&Element::prime(3), &Element::prime(0))
        );
    }

    #[test]
    fn fully_castlable_examples() {
        assert!(is_fully_castlable(&elem(&[0, 2])));
        assert!(!is_fully_castlable(&u_golden()));
        let q3 = Element::prime_power(2, 3);
        assert!(is_fully_castlable(&q3));
        assert_eq!(gfc_decompose(&q3), vec![q3.clone()]);
        assert!(is_fully_castlable(&Element::one()));
        assert_eq!(gfc_decompose(&Element::one()), Vec::<Element>::new());
    }

    #[test]
    fn pdm_recovers_defining_prime_powers_of_an_lcm() {
        // lcm[p1^2, p3, p4^3] carries exactly the prime multiset
        // {p1:2, p3:1, p4:3}, and the lcm is fully castlable
        let u1 = lcm(&[
            Element::prime_power(1, 2),
            Element::prime(3),
            Element::prime_power(4, 3),
        ]);
        assert_eq!(u1, elem(&[1, 1, 5, 7, 7, 7]));
        assert_eq!(
            pdm(&u1).iter().collect::<Vec<_>>(),
            vec![(1, 2), (3, 1), (4, 3)]
        );
        assert!(is_fully_castlable(&u1));
        assert_eq!(pdm(&Element::prime_power(2, 5)).iter().collect::<Vec<_>>(), vec![(2, 5)]);
    }

    #[test]
    fn nuclei_chain_golden() {
        // u = lcm[p1^2, p3, p4^3] * lcm[p2, p3, p6^2] decomposes back into
        // exactly its two fully castlable factors; absorbing p1 into the
        // first factor keeps it a single nucleus, while p0 transforms it
        // and ejects p1^2
        let u1 = lcm(&[
            Element::prime_power(1, 2),
            Element::prime(3),
            Element::prime_power(4, 3),
        ]);
        let u2 = lcm(&[
            Element::prime(2),
            Element::prime(3),
            Element::prime_power(6, 2),
        ]);
        let u = multiply(&u1, &u2);
        assert_eq!(gfc_decompose(&u), vec![u1.clone(), u2]);

        let absorbed = multiply(&Element::prime(1), &u1);
        assert_eq!(
            absorbed,
            lcm(&[
                Element::prime_power(1, 3),
                Element::prime(2),
                Element::prime_power(3, 3),
            ])
        );
        assert!(is_fully_castlable(&absorbed));

        let bumped = multiply(&Element::prime(0), &u1);
        let head = lcm(&[
            Element::prime(0),
            Element::prime(2),
            Element::prime_power(3, 3),
        ]);
        assert_eq!(bumped, multiply(&head, &Element::prime_power(1, 2)));
        assert_eq!(gfc_decompose(&bumped), vec![head, Element::prime_power(1, 2)]);
    }

    #[test]
    fn gfc_decompose_multiplies_back() {
        for u in [u_golden(), v_golden(), elem(&[0, 1, 1]), elem(&[2, 4, 6])] {
            let parts = gfc_decompose(&u);
            let back = parts
                .iter()
                .fold(Element::one(), |acc, p| multiply(&acc, p));
            assert_eq!(back, u);
            for p in &parts {
                assert!(is_fully_castlable(p));
            }
        }
    }

    #[test]
    fn divisor_cap() {
        let cache = DivisorCache::with_cap(3);
        assert!(matches!(
            cache.divisors(&u_golden()),
            Err(Error::CapExceeded { cap: 3 })
        ));
    }
}
