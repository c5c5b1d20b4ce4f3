//! Letters, words, normal forms, and the word order for Thompson's monoid.
//!
//! The monoid is generated by letters `p_0, p_1, p_2, ...` subject to
//! `p_j p_i = p_i p_{j+1}` for `0 <= i < j`. Every element has a unique
//! normal form `p_0^{a_0} p_1^{a_1} ... p_n^{a_n}` with non-decreasing
//! indices. The distinct letter sequences multiplying to a given element
//! are its *words*; they all have the same length, and they carry a
//! partial order generated by single adjacent rewrites.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use crate::error::Error;

/// Default cap on nodes visited by word-set enumeration.
pub const DEFAULT_NODE_CAP: usize = 1_000_000;

/// A generator symbol `p_j`, identified by its index `j >= 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(pub u32);

impl Letter {
    pub fn index(self) -> u32 {
        self.0
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p{}", self.0)
    }
}

/// Index increments are hard errors on overflow, never wraparound.
fn bump(i: u32) -> u32 {
    i.checked_add(1).expect("letter index overflow")
}

/// A finite sequence of letters, read left to right as a product.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn empty() -> Word {
        Word { letters: Vec::new() }
    }

    pub fn new(letters: Vec<Letter>) -> Word {
        Word { letters }
    }

    pub fn from_indices(indices: &[u32]) -> Word {
        Word {
            letters: indices.iter().copied().map(Letter).collect(),
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn indices(&self) -> Vec<u32> {
        self.letters.iter().map(|l| l.0).collect()
    }

    /// Letter count; equal for all words of one element.
    pub fn ind(&self) -> usize {
        self.letters.len()
    }

    /// Sum of the letter indices. Each increasing rewrite raises it by 1.
    pub fn sigma(&self) -> u64 {
        self.letters.iter().map(|l| u64::from(l.0)).sum()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (t, l) in self.letters.iter().enumerate() {
            if t > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", l.0)?;
        }
        write!(f, "]")
    }
}

/// A monoid element, stored as its unique normal form: runs of
/// `(index, exponent)` with strictly increasing indices and exponents >= 1.
/// The empty run list is the identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Element {
    runs: Vec<(u32, u32)>,
}

impl Element {
    pub fn one() -> Element {
        Element { runs: Vec::new() }
    }

    pub fn prime(j: u32) -> Element {
        Element { runs: vec![(j, 1)] }
    }

    pub fn prime_power(j: u32, k: u32) -> Element {
        if k == 0 {
            Element::one()
        } else {
            Element { runs: vec![(j, k)] }
        }
    }

    pub fn runs(&self) -> &[(u32, u32)] {
        &self.runs
    }

    pub fn is_one(&self) -> bool {
        self.runs.is_empty()
    }

    /// `p_j`-exponent in the normal form.
    pub fn exponent_of(&self, j: u32) -> u32 {
        self.runs
            .iter()
            .find(|&&(i, _)| i == j)
            .map_or(0, |&(_, e)| e)
    }

    pub fn max_index(&self) -> Option<u32> {
        self.runs.last().map(|&(i, _)| i)
    }

    /// Total letter count of any word of this element.
    pub fn ind(&self) -> u64 {
        self.runs.iter().map(|&(_, e)| u64::from(e)).sum()
    }

    /// Whether the element is `1` or a power of a single letter.
    pub fn is_prime_power(&self) -> bool {
        self.runs.len() <= 1
    }

    /// The normal-form word, which is the maximum word of the element.
    pub fn to_word(&self) -> Word {
        let mut letters = Vec::with_capacity(self.ind() as usize);
        for &(i, e) in &self.runs {
            for _ in 0..e {
                letters.push(Letter(i));
            }
        }
        Word { letters }
    }

    fn letter_indices(&self) -> impl Iterator<Item = u32> + '_ {
        self.runs
            .iter()
            .flat_map(|&(i, e)| std::iter::repeat_n(i, e as usize))
    }

    pub(crate) fn from_sorted_indices(indices: &[u32]) -> Element {
        debug_assert!(indices.windows(2).all(|w| w[0] <= w[1]));
        let mut runs: Vec<(u32, u32)> = Vec::new();
        for &i in indices {
            match runs.last_mut() {
                Some((j, e)) if *j == i => *e += 1,
                _ => runs.push((i, 1)),
            }
        }
        Element { runs }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.runs.is_empty() {
            return write!(f, "1");
        }
        for (t, &(i, e)) in self.runs.iter().enumerate() {
            if t > 0 {
                write!(f, " ")?;
            }
            if e == 1 {
                write!(f, "p{i}")?;
            } else {
                write!(f, "p{i}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Elements sort by `(ind, lexicographic normal form)`; this is the
/// canonical ordering used for all rendered sets.
impl Ord for Element {
    fn cmp(&self, other: &Element) -> std::cmp::Ordering {
        self.ind()
            .cmp(&other.ind())
            .then_with(|| self.letter_indices().cmp(other.letter_indices()))
    }
}

impl PartialOrd for Element {
    fn partial_cmp(&self, other: &Element) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Rewrites a word to the unique normal form of the element it represents.
///
/// Letters are inserted left to right into a non-decreasing prefix; moving a
/// letter past a strictly larger one bumps the larger index by 1, which is
/// exactly the defining relation read right to left.
pub fn normalize(w: &Word) -> Element {
    let mut buf: Vec<u32> = Vec::with_capacity(w.ind());
    for &Letter(x) in w.letters() {
        let mut pos = buf.len();
        while pos > 0 && buf[pos - 1] > x {
            pos -= 1;
        }
        for slot in &mut buf[pos..] {
            *slot = bump(*slot);
        }
        buf.insert(pos, x);
    }
    Element::from_sorted_indices(&buf)
}

pub fn multiply(a: &Element, b: &Element) -> Element {
    normalize(&a.to_word().concat(&b.to_word()))
}

pub fn power(u: &Element, n: u32) -> Element {
    let mut acc = Element::one();
    for _ in 0..n {
        acc = multiply(&acc, u);
    }
    acc
}

/// Single adjacent rewrites that raise sigma by 1: `(i, j)` with
/// `i - j >= 1` becomes `(j, i+1)`.
pub(crate) fn increasing_neighbors(w: &Word) -> Vec<Word> {
    let ix = w.indices();
    let mut out = Vec::new();
    for t in 0..ix.len().saturating_sub(1) {
        if ix[t] > ix[t + 1] {
            let mut next = ix.clone();
            next[t] = ix[t + 1];
            next[t + 1] = bump(ix[t]);
            out.push(Word::from_indices(&next));
        }
    }
    out
}

/// Single adjacent rewrites that lower sigma by 1: `(i, j)` with
/// `j - i >= 2` becomes `(j-1, i)`.
pub(crate) fn decreasing_neighbors(w: &Word) -> Vec<Word> {
    let ix = w.indices();
    let mut out = Vec::new();
    for t in 0..ix.len().saturating_sub(1) {
        if ix[t + 1] >= ix[t] + 2 {
            let mut next = ix.clone();
            next[t] = ix[t + 1] - 1;
            next[t + 1] = ix[t];
            out.push(Word::from_indices(&next));
        }
    }
    out
}

/// The full word set of an element: the closure of its normal-form word
/// under single adjacent rewrites in both directions.
///
/// The search is a hash-set BFS over at most `cap` distinct words;
/// exceeding the cap signals the instance is too large to enumerate.
pub fn enumerate_words(u: &Element, cap: usize) -> Result<BTreeSet<Word>, Error> {
    let start = max_word(u);
    let mut seen: HashSet<Word> = HashSet::new();
    let mut queue: VecDeque<Word> = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start);
    while let Some(w) = queue.pop_front() {
        for nb in increasing_neighbors(&w)
            .into_iter()
            .chain(decreasing_neighbors(&w))
        {
            if seen.insert(nb.clone()) {
                if seen.len() > cap {
                    return Err(Error::CapExceeded { cap });
                }
                queue.push_back(nb);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// The maximum word: the normal form, the unique sigma-maximizer.
pub fn max_word(u: &Element) -> Word {
    u.to_word()
}

/// The minimum word: the unique word whose adjacent index gaps all satisfy
/// `j_r - j_{r+1} >= -1`, reached by greedily applying decreasing rewrites.
pub fn min_word(u: &Element) -> Word {
    let mut ix = u.to_word().indices();
    loop {
        let mut changed = false;
        let mut t = 0;
        while t + 1 < ix.len() {
            if ix[t + 1] >= ix[t] + 2 {
                let (a, b) = (ix[t], ix[t + 1]);
                ix[t] = b - 1;
                ix[t + 1] = a;
                changed = true;
                // the pair to the left may now be rewritable
                t = t.saturating_sub(1);
            } else {
                t += 1;
            }
        }
        if !changed {
            return Word::from_indices(&ix);
        }
    }
}

/// Whether `b` is reachable from `a` by a sequence of sigma-increasing
/// adjacent rewrites (the word order; reflexive). The two words must
/// represent the same element.
pub fn word_precedes(a: &Word, b: &Word) -> Result<bool, Error> {
    let ea = normalize(a);
    let eb = normalize(b);
    if ea != eb {
        return Err(Error::NotSameElement { left: ea, right: eb });
    }
    if a == b {
        return Ok(true);
    }
    let target_sigma = b.sigma();
    if a.sigma() >= target_sigma {
        return Ok(false);
    }
    let mut seen: HashSet<Word> = HashSet::new();
    let mut queue: VecDeque<Word> = VecDeque::new();
    seen.insert(a.clone());
    queue.push_back(a.clone());
    while let Some(w) = queue.pop_front() {
        for nb in increasing_neighbors(&w) {
            if nb == *b {
                return Ok(true);
            }
            if nb.sigma() < target_sigma && seen.insert(nb.clone()) {
                queue.push_back(nb);
            }
        }
    }
    Ok(false)
}

/// Conjugation by `p_0`: shifts every normal-form index `j >= 1` to `j + 1`
/// and fixes the `p_0`-run.
pub fn iota(u: &Element) -> Element {
    let runs = u
        .runs()
        .iter()
        .map(|&(i, e)| if i == 0 { (0, e) } else { (bump(i), e) })
        .collect();
    Element { runs }
}

/// Inverse of [`iota`]; defined exactly when the `p_1`-exponent is 0.
pub fn iota_inverse(u: &Element) -> Result<Element, Error> {
    if u.exponent_of(1) != 0 {
        return Err(Error::ShiftInverseDomain(u.clone()));
    }
    let runs = u
        .runs()
        .iter()
        .map(|&(i, e)| if i == 0 { (0, e) } else { (i - 1, e) })
        .collect();
    Ok(Element { runs })
}
