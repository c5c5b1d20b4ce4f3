//! Thompson's group F as reduced right fractions over the positive monoid.
//!
//! A signed word rewrites to a fraction `x * y^{-1}` with `x`, `y` positive:
//! negative letters move right past positive ones via
//! `p_i^{-1} p_j = p_{j+1} p_i^{-1}` (i < j) and
//! `p_j^{-1} p_i = p_i p_{j+1}^{-1}` (i < j), adjacent inverse pairs cancel,
//! and a final trailing-cancellation loop brings the pair to lowest terms.
//! The lowest-terms pair is unique, which is what makes divisibility,
//! quotients, and least common multiples computable.

use std::fmt;

use crate::error::Error;
use crate::word::{normalize, Element, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

/// A generator or its inverse: `p_j` or `p_j^{-1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SignedLetter {
    pub index: u32,
    pub sign: Sign,
}

impl SignedLetter {
    pub fn positive(index: u32) -> SignedLetter {
        SignedLetter { index, sign: Sign::Plus }
    }

    pub fn negative(index: u32) -> SignedLetter {
        SignedLetter { index, sign: Sign::Minus }
    }
}

impl fmt::Display for SignedLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            Sign::Plus => write!(f, "p{}", self.index),
            Sign::Minus => write!(f, "p{}^-1", self.index),
        }
    }
}

/// A group element as a right fraction `x * y^{-1}` in lowest terms.
///
/// Lowest terms means there is no index `j` with positive `p_j`-exponent in
/// both components whose successor exponent vanishes in both; two fractions
/// are equal exactly when they are componentwise equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupElement {
    num: Element,
    den: Element,
}

impl GroupElement {
    pub fn one() -> GroupElement {
        GroupElement {
            num: Element::one(),
            den: Element::one(),
        }
    }

    pub fn from_element(e: Element) -> GroupElement {
        GroupElement {
            num: e,
            den: Element::one(),
        }
    }

    pub fn numerator(&self) -> &Element {
        &self.num
    }

    pub fn denominator(&self) -> &Element {
        &self.den
    }

    pub fn is_positive(&self) -> bool {
        self.den.is_one()
    }

    pub fn to_element(&self) -> Result<Element, Error> {
        if self.is_positive() {
            Ok(self.num.clone())
        } else {
            Err(Error::NotPositive(self.clone()))
        }
    }

    /// The defining signed word: numerator letters, then inverted
    /// denominator letters in reverse.
    pub fn signed_word(&self) -> Vec<SignedLetter> {
        let mut out: Vec<SignedLetter> = self
            .num
            .to_word()
            .indices()
            .into_iter()
            .map(SignedLetter::positive)
            .collect();
        out.extend(
            self.den
                .to_word()
                .indices()
                .into_iter()
                .rev()
                .map(SignedLetter::negative),
        );
        out
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_positive() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

enum Step {
    Cancel,
    Swap(SignedLetter, SignedLetter),
}

/// The rewrite applicable at position `pos`, if any.
fn step_at(w: &[SignedLetter], pos: usize) -> Option<Step> {
    let (x, y) = (w[pos], w[pos + 1]);
    match (x.sign, y.sign) {
        (Sign::Minus, Sign::Plus) => {
            let (a, b) = (x.index, y.index);
            if a == b {
                Some(Step::Cancel)
            } else if a < b {
                Some(Step::Swap(
                    SignedLetter::positive(b.checked_add(1).expect("letter index overflow")),
                    SignedLetter::negative(a),
                ))
            } else {
                Some(Step::Swap(
                    SignedLetter::positive(b),
                    SignedLetter::negative(a.checked_add(1).expect("letter index overflow")),
                ))
            }
        }
        (Sign::Plus, Sign::Minus) if x.index == y.index => Some(Step::Cancel),
        _ => None,
    }
}

/// Applies the rewrite at `pos` when one exists. Exposed for the
/// strategy-independence tests.
pub(crate) fn rewrite_at(w: &mut Vec<SignedLetter>, pos: usize) -> bool {
    if pos + 1 >= w.len() {
        return false;
    }
    match step_at(w, pos) {
        Some(Step::Cancel) => {
            w.drain(pos..=pos + 1);
            true
        }
        Some(Step::Swap(a, b)) => {
            w[pos] = a;
            w[pos + 1] = b;
            true
        }
        None => false,
    }
}

/// Splits a sorted signed word (positives then negatives) into the
/// lowest-terms fraction.
pub(crate) fn split_sorted(w: &[SignedLetter]) -> GroupElement {
    let cut = w
        .iter()
        .position(|l| l.sign == Sign::Minus)
        .unwrap_or(w.len());
    debug_assert!(w[cut..].iter().all(|l| l.sign == Sign::Minus));
    let num_word = Word::from_indices(&w[..cut].iter().map(|l| l.index).collect::<Vec<_>>());
    // the denominator is the inverse of the negative tail, so reverse it
    let den_word = Word::from_indices(
        &w[cut..]
            .iter()
            .rev()
            .map(|l| l.index)
            .collect::<Vec<_>>(),
    );
    lowest_terms(normalize(&num_word), normalize(&den_word))
}

/// Trailing-cancellation loop on the exponent vectors: while some index `j`
/// has positive exponent in both components and index `j+1` has exponent 0
/// in both, decrement at `j` and shift all exponents above `j+1` down one
/// position. Scans from the largest index downward.
fn lowest_terms(x: Element, y: Element) -> GroupElement {
    let top = x.max_index().max(y.max_index()).map_or(0, |m| m as usize + 1);
    let mut a = vec![0u32; top + 1];
    let mut b = vec![0u32; top + 1];
    for &(i, e) in x.runs() {
        a[i as usize] = e;
    }
    for &(i, e) in y.runs() {
        b[i as usize] = e;
    }
    loop {
        let mut hit = None;
        for j in (0..a.len()).rev() {
            let next_zero = j + 1 >= a.len() || (a[j + 1] == 0 && b[j + 1] == 0);
            if a[j] > 0 && b[j] > 0 && next_zero {
                hit = Some(j);
                break;
            }
        }
        match hit {
            Some(j) => {
                a[j] -= 1;
                b[j] -= 1;
                if j + 1 < a.len() {
                    a.remove(j + 1);
                    b.remove(j + 1);
                }
            }
            None => break,
        }
    }
    GroupElement {
        num: dense_to_element(&a),
        den: dense_to_element(&b),
    }
}

fn dense_to_element(v: &[u32]) -> Element {
    let mut indices = Vec::new();
    for (i, &e) in v.iter().enumerate() {
        for _ in 0..e {
            indices.push(i as u32);
        }
    }
    Element::from_sorted_indices(&indices)
}

/// Rewrites a signed word to its unique lowest-terms fraction.
///
/// Scanning is leftmost-innermost; the fixed point does not depend on the
/// strategy (tested, not assumed).
pub fn reduce(word: &[SignedLetter]) -> GroupElement {
    let mut w = word.to_vec();
    let mut pos = 0;
    while pos + 1 < w.len() {
        if rewrite_at(&mut w, pos) {
            pos = pos.saturating_sub(1);
        } else {
            pos += 1;
        }
    }
    split_sorted(&w)
}

pub fn multiply_group(a: &GroupElement, b: &GroupElement) -> GroupElement {
    let mut w = a.signed_word();
    w.extend(b.signed_word());
    reduce(&w)
}

/// `(x y^{-1})^{-1} = y x^{-1}`; the lowest-terms condition is symmetric,
/// so inversion is a plain swap.
pub fn invert(a: &GroupElement) -> GroupElement {
    GroupElement {
        num: a.den.clone(),
        den: a.num.clone(),
    }
}

/// Signed word for `e^{-1}` with `e` positive.
pub fn inverse_word(e: &Element) -> Vec<SignedLetter> {
    e.to_word()
        .indices()
        .into_iter()
        .rev()
        .map(SignedLetter::negative)
        .collect()
}

pub fn positive_word(e: &Element) -> Vec<SignedLetter> {
    e.to_word()
        .indices()
        .into_iter()
        .map(SignedLetter::positive)
        .collect()
}
