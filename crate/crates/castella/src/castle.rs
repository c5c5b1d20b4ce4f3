//! Castlings of letters, words, and elements.
//!
//! A castling rewrites an ordered pair `(u, v)` into `(v~, u~)` with
//! `u v = v~ u~` and both letter counts preserved. At the letter level the
//! ordered pair `p_i, p_j` castles exactly when `i - j != -1`:
//!
//! ```text
//! (i, j) -> (j, i)      if i = j          e.g. p_2 p_2 = p_2 p_2
//! (i, j) -> (j, i+1)    if i - j >= 1     e.g. p_2 p_0 = p_0 p_3
//! (i, j) -> (j-1, i)    if i - j <= -2    e.g. p_0 p_2 = p_1 p_0
//! ```
//!
//! Word castlings push every letter of the left word through the right word;
//! the result does not depend on how the words are split. Element castlings
//! come in three strengths: *weak* castles the two maximum words, *strong*
//! castles against the minimum word of the right element (so every word
//! pair castles), and *free* additionally requires the prime supports of
//! the left input and left output to be disjoint.

use crate::arith::prime_divisors;
use crate::word::{max_word, min_word, multiply, normalize, Element, Word};

/// The result of castling `(u, v)`: `left * right == u * v`,
/// `ind(left) == ind(v)`, and `ind(right) == ind(u)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CastlePair {
    pub left: Element,
    pub right: Element,
}

/// One letter-level rewrite, recorded for traces.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CastleStep {
    pub before: (u32, u32),
    pub after: (u32, u32),
}

/// Castles the ordered letter pair `(i, j)`, returning `(j~, i~)`.
/// Blocked exactly when `i - j = -1`.
pub fn castle_letters(i: u32, j: u32) -> Option<(u32, u32)> {
    if j > i && j - i == 1 {
        None
    } else if i == j {
        Some((j, i))
    } else if i > j {
        Some((j, i.checked_add(1).expect("letter index overflow")))
    } else {
        Some((j - 1, i))
    }
}

fn castle_words_inner(
    u: &Word,
    v: &Word,
    mut trace: Option<&mut Vec<CastleStep>>,
) -> Option<(Word, Word)> {
    let mut cur_v = v.indices();
    let mut out_u = vec![0u32; u.ind()];
    // rightmost letter of u first; each letter is pushed left to right
    // through the current v
    for (slot, &x0) in u.indices().iter().enumerate().rev() {
        let mut x = x0;
        for vj in cur_v.iter_mut() {
            let (j_new, x_new) = castle_letters(x, *vj)?;
            if let Some(t) = trace.as_deref_mut() {
                t.push(CastleStep {
                    before: (x, *vj),
                    after: (j_new, x_new),
                });
            }
            *vj = j_new;
            x = x_new;
        }
        out_u[slot] = x;
    }
    Some((Word::from_indices(&cur_v), Word::from_indices(&out_u)))
}

/// Castles the ordered word pair `(U, V)` into `(V~, U~)`, or `None` if any
/// letter pair along the way is blocked.
pub fn castle_words(u: &Word, v: &Word) -> Option<(Word, Word)> {
    castle_words_inner(u, v, None)
}

/// Same as [`castle_words`], also returning the letter-step trace.
pub fn castle_words_traced(u: &Word, v: &Word) -> Option<(Word, Word, Vec<CastleStep>)> {
    let mut steps = Vec::new();
    let (vt, ut) = castle_words_inner(u, v, Some(&mut steps))?;
    Some((vt, ut, steps))
}

/// Weak castling: castles the maximum words of `u` and `v`. Castlability
/// does not depend on which word of `u` is used and is monotone in the word
/// of `v`, so the maximum-word test is definitive.
pub fn weak_castle(u: &Element, v: &Element) -> Option<CastlePair> {
    let (vt, ut) = castle_words(&max_word(u), &max_word(v))?;
    let pair = CastlePair {
        left: normalize(&vt),
        right: normalize(&ut),
    };
    debug_assert_eq!(multiply(&pair.left, &pair.right), multiply(u, v));
    debug_assert_eq!(pair.left.ind(), v.ind());
    debug_assert_eq!(pair.right.ind(), u.ind());
    Some(pair)
}

pub fn is_weakly_castlable(u: &Element, v: &Element) -> bool {
    castle_words(&max_word(u), &max_word(v)).is_some()
}

/// Strong castling: castles against the minimum word of `v`, the hardest
/// word to pass. On success every word of `u` castles with every word of
/// `v`, and the resulting elements coincide with the weak castling's.
pub fn strong_castle(u: &Element, v: &Element) -> Option<CastlePair> {
    let (vt, ut) = castle_words(&max_word(u), &min_word(v))?;
    Some(CastlePair {
        left: normalize(&vt),
        right: normalize(&ut),
    })
}

pub fn is_strongly_castlable(u: &Element, v: &Element) -> bool {
    castle_words(&max_word(u), &min_word(v)).is_some()
}

/// Free castling: a weak castling whose inputs share no primes with the
/// castled output, i.e. `gcd(u, v~) = 1`. Disjointness of the prime
/// supports is the working test, since any non-trivial common divisor has
/// a prime divisor.
pub fn free_castle(u: &Element, v: &Element) -> Option<CastlePair> {
    let pair = weak_castle(u, v)?;
    let pd_u = prime_divisors(u);
    let pd_left = prime_divisors(&pair.left);
    if pd_u.iter().any(|p| pd_left.contains(p)) {
        None
    } else {
        Some(pair)
    }
}

pub fn is_castled_free(u: &Element, v: &Element) -> bool {
    free_castle(u, v).is_some()
}
