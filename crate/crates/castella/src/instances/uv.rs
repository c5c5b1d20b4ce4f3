//! The two-generator monoid with relation `VU = UV^2`.
//!
//! Every element has the form `U^m V^n`; the composition law is
//! `(m1, n1) (m2, n2) = (m1 + m2, 2^{m2} n1 + n2)`. The monoid is an
//! integral monoid but not homogeneous: `(1, 2)` factors both as
//! `V * U` (two letters) and `U * V * V` (three letters), so no letter
//! count is well-defined.

use std::fmt;

use crate::error::Error;
use crate::instances::{Factorizations, MonoidInstance};

/// `U^m V^n` with `m, n >= 0`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct UvElement {
    pub u_pow: u32,
    pub v_pow: u64,
}

impl UvElement {
    pub fn one() -> UvElement {
        UvElement::default()
    }

    pub fn new(u_pow: u32, v_pow: u64) -> UvElement {
        UvElement { u_pow, v_pow }
    }

    pub fn is_one(&self) -> bool {
        self.u_pow == 0 && self.v_pow == 0
    }
}

impl fmt::Display for UvElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        if self.u_pow > 0 {
            first = false;
            if self.u_pow == 1 {
                write!(f, "U")?;
            } else {
                write!(f, "U^{}", self.u_pow)?;
            }
        }
        if self.v_pow > 0 {
            if !first {
                write!(f, " ")?;
            }
            if self.v_pow == 1 {
                write!(f, "V")?;
            } else {
                write!(f, "V^{}", self.v_pow)?;
            }
        }
        Ok(())
    }
}

/// `(m1, n1) * (m2, n2) = (m1 + m2, 2^{m2} n1 + n2)`. Overflow is a hard
/// error, never wraparound.
pub fn uv_multiply(a: &UvElement, b: &UvElement) -> Result<UvElement, Error> {
    let u_pow = a.u_pow.checked_add(b.u_pow).ok_or(Error::Overflow)?;
    let shifted = if a.v_pow == 0 {
        0
    } else {
        if b.u_pow >= 64 {
            return Err(Error::Overflow);
        }
        a.v_pow
            .checked_mul(1u64 << b.u_pow)
            .ok_or(Error::Overflow)?
    };
    let v_pow = shifted.checked_add(b.v_pow).ok_or(Error::Overflow)?;
    Ok(UvElement { u_pow, v_pow })
}

/// All ordered factorizations of `c`, by enumerating `m2 <= m(c)` and
/// solving `2^{m2} n1 + n2 = n(c)` over the non-negative integers.
pub fn uv_divisor_pairs(c: &UvElement) -> Vec<(UvElement, UvElement)> {
    let mut out = Vec::new();
    for m2 in 0..=c.u_pow {
        let m1 = c.u_pow - m2;
        let n1_max = if m2 >= 64 { 0 } else { c.v_pow >> m2 };
        for n1 in 0..=n1_max {
            let n2 = c.v_pow - (n1 << m2.min(63));
            out.push((UvElement::new(m1, n1), UvElement::new(m2, n2)));
        }
    }
    out.sort();
    out
}

pub struct UvMonoid;

impl MonoidInstance for UvMonoid {
    type Elem = UvElement;

    fn identity(&self) -> UvElement {
        UvElement::one()
    }

    fn multiply(&self, a: &UvElement, b: &UvElement) -> Result<UvElement, Error> {
        uv_multiply(a, b)
    }

    fn divisor_pairs(&self, u: &UvElement) -> Result<Factorizations<UvElement>, Error> {
        Ok(uv_divisor_pairs(u))
    }

    fn render(&self, u: &UvElement) -> String {
        u.to_string()
    }
}
