//! Free abelian monoids: the commutative model, where every castling is a
//! plain swap and the classical arithmetic identities hold.
//!
//! An element is a finitely supported exponent vector over generator ids.
//! `parse_natural` factors a positive integer over the primes (ids are the
//! prime values themselves); the grid construction behind `folner_ratio`
//! uses ids `0..k`.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use num::rational::BigRational;
use num::BigInt;

use crate::error::Error;
use crate::instances::{Factorizations, MonoidInstance};

/// An exponent vector with finitely many non-zero entries.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AbelianElement {
    exponents: BTreeMap<u64, u32>,
}

impl AbelianElement {
    pub fn one() -> AbelianElement {
        AbelianElement::default()
    }

    pub fn generator(id: u64) -> AbelianElement {
        AbelianElement {
            exponents: BTreeMap::from([(id, 1)]),
        }
    }

    pub fn from_exponents(pairs: &[(u64, u32)]) -> AbelianElement {
        let mut exponents = BTreeMap::new();
        for &(id, e) in pairs {
            if e > 0 {
                *exponents.entry(id).or_insert(0) += e;
            }
        }
        AbelianElement { exponents }
    }

    pub fn exponents(&self) -> &BTreeMap<u64, u32> {
        &self.exponents
    }

    pub fn is_one(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn ind(&self) -> u64 {
        self.exponents.values().map(|&e| u64::from(e)).sum()
    }

    pub fn multiply(&self, other: &AbelianElement) -> AbelianElement {
        let mut exponents = self.exponents.clone();
        for (&id, &e) in &other.exponents {
            *exponents.entry(id).or_insert(0) += e;
        }
        AbelianElement { exponents }
    }

    /// Componentwise max.
    pub fn lcm(&self, other: &AbelianElement) -> AbelianElement {
        let mut exponents = self.exponents.clone();
        for (&id, &e) in &other.exponents {
            let slot = exponents.entry(id).or_insert(0);
            *slot = (*slot).max(e);
        }
        AbelianElement { exponents }
    }

    /// Componentwise min.
    pub fn gcd(&self, other: &AbelianElement) -> AbelianElement {
        let exponents = self
            .exponents
            .iter()
            .filter_map(|(&id, &e)| {
                let m = e.min(other.exponents.get(&id).copied().unwrap_or(0));
                (m > 0).then_some((id, m))
            })
            .collect();
        AbelianElement { exponents }
    }

    pub fn tau(&self) -> u64 {
        self.exponents
            .values()
            .map(|&e| u64::from(e) + 1)
            .product()
    }

    pub fn mu(&self) -> i64 {
        if self.exponents.values().any(|&e| e >= 2) {
            0
        } else if self.exponents.len().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn lambda(&self) -> i64 {
        if self.ind().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn divisors(&self) -> Vec<AbelianElement> {
        let keys: Vec<u64> = self.exponents.keys().copied().collect();
        let mut out = vec![AbelianElement::one()];
        for &id in &keys {
            let e = self.exponents[&id];
            let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
            for d in &out {
                for k in 0..=e {
                    let mut exps = d.exponents.clone();
                    if k > 0 {
                        exps.insert(id, k);
                    }
                    next.push(AbelianElement { exponents: exps });
                }
            }
            out = next;
        }
        out.sort();
        out
    }
}

impl fmt::Display for AbelianElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponents.is_empty() {
            return write!(f, "1");
        }
        for (t, (&id, &e)) in self.exponents.iter().enumerate() {
            if t > 0 {
                write!(f, " ")?;
            }
            if e == 1 {
                write!(f, "x{id}")?;
            } else {
                write!(f, "x{id}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Factors `n >= 1` by trial division; generator ids are the prime values.
/// Desk scale: `n <= 10^12`.
pub fn parse_natural(n: u64) -> Result<AbelianElement, Error> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "natural-number elements start at 1".into(),
        ));
    }
    if n > 1_000_000_000_000 {
        return Err(Error::InvalidArgument(
            "natural-number parsing is limited to 10^12".into(),
        ));
    }
    let mut rest = n;
    let mut exponents = BTreeMap::new();
    let mut p = 2u64;
    while p * p <= rest {
        while rest.is_multiple_of(p) {
            *exponents.entry(p).or_insert(0) += 1;
            rest /= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        *exponents.entry(rest).or_insert(0) += 1;
    }
    Ok(AbelianElement { exponents })
}

/// Renders an element of the natural-number model back as an integer.
pub fn render_natural(u: &AbelianElement) -> String {
    let mut n: u128 = 1;
    for (&p, &e) in u.exponents() {
        for _ in 0..e {
            n = n.saturating_mul(u128::from(p));
        }
    }
    n.to_string()
}

/// The free abelian monoid on `generators` generators (or unboundedly many
/// when `None`, the natural-number model).
pub struct FreeAbelianMonoid {
    pub generators: Option<u32>,
    /// Render elements as the integers they factor, rather than as
    /// generator words.
    pub integer_rendering: bool,
}

impl FreeAbelianMonoid {
    pub fn naturals() -> FreeAbelianMonoid {
        FreeAbelianMonoid {
            generators: None,
            integer_rendering: true,
        }
    }

    pub fn with_generators(k: u32) -> FreeAbelianMonoid {
        FreeAbelianMonoid {
            generators: Some(k),
            integer_rendering: false,
        }
    }
}

impl MonoidInstance for FreeAbelianMonoid {
    type Elem = AbelianElement;

    fn identity(&self) -> AbelianElement {
        AbelianElement::one()
    }

    fn multiply(&self, a: &AbelianElement, b: &AbelianElement) -> Result<AbelianElement, Error> {
        Ok(a.multiply(b))
    }

    fn divisor_pairs(&self, u: &AbelianElement) -> Result<Factorizations<AbelianElement>, Error> {
        Ok(u.divisors()
            .into_iter()
            .map(|d| {
                let quotient = AbelianElement {
                    exponents: u
                        .exponents
                        .iter()
                        .filter_map(|(&id, &e)| {
                            let rest = e - d.exponents.get(&id).copied().unwrap_or(0);
                            (rest > 0).then_some((id, rest))
                        })
                        .collect(),
                };
                (d, quotient)
            })
            .collect())
    }

    fn render(&self, u: &AbelianElement) -> String {
        if self.integer_rendering {
            render_natural(u)
        } else {
            u.to_string()
        }
    }
}

/// The exact boundary ratio `|g_i F_n  symmetric-difference  F_n| / |F_n|`
/// for the exponent grid `F_n = {0..n-1}^k` in the free abelian monoid on
/// `k` generators, computed by set construction. Equals `2/n`: shifting
/// one coordinate swaps the two boundary slabs of the grid.
pub fn folner_ratio(k: u32, i: u32, n: u32, cap: usize) -> Result<BigRational, Error> {
    if k == 0 {
        return Err(Error::InvalidArgument("at least one generator".into()));
    }
    if i >= k {
        return Err(Error::InvalidArgument(format!(
            "generator index {i} out of range for {k} generators"
        )));
    }
    if n == 0 {
        return Err(Error::InvalidArgument("scale must be at least 1".into()));
    }
    let size = (n as u128).checked_pow(k).ok_or(Error::Overflow)?;
    if size > cap as u128 {
        return Err(Error::CapExceeded { cap });
    }

    let mut grid: Vec<AbelianElement> = vec![AbelianElement::one()];
    for id in 0..k {
        let mut next = Vec::with_capacity(grid.len() * n as usize);
        for g in &grid {
            for e in 0..n {
                let mut exps = g.exponents.clone();
                if e > 0 {
                    exps.insert(u64::from(id), e);
                }
                next.push(AbelianElement { exponents: exps });
            }
        }
        grid = next;
    }
    let f_n: HashSet<AbelianElement> = grid.into_iter().collect();
    let shifted: HashSet<AbelianElement> = f_n
        .iter()
        .map(|g| g.multiply(&AbelianElement::generator(u64::from(i))))
        .collect();
    let sym_diff = f_n.symmetric_difference(&shifted).count();
    Ok(BigRational::new(
        BigInt::from(sym_diff),
        BigInt::from(f_n.len()),
    ))
}
