//! A minimal integral-monoid interface with three instances: this crate's
//! main monoid, free abelian monoids (the natural-number model), and the
//! two-generator monoid with `VU = UV^2`.
//!
//! The interface is deliberately thin: castlings are not part of it, since
//! only the main monoid carries them (the `VU = UV^2` monoid is not even
//! homogeneous, so no letter-count homomorphism exists there).

mod abelian;
mod uv;

pub use abelian::{folner_ratio, parse_natural, AbelianElement, FreeAbelianMonoid};
pub use uv::{uv_divisor_pairs, uv_multiply, UvElement, UvMonoid};

use std::sync::Arc;

use crate::arith::DivisorCache;
use crate::error::Error;
use crate::word::{multiply, Element};

/// The behavior bundle every instance exposes: identity, multiplication,
/// all ordered factorizations of an element (finitely many), and a
/// canonical text rendering. Equality is the element type's `Eq`.
/// All ordered factorizations of one element.
pub type Factorizations<E> = Vec<(E, E)>;

pub trait MonoidInstance {
    type Elem: Clone + Eq + Ord + std::fmt::Debug;

    fn identity(&self) -> Self::Elem;

    fn multiply(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, Error>;

    /// All ordered pairs `(a, b)` with `a * b = u`, in a deterministic order.
    fn divisor_pairs(&self, u: &Self::Elem) -> Result<Factorizations<Self::Elem>, Error>;

    fn render(&self, u: &Self::Elem) -> String;

    fn tau(&self, u: &Self::Elem) -> Result<u64, Error> {
        Ok(self.divisor_pairs(u)?.len() as u64)
    }
}

/// The main monoid, delegating to the divisor machinery of this crate.
pub struct ThompsonMonoid {
    divs: Arc<DivisorCache>,
}

impl ThompsonMonoid {
    pub fn new(divs: Arc<DivisorCache>) -> ThompsonMonoid {
        ThompsonMonoid { divs }
    }
}

impl MonoidInstance for ThompsonMonoid {
    type Elem = Element;

    fn identity(&self) -> Element {
        Element::one()
    }

    fn multiply(&self, a: &Element, b: &Element) -> Result<Element, Error> {
        Ok(multiply(a, b))
    }

    fn divisor_pairs(&self, u: &Element) -> Result<Factorizations<Element>, Error> {
        self.divs.divisor_pairs(u)
    }

    fn render(&self, u: &Element) -> String {
        u.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::{normalize, Word};

    #[test]
    fn thompson_instance_delegates() {
        let monoid = ThompsonMonoid::new(Arc::new(DivisorCache::new()));
        let u = normalize(&Word::from_indices(&[0, 0, 1, 4]));
        let pairs = monoid.divisor_pairs(&u).unwrap();
        assert_eq!(pairs.len(), 8);
        for (a, b) in &pairs {
            assert_eq!(monoid.multiply(a, b).unwrap(), u);
        }
        assert_eq!(monoid.render(&u), "p0^2 p1 p4");
        assert_eq!(monoid.tau(&u).unwrap(), 8);
    }

    #[test]
    fn no_nontrivial_units_in_bounded_search() {
        // the identity only factors trivially: a * b = 1 forces a = b = 1
        let monoid = ThompsonMonoid::new(Arc::new(DivisorCache::new()));
        let pairs = monoid.divisor_pairs(&Element::one()).unwrap();
        assert_eq!(pairs, vec![(Element::one(), Element::one())]);
    }
}
