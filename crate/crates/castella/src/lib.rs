//! A computational engine for non-commutative arithmetic on the positive
//! monoid of Thompson's group F and a few sibling monoids.
//!
//! The monoid is generated by `p_0, p_1, p_2, ...` with
//! `p_j p_i = p_i p_{j+1}` for `i < j`. On top of the unique normal form
//! this crate builds: the word set of an element and its partial order
//! ([`word`]), reduced right fractions in the ambient group ([`group`]),
//! castlings at the letter, word, and element level ([`castle`]),
//! divisibility, divisor lattices, lcm/gcd and prime multiplicities
//! ([`arith`]), convolution algebra of arithmetic functions
//! ([`functions`]), divisor-growth estimates ([`complexity`]), and
//! commutative and non-homogeneous comparison instances ([`instances`]).

pub mod arith;
pub mod castle;
pub mod complexity;
pub mod error;
pub mod functions;
pub mod group;
pub mod instances;
pub mod text;
pub mod word;

pub use arith::{
    beta, big_omega, big_omega_co, co_divides, divides, gfc_decompose, is_fully_castlable, lcm,
    lcm_pair, omega, omega_co, pdm, pdm_co, prime_divisors, quotient_left, quotient_right,
    DivisorCache, PrimeMultiset,
};
pub use castle::{
    castle_letters, castle_words, castle_words_traced, free_castle, is_castled_free,
    is_strongly_castlable, is_weakly_castlable, strong_castle, weak_castle, CastlePair,
};
pub use complexity::{complexity_c, subadditivity_check, tau0_estimate, tau_powers, Tau0Estimate};
pub use error::Error;
pub use functions::{convolve, delta_one, inverse, lambda, lambda_co, mu, one, tau_fn, ArithFn};
pub use group::{invert, multiply_group, reduce, GroupElement, Sign, SignedLetter};
pub use text::parse_element;
pub use word::{
    enumerate_words, iota, iota_inverse, max_word, min_word, multiply, normalize, power,
    word_precedes, Element, Letter, Word, DEFAULT_NODE_CAP,
};
