use crate::group::GroupElement;
use crate::word::Element;
use thiserror::Error;

/// Errors surfaced by the library. Everything else is total.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("enumeration cap of {cap} nodes exceeded")]
    CapExceeded { cap: usize },

    #[error("words represent different elements: {left} vs {right}")]
    NotSameElement { left: Element, right: Element },

    #[error("{divisor} does not divide {of}")]
    NotDivisible { divisor: Element, of: Element },

    #[error("{codivisor} does not co-divide {of}")]
    NotCoDivisor { codivisor: Element, of: Element },

    #[error("group element {0} is not positive")]
    NotPositive(GroupElement),

    #[error("inverse shift undefined for {0}: the p1-exponent is non-zero")]
    ShiftInverseDomain(Element),

    #[error("function {0} has no convolution inverse: its value at 1 is 0")]
    NotInvertible(String),

    #[error("integer overflow in monoid composition")]
    Overflow,

    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("exponent must be at least 1 (byte {offset})")]
    ExponentZero { offset: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
