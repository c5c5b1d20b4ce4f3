//! The element text grammar:
//!
//! ```text
//! element := "1" | term (sep term)*
//! term    := "p" digits ("^" digits)?
//! sep     := whitespace | "*"
//! ```
//!
//! Exponents must be at least 1. Terms multiply left to right and the
//! product is normalized, so `"p3 p2"` parses to `p2 p4`. Rendering an
//! element uses the same grammar with single spaces and `^` exponents
//! (`Display` on [`Element`]); parse and render are mutually inverse on
//! canonical forms.

use crate::error::Error;
use crate::word::{multiply, Element};

/// Cap on a single parsed exponent, an engineering guard: element
/// operations expand words of `ind(u)` letters.
pub const MAX_EXPONENT: u32 = 1 << 20;

pub fn parse_element(input: &str) -> Result<Element, Error> {
    let bytes = input.as_bytes();
    let mut pos = 0usize;

    let skip_ws = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };

    skip_ws(&mut pos);
    if pos < bytes.len() && bytes[pos] == b'1' {
        let one_at = pos;
        pos += 1;
        skip_ws(&mut pos);
        if pos == bytes.len() {
            return Ok(Element::one());
        }
        return Err(Error::Parse {
            offset: one_at + 1,
            message: "\"1\" denotes the identity and cannot be combined with terms".into(),
        });
    }

    let mut acc = Element::one();
    let mut first = true;
    loop {
        skip_ws(&mut pos);
        if pos == bytes.len() {
            if first {
                return Err(Error::Parse {
                    offset: pos,
                    message: "expected an element".into(),
                });
            }
            return Ok(acc);
        }
        if !first && bytes[pos] == b'*' {
            pos += 1;
            skip_ws(&mut pos);
        }
        if pos == bytes.len() || bytes[pos] != b'p' {
            return Err(Error::Parse {
                offset: pos,
                message: "expected a term of the form p<digits>".into(),
            });
        }
        pos += 1;
        let index = read_number(bytes, &mut pos, "generator index")?;
        let exponent = if pos < bytes.len() && bytes[pos] == b'^' {
            pos += 1;
            let at = pos;
            let e = read_number(bytes, &mut pos, "exponent")?;
            if e == 0 {
                return Err(Error::ExponentZero { offset: at });
            }
            e
        } else {
            1
        };
        if exponent > MAX_EXPONENT {
            return Err(Error::Parse {
                offset: pos,
                message: format!("exponent exceeds the supported maximum of {MAX_EXPONENT}"),
            });
        }
        acc = multiply(&acc, &Element::prime_power(index, exponent));
        first = false;
    }
}

fn read_number(bytes: &[u8], pos: &mut usize, what: &str) -> Result<u32, Error> {
    let start = *pos;
    let mut value: u64 = 0;
    while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
        value = value * 10 + u64::from(bytes[*pos] - b'0');
        if value > u64::from(u32::MAX) {
            return Err(Error::Parse {
                offset: start,
                message: format!("{what} is out of range"),
            });
        }
        *pos += 1;
    }
    if *pos == start {
        return Err(Error::Parse {
            offset: start,
            message: format!("expected digits for {what}"),
        });
    }
    Ok(value as u32)
}
