//! Arithmetic functions on the monoid: convolution, convolution inverses,
//! the Moebius and Liouville functions, and property harnesses.
//!
//! Values are exact rationals throughout so that inversion identities like
//! `mu * 1 = delta_1` are checked by equality, never by tolerance.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use num::rational::BigRational;
use num::{BigInt, Zero};

use crate::arith::{
    big_omega, big_omega_co, lcm, pdm, quotient_left, quotient_right, DivisorCache,
};
use crate::castle::{is_castled_free, strong_castle};
use crate::error::Error;
use crate::word::{multiply, Element};

pub fn rational(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

type Rule = dyn Fn(&Element, &ArithFn) -> Result<BigRational, Error> + Send + Sync;

struct Inner {
    name: String,
    rule: Box<Rule>,
    cache: RwLock<HashMap<Element, BigRational>>,
}

/// A memoizing map from elements to exact rational values.
///
/// Evaluation is deterministic; the memo cache is insert-only and safe for
/// concurrent use (duplicate computation is possible, corruption is not).
#[derive(Clone)]
pub struct ArithFn {
    inner: Arc<Inner>,
}

impl ArithFn {
    pub fn new<F>(name: impl Into<String>, f: F) -> ArithFn
    where
        F: Fn(&Element) -> BigRational + Send + Sync + 'static,
    {
        ArithFn::from_rule(name, move |u, _| Ok(f(u)))
    }

    /// A function defined by a rule that may recurse through its own
    /// memoized evaluation (the second argument).
    pub fn from_rule<F>(name: impl Into<String>, rule: F) -> ArithFn
    where
        F: Fn(&Element, &ArithFn) -> Result<BigRational, Error> + Send + Sync + 'static,
    {
        ArithFn {
            inner: Arc::new(Inner {
                name: name.into(),
                rule: Box::new(rule),
                cache: RwLock::new(HashMap::new()),
            }),
        }
    }

    pub fn name(&self) -> &str {
        &self.inner.name
    }

    pub fn eval(&self, u: &Element) -> Result<BigRational, Error> {
        if let Some(hit) = self
            .inner
            .cache
            .read()
            .expect("function cache poisoned")
            .get(u)
        {
            return Ok(hit.clone());
        }
        let value = (self.inner.rule)(u, self)?;
        let mut cache = self.inner.cache.write().expect("function cache poisoned");
        Ok(cache.entry(u.clone()).or_insert(value).clone())
    }
}

/// The constant function 1.
pub fn one() -> ArithFn {
    ArithFn::new("1", |_| rational(1))
}

/// The convolution identity: 1 at the identity element, 0 elsewhere.
pub fn delta_one() -> ArithFn {
    ArithFn::new("delta_1", |u| rational(if u.is_one() { 1 } else { 0 }))
}

/// `(f * g)(z) = sum over d | z of f(d) g(d^{-1} z)`. Associative, and in
/// general non-commutative.
pub fn convolve(divs: &Arc<DivisorCache>, f: &ArithFn, g: &ArithFn) -> ArithFn {
    let divs = divs.clone();
    let (f, g) = (f.clone(), g.clone());
    let name = format!("({} * {})", f.name(), g.name());
    ArithFn::from_rule(name, move |z, _| {
        let mut acc = BigRational::zero();
        for d in divs.divisors(z)?.iter() {
            let q = quotient_left(z, d)?;
            acc += f.eval(d)? * g.eval(&q)?;
        }
        Ok(acc)
    })
}

/// The divisor function as an arithmetic function, `tau = 1 * 1`.
pub fn tau_fn(divs: &Arc<DivisorCache>) -> ArithFn {
    let tau = convolve(divs, &one(), &one());
    ArithFn::from_rule("tau", move |z, _| tau.eval(z))
}

/// The two-sided convolution inverse of `f`, by the left iteration
/// `g(z) = -f(1)^{-1} sum over proper divisors v of g(v) f(v^{-1} z)`.
pub fn inverse(divs: &Arc<DivisorCache>, f: &ArithFn) -> Result<ArithFn, Error> {
    let f1 = f.eval(&Element::one())?;
    if f1.is_zero() {
        return Err(Error::NotInvertible(f.name().to_string()));
    }
    let inv_f1 = f1.recip();
    let divs = divs.clone();
    let f = f.clone();
    let name = format!("{}^-1", f.name());
    Ok(ArithFn::from_rule(name, move |z, me| {
        if z.is_one() {
            return Ok(inv_f1.clone());
        }
        let mut acc = BigRational::zero();
        for v in divs.divisors(z)?.iter() {
            if v == z {
                continue;
            }
            acc += me.eval(v)? * f.eval(&quotient_left(z, v)?)?;
        }
        Ok(-&inv_f1 * acc)
    }))
}

/// The convolution inverse by the right iteration over proper co-divisors,
/// `g(z) = -f(1)^{-1} sum of f(z v^{-1}) g(v)`. Agrees with [`inverse`]
/// everywhere; kept as an independent route.
pub fn inverse_right(divs: &Arc<DivisorCache>, f: &ArithFn) -> Result<ArithFn, Error> {
    let f1 = f.eval(&Element::one())?;
    if f1.is_zero() {
        return Err(Error::NotInvertible(f.name().to_string()));
    }
    let inv_f1 = f1.recip();
    let divs = divs.clone();
    let f = f.clone();
    let name = format!("{}^-1R", f.name());
    Ok(ArithFn::from_rule(name, move |z, me| {
        if z.is_one() {
            return Ok(inv_f1.clone());
        }
        let mut acc = BigRational::zero();
        for v in divs.co_divisors(z)? {
            if &v == z {
                continue;
            }
            acc += f.eval(&quotient_right(z, &v)?)? * me.eval(&v)?;
        }
        Ok(-&inv_f1 * acc)
    }))
}

/// Moebius function, by its closed form: `mu(1) = 1`; `mu(u) = (-1)^k`
/// when `u` is the lcm of its `k` distinct prime divisors; 0 otherwise.
pub fn mu(u: &Element) -> i64 {
    if u.is_one() {
        return 1;
    }
    let primes: Vec<Element> = pdm(u).support().into_iter().map(Element::prime).collect();
    if lcm(&primes) == *u {
        if primes.len().is_multiple_of(2) {
            1
        } else {
            -1
        }
    } else {
        0
    }
}

pub fn mu_fn() -> ArithFn {
    ArithFn::new("mu", |u| rational(mu(u)))
}

/// Liouville function `(-1)^Omega(u)`.
pub fn lambda(u: &Element) -> i64 {
    if big_omega(u).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Co-divisor Liouville function `(-1)^Omega_co(u)`.
pub fn lambda_co(u: &Element) -> i64 {
    if big_omega_co(u).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub fn lambda_fn() -> ArithFn {
    ArithFn::new("lambda", |u| rational(lambda(u)))
}

#[derive(Debug, Clone)]
pub struct Violation {
    pub u: Element,
    pub v: Element,
    pub detail: String,
}

/// Outcome of a property harness over a pair sample.
#[derive(Debug, Clone)]
pub struct CheckReport {
    pub function: String,
    pub pairs_checked: usize,
    pub violations: Vec<Violation>,
}

impl CheckReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// A strong castling event requires both sides to be strongly castlable:
/// `(u, v)` castles to `(v~, u~)` and `(v~, u~)` castles back. One-sided
/// pairs do not preserve the divisor structure (e.g. `(p0 p1, p0)` castles
/// to `(p0, p0 p2)` but not back, and tau is 3 on one side, 4 on the
/// other), so the invariance harnesses skip them.
pub(crate) fn two_sided_strong_castle(u: &Element, v: &Element) -> Option<crate::castle::CastlePair> {
    let pair = strong_castle(u, v)?;
    crate::castle::is_strongly_castlable(&pair.left, &pair.right).then_some(pair)
}

/// Checks `f(u) = f(u~)` and `f(v) = f(v~)` across the strong castlings in
/// the sample; pairs that do not strongly castle both ways are skipped.
pub fn check_castled_invariant(
    f: &ArithFn,
    pairs: &[(Element, Element)],
) -> Result<CheckReport, Error> {
    let mut report = CheckReport {
        function: f.name().to_string(),
        pairs_checked: 0,
        violations: Vec::new(),
    };
    for (u, v) in pairs {
        let Some(pair) = two_sided_strong_castle(u, v) else {
            continue;
        };
        report.pairs_checked += 1;
        if f.eval(u)? != f.eval(&pair.right)? {
            report.violations.push(Violation {
                u: u.clone(),
                v: v.clone(),
                detail: format!("f({u}) != f({})", pair.right),
            });
        }
        if f.eval(v)? != f.eval(&pair.left)? {
            report.violations.push(Violation {
                u: u.clone(),
                v: v.clone(),
                detail: format!("f({v}) != f({})", pair.left),
            });
        }
    }
    Ok(report)
}

/// Multiplicativity: castled invariance plus `f(uv) = f(u) f(v)` on the
/// castled-free pairs of the sample.
pub fn check_multiplicative(
    f: &ArithFn,
    pairs: &[(Element, Element)],
) -> Result<CheckReport, Error> {
    let mut report = check_castled_invariant(f, pairs)?;
    for (u, v) in pairs {
        if !is_castled_free(u, v) {
            continue;
        }
        report.pairs_checked += 1;
        let product = multiply(u, v);
        if f.eval(&product)? != f.eval(u)? * f.eval(v)? {
            report.violations.push(Violation {
                u: u.clone(),
                v: v.clone(),
                detail: format!("f({product}) != f({u}) f({v}) on a castled-free pair"),
            });
        }
    }
    Ok(report)
}

/// Complete multiplicativity: castled invariance plus `f(uv) = f(u) f(v)`
/// across every strong castling of the sample.
pub fn check_completely_multiplicative(
    f: &ArithFn,
    pairs: &[(Element, Element)],
) -> Result<CheckReport, Error> {
    let mut report = check_castled_invariant(f, pairs)?;
    for (u, v) in pairs {
        if two_sided_strong_castle(u, v).is_none() {
            continue;
        }
        report.pairs_checked += 1;
        let product = multiply(u, v);
        if f.eval(&product)? != f.eval(u)? * f.eval(v)? {
            report.violations.push(Violation {
                u: u.clone(),
                v: v.clone(),
                detail: format!("f({product}) != f({u}) f({v}) on a strong castling"),
            });
        }
    }
    Ok(report)
}

/// Third route to the Moebius value, used as a test witness: inclusion-
/// exclusion over the co-prime-reduced divisors
/// `F(z) = {z p^{-1} : p a prime co-divisor of z}`, summing `(-1)^{|F|}`
/// over the non-empty subsets with `gcd(F) = 1`.
pub fn mu_inclusion_exclusion(divs: &DivisorCache, z: &Element) -> Result<i64, Error> {
    if z.is_one() {
        return Ok(1);
    }
    let family: Vec<Element> = crate::arith::pdm_co(z)
        .support()
        .into_iter()
        .map(|p| quotient_right(z, &Element::prime(p)))
        .collect::<Result<Vec<_>, _>>()?;
    let mut total = 0i64;
    for mask in 1u32..(1 << family.len()) {
        let subset: Vec<Element> = (0..family.len())
            .filter(|t| mask & (1 << t) != 0)
            .map(|t| family[t].clone())
            .collect();
        if divs.gcd(&subset)?.is_one() {
            total += if subset.len().is_multiple_of(2) { 1 } else { -1 };
        }
    }
    Ok(total)
}
