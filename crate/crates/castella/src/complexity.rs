//! Castling-complexity quantities: exact `tau(u^n)` tables, n-th-root
//! estimates for the growth rate `tau_0(u) = lim tau(u^n)^{1/n}`, and
//! subadditivity diagnostics.
//!
//! `log tau(u^n)` is subadditive, so every n-th root is an upper bound for
//! the limit; reports carry finite-n brackets only and never extrapolate.

use crate::arith::DivisorCache;
use crate::error::Error;
use crate::word::{multiply, Element};

/// Exact `tau(u^n)` for `n = 1..=n_max`.
pub fn tau_powers(
    divs: &DivisorCache,
    u: &Element,
    n_max: u32,
) -> Result<Vec<(u32, u64)>, Error> {
    assert!(n_max >= 1, "n_max must be at least 1");
    let mut out = Vec::with_capacity(n_max as usize);
    let mut pow = Element::one();
    for n in 1..=n_max {
        pow = multiply(&pow, u);
        out.push((n, divs.tau(&pow)?));
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq)]
pub struct Tau0Sample {
    pub n: u32,
    pub tau: u64,
    /// `tau(u^n)^{1/n}`, itself an upper bound for the limit.
    pub nth_root: f64,
    pub lower_bound: f64,
    pub upper_bound: f64,
}

/// Finite-n estimate of the divisor growth rate. The final estimate is the
/// last computed root; the per-n brackets are the running minimum of the
/// roots above and, below, 1 for prime powers and 2 otherwise (non-prime-
/// powers in this monoid have growth rate at least 2).
#[derive(Debug, Clone, PartialEq)]
pub struct Tau0Estimate {
    pub samples: Vec<Tau0Sample>,
    pub final_estimate: f64,
}

pub fn tau0_estimate(
    divs: &DivisorCache,
    u: &Element,
    n_max: u32,
) -> Result<Tau0Estimate, Error> {
    let lower = if u.is_prime_power() { 1.0 } else { 2.0 };
    let mut samples = Vec::with_capacity(n_max as usize);
    let mut best_upper = f64::INFINITY;
    for (n, tau) in tau_powers(divs, u, n_max)? {
        let nth_root = (tau as f64).powf(1.0 / f64::from(n));
        best_upper = best_upper.min(nth_root);
        samples.push(Tau0Sample {
            n,
            tau,
            nth_root,
            lower_bound: lower,
            upper_bound: best_upper,
        });
    }
    let final_estimate = samples.last().expect("n_max >= 1").nth_root;
    Ok(Tau0Estimate {
        samples,
        final_estimate,
    })
}

/// `tau(u^N)^{1/N} / tau(u)`, the finite-n estimate of the complexity ratio.
pub fn complexity_c(divs: &DivisorCache, u: &Element, n_max: u32) -> Result<f64, Error> {
    let estimate = tau0_estimate(divs, u, n_max)?;
    Ok(estimate.final_estimate / divs.tau(u)? as f64)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubadditivityReport {
    pub n_max: u32,
    pub checked: usize,
    /// Pairs `(m, n)` with `tau(u^{m+n}) > tau(u^m) tau(u^n)`; expected empty.
    pub violations: Vec<(u32, u32)>,
}

impl SubadditivityReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Asserts `tau(u^{m+n}) <= tau(u^m) tau(u^n)` for all `m + n <= n_max`.
pub fn subadditivity_check(
    divs: &DivisorCache,
    u: &Element,
    n_max: u32,
) -> Result<SubadditivityReport, Error> {
    assert!(n_max >= 2, "n_max must be at least 2");
    let table = tau_powers(divs, u, n_max)?;
    let tau_at = |n: u32| table[(n - 1) as usize].1;
    let mut report = SubadditivityReport {
        n_max,
        checked: 0,
        violations: Vec::new(),
    };
    for m in 1..n_max {
        for n in 1..=(n_max - m) {
            report.checked += 1;
            if tau_at(m + n) > tau_at(m) * tau_at(n) {
                report.violations.push((m, n));
            }
        }
    }
    Ok(report)
}
