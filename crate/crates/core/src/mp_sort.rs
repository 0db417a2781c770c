//! Closed-form combinatorics of the (m,p) quantum sorting algorithm.
//!
//! The sorter prepares `m` registers in a uniform superposition over the
//! `N` array elements, marks with an ancilla the tuples that are strictly
//! increasing, and amplifies the marked branch `p` times. Everything the
//! classifier needs follows from three exact integers:
//!
//! * `mu = C(N, m)`, the number of strictly increasing tuples,
//! * `nu = N^m - mu`, the number of the rest,
//! * `theta = asin(sqrt(mu / N^m))`, the initial rotation angle,
//!
//! with `alpha = (2p + 1) theta` the angle after amplification.
//!
//! Order labels follow the convention `x = N` for the least element and
//! `x = 1` for the largest.

use std::f64::consts::PI;

use crate::{Error, Result};

/// `C(n, k)` in 128-bit arithmetic with overflow detection.
pub fn binomial(n: u64, k: u64) -> Result<u128> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) at every step
        acc = acc
            .checked_mul((n - i) as u128)
            .ok_or(Error::Overflow("binomial coefficient"))?
            / (i as u128 + 1);
    }
    Ok(acc)
}

fn checked_pow(base: u64, exp: u32) -> Result<u128> {
    (base as u128)
        .checked_pow(exp)
        .ok_or(Error::Overflow("N^m"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MPParams {
    /// Array length `N`.
    pub n: u64,
    /// Number of registers.
    pub m: u32,
    /// Amplification iterations.
    pub p: u32,
}

impl MPParams {
    pub fn new(n: u64, m: u32, p: u32) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParams(format!("N = {n} must be at least 2")));
        }
        if m < 2 || m as u64 > n {
            return Err(Error::InvalidParams(format!("m = {m} must lie in 2..={n}")));
        }
        // all later arithmetic stays within N^m
        checked_pow(n, m)?;
        Ok(MPParams { n, m, p })
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MPDerived {
    pub mu: u128,
    pub nu: u128,
    /// `N^m`.
    pub tuples: u128,
    pub theta: f64,
    pub alpha: f64,
}

impl MPDerived {
    pub fn sin2_alpha(&self) -> f64 {
        self.alpha.sin().powi(2)
    }

    pub fn cos2_alpha(&self) -> f64 {
        self.alpha.cos().powi(2)
    }
}

pub fn derive(params: &MPParams) -> Result<MPDerived> {
    let tuples = checked_pow(params.n, params.m)?;
    let mu = binomial(params.n, params.m as u64)?;
    let nu = tuples - mu;
    let theta = (mu as f64 / tuples as f64).sqrt().asin();
    Ok(MPDerived {
        mu,
        nu,
        tuples,
        theta,
        alpha: (2.0 * params.p as f64 + 1.0) * theta,
    })
}

/// Probabilities indexed by order label; `probs[x - 1]` belongs to label `x`.
#[derive(Clone, Debug, PartialEq)]
pub struct RankDistribution {
    pub probs: Vec<f64>,
}

impl RankDistribution {
    pub fn get(&self, label: u64) -> f64 {
        self.probs[(label - 1) as usize]
    }

    pub fn total(&self) -> f64 {
        self.probs.iter().sum()
    }
}

fn check_nm(n: u64, m: u32) -> Result<()> {
    MPParams::new(n, m, 0).map(|_| ())
}

/// Number of strictly increasing tuples whose first element has label `x`.
pub fn n1(x: u64, n: u64, m: u32) -> Result<u128> {
    check_nm(n, m)?;
    if x == 0 || x > n {
        return Err(Error::InvalidParams(format!("label {x} outside 1..={n}")));
    }
    if x < m as u64 {
        Ok(0)
    } else {
        binomial(x - 1, m as u64 - 1)
    }
}

/// Number of non-increasing tuples whose first element has label `x`.
pub fn n0(x: u64, n: u64, m: u32) -> Result<u128> {
    Ok(checked_pow(n, m - 1)? - n1(x, n, m)?)
}

/// First-register distribution when the marked branch has all the weight.
pub fn ideal_rank_distribution(n: u64, m: u32) -> Result<RankDistribution> {
    check_nm(n, m)?;
    let mu = binomial(n, m as u64)? as f64;
    let probs = (1..=n)
        .map(|x| n1(x, n, m).map(|c| c as f64 / mu))
        .collect::<Result<Vec<_>>>()?;
    Ok(RankDistribution { probs })
}

/// Full first-register distribution including the unmarked branch.
pub fn exact_rank_distribution(params: &MPParams) -> Result<RankDistribution> {
    let d = derive(params)?;
    let (c2, s2) = (d.cos2_alpha(), d.sin2_alpha());
    let (nu, mu) = (d.nu as f64, d.mu as f64);
    let probs = (1..=params.n)
        .map(|x| {
            let zero = n0(x, params.n, params.m)? as f64;
            let one = n1(x, params.n, params.m)? as f64;
            Ok(c2 * zero / nu + s2 * one / mu)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RankDistribution { probs })
}

/// Probability of measuring the least element from the marked branch alone.
pub fn p_least(params: &MPParams) -> Result<f64> {
    let d = derive(params)?;
    Ok(params.m as f64 / params.n as f64 * d.sin2_alpha())
}

fn factorial_f64(m: u32) -> f64 {
    (1..=m).map(f64::from).product()
}

/// Large-`N` approximation of [`p_least`], using `theta ~ 1 / sqrt(m!)`.
pub fn p_least_approx(n: u64, m: u32, p: u32) -> f64 {
    let arg = (2.0 * p as f64 + 1.0) / factorial_f64(m).sqrt();
    m as f64 / n as f64 * arg.sin().powi(2)
}

/// Nearest nonnegative integer to `(pi / 4) sqrt(m!) - 1/2`.
pub fn p_optimal(m: u32) -> u32 {
    let raw = PI / 4.0 * factorial_f64(m).sqrt() - 0.5;
    raw.round().max(0.0) as u32
}

/// The `p` at the first maximum of [`p_least`], searched over the first lobe
/// of `sin^2((2p + 1) theta)`.
pub fn first_maximum_p(n: u64, m: u32) -> Result<u32> {
    let theta = derive(&MPParams::new(n, m, 0)?)?.theta;
    let last = (PI / (2.0 * theta)).floor() as u32;
    let mut best = (0, f64::MIN);
    for p in 0..=last {
        let v = p_least(&MPParams { n, m, p })?;
        if v > best.1 {
            best = (p, v);
        }
    }
    Ok(best.0)
}
