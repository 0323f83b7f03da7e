//! Genus distributions of pdG polynomials: exact moments and
//! Kolmogorov–Smirnov distance to the standard normal.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::families::{fan_sequence, necklace_closed_form};
use crate::poly::{pow2, IntPolynomial, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StatsError {
    #[error("coefficients sum to {sum}, expected 2^{edges}")]
    SumMismatch { sum: BigInt, edges: usize },
    #[error("negative coefficient at z^{0}")]
    Negative(usize),
    #[error("distribution has zero variance")]
    ZeroVariance,
    #[error("unknown family `{0}` (expected fan or necklace)")]
    UnknownFamily(String),
}

/// `p_i = γ_i / 2^m`, the chance that a uniformly random subset gives a
/// partial dual of genus `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenusDistribution {
    pub edge_count: usize,
    pub probs: Vec<Rational>,
    poly: IntPolynomial,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SummaryStats {
    pub mean: Rational,
    pub variance: Rational,
    /// `None` for a point mass.
    pub ks_to_normal: Option<f64>,
}

pub fn to_distribution(p: &IntPolynomial, m: usize) -> Result<GenusDistribution, StatsError> {
    if let Some(i) = p.coeffs().iter().position(|c| c.is_negative()) {
        return Err(StatsError::Negative(i));
    }
    let total = pow2(m);
    if p.coeff_sum() != total {
        return Err(StatsError::SumMismatch {
            sum: p.coeff_sum(),
            edges: m,
        });
    }
    let probs = p
        .coeffs()
        .iter()
        .map(|c| Rational::new(c.clone(), total.clone()))
        .collect();
    Ok(GenusDistribution {
        edge_count: m,
        probs,
        poly: p.clone(),
    })
}

impl GenusDistribution {
    /// Mean `P'(1)` and variance `P''(1) + P'(1) − P'(1)²` of the
    /// probability generating function `P = Γ / 2^m`.
    pub fn mean_variance(&self) -> (Rational, Rational) {
        let one = Rational::one();
        let scale = Rational::from(pow2(self.edge_count));
        let d1 = self.poly.eval_derivative(&one, 1).expect("order 1") / &scale;
        let d2 = self.poly.eval_derivative(&one, 2).expect("order 2") / &scale;
        let variance = d2 + &d1 - &d1 * &d1;
        (d1, variance)
    }

    /// `sup_i max(|F(i) − Φ(t_i)|, |F(i⁻) − Φ(t_i)|)` over the support, with
    /// `t_i` standardized by the distribution's own mean and variance.
    pub fn ks_to_normal(&self) -> Result<f64, StatsError> {
        let (mean, variance) = self.mean_variance();
        if variance.is_zero() {
            return Err(StatsError::ZeroVariance);
        }
        let mean = to_f64(&mean);
        let sd = to_f64(&variance).sqrt();
        let mut below = Rational::zero();
        let mut ks = 0f64;
        for (i, p) in self.probs.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            let phi = normal_cdf((i as f64 - mean) / sd);
            let before = to_f64(&below);
            below += p;
            let at = to_f64(&below);
            ks = ks.max((at - phi).abs()).max((before - phi).abs());
        }
        Ok(ks)
    }

    pub fn summary(&self) -> SummaryStats {
        let (mean, variance) = self.mean_variance();
        SummaryStats {
            mean,
            variance,
            ks_to_normal: self.ks_to_normal().ok(),
        }
    }
}

fn to_f64(r: &Rational) -> f64 {
    r.to_f64().expect("finite rational")
}

/// Standard normal distribution function, absolute error below `1e-7`.
///
/// Uses the everywhere-convergent series
/// `Φ(x) = 1/2 + φ(x) (x + x³/3 + x⁵/(3·5) + …)` for `x ≥ 0` and the
/// reflection `Φ(x) = 1 − Φ(−x)` below zero.
pub fn normal_cdf(x: f64) -> f64 {
    if x < 0.0 {
        return 1.0 - normal_cdf(-x);
    }
    if x > 10.0 {
        return 1.0;
    }
    let mut term = x;
    let mut sum = x;
    let x2 = x * x;
    let mut k = 1.0;
    loop {
        k += 2.0;
        term *= x2 / k;
        sum += term;
        if term <= sum * 1e-17 {
            break;
        }
    }
    let density = (-0.5 * x2).exp() / (2.0 * std::f64::consts::PI).sqrt();
    (0.5 + density * sum).min(1.0)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AsymptoticFamily {
    /// `Q_n`, `2n − 1` edges.
    Fan,
    /// `N_n`, `3n` edges.
    Necklace,
}

impl FromStr for AsymptoticFamily {
    type Err = StatsError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "fan" | "fan_q" => Ok(AsymptoticFamily::Fan),
            "necklace" => Ok(AsymptoticFamily::Necklace),
            other => Err(StatsError::UnknownFamily(other.to_string())),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SuiteRow {
    pub n: usize,
    pub stats: SummaryStats,
}

/// Summary rows for `n = 1..=n_max`, polynomials taken from the closed
/// forms.
pub fn asymptotic_suite(family: AsymptoticFamily, n_max: usize) -> Vec<SuiteRow> {
    let polys: Vec<(IntPolynomial, usize)> = match family {
        AsymptoticFamily::Fan => fan_sequence(n_max)
            .into_iter()
            .enumerate()
            .map(|(i, q)| (q, 2 * i + 1))
            .collect(),
        AsymptoticFamily::Necklace => (1..=n_max)
            .map(|n| (necklace_closed_form(n), 3 * n))
            .collect(),
    };
    polys
        .into_par_iter()
        .enumerate()
        .map(|(i, (p, m))| SuiteRow {
            n: i + 1,
            stats: to_distribution(&p, m)
                .expect("closed forms sum to 2^m")
                .summary(),
        })
        .collect()
}

/// `n,mean_num,mean_den,var_num,var_den,ks`; `ks` has ten decimals and is
/// empty for a point mass.
pub fn suite_csv(rows: &[SuiteRow]) -> String {
    let mut out = String::from("n,mean_num,mean_den,var_num,var_den,ks\n");
    for r in rows {
        let ks = r
            .stats
            .ks_to_normal
            .map(|k| format!("{k:.10}"))
            .unwrap_or_default();
        let _ = writeln!(
            out,
            "{},{},{},{},{},{}",
            r.n,
            r.stats.mean.numer(),
            r.stats.mean.denom(),
            r.stats.variance.numer(),
            r.stats.variance.denom(),
            ks
        );
    }
    out
}

/// `(n+2)/2 − 2(3/8)^n`.
pub fn necklace_mean(n: usize) -> Rational {
    let q = three_eighths(n);
    Rational::new(BigInt::from(n + 2), BigInt::from(2)) - q * BigInt::from(2)
}

/// `n/4 + (2 − 2n/3)(3/8)^n − 4(3/8)^{2n}`.
pub fn necklace_variance(n: usize) -> Rational {
    let q = three_eighths(n);
    let n = BigInt::from(n);
    Rational::new(n.clone(), BigInt::from(4))
        + (Rational::from(BigInt::from(2)) - Rational::new(2 * n, BigInt::from(3))) * &q
        - &q * &q * BigInt::from(4)
}

fn three_eighths(n: usize) -> Rational {
    Rational::new(BigInt::from(3).pow(n as u32), pow2(3 * n))
}
