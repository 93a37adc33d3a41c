//! Classical extreme-value statistics of diagonal iid matrices: the largest
//! eigenvalue of diag(X₁,…,X_N) is just the sample maximum, with
//! Prob(λ_max <= x) = F(x)^N, and the scaled maximum can only converge to one
//! of the three classical limit families.

use crate::ensembles::EmpiricalDistribution;
use crate::error::{Error, Result};
use crate::rngstream;
use rand::Rng;
use rayon::prelude::*;

/// The three possible nondegenerate limit laws.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EvtLimit {
    /// e^{-e^{-x}} on all of R.
    Gumbel,
    /// e^{-1/x^α} on [0, ∞).
    Frechet { alpha: f64 },
    /// e^{-(-x)^α} on (−∞, 0].
    Weibull { alpha: f64 },
}

impl EvtLimit {
    pub fn validate(&self) -> Result<()> {
        match *self {
            EvtLimit::Frechet { alpha } | EvtLimit::Weibull { alpha } if alpha <= 0.0 || alpha.is_nan() => Err(
                Error::domain(format!("EvtLimit: alpha must be positive, got {alpha}")),
            ),
            _ => Ok(()),
        }
    }
}

/// Limit-law CDF.
pub fn evt_cdf(limit: EvtLimit, x: f64) -> f64 {
    match limit {
        EvtLimit::Gumbel => (-(-x).exp()).exp(),
        EvtLimit::Frechet { alpha } => {
            if x <= 0.0 {
                0.0
            } else {
                (-x.powf(-alpha)).exp()
            }
        }
        EvtLimit::Weibull { alpha } => {
            if x >= 0.0 {
                1.0
            } else {
                (-(-x).powf(alpha)).exp()
            }
        }
    }
}

/// Entry distributions for the diagonal model.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EntryCdf {
    /// Exponential(1).
    Exponential,
    /// Uniform on (0, 1).
    Uniform01,
    /// Pareto with x_m = 1: F(x) = 1 − x^{-α}.
    Pareto { alpha: f64 },
}

impl EntryCdf {
    /// F(x) of a single entry.
    pub fn cdf(&self, x: f64) -> f64 {
        match *self {
            EntryCdf::Exponential => {
                if x <= 0.0 {
                    0.0
                } else {
                    1.0 - (-x).exp()
                }
            }
            EntryCdf::Uniform01 => x.clamp(0.0, 1.0),
            EntryCdf::Pareto { alpha } => {
                if x <= 1.0 {
                    0.0
                } else {
                    1.0 - x.powf(-alpha)
                }
            }
        }
    }

    fn inverse(&self, u: f64) -> f64 {
        match *self {
            EntryCdf::Exponential => -(-u).ln_1p(), // -ln(1-u)
            EntryCdf::Uniform01 => u,
            EntryCdf::Pareto { alpha } => (1.0 - u).powf(-1.0 / alpha),
        }
    }

    /// Standard centering/scale pair for this entry law: log N and 1 for the
    /// exponential, 1 and 1/N for uniform(0,1), 0 and N^{1/α} for Pareto(α).
    pub fn standard_normalization(&self) -> EvtNormalization {
        match *self {
            EntryCdf::Exponential => {
                EvtNormalization::new(|n| (n as f64).ln(), |_| 1.0)
            }
            EntryCdf::Uniform01 => EvtNormalization::new(|_| 1.0, |n| 1.0 / n as f64),
            EntryCdf::Pareto { alpha } => {
                EvtNormalization::new(|_| 0.0, move |n| (n as f64).powf(1.0 / alpha))
            }
        }
    }

    /// The limit law this entry law belongs to under the standard scaling.
    pub fn limit(&self) -> EvtLimit {
        match *self {
            EntryCdf::Exponential => EvtLimit::Gumbel,
            EntryCdf::Uniform01 => EvtLimit::Weibull { alpha: 1.0 },
            EntryCdf::Pareto { alpha } => EvtLimit::Frechet { alpha },
        }
    }
}

/// Centering a_N and positive scale b_N as functions of N.
pub struct EvtNormalization {
    centering: Box<dyn Fn(usize) -> f64 + Send + Sync>,
    scale: Box<dyn Fn(usize) -> f64 + Send + Sync>,
}

impl EvtNormalization {
    pub fn new(
        centering: impl Fn(usize) -> f64 + Send + Sync + 'static,
        scale: impl Fn(usize) -> f64 + Send + Sync + 'static,
    ) -> Self {
        EvtNormalization {
            centering: Box::new(centering),
            scale: Box::new(scale),
        }
    }

    pub fn a(&self, n: usize) -> f64 {
        (self.centering)(n)
    }

    pub fn b(&self, n: usize) -> f64 {
        (self.scale)(n)
    }
}

/// Exact finite-N CDF of the scaled maximum: F(a_N + b_N x)^N.
pub fn finite_n_cdf(entry: EntryCdf, n: usize, norm: &EvtNormalization, x: f64) -> f64 {
    entry.cdf(norm.a(n) + norm.b(n) * x).powi(n as i32)
}

/// Simulate the maximum of N iid draws, `trials` times, applying the
/// normalization (max − a_N)/b_N. Parallel across trials, deterministic for
/// fixed seed.
pub fn simulate_diagonal_max(
    entry: EntryCdf,
    n: usize,
    trials: usize,
    norm: &EvtNormalization,
    seed: u64,
) -> Result<EmpiricalDistribution> {
    if n < 2 {
        return Err(Error::domain("simulate_diagonal_max: N must be >= 2"));
    }
    if trials < 100 {
        return Err(Error::domain(
            "simulate_diagonal_max: need at least 100 trials",
        ));
    }
    let (a_n, b_n) = (norm.a(n), norm.b(n));
    if b_n <= 0.0 || b_n.is_nan() {
        return Err(Error::domain("simulate_diagonal_max: scale must be positive"));
    }
    if let EntryCdf::Pareto { alpha } = entry {
        if alpha <= 0.0 || alpha.is_nan() {
            return Err(Error::domain("simulate_diagonal_max: alpha must be positive"));
        }
    }
    let samples: Vec<f64> = (0..trials as u64)
        .into_par_iter()
        .map(|i| {
            let mut rng = rngstream::stream(seed, i);
            let mut max = f64::NEG_INFINITY;
            for _ in 0..n {
                let u: f64 = rng.gen();
                max = max.max(entry.inverse(u));
            }
            (max - a_n) / b_n
        })
        .collect();
    EmpiricalDistribution::new(samples)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ensembles::ks_statistic;
    use approx::assert_relative_eq;

    #[test]
    fn limit_cdf_plugin_values() {
        assert_relative_eq!(evt_cdf(EvtLimit::Gumbel, 0.0), (-1.0f64).exp());
        assert_eq!(evt_cdf(EvtLimit::Frechet { alpha: 2.0 }, 0.0), 0.0);
        assert_eq!(evt_cdf(EvtLimit::Frechet { alpha: 2.0 }, -1.0), 0.0);
        assert_relative_eq!(evt_cdf(EvtLimit::Weibull { alpha: 1.0 }, -1.0), (-1.0f64).exp());
        assert_eq!(evt_cdf(EvtLimit::Weibull { alpha: 1.0 }, 0.5), 1.0);
    }

    #[test]
    fn limit_cdfs_are_distribution_functions() {
        for law in [
            EvtLimit::Gumbel,
            EvtLimit::Frechet { alpha: 1.7 },
            EvtLimit::Weibull { alpha: 0.8 },
        ] {
            let mut prev: f64 = 0.0;
            for i in 0..=200 {
                let x = -10.0 + 20.0 * i as f64 / 200.0;
                let v = evt_cdf(law, x);
                assert!((0.0..=1.0).contains(&v));
                assert!(v >= prev - 1e-15);
                prev = v;
            }
            assert!(evt_cdf(law, -30.0) < 1e-6 || matches!(law, EvtLimit::Weibull { .. }));
            assert!(evt_cdf(law, 1e6) > 1.0 - 1e-5);
        }
    }

    #[test]
    fn empirical_maximum_matches_exact_finite_n_law() {
        // Before any limit claim: the unscaled max follows F(x)^N exactly.
        let n = 50;
        let trials = 20_000;
        let raw = EvtNormalization::new(|_| 0.0, |_| 1.0);
        let emp = simulate_diagonal_max(EntryCdf::Exponential, n, trials, &raw, 42).unwrap();
        let d = ks_statistic(&emp, |x| finite_n_cdf(EntryCdf::Exponential, n, &raw, x));
        assert!(d < 3.0 / (trials as f64).sqrt(), "KS = {d}");
    }

    #[test]
    fn three_scaled_configurations_reach_their_limits() {
        let n = 1000;
        let trials = 20_000;
        let configs = [
            (EntryCdf::Exponential, EvtLimit::Gumbel),
            (EntryCdf::Uniform01, EvtLimit::Weibull { alpha: 1.0 }),
            (EntryCdf::Pareto { alpha: 2.0 }, EvtLimit::Frechet { alpha: 2.0 }),
        ];
        for (entry, limit) in configs {
            let norm = entry.standard_normalization();
            // The deterministic part: exact finite-N bias against the limit.
            let mut bias: f64 = 0.0;
            for i in 0..4000 {
                let x = -5.0 + 15.0 * i as f64 / 3999.0;
                bias = bias.max((finite_n_cdf(entry, n, &norm, x) - evt_cdf(limit, x)).abs());
            }
            assert!(bias < 0.01, "{entry:?}: finite-N bias {bias}");
            let emp = simulate_diagonal_max(entry, n, trials, &norm, 7).unwrap();
            let d = ks_statistic(&emp, |x| evt_cdf(limit, x));
            assert!(d < 0.02, "{entry:?}: KS = {d}");
        }
    }

    #[test]
    fn deterministic_and_validated() {
        let norm = EvtNormalization::new(|_| 1.0, |_| 0.1);
        let a = simulate_diagonal_max(EntryCdf::Uniform01, 10, 200, &norm, 3).unwrap();
        let b = simulate_diagonal_max(EntryCdf::Uniform01, 10, 200, &norm, 3).unwrap();
        assert_eq!(a, b);
        assert!(simulate_diagonal_max(EntryCdf::Uniform01, 1, 200, &norm, 0).is_err());
        assert!(simulate_diagonal_max(EntryCdf::Uniform01, 10, 50, &norm, 0).is_err());
        let bad = EvtNormalization::new(|_| 0.0, |_| -1.0);
        assert!(simulate_diagonal_max(EntryCdf::Uniform01, 10, 200, &bad, 0).is_err());
    }
}
