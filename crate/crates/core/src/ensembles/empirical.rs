//! Empirical distributions and the Kolmogorov–Smirnov statistic.

use crate::error::{Error, Result};

/// Sorted sample with right-continuous step-function CDF queries.
#[derive(Debug, Clone, PartialEq)]
pub struct EmpiricalDistribution {
    values: Vec<f64>,
}

impl EmpiricalDistribution {
    pub fn new(mut values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InsufficientData(
                "EmpiricalDistribution needs at least one sample".into(),
            ));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::domain("EmpiricalDistribution: non-finite sample"));
        }
        values.sort_by(f64::total_cmp);
        Ok(EmpiricalDistribution { values })
    }

    pub fn count(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// F_emp(x) = #{v <= x} / n (right-continuous).
    pub fn cdf(&self, x: f64) -> f64 {
        let idx = self.values.partition_point(|&v| v <= x);
        idx as f64 / self.values.len() as f64
    }

    pub fn mean(&self) -> f64 {
        self.values.iter().sum::<f64>() / self.values.len() as f64
    }

    /// Shift and scale every sample: (v − center) / scale.
    pub fn rescaled(&self, center: f64, scale: f64) -> Result<Self> {
        if scale <= 0.0 || scale.is_nan() {
            return Err(Error::domain("rescaled: scale must be positive"));
        }
        EmpiricalDistribution::new(self.values.iter().map(|v| (v - center) / scale).collect())
    }
}

/// Exact KS statistic D = sup_x |F_emp(x) − F(x)|, evaluated at both sides of
/// every jump point.
pub fn ks_statistic(emp: &EmpiricalDistribution, cdf: impl Fn(f64) -> f64) -> f64 {
    let n = emp.count() as f64;
    let mut d: f64 = 0.0;
    for (i, &x) in emp.values().iter().enumerate() {
        let f = cdf(x);
        d = d.max((f - i as f64 / n).abs());
        d = d.max((f - (i as f64 + 1.0) / n).abs());
    }
    d
}
