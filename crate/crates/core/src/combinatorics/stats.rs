//! Sample moment summaries.

use crate::error::{Error, Result};
use serde::Serialize;

/// First four standardized sample moments plus range.
///
/// sd is the unbiased (n−1) estimator; skewness and kurtosis excess use the
/// plain central-moment ratios g1 = m3/m2^{3/2}, g2 = m4/m2² − 3.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SummaryStats {
    pub mean: f64,
    pub sd: f64,
    pub skewness: f64,
    pub kurtosis_excess: f64,
    pub min: f64,
    pub max: f64,
    pub count: usize,
}

impl SummaryStats {
    pub fn from_samples(xs: &[f64]) -> Result<Self> {
        if xs.is_empty() {
            return Err(Error::InsufficientData("SummaryStats: empty sample".into()));
        }
        if xs.iter().any(|v| !v.is_finite()) {
            return Err(Error::domain("SummaryStats: non-finite sample"));
        }
        let n = xs.len() as f64;
        let mean = xs.iter().sum::<f64>() / n;
        let mut m2 = 0.0;
        let mut m3 = 0.0;
        let mut m4 = 0.0;
        let mut min = f64::INFINITY;
        let mut max = f64::NEG_INFINITY;
        for &x in xs {
            let d = x - mean;
            let d2 = d * d;
            m2 += d2;
            m3 += d2 * d;
            m4 += d2 * d2;
            min = min.min(x);
            max = max.max(x);
        }
        m2 /= n;
        m3 /= n;
        m4 /= n;
        let sd = if xs.len() > 1 {
            (m2 * n / (n - 1.0)).sqrt()
        } else {
            0.0
        };
        let (skewness, kurtosis_excess) = if m2 > 0.0 {
            (m3 / m2.powf(1.5), m4 / (m2 * m2) - 3.0)
        } else {
            (0.0, 0.0)
        };
        Ok(SummaryStats {
            mean,
            sd,
            skewness,
            kurtosis_excess,
            min,
            max,
            count: xs.len(),
        })
    }
}
