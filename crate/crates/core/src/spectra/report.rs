//! Spacing reports: histogram + KS distance against a reference law.

use super::unfold::UnfoldedSpectrum;
use crate::combinatorics::SummaryStats;
use crate::ensembles::{ks_statistic, EmpiricalDistribution};
use crate::error::Result;
use crate::painleve::GaudinLaw;
use serde::Serialize;
use std::sync::OnceLock;

const HISTOGRAM_BINS: usize = 50;
const HISTOGRAM_MAX: f64 = 4.0;

/// Reference spacing laws.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reference {
    /// Exact bulk GUE law from the σ-PV representation.
    Gaudin,
    /// Wigner surmise (π s/2)e^{−π s²/4} — an approximation to the GOE law.
    GoeSurmise,
    /// Uncorrelated levels: spacing density e^{−s}.
    Poisson,
}

impl Reference {
    pub fn name(&self) -> &'static str {
        match self {
            Reference::Gaudin => "gaudin",
            Reference::GoeSurmise => "goe_surmise",
            Reference::Poisson => "poisson",
        }
    }

    /// The surmise is an approximation, not an exact law.
    pub fn approximate(&self) -> bool {
        matches!(self, Reference::GoeSurmise)
    }

    pub fn cdf(&self, s: f64) -> f64 {
        if s <= 0.0 {
            return 0.0;
        }
        match self {
            Reference::Gaudin => gaudin_law().cdf(s).unwrap_or(1.0),
            Reference::GoeSurmise => 1.0 - (-std::f64::consts::PI * s * s / 4.0).exp(),
            Reference::Poisson => 1.0 - (-s).exp(),
        }
    }

    pub fn density(&self, s: f64) -> f64 {
        if s <= 0.0 {
            return 0.0;
        }
        match self {
            Reference::Gaudin => gaudin_law().density(s).unwrap_or(0.0),
            Reference::GoeSurmise => {
                let half_pi_s = std::f64::consts::PI * s / 2.0;
                half_pi_s * (-std::f64::consts::PI * s * s / 4.0).exp()
            }
            Reference::Poisson => (-s).exp(),
        }
    }
}

fn gaudin_law() -> &'static GaudinLaw {
    static LAW: OnceLock<GaudinLaw> = OnceLock::new();
    LAW.get_or_init(|| GaudinLaw::standard().expect("Gaudin table construction"))
}

/// One histogram bin with observed and reference densities.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HistogramBin {
    pub lo: f64,
    pub hi: f64,
    pub count: usize,
    pub density: f64,
    pub reference_density: f64,
}

/// Full spacing comparison report.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpacingReport {
    pub method: String,
    pub reference: String,
    /// True when the reference is itself an approximation (the surmise).
    pub approximate: bool,
    pub ks: f64,
    pub n: usize,
    pub moments: SummaryStats,
    pub histogram: Vec<HistogramBin>,
}

/// Histogram the spacings of `u` on [0, 4] (50 bins) and measure the KS
/// distance of their empirical CDF against the reference.
pub fn spacing_report(u: &UnfoldedSpectrum, reference: Reference) -> Result<SpacingReport> {
    let spacings = u.spacings();
    let emp = EmpiricalDistribution::new(spacings.clone())?;
    let ks = ks_statistic(&emp, |s| reference.cdf(s));
    let moments = SummaryStats::from_samples(&spacings)?;

    let width = HISTOGRAM_MAX / HISTOGRAM_BINS as f64;
    let n = spacings.len();
    let mut histogram = Vec::with_capacity(HISTOGRAM_BINS);
    for b in 0..HISTOGRAM_BINS {
        let lo = b as f64 * width;
        let hi = lo + width;
        let count = spacings
            .iter()
            .filter(|&&s| s >= lo && (s < hi || (b == HISTOGRAM_BINS - 1 && s == hi)))
            .count();
        histogram.push(HistogramBin {
            lo,
            hi,
            count,
            density: count as f64 / (n as f64 * width),
            reference_density: reference.density(0.5 * (lo + hi)),
        });
    }
    Ok(SpacingReport {
        method: u.method().to_string(),
        reference: reference.name().to_string(),
        approximate: reference.approximate(),
        ks,
        n,
        moments,
        histogram,
    })
}
