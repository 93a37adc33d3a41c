//! Unfolding: rescaling a spectrum to unit local mean spacing so spacing
//! statistics are comparable across systems.

use super::load::RawSpectrum;
use crate::error::{Error, Result};

/// Unfolding procedures.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum UnfoldMethod {
    /// Divide each spacing by the mean spacing over a centered window of
    /// `window` spacings (window odd, >= 5).
    LocalMean { window: usize },
    /// Least-squares fit of the cumulative counting function by a polynomial
    /// of the given degree (3..=15), then map values through the fit.
    Polynomial { degree: usize },
    /// Map through a named smooth mean-density model.
    GivenDensity(DensityModel),
}

/// Closed-form mean-density models for external spectra.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DensityModel {
    /// Smooth counting function of the Riemann zeta zeros,
    /// N(t) = (t/2π)(ln(t/2π) − 1) + 7/8. A convention of this tool, not a
    /// fitted quantity.
    ZetaZeros,
}

impl std::fmt::Display for UnfoldMethod {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            UnfoldMethod::LocalMean { window } => write!(f, "local_mean({window})"),
            UnfoldMethod::Polynomial { degree } => write!(f, "polynomial({degree})"),
            UnfoldMethod::GivenDensity(DensityModel::ZetaZeros) => write!(f, "zeta_density"),
        }
    }
}

/// Spectrum rescaled to exact unit mean spacing.
#[derive(Debug, Clone, PartialEq)]
pub struct UnfoldedSpectrum {
    values: Vec<f64>,
    method: String,
}

impl UnfoldedSpectrum {
    /// Adopt externally unfolded data: values must be strictly increasing;
    /// they are rescaled to exact unit mean spacing.
    pub fn from_values(values: Vec<f64>) -> Result<Self> {
        if values.len() < 2 {
            return Err(Error::InsufficientData(
                "UnfoldedSpectrum: need at least 2 values".into(),
            ));
        }
        if values.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::domain(
                "UnfoldedSpectrum: values must be strictly increasing",
            ));
        }
        let first = values[0];
        let scale = (values.len() - 1) as f64 / (values[values.len() - 1] - first);
        Ok(UnfoldedSpectrum {
            values: values.iter().map(|&v| (v - first) * scale).collect(),
            method: "external".into(),
        })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn method(&self) -> &str {
        &self.method
    }

    /// Consecutive spacings (mean exactly 1 by construction).
    pub fn spacings(&self) -> Vec<f64> {
        self.values.windows(2).map(|w| w[1] - w[0]).collect()
    }
}

pub fn unfold(raw: &RawSpectrum, method: &UnfoldMethod) -> Result<UnfoldedSpectrum> {
    if raw.len() < 100 {
        return Err(Error::InsufficientData(format!(
            "unfold: need at least 100 values, got {}",
            raw.len()
        )));
    }
    let x = raw.values();
    let mapped = match method {
        UnfoldMethod::LocalMean { window } => {
            if *window < 5 || window.is_multiple_of(2) {
                return Err(Error::domain(format!(
                    "unfold: local_mean window must be odd and >= 5, got {window}"
                )));
            }
            local_mean_unfold(x, *window)
        }
        UnfoldMethod::Polynomial { degree } => {
            if !(3..=15).contains(degree) {
                return Err(Error::domain(format!(
                    "unfold: polynomial degree must be in [3, 15], got {degree}"
                )));
            }
            polynomial_unfold(x, *degree)?
        }
        UnfoldMethod::GivenDensity(DensityModel::ZetaZeros) => {
            x.iter().map(|&t| zeta_counting(t)).collect()
        }
    };
    // Monotonicity then exact unit-mean rescale over the retained window.
    if mapped.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::Unfolding(
            "fitted counting function is not strictly increasing on the sample".into(),
        ));
    }
    let first = mapped[0];
    let span = mapped[mapped.len() - 1] - first;
    let scale = (mapped.len() - 1) as f64 / span;
    let values = mapped.iter().map(|&y| (y - first) * scale).collect();
    Ok(UnfoldedSpectrum {
        values,
        method: method.to_string(),
    })
}

fn local_mean_unfold(x: &[f64], window: usize) -> Vec<f64> {
    let n = x.len();
    let spacings: Vec<f64> = x.windows(2).map(|w| w[1] - w[0]).collect();
    let half = window / 2;
    let mut cum = Vec::with_capacity(n);
    cum.push(0.0);
    let mut acc = 0.0;
    for i in 0..spacings.len() {
        let lo = i.saturating_sub(half);
        let hi = (i + half + 1).min(spacings.len());
        let mean: f64 = spacings[lo..hi].iter().sum::<f64>() / (hi - lo) as f64;
        acc += if mean > 0.0 { spacings[i] / mean } else { 0.0 };
        cum.push(acc);
    }
    cum
}

/// Least-squares polynomial fit of the counting function (x_i, i + 1/2) in
/// the Legendre basis on the data range.
fn polynomial_unfold(x: &[f64], degree: usize) -> Result<Vec<f64>> {
    let n = x.len();
    let (a, b) = (x[0], x[n - 1]);
    let m = degree + 1;
    let map = |v: f64| 2.0 * (v - a) / (b - a) - 1.0;
    // Normal equations in the Legendre basis.
    let mut gram = vec![0.0f64; m * m];
    let mut rhs = vec![0.0f64; m];
    let mut basis = vec![0.0f64; m];
    for (i, &xi) in x.iter().enumerate() {
        legendre_basis(map(xi), &mut basis);
        let target = i as f64 + 0.5;
        for r in 0..m {
            rhs[r] += basis[r] * target;
            for c in 0..m {
                gram[r * m + c] += basis[r] * basis[c];
            }
        }
    }
    let coef = solve_dense(&mut gram, &mut rhs, m)?;
    Ok(x.iter()
        .map(|&xi| {
            legendre_basis(map(xi), &mut basis);
            basis.iter().zip(&coef).map(|(p, c)| p * c).sum()
        })
        .collect())
}

fn legendre_basis(t: f64, out: &mut [f64]) {
    out[0] = 1.0;
    if out.len() > 1 {
        out[1] = t;
    }
    for k in 1..out.len() - 1 {
        let kf = k as f64;
        out[k + 1] = ((2.0 * kf + 1.0) * t * out[k] - kf * out[k - 1]) / (kf + 1.0);
    }
}

fn solve_dense(a: &mut [f64], b: &mut [f64], n: usize) -> Result<Vec<f64>> {
    for col in 0..n {
        let piv = (col..n)
            .max_by(|&p, &q| a[p * n + col].abs().total_cmp(&a[q * n + col].abs()))
            .unwrap();
        if a[piv * n + col] == 0.0 {
            return Err(Error::Unfolding("degenerate polynomial fit".into()));
        }
        if piv != col {
            for k in 0..n {
                a.swap(piv * n + k, col * n + k);
            }
            b.swap(piv, col);
        }
        let d = a[col * n + col];
        for r in col + 1..n {
            let f = a[r * n + col] / d;
            for k in col..n {
                a[r * n + k] -= f * a[col * n + k];
            }
            b[r] -= f * b[col];
        }
    }
    let mut out = vec![0.0; n];
    for col in (0..n).rev() {
        let mut s = b[col];
        for k in col + 1..n {
            s -= a[col * n + k] * out[k];
        }
        out[col] = s / a[col * n + col];
    }
    Ok(out)
}

/// Smooth zero-counting approximation for the Riemann zeta zeros.
pub fn zeta_counting(t: f64) -> f64 {
    let u = t / (2.0 * std::f64::consts::PI);
    u * (u.ln() - 1.0) + 7.0 / 8.0
}
