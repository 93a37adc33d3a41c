//! Tracy–Widom distribution functions F₁, F₂, F₄ from the Hastings–McLeod
//! solution, with I(s) = ∫_s^∞ q and J(s) = ∫_s^∞ (x−s)q²:
//!
//!   F₂(s) = exp(−J(s))
//!   F₁(s) = sqrt( exp(−I(s)) · F₂(s) )
//!   F₄(s) = cosh( I(√2 s)/2 ) · sqrt( F₂(√2 s) )
//!
//! F₄ is stored as a function of its own argument, so the √2 rescaling is
//! internal and callers evaluate every β at the query point itself. Densities
//! come from differentiating these closed forms through q and the integrals,
//! never from numerical differencing of the CDF.

use super::pii::PainleveSolution;
use crate::error::{Error, Result};
use crate::interp::{monotone_eval, monotone_slopes};

pub const SQRT_2: f64 = std::f64::consts::SQRT_2;

/// Ensemble symmetry index β ∈ {1, 2, 4}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Beta {
    One,
    Two,
    Four,
}

impl Beta {
    pub fn value(self) -> u32 {
        match self {
            Beta::One => 1,
            Beta::Two => 2,
            Beta::Four => 4,
        }
    }

    pub fn from_u32(v: u32) -> Result<Self> {
        match v {
            1 => Ok(Beta::One),
            2 => Ok(Beta::Two),
            4 => Ok(Beta::Four),
            other => Err(Error::domain(format!(
                "beta must be one of {{1, 2, 4}}, got {other}"
            ))),
        }
    }
}

impl std::fmt::Display for Beta {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.value())
    }
}

/// F_β(s) from a tabulated Hastings–McLeod solution.
pub fn tw_cdf(beta: Beta, s: f64, sol: &PainleveSolution) -> Result<f64> {
    match beta {
        Beta::Two => {
            let p = sol.eval(s)?;
            Ok((-p.int_xq2).exp())
        }
        Beta::One => {
            let p = sol.eval(s)?;
            Ok((-0.5 * (p.int_q + p.int_xq2)).exp())
        }
        Beta::Four => {
            let p = sol.eval(SQRT_2 * s)?;
            Ok((0.5 * p.int_q).cosh() * (-0.5 * p.int_xq2).exp())
        }
    }
}

/// Density f_β(s) = dF_β/ds via the analytic derivatives
/// I'(s) = −q(s), J'(s) = −∫_s^∞ q².
pub fn tw_pdf(beta: Beta, s: f64, sol: &PainleveSolution) -> Result<f64> {
    match beta {
        Beta::Two => {
            let p = sol.eval(s)?;
            Ok(p.int_q2 * (-p.int_xq2).exp())
        }
        Beta::One => {
            let p = sol.eval(s)?;
            let f1 = (-0.5 * (p.int_q + p.int_xq2)).exp();
            Ok(0.5 * (p.q + p.int_q2) * f1)
        }
        Beta::Four => {
            let p = sol.eval(SQRT_2 * s)?;
            let half = 0.5 * p.int_q;
            Ok(SQRT_2 * 0.5
                * (-0.5 * p.int_xq2).exp()
                * (p.int_q2 * half.cosh() - p.q * half.sinh()))
        }
    }
}

/// Tabulated Tracy–Widom distribution on a uniform grid with monotone-cubic
/// off-grid queries.
#[derive(Debug, Clone, PartialEq)]
pub struct TWDistribution {
    beta: Beta,
    s_grid: Vec<f64>,
    cdf: Vec<f64>,
    pdf: Vec<f64>,
    cdf_slopes: Vec<f64>,
    pdf_slopes: Vec<f64>,
}

/// Tabulate F_β and f_β on a uniform grid of `n_points` over [s_min, s_max].
///
/// For β = 4 the certified query window is |√2·s| within the solver range;
/// grid points below it are zero-filled only when the boundary value is
/// provably below 1e-12, otherwise the request errors.
pub fn tw_tabulate(
    beta: Beta,
    s_min: f64,
    s_max: f64,
    n_points: usize,
    sol: &PainleveSolution,
) -> Result<TWDistribution> {
    if n_points < 100 {
        return Err(Error::domain(format!(
            "tw_tabulate: need n_points >= 100, got {n_points}"
        )));
    }
    if s_min >= s_max || s_min.is_nan() || s_max.is_nan() {
        return Err(Error::domain(format!(
            "tw_tabulate: need s_min < s_max, got {s_min} .. {s_max}"
        )));
    }
    let scale = if beta == Beta::Four { SQRT_2 } else { 1.0 };
    if scale * s_max > sol.x_start() {
        return Err(Error::Range(format!(
            "tw_tabulate: s_max = {s_max} outside solver range for beta {beta}"
        )));
    }
    let lower_supported = (sol.x_end() + 1.0) / scale;
    if s_min < lower_supported {
        // Zero-filling the left tail is only honest when the distribution is
        // already negligible at the edge of the supported window.
        let edge = tw_cdf(beta, lower_supported, sol)?;
        if edge > 1e-8 {
            return Err(Error::Range(format!(
                "tw_tabulate: s_min = {s_min} below the supported window and \
                 F_{beta}({lower_supported:.3}) = {edge:.3e} is not negligible"
            )));
        }
    }

    let mut s_grid = Vec::with_capacity(n_points);
    let mut cdf = Vec::with_capacity(n_points);
    let mut pdf = Vec::with_capacity(n_points);
    for i in 0..n_points {
        let s = s_min + (s_max - s_min) * i as f64 / (n_points - 1) as f64;
        s_grid.push(s);
        if s < lower_supported {
            cdf.push(0.0);
            pdf.push(0.0);
        } else {
            cdf.push(tw_cdf(beta, s, sol)?);
            pdf.push(tw_pdf(beta, s, sol)?.max(0.0));
        }
    }
    let cdf_slopes = monotone_slopes(&s_grid, &cdf);
    let pdf_slopes = monotone_slopes(&s_grid, &pdf);
    Ok(TWDistribution {
        beta,
        s_grid,
        cdf,
        pdf,
        cdf_slopes,
        pdf_slopes,
    })
}

impl TWDistribution {
    pub fn beta(&self) -> Beta {
        self.beta
    }

    pub fn s_grid(&self) -> &[f64] {
        &self.s_grid
    }

    pub fn cdf_values(&self) -> &[f64] {
        &self.cdf
    }

    pub fn pdf_values(&self) -> &[f64] {
        &self.pdf
    }

    /// Monotone-cubic CDF query, clamped to [0, 1] outside the grid.
    pub fn cdf(&self, s: f64) -> f64 {
        monotone_eval(&self.s_grid, &self.cdf, &self.cdf_slopes, s).clamp(0.0, 1.0)
    }

    pub fn pdf(&self, s: f64) -> f64 {
        monotone_eval(&self.s_grid, &self.pdf, &self.pdf_slopes, s).max(0.0)
    }

    /// Simpson integral of the tabulated density over the grid.
    pub fn pdf_mass(&self) -> f64 {
        simpson(&self.s_grid, &self.pdf)
    }
}

/// Composite Simpson on a uniform grid (trapezoid fallback on the last cell
/// when the point count is even).
pub(crate) fn simpson(x: &[f64], y: &[f64]) -> f64 {
    let n = x.len();
    assert!(n >= 3);
    let h = x[1] - x[0];
    let odd_cells = (n - 1) % 2 == 1;
    let last_simpson = if odd_cells { n - 2 } else { n - 1 };
    let mut total = 0.0;
    let mut i = 0;
    while i + 2 <= last_simpson {
        total += h / 3.0 * (y[i] + 4.0 * y[i + 1] + y[i + 2]);
        i += 2;
    }
    if odd_cells {
        total += 0.5 * h * (y[n - 2] + y[n - 1]);
    }
    total
}
