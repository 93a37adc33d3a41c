//! Cubic interpolation helpers.
//!
//! Two flavors: Hermite interpolation with analytically known slopes (used by
//! the Painlevé tabulations, which carry exact derivatives), and
//! Fritsch–Carlson monotone cubic slopes for tabulated CDFs.

/// Cubic Hermite interpolation of f on [x0, x1] given endpoint values and
/// derivatives.
pub(crate) fn hermite_cubic(x: f64, x0: f64, x1: f64, f0: f64, f1: f64, d0: f64, d1: f64) -> f64 {
    let h = x1 - x0;
    let t = (x - x0) / h;
    let t2 = t * t;
    let t3 = t2 * t;
    let h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
    let h10 = t3 - 2.0 * t2 + t;
    let h01 = -2.0 * t3 + 3.0 * t2;
    let h11 = t3 - t2;
    h00 * f0 + h10 * h * d0 + h01 * f1 + h11 * h * d1
}

/// Index of the grid cell containing x (grid strictly increasing).
/// Clamps to the first/last cell for out-of-range x.
pub(crate) fn cell_index(grid: &[f64], x: f64) -> usize {
    match grid.binary_search_by(|g| g.total_cmp(&x)) {
        Ok(i) => i.min(grid.len() - 2),
        Err(0) => 0,
        Err(i) => (i - 1).min(grid.len() - 2),
    }
}

/// Fritsch–Carlson slopes for a monotone cubic interpolant through
/// (x[i], y[i]). The resulting Hermite interpolant preserves monotonicity.
pub(crate) fn monotone_slopes(x: &[f64], y: &[f64]) -> Vec<f64> {
    let n = x.len();
    assert!(n >= 2 && y.len() == n);
    let mut delta = vec![0.0; n - 1];
    for i in 0..n - 1 {
        delta[i] = (y[i + 1] - y[i]) / (x[i + 1] - x[i]);
    }
    let mut m = vec![0.0; n];
    m[0] = delta[0];
    m[n - 1] = delta[n - 2];
    for i in 1..n - 1 {
        if delta[i - 1] * delta[i] <= 0.0 {
            m[i] = 0.0;
        } else {
            // Harmonic mean weighting keeps the interpolant monotone.
            let w1 = 2.0 * (x[i + 1] - x[i]) + (x[i] - x[i - 1]);
            let w2 = (x[i + 1] - x[i]) + 2.0 * (x[i] - x[i - 1]);
            m[i] = (w1 + w2) / (w1 / delta[i - 1] + w2 / delta[i]);
        }
    }
    // Clamp endpoints to avoid overshoot.
    for (i, d) in delta.iter().enumerate() {
        if *d == 0.0 {
            m[i] = 0.0;
            m[i + 1] = 0.0;
        } else {
            let a = m[i] / d;
            let b = m[i + 1] / d;
            if a > 3.0 {
                m[i] = 3.0 * d;
            }
            if b > 3.0 {
                m[i + 1] = 3.0 * d;
            }
        }
    }
    m
}

/// Evaluate the monotone cubic defined by (x, y, slopes) at `q`, clamped to
/// the table range.
pub(crate) fn monotone_eval(x: &[f64], y: &[f64], slopes: &[f64], q: f64) -> f64 {
    if q <= x[0] {
        return y[0];
    }
    if q >= x[x.len() - 1] {
        return y[y.len() - 1];
    }
    let i = cell_index(x, q);
    hermite_cubic(q, x[i], x[i + 1], y[i], y[i + 1], slopes[i], slopes[i + 1])
}
