//! Gauss–Legendre quadrature rules.
//!
//! Nodes are Legendre roots found by Newton iteration from the Tricomi-style
//! cosine initial guess; weights follow from the derivative. Rules are built
//! symmetric by construction (compute one half, mirror the other) so the
//! weight sum matches the interval length to near machine precision.

use crate::error::{Error, Result};

/// A fixed quadrature rule on a bounded interval (a, b).
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    nodes: Vec<f64>,
    weights: Vec<f64>,
    interval: (f64, f64),
}

impl QuadratureRule {
    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn interval(&self) -> (f64, f64) {
        self.interval
    }

    /// Apply the rule to an integrand.
    pub fn integrate(&self, mut f: impl FnMut(f64) -> f64) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }
}

/// Build the `order`-point Gauss–Legendre rule on (a, b).
///
/// Exact (to roundoff) for polynomials of degree <= 2·order − 1.
pub fn gauss_legendre(order: usize, a: f64, b: f64) -> Result<QuadratureRule> {
    if order == 0 {
        return Err(Error::domain("gauss_legendre: order must be >= 1"));
    }
    if !(a.is_finite() && b.is_finite()) {
        return Err(Error::domain("gauss_legendre: endpoints must be finite"));
    }
    if a >= b {
        return Err(Error::domain(format!(
            "gauss_legendre: need a < b, got a = {a}, b = {b}"
        )));
    }

    let n = order;
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];

    // Roots come out in decreasing order of cos; fill symmetric pairs.
    for i in 0..n.div_ceil(2) {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() <= 1e-15 {
                let (p2, d2) = legendre_with_derivative(n, x);
                dp = d2;
                x -= p2 / d2;
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        // x > 0 here (i indexes the upper half); mirror to the lower half.
        nodes[n - 1 - i] = mid + half * x;
        nodes[i] = mid - half * x;
        weights[n - 1 - i] = half * w;
        weights[i] = half * w;
    }
    if n % 2 == 1 {
        // Central node is exactly the midpoint.
        let (_, d) = legendre_with_derivative(n, 0.0);
        nodes[n / 2] = mid;
        weights[n / 2] = half * 2.0 / (d * d);
    }

    Ok(QuadratureRule {
        nodes,
        weights,
        interval: (a, b),
    })
}

/// (P_n(x), P_n'(x)) by the three-term recurrence.
fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p_prev = 1.0;
    let mut p = x;
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 1..n {
        let kf = k as f64;
        let p_next = ((2.0 * kf + 1.0) * x * p - kf * p_prev) / (kf + 1.0);
        p_prev = p;
        p = p_next;
    }
    let d = n as f64 * (x * p - p_prev) / (x * x - 1.0);
    (p, d)
}
