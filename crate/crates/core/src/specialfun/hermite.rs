//! Orthonormal Hermite functions φ_n(x) = H_n(x) e^{-x²/2} / √(2^n n! √π).
//!
//! The weighted three-term recurrence is used throughout:
//!   φ_0 = π^{-1/4} e^{-x²/2},   φ_1 = √2 x φ_0,
//!   φ_{n+1} = √(2/(n+1)) x φ_n − √(n/(n+1)) φ_{n-1}.
//! This keeps every intermediate on the scale of the final value, so there is
//! no overflow for any n the crate accepts.

use crate::error::{Error, Result};

const MAX_DEGREE: usize = 500;
#[allow(clippy::excessive_precision)]
const PI_POW_NEG_QUARTER: f64 = 0.7511255444649424828587;

/// Orthonormal Hermite function φ_n(x) (unit L² norm on the line).
pub fn hermite_phi(n: usize, x: f64) -> Result<f64> {
    Ok(hermite_phi_pair(n, x)?.0)
}

/// (φ_n(x), φ_{n-1}(x)) in one recurrence pass; φ_{-1} := 0.
///
/// The pair is what Christoffel–Darboux kernels consume, and the derivative
/// follows from φ_n'(x) = −x φ_n(x) + √(2n) φ_{n-1}(x).
pub fn hermite_phi_pair(n: usize, x: f64) -> Result<(f64, f64)> {
    if n > MAX_DEGREE {
        return Err(Error::capability(format!(
            "hermite_phi: n = {n} exceeds {MAX_DEGREE} (recurrence accuracy not certified)"
        )));
    }
    if !x.is_finite() {
        return Err(Error::domain(format!("hermite_phi: non-finite x = {x}")));
    }
    let phi0 = PI_POW_NEG_QUARTER * (-0.5 * x * x).exp();
    if n == 0 {
        return Ok((phi0, 0.0));
    }
    let mut prev = phi0;
    let mut cur = std::f64::consts::SQRT_2 * x * phi0;
    for k in 1..n {
        let kf = k as f64;
        let next = (2.0 / (kf + 1.0)).sqrt() * x * cur - (kf / (kf + 1.0)).sqrt() * prev;
        prev = cur;
        cur = next;
    }
    Ok((cur, prev))
}
