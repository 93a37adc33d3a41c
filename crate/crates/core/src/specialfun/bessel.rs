//! Modified Bessel functions of the first kind, integer order.
//!
//! The ascending series
//!   I_k(z) = Σ_{m>=0} (z/2)^{2m+k} / (m! (m+k)!)
//! has all-positive terms on z >= 0, so straight summation is accurate for
//! the whole supported box |k| <= 200, 0 <= z <= 100 (largest value is
//! I_0(100) ≈ 1.07e42, comfortably inside f64 range).

use crate::error::{Error, Result};

/// I_k(z) for integer k (symmetric in k ↔ −k), 0 <= z <= 100, |k| <= 200.
pub fn bessel_i(k: i64, z: f64) -> Result<f64> {
    if k.abs() > 200 {
        return Err(Error::capability(format!(
            "bessel_i: |k| = {} exceeds 200",
            k.abs()
        )));
    }
    if !z.is_finite() || !(0.0..=100.0).contains(&z) {
        return Err(Error::capability(format!(
            "bessel_i: z = {z} outside [0, 100]"
        )));
    }
    let k = k.unsigned_abs() as usize;
    let hz = 0.5 * z;
    // Leading term (z/2)^k / k!; underflows harmlessly to 0 for large k with
    // small z, which is also the correct limit.
    let mut term = 1.0;
    for j in 1..=k {
        term *= hz / j as f64;
    }
    let mut sum = term;
    let hz2 = hz * hz;
    for m in 1..400usize {
        term *= hz2 / (m as f64 * (m + k) as f64);
        sum += term;
        if term < 1e-18 * sum {
            break;
        }
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn series_constant_term() {
        assert_eq!(bessel_i(0, 0.0).unwrap(), 1.0);
        assert_eq!(bessel_i(3, 0.0).unwrap(), 0.0);
    }

    #[test]
    fn symmetric_in_order() {
        for k in [1i64, 2, 5, 40] {
            for &z in &[0.3, 2.0, 17.5, 90.0] {
                assert_eq!(bessel_i(k, z).unwrap(), bessel_i(-k, z).unwrap());
            }
        }
    }

    /// Trapezoid rule on the periodic integrand (1/2π)∫ e^{z cos θ} cos(kθ) dθ
    /// converges spectrally; an independent route to the same numbers.
    fn bessel_by_quadrature(k: i64, z: f64) -> f64 {
        let n = 4096;
        let mut sum = 0.0;
        for j in 0..n {
            let theta = 2.0 * std::f64::consts::PI * j as f64 / n as f64;
            sum += (z * theta.cos()).exp() * (k as f64 * theta).cos();
        }
        sum / n as f64
    }

    #[test]
    fn matches_integral_representation() {
        for &(k, z) in &[(0i64, 2.0), (1, 0.7), (3, 11.0), (10, 40.0), (25, 95.0)] {
            let series = bessel_i(k, z).unwrap();
            let quad = bessel_by_quadrature(k, z);
            assert_relative_eq!(series, quad, max_relative = 1e-10);
        }
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(bessel_i(201, 1.0).is_err());
        assert!(bessel_i(0, -0.5).is_err());
        assert!(bessel_i(0, 100.5).is_err());
        assert!(bessel_i(0, f64::NAN).is_err());
    }
}
