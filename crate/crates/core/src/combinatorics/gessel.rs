//! Gessel's Toeplitz determinant for the Poissonized LIS distribution.
//!
//! D_n(t) = det[ c_{i-j} ] with c_k the k-th Fourier coefficient of the
//! symbol e^{√t (z + 1/z)}, which equals I_k(2√t). Then
//!
//!   Σ_{N>=0} Prob(ℓ_N <= n) t^N / N!  =  D_n(t),
//!
//! and e^{-t} D_n(t) → F₂(s) along n = [2√t + s t^{1/6}].
//!
//! Extracting the O(1) scaled value from coefficients of size e^{2√t} costs
//! about t/ln(10) digits of cancellation, so the Bessel coefficients and the
//! pivoted elimination both run in big-integer fixed point with
//! 80 + 0.48·t decimal digits; see `bigfixed.rs`. The f64 Bessel routine in
//! `specialfun` independently confirms the coefficients at working precision.

use super::bigfixed::FixedCtx;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

const MAX_N: usize = 60;
const MAX_T: f64 = 400.0;

/// I_k(2√t) for k = 0..n in the fixed-point context: ascending series
/// Σ_m (√t)^{k} t^m / (m! (m+k)!), all terms positive.
fn bessel_coefficients(ctx: &FixedCtx, n: usize, t: f64) -> Vec<BigInt> {
    let t_fx = ctx.encode_f64(t);
    let sqrt_t = ctx.sqrt(&t_fx);
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        // term_0 = (√t)^k / k!
        let mut term = ctx.encode_f64(1.0);
        for j in 1..=k {
            term = ctx.mul(&term, &sqrt_t);
            term = ctx.div_uint(&term, j as u128);
        }
        let mut sum = term.clone();
        for m in 1..20_000u128 {
            term = ctx.mul(&term, &t_fx);
            term = ctx.div_uint(&term, m * (m + k as u128));
            if term.is_zero() {
                break;
            }
            sum += &term;
        }
        out.push(sum);
    }
    out
}

/// Pivoted Gaussian elimination in fixed point; returns the determinant as
/// (sign, |D| in f64) with the magnitude representable up to ~1e308.
fn toeplitz_det(n: usize, t: f64) -> Result<(f64, f64)> {
    if n == 0 || n > MAX_N {
        return Err(Error::domain(format!(
            "gessel_toeplitz: n must be in 1..={MAX_N}, got {n}"
        )));
    }
    if !(t > 0.0 && t <= MAX_T) {
        return Err(Error::Range(format!(
            "gessel_toeplitz: t must be in (0, {MAX_T}], got {t}"
        )));
    }
    let digits = 80 + (0.48 * t).ceil() as u32;
    let ctx = FixedCtx::with_digits(digits);
    let coeff = bessel_coefficients(&ctx, n, t);

    let mut mat: Vec<BigInt> = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            mat.push(coeff[i.abs_diff(j)].clone());
        }
    }

    let mut sign = 1.0f64;
    let mut det = ctx.encode_f64(1.0);
    for col in 0..n {
        let pivot_row = (col..n)
            .max_by(|&a, &b| {
                mat[a * n + col]
                    .magnitude()
                    .cmp(mat[b * n + col].magnitude())
            })
            .unwrap();
        if mat[pivot_row * n + col].is_zero() {
            return Ok((0.0, 0.0));
        }
        if pivot_row != col {
            for k in 0..n {
                mat.swap(pivot_row * n + k, col * n + k);
            }
            sign = -sign;
        }
        let pivot = mat[col * n + col].clone();
        det = ctx.mul(&det, &pivot);
        for r in col + 1..n {
            if mat[r * n + col].is_zero() {
                continue;
            }
            let factor = ctx.div(&mat[r * n + col], &pivot);
            for k in col..n {
                let delta = ctx.mul(&factor, &mat[col * n + k]);
                mat[r * n + k] -= delta;
            }
        }
    }
    if det.is_negative() {
        sign = -sign;
    }
    Ok((sign, ctx.to_f64(&det).abs()))
}

/// D_n(t) itself. Errors if the value would overflow f64.
pub fn gessel_toeplitz(n: usize, t: f64) -> Result<f64> {
    let (sign, mag) = toeplitz_det(n, t)?;
    if !mag.is_finite() {
        return Err(Error::Range(format!(
            "gessel_toeplitz: D_{n}({t}) overflows f64"
        )));
    }
    Ok(sign * mag)
}

/// e^{-t} D_n(t), the Poissonized CDF value.
pub fn gessel_toeplitz_scaled(n: usize, t: f64) -> Result<f64> {
    let (sign, mag) = toeplitz_det(n, t)?;
    // mag <= e^t here (the generating function is dominated by e^t), so the
    // product cannot overflow even though each factor is extreme.
    Ok(sign * (mag * (-t).exp()))
}
