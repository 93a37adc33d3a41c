//! Fixed-point big-integer arithmetic for the Gessel Toeplitz determinant.
//!
//! e^{-t} D_n(t) extracts an O(1) number from data of size e^t, so the
//! computation needs roughly t/ln(10) digits beyond double precision — at
//! t = 400 no f64 pipeline survives (rounding the Bessel coefficients alone
//! destroys the determinant). Values here are BigInt mantissas scaled by
//! 2^{-frac_bits}; ~1000 bits cover the worst case and the 40×40 elimination
//! still runs in milliseconds.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

pub(crate) struct FixedCtx {
    frac_bits: u32,
}

impl FixedCtx {
    /// Context with `decimal_digits` of fractional precision.
    pub fn with_digits(decimal_digits: u32) -> Self {
        FixedCtx {
            frac_bits: (decimal_digits as f64 * 3.3219280948873626).ceil() as u32 + 8,
        }
    }

    /// Exact encoding (f64 values are dyadic rationals).
    pub fn encode_f64(&self, x: f64) -> BigInt {
        assert!(x.is_finite());
        let bits = x.to_bits();
        let sign = if bits >> 63 == 1 { -1 } else { 1 };
        let exp_bits = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & ((1u64 << 52) - 1);
        let (mant, exp) = if exp_bits == 0 {
            (frac, -1074i64)
        } else {
            (frac | (1u64 << 52), exp_bits - 1075)
        };
        let m = BigInt::from(mant) * sign;
        let shift = exp + self.frac_bits as i64;
        if shift >= 0 {
            m << shift
        } else {
            m >> (-shift)
        }
    }

    pub fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        (a * b) >> self.frac_bits
    }

    pub fn div(&self, a: &BigInt, b: &BigInt) -> BigInt {
        (a << self.frac_bits) / b
    }

    pub fn div_uint(&self, a: &BigInt, d: u128) -> BigInt {
        a / BigInt::from(d)
    }

    /// Value square root: for a representing x, returns the representation
    /// of √x (a must be nonnegative).
    pub fn sqrt(&self, a: &BigInt) -> BigInt {
        isqrt(&(a << self.frac_bits))
    }

    pub fn to_f64(&self, a: &BigInt) -> f64 {
        // Reduce to a 64-bit mantissa first so huge values survive.
        let bits = a.bits() as i64;
        let shift = (bits - 64).max(0);
        let head = (a >> shift).to_f64().unwrap_or(f64::NAN);
        head * exp2i(shift - self.frac_bits as i64)
    }
}

fn exp2i(k: i64) -> f64 {
    // 2^k; powers of two are exact in f64 until they leave its range.
    2.0f64.powi(k.clamp(-1100, 1100) as i32)
}

/// Integer square root by Newton iteration from above.
fn isqrt(n: &BigInt) -> BigInt {
    assert!(!n.is_negative());
    if n.bits() <= 1 {
        return n.clone();
    }
    let mut x: BigInt = BigInt::from(1) << n.bits().div_ceil(2);
    loop {
        let y = (&x + n / &x) >> 1;
        if y >= x {
            return x;
        }
        x = y;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn roundtrip_and_arithmetic() {
        let ctx = FixedCtx::with_digits(40);
        let a = ctx.encode_f64(1.5);
        let b = ctx.encode_f64(-2.25);
        assert_relative_eq!(ctx.to_f64(&ctx.mul(&a, &b)), -3.375, max_relative = 1e-30);
        assert_relative_eq!(ctx.to_f64(&ctx.div(&a, &b)), -2.0 / 3.0, max_relative = 1e-15);
        assert_relative_eq!(ctx.to_f64(&ctx.div_uint(&a, 3)), 0.5, max_relative = 1e-15);
    }

    #[test]
    fn sqrt_of_two() {
        let ctx = FixedCtx::with_digits(60);
        let r = ctx.sqrt(&ctx.encode_f64(2.0));
        let as_f64 = ctx.to_f64(&r);
        assert_relative_eq!(as_f64, std::f64::consts::SQRT_2, max_relative = 1e-15);
        // 60-digit check: r² recovers 2 to the context precision.
        let sq = ctx.mul(&r, &r);
        let two = ctx.encode_f64(2.0);
        let diff = (&sq - &two).magnitude().bits();
        assert!(diff <= 2, "residual bits {diff}");
    }

    #[test]
    fn huge_values_convert() {
        let ctx = FixedCtx::with_digits(30);
        // e^400-scale value: 2^577.
        let big = BigInt::from(1) << (577 + ctx.frac_bits);
        let f = ctx.to_f64(&big);
        assert_relative_eq!(f.ln(), 577.0 * std::f64::consts::LN_2, max_relative = 1e-12);
    }
}
