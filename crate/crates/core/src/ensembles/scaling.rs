//! Edge and bulk scalings of sampled spectra.

use super::spec::{EnsembleSpec, SpectrumSample};
use crate::error::{Error, Result};

/// Edge-scaled largest eigenvalue λ̂ = (λ_max − 2σ√N) N^{1/6} / σ, the exact
/// inverse of λ_max = 2σ√N + σ λ̂ N^{-1/6}.
pub fn edge_scale(sample: &SpectrumSample, spec: &EnsembleSpec) -> f64 {
    let n = spec.n as f64;
    (sample.max() - 2.0 * spec.sigma * n.sqrt()) * n.powf(1.0 / 6.0) / spec.sigma
}

/// Semicircle density normalized to unit mass on [−1, 1].
pub fn semicircle_density(x: f64) -> f64 {
    if x.abs() >= 1.0 {
        0.0
    } else {
        2.0 / std::f64::consts::PI * (1.0 - x * x).sqrt()
    }
}

/// The spectral radius 2σ√N; eigenvalues scaled by it land on the semicircle
/// support [−1, 1].
pub fn semicircle_scale(spec: &EnsembleSpec) -> f64 {
    2.0 * spec.sigma * (spec.n as f64).sqrt()
}

/// Normalized nearest-neighbor spacings from the central `window` fraction of
/// the spectrum.
///
/// Spacings are multiplied by the mean density over the window, which by the
/// semicircle law is flat there to O(window²); the estimate is taken from the
/// sample itself (count − 1 over span), so a picket-fence input maps to
/// exactly unit spacings.
pub fn bulk_spacings(sample: &SpectrumSample, window: f64) -> Result<Vec<f64>> {
    if !window.is_finite() || window <= 0.0 || window > 0.5 {
        return Err(Error::domain(format!(
            "bulk_spacings: window must be in (0, 0.5], got {window}"
        )));
    }
    let n = sample.len();
    let lo = ((n as f64) * (0.5 - 0.5 * window)).floor() as usize;
    let hi = (((n as f64) * (0.5 + 0.5 * window)).ceil() as usize).min(n);
    let slice = &sample.values()[lo..hi];
    if slice.len() < 10 {
        return Err(Error::InsufficientData(format!(
            "bulk_spacings: only {} eigenvalues in the central window",
            slice.len()
        )));
    }
    let span = slice.last().unwrap() - slice.first().unwrap();
    if span <= 0.0 || span.is_nan() {
        return Err(Error::InsufficientData(
            "bulk_spacings: degenerate (zero-width) window".into(),
        ));
    }
    let density = (slice.len() - 1) as f64 / span;
    Ok(slice.windows(2).map(|w| (w[1] - w[0]) * density).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ensembles::sample_batch;
    use crate::painleve::Beta;
    use approx::assert_relative_eq;

    #[test]
    fn edge_scale_is_exact_affine_inverse() {
        let spec = EnsembleSpec::gaussian(Beta::Two, 64);
        // λ_max = 2σ√64 + σ·s/64^{1/6} must map back to s exactly.
        for &s in &[-3.0, 0.0, 1.7] {
            let lam = 2.0 * spec.sigma * 8.0 + spec.sigma * s / 64f64.powf(1.0 / 6.0);
            let sample = SpectrumSample::new(vec![0.0, lam], "synthetic", 0).unwrap();
            assert_relative_eq!(edge_scale(&sample, &spec), s, epsilon = 1e-13);
        }
        // σ = 1/√2, N = 64, λ_max = 8√2 → λ̂ = 0.
        let sample = SpectrumSample::new(vec![8.0 * std::f64::consts::SQRT_2], "synthetic", 0)
            .unwrap();
        assert_relative_eq!(edge_scale(&sample, &spec), 0.0, epsilon = 1e-12);
    }

    #[test]
    fn picket_fence_spacings_are_unit() {
        let values: Vec<f64> = (0..101).map(|i| 3.0 + 0.25 * i as f64).collect();
        let sample = SpectrumSample::new(values, "picket", 0).unwrap();
        let spacings = bulk_spacings(&sample, 0.4).unwrap();
        for s in &spacings {
            assert_relative_eq!(*s, 1.0, max_relative = 1e-12);
        }
    }

    #[test]
    fn gue_mean_bulk_spacing_is_near_one_with_theoretical_density() {
        // The empirical window density must agree with the semicircle value
        // √(2N)/π at the center within ~2%.
        let spec = EnsembleSpec::gaussian(Beta::Two, 200);
        let samples = sample_batch(&spec, 11, 10).unwrap();
        let rho0 = (2.0 * spec.n as f64).sqrt() / std::f64::consts::PI;
        for s in &samples {
            let vals = s.values();
            let lo = vals[80];
            let hi = vals[119];
            let emp_density = 39.0 / (hi - lo);
            assert!(
                (emp_density / rho0 - 1.0).abs() < 0.1,
                "window density {emp_density} vs semicircle {rho0}"
            );
        }
    }

    #[test]
    fn window_too_small_errors() {
        let sample = SpectrumSample::new((0..30).map(|i| i as f64).collect(), "x", 0).unwrap();
        assert!(bulk_spacings(&sample, 0.1).is_err()); // 3 eigenvalues only
        assert!(bulk_spacings(&sample, 0.6).is_err());
        assert!(bulk_spacings(&sample, 0.5).is_ok());
    }

    #[test]
    fn semicircle_density_normalizes() {
        let rule = crate::specialfun::gauss_legendre(200, -1.0, 1.0).unwrap();
        let mass = rule.integrate(semicircle_density);
        assert_relative_eq!(mass, 1.0, epsilon = 1e-6);
    }
}
