//! Ensemble definitions and spectrum sampling.
//!
//! Conventions (validated empirically by the edge tests rather than trusted):
//! off-diagonal standard deviation σ = 1/√2, diagonal variance 2σ²/β. With
//! these, λ_max/√N → 2σ = √2 and the edge fluctuations follow F_β under the
//! scaling λ_max = 2σ√N + σ λ̂ N^{-1/6}.

use super::matrix::{eigenvalues_symmetric, HermitianMatrix};
use crate::error::{Error, Result};
use crate::painleve::Beta;
use crate::rngstream;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use rayon::prelude::*;

/// Fixed off-diagonal standard deviation (paper normalization).
pub const SIGMA: f64 = std::f64::consts::FRAC_1_SQRT_2;

const MAX_N: usize = 2000;

/// Off-diagonal entry law, standardized to mean 0 and variance 1 before the
/// σ scaling is applied.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EntryLaw {
    Gaussian,
    /// ±1 equiprobable.
    Rademacher,
    /// Uniform on (−√3, √3).
    Uniform,
}

impl EntryLaw {
    fn sample(self, rng: &mut ChaCha8Rng) -> f64 {
        match self {
            EntryLaw::Gaussian => StandardNormal.sample(rng),
            EntryLaw::Rademacher => {
                if rng.gen::<u64>() & 1 == 0 {
                    1.0
                } else {
                    -1.0
                }
            }
            EntryLaw::Uniform => {
                let sqrt3 = 3.0f64.sqrt();
                rng.gen::<f64>() * 2.0 * sqrt3 - sqrt3
            }
        }
    }
}

impl std::fmt::Display for EntryLaw {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            EntryLaw::Gaussian => write!(f, "gaussian"),
            EntryLaw::Rademacher => write!(f, "rademacher"),
            EntryLaw::Uniform => write!(f, "uniform"),
        }
    }
}

/// A matrix ensemble: symmetry class β, dimension N, entry law.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnsembleSpec {
    pub beta: Beta,
    pub n: usize,
    pub entry_law: EntryLaw,
    /// Off-diagonal standard deviation; fixed to 1/√2.
    pub sigma: f64,
}

impl EnsembleSpec {
    /// Invariant Gaussian ensemble (GOE/GUE/GSE by β).
    pub fn gaussian(beta: Beta, n: usize) -> Self {
        EnsembleSpec {
            beta,
            n,
            entry_law: EntryLaw::Gaussian,
            sigma: SIGMA,
        }
    }

    /// Wigner ensemble with a non-Gaussian entry law (β = 1 or 2).
    pub fn wigner(beta: Beta, entry_law: EntryLaw, n: usize) -> Self {
        EnsembleSpec {
            beta,
            n,
            entry_law,
            sigma: SIGMA,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 || self.n > MAX_N {
            return Err(Error::domain(format!(
                "EnsembleSpec: N must be in [1, {MAX_N}], got {}",
                self.n
            )));
        }
        if self.beta == Beta::Four && self.entry_law != EntryLaw::Gaussian {
            return Err(Error::capability(
                "beta = 4 supports only the gaussian entry law",
            ));
        }
        Ok(())
    }

    pub fn label(&self) -> String {
        let name = match (self.beta, self.entry_law) {
            (Beta::One, EntryLaw::Gaussian) => "GOE".to_string(),
            (Beta::Two, EntryLaw::Gaussian) => "GUE".to_string(),
            (Beta::Four, EntryLaw::Gaussian) => "GSE".to_string(),
            (b, law) => format!("wigner-beta{}-{law}", b.value()),
        };
        format!("{name}-N{}", self.n)
    }
}

/// One sampled spectrum: sorted eigenvalues plus provenance.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumSample {
    values: Vec<f64>,
    meta: String,
    seed: u64,
}

impl SpectrumSample {
    pub fn new(mut values: Vec<f64>, meta: impl Into<String>, seed: u64) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::domain("SpectrumSample: empty spectrum"));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::domain("SpectrumSample: non-finite eigenvalue"));
        }
        values.sort_by(f64::total_cmp);
        Ok(SpectrumSample {
            values,
            meta: meta.into(),
            seed,
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

    pub fn max(&self) -> f64 {
        *self.values.last().unwrap()
    }

    pub fn meta(&self) -> &str {
        &self.meta
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }
}

/// Draw one matrix from the ensemble and return its spectrum. Deterministic
/// for fixed (spec, seed).
pub fn sample_spectrum(spec: &EnsembleSpec, seed: u64) -> Result<SpectrumSample> {
    sample_spectrum_draw(spec, seed, 0)
}

/// The raw matrix behind draw `index` of the batch keyed by `seed`. For
/// β = 4 this is the 2N×2N complex realization (doubled spectrum).
pub fn sample_matrix(spec: &EnsembleSpec, seed: u64, index: u64) -> Result<HermitianMatrix> {
    spec.validate()?;
    let mut rng = rngstream::stream(seed, index);
    Ok(match spec.beta {
        Beta::One => {
            let (n, data) = build_real_symmetric(spec, &mut rng);
            HermitianMatrix::Real { n, data }
        }
        Beta::Two => {
            let (n, re, im) = build_complex_hermitian(spec, &mut rng);
            HermitianMatrix::Complex { n, re, im }
        }
        Beta::Four => {
            let (n2, re, im) = build_quaternion_self_dual(spec, &mut rng);
            HermitianMatrix::Complex { n: n2, re, im }
        }
    })
}

/// Draw `index` of the batch keyed by `seed`; each index gets an independent
/// RNG stream so batches are schedule-independent.
pub fn sample_spectrum_draw(spec: &EnsembleSpec, seed: u64, index: u64) -> Result<SpectrumSample> {
    let matrix = sample_matrix(spec, seed, index)?;
    let raw = eigenvalues_symmetric(&matrix)?;
    let values = if spec.beta == Beta::Four {
        dedup_kramers_pairs(&raw)
    } else {
        raw
    };
    SpectrumSample::new(values, spec.label(), seed)
}

/// Batch of spectra, parallel across draws, returned in draw order.
pub fn sample_batch(spec: &EnsembleSpec, seed: u64, draws: usize) -> Result<Vec<SpectrumSample>> {
    spec.validate()?;
    (0..draws as u64)
        .into_par_iter()
        .map(|i| sample_spectrum_draw(spec, seed, i))
        .collect()
}

/// Real symmetric: diagonal sd √2·σ, off-diagonal sd σ.
pub(crate) fn build_real_symmetric(spec: &EnsembleSpec, rng: &mut ChaCha8Rng) -> (usize, Vec<f64>) {
    let n = spec.n;
    let diag_sd = spec.sigma * std::f64::consts::SQRT_2;
    let mut data = vec![0.0; n * n];
    for i in 0..n {
        data[i * n + i] = diag_sd * spec.entry_law.sample(rng);
        for j in i + 1..n {
            let v = spec.sigma * spec.entry_law.sample(rng);
            data[i * n + j] = v;
            data[j * n + i] = v;
        }
    }
    (n, data)
}

/// Complex Hermitian: real diagonal sd σ (variance 2σ²/β = σ²), off-diagonal
/// real and imaginary parts each sd σ/√2.
pub(crate) fn build_complex_hermitian(
    spec: &EnsembleSpec,
    rng: &mut ChaCha8Rng,
) -> (usize, Vec<f64>, Vec<f64>) {
    let n = spec.n;
    let part_sd = spec.sigma * std::f64::consts::FRAC_1_SQRT_2;
    let mut re = vec![0.0; n * n];
    let mut im = vec![0.0; n * n];
    for i in 0..n {
        re[i * n + i] = spec.sigma * spec.entry_law.sample(rng);
        for j in i + 1..n {
            let a = part_sd * spec.entry_law.sample(rng);
            let b = part_sd * spec.entry_law.sample(rng);
            re[i * n + j] = a;
            im[i * n + j] = b;
            re[j * n + i] = a;
            im[j * n + i] = -b;
        }
    }
    (n, re, im)
}

/// Quaternion self-dual as 2N×2N complex: off-diagonal quaternion components
/// each sd σ/2 (so E|q|² = σ²), real diagonal sd σ/√2 (variance 2σ²/β).
/// Every eigenvalue of the realization has multiplicity two.
pub(crate) fn build_quaternion_self_dual(
    spec: &EnsembleSpec,
    rng: &mut ChaCha8Rng,
) -> (usize, Vec<f64>, Vec<f64>) {
    let n = spec.n;
    let n2 = 2 * n;
    let comp_sd = 0.5 * spec.sigma;
    let diag_sd = spec.sigma * std::f64::consts::FRAC_1_SQRT_2;
    let mut re = vec![0.0; n2 * n2];
    let mut im = vec![0.0; n2 * n2];
    let put = |r: usize, c: usize, x: f64, y: f64, re: &mut Vec<f64>, im: &mut Vec<f64>| {
        re[r * n2 + c] = x;
        im[r * n2 + c] = y;
        re[c * n2 + r] = x;
        im[c * n2 + r] = -y;
    };
    for j in 0..n {
        let d: f64 = diag_sd * spec.entry_law.sample(rng);
        re[(2 * j) * n2 + 2 * j] = d;
        re[(2 * j + 1) * n2 + 2 * j + 1] = d;
        for k in j + 1..n {
            // Quaternion a + b i + c j + d k as the 2×2 block
            // [[a+bi, c+di], [−c+di, a−bi]].
            let qa = comp_sd * spec.entry_law.sample(rng);
            let qb = comp_sd * spec.entry_law.sample(rng);
            let qc = comp_sd * spec.entry_law.sample(rng);
            let qd = comp_sd * spec.entry_law.sample(rng);
            put(2 * j, 2 * k, qa, qb, &mut re, &mut im);
            put(2 * j, 2 * k + 1, qc, qd, &mut re, &mut im);
            put(2 * j + 1, 2 * k, -qc, qd, &mut re, &mut im);
            put(2 * j + 1, 2 * k + 1, qa, -qb, &mut re, &mut im);
        }
    }
    (n2, re, im)
}

/// Collapse the doubled GSE spectrum by averaging adjacent pairs.
pub(crate) fn dedup_kramers_pairs(doubled: &[f64]) -> Vec<f64> {
    debug_assert!(doubled.len().is_multiple_of(2));
    doubled
        .chunks_exact(2)
        .map(|pair| {
            debug_assert!(
                (pair[1] - pair[0]).abs() <= 1e-8 * (1.0 + pair[0].abs()),
                "Kramers pair split by {}",
                pair[1] - pair[0]
            );
            0.5 * (pair[0] + pair[1])
        })
        .collect()
}
