//! Statistical invariance checks on the Gaussian ensembles.

use rmt_core::ensembles::{
    eigenvalues_symmetric, sample_matrix, EnsembleSpec, HermitianMatrix,
};
use rmt_core::painleve::Beta;

/// Two-sample KS statistic.
fn ks_two_sample(mut a: Vec<f64>, mut b: Vec<f64>) -> f64 {
    a.sort_by(f64::total_cmp);
    b.sort_by(f64::total_cmp);
    let mut merged: Vec<f64> = a.iter().chain(b.iter()).cloned().collect();
    merged.sort_by(f64::total_cmp);
    let cdf = |xs: &[f64], t: f64| xs.partition_point(|&v| v <= t) as f64 / xs.len() as f64;
    merged
        .iter()
        .map(|&t| (cdf(&a, t) - cdf(&b, t)).abs())
        .fold(0.0, f64::max)
}

/// λ_max distribution of GUE is unchanged under conjugation by one fixed
/// unitary (a complex Householder reflector): a two-sample KS test over 500
/// draws must not reject at the 1% level.
#[test]
fn gue_spectrum_invariant_under_fixed_unitary_conjugation() {
    let n = 50usize;
    let draws = 500usize;
    let spec = EnsembleSpec::gaussian(Beta::Two, n);

    // Fixed unitary U = I − 2 u u† / ‖u‖² from a deterministic vector.
    let mut ur = vec![0.0; n];
    let mut ui = vec![0.0; n];
    for k in 0..n {
        ur[k] = ((k * k + 1) as f64 * 0.7).sin();
        ui[k] = ((k + 3) as f64 * 1.3).cos();
    }
    let norm2: f64 = ur.iter().zip(&ui).map(|(r, m)| r * r + m * m).sum();

    let mut direct = Vec::with_capacity(draws);
    let mut conjugated = Vec::with_capacity(draws);
    for draw in 0..draws as u64 {
        let matrix = sample_matrix(&spec, 99, draw).unwrap();
        let (re, im) = match &matrix {
            HermitianMatrix::Complex { re, im, .. } => (re.clone(), im.clone()),
            _ => unreachable!(),
        };
        direct.push(*eigenvalues_symmetric(&matrix).unwrap().last().unwrap());

        let (bre, bim) = conjugate_by_reflector(&re, &im, &ur, &ui, norm2, n);
        let m = HermitianMatrix::complex(n, bre, bim).unwrap();
        conjugated.push(*eigenvalues_symmetric(&m).unwrap().last().unwrap());
    }
    let d = ks_two_sample(direct, conjugated);
    // 1% two-sample critical value: 1.628 √(2/draws).
    let critical = 1.628 * (2.0 / draws as f64).sqrt();
    assert!(d < critical, "KS = {d} vs critical {critical}");
}

/// B = U A U† with U = I − 2uu†/‖u‖²:
/// B = A − c(u w† + w u†) + c² (u†Au) u u†,  w = A u,  c = 2/‖u‖².
fn conjugate_by_reflector(
    are: &[f64],
    aim: &[f64],
    ur: &[f64],
    ui: &[f64],
    norm2: f64,
    n: usize,
) -> (Vec<f64>, Vec<f64>) {
    let mut wr = vec![0.0; n];
    let mut wi = vec![0.0; n];
    for i in 0..n {
        for k in 0..n {
            let (r, m) = (are[i * n + k], aim[i * n + k]);
            wr[i] += r * ur[k] - m * ui[k];
            wi[i] += r * ui[k] + m * ur[k];
        }
    }
    let c = 2.0 / norm2;
    let uhw_re: f64 = (0..n).map(|k| ur[k] * wr[k] + ui[k] * wi[k]).sum();
    let quad = c * c * uhw_re; // u†Au is real for Hermitian A
    let mut bre = are.to_vec();
    let mut bim = aim.to_vec();
    for i in 0..n {
        for j in 0..n {
            let t1r = ur[i] * wr[j] + ui[i] * wi[j] + wr[i] * ur[j] + wi[i] * ui[j];
            let t1i = ui[i] * wr[j] - ur[i] * wi[j] + wi[i] * ur[j] - wr[i] * ui[j];
            let t2r = ur[i] * ur[j] + ui[i] * ui[j];
            let t2i = ui[i] * ur[j] - ur[i] * ui[j];
            bre[i * n + j] += -c * t1r + quad * t2r;
            bim[i * n + j] += -c * t1i + quad * t2i;
        }
    }
    (bre, bim)
}
