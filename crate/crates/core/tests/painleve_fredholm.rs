//! Cross-validation of the two independent routes to the universal
//! distributions: Painlevé representations vs Nyström Fredholm determinants.

use rmt_core::fredholm::{fredholm_det, IntervalUnion, KernelSpec};
use rmt_core::painleve::{
    solve_sigma_pv, tw_cdf, Beta, GaudinLaw, PainleveSolution,
};

#[test]
fn f2_matches_airy_kernel_determinant() {
    let sol = PainleveSolution::standard().unwrap();
    let mut worst: f64 = 0.0;
    for i in 0..20 {
        let s = -8.0 + 13.0 * i as f64 / 19.0;
        let f2 = tw_cdf(Beta::Two, s, &sol).unwrap();
        let det = fredholm_det(&KernelSpec::Airy, &IntervalUnion::tail(s), 1.0, 80)
            .unwrap()
            .value;
        worst = worst.max((f2 - det).abs());
    }
    assert!(worst < 1e-6, "max |F2 - det| = {worst:e}");
}

#[test]
fn f2_at_zero_matches_determinant() {
    let sol = PainleveSolution::standard().unwrap();
    let f2 = tw_cdf(Beta::Two, 0.0, &sol).unwrap();
    let det = fredholm_det(&KernelSpec::Airy, &IntervalUnion::tail(0.0), 1.0, 80)
        .unwrap()
        .value;
    assert!((f2 - det).abs() < 1e-6);
}

#[test]
fn sine_gap_matches_sigma_pv_exponential() {
    let law = GaudinLaw::new(4.0).unwrap();
    let mut worst: f64 = 0.0;
    for i in 1..=20 {
        let s = 3.0 * i as f64 / 20.0;
        let gap = law.gap(s).unwrap();
        let det = fredholm_det(
            &KernelSpec::Sine,
            &IntervalUnion::single(0.0, s).unwrap(),
            1.0,
            40,
        )
        .unwrap()
        .value;
        worst = worst.max((gap - det).abs());
    }
    assert!(worst < 1e-6, "max |E2 - det| = {worst:e}");
}

#[test]
fn deformed_determinant_matches_sigma_pv_at_half() {
    // λ = 1, s = 0.5 spot check straight through solve_sigma_pv.
    let pv = solve_sigma_pv(1.0, 4.0, 1e-10).unwrap();
    let s = 0.5;
    let lhs = pv.eval_log_det(std::f64::consts::PI * s).unwrap().exp();
    let det = fredholm_det(
        &KernelSpec::Sine,
        &IntervalUnion::single(0.0, s).unwrap(),
        1.0,
        40,
    )
    .unwrap()
    .value;
    assert!((lhs - det).abs() < 1e-6);
}

#[test]
fn deformed_lambda_determinants_match() {
    // The λ-deformed identity det(I − λK) = exp(∫ σ(u;λ)/u du).
    for &lambda in &[0.3, 0.8] {
        let pv = solve_sigma_pv(lambda, 8.0, 1e-10).unwrap();
        for &s in &[0.25, 0.5, 1.0, 2.0] {
            let lhs = pv.eval_log_det(std::f64::consts::PI * s).unwrap().exp();
            let det = fredholm_det(
                &KernelSpec::Sine,
                &IntervalUnion::single(0.0, s).unwrap(),
                lambda,
                40,
            )
            .unwrap()
            .value;
            assert!(
                (lhs - det).abs() < 1e-6,
                "lambda={lambda} s={s}: {lhs} vs {det}"
            );
        }
    }
}
