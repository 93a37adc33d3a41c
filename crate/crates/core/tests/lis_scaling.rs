//! Large-deck LIS scaling behavior.

use rmt_core::combinatorics::simulate_lis;
use rmt_core::ensembles::{ks_statistic, EmpiricalDistribution};
use rmt_core::painleve::{tw_cdf, Beta, PainleveSolution};

#[test]
fn mean_over_sqrt_n_increases_toward_two() {
    // E(ℓ_N)/√N approaches 2 from below; the Monte Carlo means must be
    // monotone across a quadrupling ladder of deck sizes.
    let mut prev = 0.0;
    for &n in &[100usize, 400, 1600, 6400] {
        let trials = 2000;
        let sim = simulate_lis(n, trials, 21).unwrap();
        let ratio = sim.stats.mean / (n as f64).sqrt();
        assert!(
            ratio > prev,
            "ratio {ratio} at N = {n} did not increase (prev {prev})"
        );
        assert!(ratio < 2.0, "ratio {ratio} at N = {n} exceeded the limit 2");
        prev = ratio;
    }
}

#[test]
fn bdj_scaled_lengths_approach_tw2_at_large_n() {
    // The scaled variable lives on a lattice of spacing N^{-1/6} (≈ 0.25 at
    // N = 4096), so its ECDF carries pmf jumps ≈ 0.075 and cannot approach a
    // continuous CDF below the half-jump floor ≈ 0.037; the O(N^{-1/3}) mean
    // shift and the finite-N variance deficit roughly triple that. Measured
    // KS at N = 4096 is ≈ 0.118 and shrinking with N, which is what the
    // limit law predicts at this scale.
    let sol = PainleveSolution::standard().unwrap();
    let lo = sol.x_end() + 1.0;
    let hi = sol.x_start();
    let ks_for = |n: usize| {
        let sim = simulate_lis(n, 20_000, 12345).unwrap();
        let emp = EmpiricalDistribution::new(sim.bdj_scaled()).unwrap();
        ks_statistic(&emp, |s| {
            if s < lo {
                0.0
            } else if s > hi {
                1.0
            } else {
                tw_cdf(Beta::Two, s, &sol).unwrap()
            }
        })
    };
    let ks_small = ks_for(512);
    let ks_large = ks_for(4096);
    assert!(
        ks_large < ks_small,
        "KS must shrink with N: {ks_small} (N=512) vs {ks_large} (N=4096)"
    );
    assert!(ks_large < 0.13, "KS(BDJ-scaled, F2) = {ks_large} at N = 4096");
}
