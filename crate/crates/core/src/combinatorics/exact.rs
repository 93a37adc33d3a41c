//! Exact LIS distributions: factorial enumeration for small N, and
//! enumeration-free counts through RSK and the hook length formula.

use super::patience::lis_length_of_slice;
use crate::error::{Error, Result};

/// Exact distribution of ℓ_N over all N! permutations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LisDistribution {
    /// counts[k-1] = #{σ : ℓ(σ) = k}
    pub counts: Vec<u64>,
    pub total: u64,
}

impl LisDistribution {
    pub fn probabilities(&self) -> Vec<f64> {
        self.counts
            .iter()
            .map(|&c| c as f64 / self.total as f64)
            .collect()
    }

    /// Prob(ℓ <= k).
    pub fn cdf_at(&self, k: usize) -> f64 {
        let c: u64 = self.counts.iter().take(k).sum();
        c as f64 / self.total as f64
    }
}

/// Enumerate all N! permutations (N <= 9) and tally ℓ.
pub fn exact_lis_distribution(n: usize) -> Result<LisDistribution> {
    if n == 0 || n > 9 {
        return Err(Error::capability(format!(
            "exact_lis_distribution: N = {n} outside 1..=9 (factorial enumeration)"
        )));
    }
    let mut counts = vec![0u64; n];
    let mut total = 0u64;
    // Heap's algorithm, iterative.
    let mut arr: Vec<u32> = (1..=n as u32).collect();
    let mut c = vec![0usize; n];
    counts[lis_length_of_slice(&arr) - 1] += 1;
    total += 1;
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                arr.swap(0, i);
            } else {
                arr.swap(c[i], i);
            }
            counts[lis_length_of_slice(&arr) - 1] += 1;
            total += 1;
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    Ok(LisDistribution { counts, total })
}

/// #{σ of size n : ℓ(σ) <= max_len} without enumeration: by RSK this is
/// Σ_{λ ⊢ n, λ₁ <= max_len} (f^λ)², with f^λ from the hook length formula.
pub fn count_lis_at_most(n: usize, max_len: usize) -> Result<u128> {
    if n == 0 || n > 20 {
        return Err(Error::capability(format!(
            "count_lis_at_most: n = {n} outside 1..=20"
        )));
    }
    if max_len == 0 {
        return Ok(0);
    }
    let mut total: u128 = 0;
    let mut parts: Vec<usize> = Vec::new();
    enumerate_partitions(n, max_len.min(n), &mut parts, &mut |lambda| {
        let f = standard_tableaux_count(lambda);
        total += f * f;
    });
    Ok(total)
}

/// All partitions of n with parts <= cap, weakly decreasing.
fn enumerate_partitions(
    remaining: usize,
    cap: usize,
    parts: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]),
) {
    if remaining == 0 {
        visit(parts);
        return;
    }
    let hi = remaining.min(cap);
    for first in (1..=hi).rev() {
        parts.push(first);
        enumerate_partitions(remaining - first, first, parts, visit);
        parts.pop();
    }
}

/// Hook length formula: f^λ = n! / Π hooks, exact in integers (the hook
/// product divides n!, and for n <= 20 both sides fit u128).
fn standard_tableaux_count(lambda: &[usize]) -> u128 {
    let n: usize = lambda.iter().sum();
    let mut hook_product: u128 = 1;
    for (r, &row_len) in lambda.iter().enumerate() {
        for c in 0..row_len {
            let arm = row_len - c - 1;
            let leg = lambda[r + 1..].iter().take_while(|&&l| l > c).count();
            hook_product *= (arm + leg + 1) as u128;
        }
    }
    let mut factorial: u128 = 1;
    for k in 1..=n as u128 {
        factorial *= k;
    }
    debug_assert_eq!(factorial % hook_product, 0);
    factorial / hook_product
}
