//! Uniform random involutions, with and without fixed points.

use super::permutation::Permutation;
use crate::error::{Error, Result};
use crate::rngstream;
use rand::Rng;

/// Uniform involution of {1..N} (σ∘σ = id). With `fixed_point_free` the draw
/// is a uniform perfect matching and N must be even.
///
/// General involutions use the count recurrence I(m) = I(m-1) + (m-1) I(m-2):
/// the largest unassigned element is a fixed point with probability
/// I(m-1)/I(m), else pairs with a uniform partner. Matchings pair the
/// smallest unpaired element with a uniformly random unpaired partner.
pub fn sample_involution(n: usize, fixed_point_free: bool, seed: u64) -> Result<Permutation> {
    if n == 0 {
        return Err(Error::domain("sample_involution: n must be >= 1"));
    }
    if fixed_point_free && !n.is_multiple_of(2) {
        return Err(Error::domain(
            "sample_involution: fixed-point-free involutions need even N",
        ));
    }
    let mut rng = rngstream::stream(seed, 0);
    let mut image: Vec<u32> = (1..=n as u32).collect();

    if fixed_point_free {
        let mut unpaired: Vec<u32> = (1..=n as u32).collect();
        while !unpaired.is_empty() {
            let a = unpaired.remove(0);
            let j = rng.gen_range(0..unpaired.len());
            let b = unpaired.remove(j);
            image[a as usize - 1] = b;
            image[b as usize - 1] = a;
        }
    } else {
        // fixed_probability[m] = I(m-1)/I(m) via p_m = 1/(1 + (m-1) p_{m-1}).
        let mut fixed_probability = vec![0.0f64; n + 1];
        if n >= 1 {
            fixed_probability[1] = 1.0;
        }
        for m in 2..=n {
            fixed_probability[m] = 1.0 / (1.0 + (m as f64 - 1.0) * fixed_probability[m - 1]);
        }
        let mut unassigned: Vec<u32> = (1..=n as u32).collect();
        while let Some(a) = unassigned.pop() {
            let m = unassigned.len() + 1;
            if m == 1 || rng.gen::<f64>() < fixed_probability[m] {
                continue; // a stays a fixed point
            }
            let j = rng.gen_range(0..unassigned.len());
            let b = unassigned.remove(j);
            image[a as usize - 1] = b;
            image[b as usize - 1] = a;
        }
    }
    Permutation::from_image(image)
}
