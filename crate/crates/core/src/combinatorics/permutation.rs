//! Permutations of {1, …, N}.

use crate::error::{Error, Result};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// A permutation stored as its image: `image[i]` is σ(i+1), values 1..=N.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    image: Vec<u32>,
}

impl Permutation {
    /// Validate that `image` is a bijection on {1, …, N}.
    pub fn from_image(image: Vec<u32>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &v in &image {
            if v == 0 || v as usize > n {
                return Err(Error::domain(format!(
                    "Permutation: value {v} outside 1..={n}"
                )));
            }
            if seen[v as usize - 1] {
                return Err(Error::domain(format!("Permutation: duplicate value {v}")));
            }
            seen[v as usize - 1] = true;
        }
        Ok(Permutation { image })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            image: (1..=n as u32).collect(),
        }
    }

    pub fn reversed(n: usize) -> Self {
        Permutation {
            image: (1..=n as u32).rev().collect(),
        }
    }

    /// Uniform random permutation by an unbiased Fisher–Yates shuffle.
    pub fn random(n: usize, rng: &mut ChaCha8Rng) -> Self {
        let mut image: Vec<u32> = (1..=n as u32).collect();
        for i in (1..n).rev() {
            let j = rng.gen_range(0..=i);
            image.swap(i, j);
        }
        Permutation { image }
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn image(&self) -> &[u32] {
        &self.image
    }

    /// σ(k) for k in 1..=N.
    pub fn apply(&self, k: u32) -> u32 {
        self.image[k as usize - 1]
    }

    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.len() != other.len() {
            return Err(Error::domain("compose: size mismatch"));
        }
        Ok(Permutation {
            image: other.image.iter().map(|&v| self.apply(v)).collect(),
        })
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    pub fn is_involution(&self) -> bool {
        self.compose(self).map(|c| c.is_identity()).unwrap_or(false)
    }

    pub fn count_fixed_points(&self) -> usize {
        self.image
            .iter()
            .enumerate()
            .filter(|(i, &v)| v as usize == i + 1)
            .count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rngstream;

    #[test]
    fn validation_catches_non_bijections() {
        assert!(Permutation::from_image(vec![1, 2, 2]).is_err());
        assert!(Permutation::from_image(vec![0, 1]).is_err());
        assert!(Permutation::from_image(vec![1, 4, 2]).is_err());
        assert!(Permutation::from_image(vec![2, 4, 1, 3]).is_ok());
    }

    #[test]
    fn random_permutations_are_valid_and_seeded() {
        let mut rng = rngstream::stream(3, 0);
        let p = Permutation::random(50, &mut rng);
        assert!(Permutation::from_image(p.image().to_vec()).is_ok());
        let mut rng2 = rngstream::stream(3, 0);
        let q = Permutation::random(50, &mut rng2);
        assert_eq!(p, q);
    }

    #[test]
    fn shuffle_is_uniform_on_three_elements() {
        // All 6 permutations of {1,2,3} appear with frequency 1/6 within
        // 4 standard errors over 60k draws.
        let trials = 60_000;
        let mut counts = std::collections::HashMap::new();
        for i in 0..trials {
            let mut rng = rngstream::stream(7, i);
            let p = Permutation::random(3, &mut rng);
            *counts.entry(p.image().to_vec()).or_insert(0usize) += 1;
        }
        assert_eq!(counts.len(), 6);
        let expect = trials as f64 / 6.0;
        let se = (trials as f64 * (1.0 / 6.0) * (5.0 / 6.0)).sqrt();
        for (_, c) in counts {
            assert!((c as f64 - expect).abs() < 4.0 * se);
        }
    }
}
