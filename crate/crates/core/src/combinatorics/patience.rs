//! Patience sorting and the longest increasing subsequence.
//!
//! Cards are played as far left as possible: each card goes on the leftmost
//! pile whose top is larger, or starts a new pile on the right. The pile
//! tops then stay strictly increasing left to right, so the placement pile is
//! found by binary search, and the final pile count equals the length of the
//! longest strictly increasing subsequence.

use super::permutation::Permutation;

/// Final state of a patience-sorting game.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PileState {
    piles: Vec<Vec<u32>>,
    tops: Vec<u32>,
}

impl PileState {
    pub fn pile_count(&self) -> usize {
        self.piles.len()
    }

    pub fn piles(&self) -> &[Vec<u32>] {
        &self.piles
    }

    /// Cached top card of each pile, strictly increasing left to right.
    pub fn tops(&self) -> &[u32] {
        &self.tops
    }
}

/// Play the full game, returning the pile count and the final piles.
pub fn patience_sort(p: &Permutation) -> (usize, PileState) {
    let mut piles: Vec<Vec<u32>> = Vec::new();
    let mut tops: Vec<u32> = Vec::new();
    for &card in p.image() {
        let idx = tops.partition_point(|&t| t < card);
        if idx == piles.len() {
            piles.push(vec![card]);
            tops.push(card);
        } else {
            piles[idx].push(card);
            tops[idx] = card;
        }
        debug_assert!(tops.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(piles[idx].windows(2).all(|w| w[0] > w[1]));
    }
    let count = piles.len();
    (count, PileState { piles, tops })
}

/// Length of the longest increasing subsequence: same binary-search
/// recurrence as patience sorting, tracking only the tops.
pub fn lis_length(p: &Permutation) -> usize {
    lis_length_of_slice(p.image())
}

pub(crate) fn lis_length_of_slice(values: &[u32]) -> usize {
    let mut tops: Vec<u32> = Vec::new();
    for &card in values {
        let idx = tops.partition_point(|&t| t < card);
        if idx == tops.len() {
            tops.push(card);
        } else {
            tops[idx] = card;
        }
    }
    tops.len()
}
