//! Patience sorting, longest increasing subsequences, RSK, Gessel's Toeplitz
//! determinant, and random involutions.

mod bigfixed;
mod exact;
mod gessel;
mod involution;
mod patience;
mod permutation;
mod rsk;
mod simulate;
mod stats;

pub use exact::{count_lis_at_most, exact_lis_distribution, LisDistribution};
pub use gessel::{gessel_toeplitz, gessel_toeplitz_scaled};
pub use involution::sample_involution;
pub use patience::{lis_length, patience_sort, PileState};
pub use permutation::Permutation;
pub use rsk::rsk_shape;
pub use simulate::{simulate_lis, LisSimulation};
pub use stats::SummaryStats;
