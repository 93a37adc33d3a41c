//! Random matrix ensembles: sampling, eigensolving, edge/bulk scalings, and
//! empirical-distribution utilities for universality tests.

mod empirical;
mod matrix;
mod scaling;
mod spec;

pub use empirical::{ks_statistic, EmpiricalDistribution};
pub use matrix::{eigenvalues_symmetric, HermitianMatrix};
pub use scaling::{bulk_spacings, edge_scale, semicircle_density, semicircle_scale};
pub use spec::{
    sample_batch, sample_matrix, sample_spectrum, sample_spectrum_draw, EnsembleSpec, EntryLaw, SpectrumSample,
    SIGMA,
};
