//! Numerical laboratory for the universal limiting distributions of random
//! matrix theory.
//!
//! The crate computes the Gaudin level-spacing law and the Tracy–Widom
//! distributions F₁, F₂, F₄ from their Painlevé representations, checks them
//! against direct Nyström evaluation of the underlying Fredholm determinants,
//! and verifies universality empirically: Monte Carlo sampling of Gaussian and
//! Wigner ensembles, longest-increasing-subsequence combinatorics, classical
//! extreme-value statistics, and spacing analysis of externally supplied
//! spectra.
//!
//! Modules:
//!
//! - [`specialfun`] — Airy, weighted Hermite, modified Bessel, Gauss–Legendre.
//! - [`painleve`] — Painlevé II (Hastings–McLeod) and σ-form Painlevé V
//!   solvers; F₁/F₂/F₄ and the Gaudin density.
//! - [`fredholm`] — Nyström evaluation of det(I − λK) for integrable kernels
//!   on interval unions; finite-N GUE gap probabilities.
//! - [`ensembles`] — GOE/GUE/GSE and Wigner sampling, dense symmetric
//!   eigensolver, edge/bulk scalings, empirical distributions.
//! - [`combinatorics`] — patience sorting, LIS, RSK, Gessel's Toeplitz
//!   determinant, involution sampling.
//! - [`evt`] — classical extreme-value trichotomy for diagonal iid matrices.
//! - [`spectra`] — spectrum ingestion, unfolding, spacing reports.

pub mod combinatorics;
pub mod ensembles;
pub mod error;
pub mod evt;
pub mod fredholm;
pub mod painleve;
pub mod specialfun;
pub mod spectra;

mod interp;
mod linalg;
mod ode;
mod rngstream;

pub use error::{Error, Result};
