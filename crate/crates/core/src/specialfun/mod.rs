//! Self-contained special functions and quadrature primitives.
//!
//! Everything here is a pure function of its arguments; no global state.

mod airy;
mod airy_table;
mod bessel;
mod hermite;
mod quadrature;

pub use airy::{airy, AiryValue};
pub use bessel::bessel_i;
pub use hermite::{hermite_phi, hermite_phi_pair};
pub use quadrature::{gauss_legendre, QuadratureRule};
