//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by the numerical routines in this crate.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Invalid argument values (wrong range, non-finite input, malformed data).
    #[error("domain error: {0}")]
    Domain(String),

    /// The request is outside what the implementation certifies (too large n, ...).
    #[error("capability error: {0}")]
    Capability(String),

    /// An ODE trajectory left the tracked solution branch.
    #[error("instability at x = {x}: {message}")]
    Instability { x: f64, message: String },

    /// A solver failed to produce a solution within its tolerance contract.
    #[error("solver error: {0}")]
    Solver(String),

    /// Requested evaluation point is outside the tabulated range.
    #[error("range error: {0}")]
    Range(String),

    /// Discretization did not converge: coarse and refined values disagree.
    #[error("accuracy warning: value {value} vs refined {refined} (discrepancy {discrepancy:e})")]
    Accuracy {
        value: f64,
        refined: f64,
        discrepancy: f64,
    },

    /// Iterative numerical procedure exceeded its iteration cap.
    #[error("numerical error: {0}")]
    Numerical(String),

    /// Not enough data points for the requested statistic.
    #[error("insufficient data: {0}")]
    InsufficientData(String),

    /// File could not be read or written.
    #[error("I/O error on {path}: {message}")]
    Io { path: String, message: String },

    /// Malformed input file content.
    #[error("parse error at {path}:{line}: {message}")]
    Parse {
        path: String,
        line: usize,
        message: String,
    },

    /// Unfolding produced a degenerate (non-monotone) map.
    #[error("unfolding error: {0}")]
    Unfolding(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn capability(msg: impl Into<String>) -> Self {
        Error::Capability(msg.into())
    }
}
