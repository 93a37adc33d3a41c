//! Dense Hermitian matrix container and the public eigensolver entry point.

use crate::error::{Error, Result};
use crate::linalg;

const MAX_DIM: usize = 4000;

/// Real symmetric or complex Hermitian matrix, row-major. Only the lower
/// triangle is referenced by the eigensolver.
#[derive(Debug, Clone, PartialEq)]
pub enum HermitianMatrix {
    Real {
        n: usize,
        data: Vec<f64>,
    },
    Complex {
        n: usize,
        re: Vec<f64>,
        im: Vec<f64>,
    },
}

impl HermitianMatrix {
    pub fn real(n: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != n * n {
            return Err(Error::domain(format!(
                "HermitianMatrix::real: expected {} entries, got {}",
                n * n,
                data.len()
            )));
        }
        if data.iter().any(|v| !v.is_finite()) {
            return Err(Error::domain("HermitianMatrix: non-finite entry"));
        }
        Ok(HermitianMatrix::Real { n, data })
    }

    pub fn complex(n: usize, re: Vec<f64>, im: Vec<f64>) -> Result<Self> {
        if re.len() != n * n || im.len() != n * n {
            return Err(Error::domain(format!(
                "HermitianMatrix::complex: expected {} entries per plane",
                n * n
            )));
        }
        if re.iter().chain(im.iter()).any(|v| !v.is_finite()) {
            return Err(Error::domain("HermitianMatrix: non-finite entry"));
        }
        Ok(HermitianMatrix::Complex { n, re, im })
    }

    pub fn dim(&self) -> usize {
        match self {
            HermitianMatrix::Real { n, .. } | HermitianMatrix::Complex { n, .. } => *n,
        }
    }
}

/// All eigenvalues, sorted ascending: Householder tridiagonalization followed
/// by implicitly shifted QL iteration.
pub fn eigenvalues_symmetric(matrix: &HermitianMatrix) -> Result<Vec<f64>> {
    if matrix.dim() > MAX_DIM {
        return Err(Error::capability(format!(
            "eigenvalues_symmetric: dimension {} exceeds {MAX_DIM}",
            matrix.dim()
        )));
    }
    match matrix {
        HermitianMatrix::Real { n, data } => linalg::eigvals_real_symmetric(data, *n),
        HermitianMatrix::Complex { n, re, im } => linalg::eigvals_complex_hermitian(re, im, *n),
    }
}
