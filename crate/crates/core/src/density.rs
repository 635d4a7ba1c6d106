//! Trace-one positive semi-definite matrices built from graph Laplacians.

use nalgebra::DMatrix;

use crate::error::{Error, Result};

/// Tolerance used when validating symmetry, trace and positivity.
pub const DENSITY_TOLERANCE: f64 = 1e-10;

/// Symmetric, positive semi-definite, trace one.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix(DMatrix<f64>);

impl DensityMatrix {
    /// Validates an already normalized matrix.
    pub fn new(m: DMatrix<f64>) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::NotDensity(format!(
                "matrix is {}x{}",
                m.nrows(),
                m.ncols()
            )));
        }
        let asym = (&m - m.transpose()).amax();
        if asym > DENSITY_TOLERANCE {
            return Err(Error::NotDensity(format!("asymmetry {asym:e}")));
        }
        let tr = m.trace();
        if (tr - 1.0).abs() > DENSITY_TOLERANCE {
            return Err(Error::NotDensity(format!("trace {tr}")));
        }
        let min = m
            .clone()
            .symmetric_eigenvalues()
            .iter()
            .copied()
            .fold(f64::INFINITY, f64::min);
        if min < -DENSITY_TOLERANCE {
            return Err(Error::NotDensity(format!("eigenvalue {min:e}")));
        }
        Ok(Self(m))
    }

    /// Skips the eigenvalue check; callers guarantee positivity by construction.
    pub(crate) fn from_normalized_unchecked(m: DMatrix<f64>) -> Self {
        Self(m)
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.0
    }

    pub fn into_matrix(self) -> DMatrix<f64> {
        self.0
    }

    pub fn dim(&self) -> usize {
        self.0.nrows()
    }

    /// Equal-weight mixture `(a + b) / 2`.
    pub fn mixture(&self, other: &DensityMatrix) -> Result<DensityMatrix> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch(self.dim(), other.dim()));
        }
        Ok(Self((&self.0 + &other.0) * 0.5))
    }
}

/// Divides a symmetric positive semi-definite matrix by its trace.
pub fn trace_normalize(m: &DMatrix<f64>) -> Result<DensityMatrix> {
    let tr = m.trace();
    if !(tr > 0.0) {
        return Err(Error::EmptyGraph("trace is not positive"));
    }
    Ok(DensityMatrix::from_normalized_unchecked(m / tr))
}
