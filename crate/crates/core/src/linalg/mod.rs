//! Complex arithmetic and a dense complex-matrix kernel.
//!
//! Everything here has value semantics. The Hermitian eigensolver is the
//! exact reference the adiabatic simulator is checked against.

mod complex;
mod eigen;
mod ket;
mod matrix;

pub use complex::Complex;
pub use eigen::{hermitian_eigensystem, EigenSystem, HERMITIAN_TOL, MAX_SWEEPS, OFF_DIAGONAL_TOL};
pub use ket::{Bra, Ket};
pub use matrix::ComplexMatrix;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum LinalgError {
    #[error("shape mismatch in {op}: {left:?} vs {right:?}")]
    Shape { op: &'static str, left: (usize, usize), right: (usize, usize) },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("matrix is not Hermitian (max entrywise defect {defect:e})")]
    NotHermitian { defect: f64 },
    #[error("Jacobi did not converge after {sweeps} sweeps (off-diagonal mass {off_diagonal:e})")]
    NoConvergence { sweeps: usize, off_diagonal: f64 },
}
