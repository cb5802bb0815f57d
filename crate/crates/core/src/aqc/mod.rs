//! Adiabatic search for natural-number roots of an integer polynomial `D`.
//!
//! The problem Hamiltonian is `D(N₁, …, N_k)²` for number operators `N_j`,
//! diagonal in the occupation basis and truncated at a cutoff per mode. The
//! initial Hamiltonian is `I − |u⟩⟨u|` for the uniform superposition `u`.
//! Variables range over naturals only; to search all integers, substitute
//! `x = p − q` with two natural variables.

mod decide;
mod fock;
mod poly;
mod problem;

pub use decide::{
    decide, exact_ground_oracle, measure_sample, DecideParams, DecisionReport, GroundOracle, Histogram, Verdict,
    MAX_EVOLUTION_WORK, MAX_ORACLE_LATTICE,
};
pub use fock::TruncatedFockSpace;
pub use poly::{DiophantinePolynomial, Term};
pub use problem::{
    build_initial_hamiltonian, build_problem_hamiltonian, evolve, interpolate_hamiltonian, spectral_norm_bound,
    AdiabaticProblem, Evolution, PHASE_TOLERANCE, STABILITY_LIMIT, STEP_TARGET,
};

use crate::linalg::LinalgError;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum AqcError {
    #[error("invalid polynomial document: {0}")]
    Document(String),
    #[error("validation error: {0}")]
    Validation(String),
    #[error("shape error: {0}")]
    Shape(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("overflow: {0}")]
    Overflow(String),
    #[error("resource limit: {0}")]
    Resource(String),
    #[error("dt = {dt} with ‖H‖ ≤ {norm} is unstable; use dt ≤ {suggested}")]
    Stability { dt: f64, norm: f64, suggested: f64 },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}
