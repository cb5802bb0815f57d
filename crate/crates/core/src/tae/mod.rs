//! Trial-and-error computation: limit predicates read off a horizon, the
//! Goldbach answer stream, bogosort and the wheels experiment.

mod ashby;
mod bogosort;
mod goldbach;
mod limit;

pub use ashby::{
    ashby_expected, ashby_simulate, ashby_trial, Expectation, SimulationSummary, Strategy, WheelExperiment,
    CASE3_TAIL, SIMULATION_PARTITIONS,
};
pub use bogosort::{bogosort, unrank_permutation, BogoOutcome, MAX_BOGOSORT_LEN};
pub use goldbach::{goldbach_stream, goldbach_witness, is_prime, GoldbachRun};
pub use limit::{AnswerStream, Fuel, LimitEvaluation, LimitPredicate, OutOfFuel, DEFAULT_KERNEL_FUEL};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TaeError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("kernel exceeded {fuel} steps at y = {y}")]
    KernelDivergence { y: u64, fuel: u64 },
}
