//! Desk-scale workbench for Turing machines, their hypercomputational
//! extensions (trial-and-error, accelerated, oracle and coupled-input
//! machines), the physical limits of mechanical computation, enumeration of
//! finite-precision reals, and an adiabatic quantum simulator that decides
//! small Diophantine equations on a truncated Fock space.

pub mod aqc;
pub mod cli;
pub mod limits;
pub mod linalg;
pub mod realenum;
pub mod report;
pub mod rng;
pub mod tae;
pub mod tm;
pub mod zeno;
