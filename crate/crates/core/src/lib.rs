//! Bracket-string model and a ledgered simulation of a quantum query
//! algorithm for `Dyck_{k,n,t}`: well-balanced strings of length `n`, height at
//! most `k`, over at most `t` bracket types.
//!
//! Brackets of type `τ` are encoded as `2τ − 1` (open) and `2τ` (close). All
//! positions are 1-based.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bruteforce;
pub mod error;
pub mod generate;
pub mod model;
pub mod quantum;
pub mod query;
pub mod scan;

pub use error::{DyckError, Result};
pub use model::{
    balance, classical_check, height, BracketCode, BracketString, DyckParams, Verdict,
};
pub use quantum::solve::{solve, solve_boosted, BoostedRun, SolverOptions, Step1Mode};
pub use query::{QueryLedger, QuerySim, Stage, SubroutineModel};
