//! The recognizer: type-count check, single-type check, and the height-by-height
//! search for mismatched bracket pairs, all charged to a [`QuerySim`] ledger.
//!
//! [`QuerySim`]: crate::query::QuerySim

use alloc::vec::Vec;

use crate::model::BracketString;
use crate::query::LedgeredOracle;

pub mod check;
pub mod contract;
pub mod solve;
pub mod step1;

/// An input prepared for the solver: charged access through the oracle, plus
/// prefix balances that the idealized subroutines read for free.
#[derive(Debug, Clone)]
pub struct Tape<'a> {
    oracle: LedgeredOracle<'a>,
    prefix: Vec<i64>,
}

impl<'a> Tape<'a> {
    pub fn new(source: &'a BracketString) -> Self {
        Tape {
            oracle: LedgeredOracle::new(source),
            prefix: source.prefix_balances(),
        }
    }

    pub fn len(&self) -> usize {
        self.oracle.len()
    }

    pub fn is_empty(&self) -> bool {
        self.oracle.is_empty()
    }

    pub fn oracle(&self) -> &LedgeredOracle<'a> {
        &self.oracle
    }

    pub fn source(&self) -> &'a BracketString {
        self.oracle.source()
    }

    /// `P[0..=n]` with `P[0] = 0`.
    pub fn prefix(&self) -> &[i64] {
        &self.prefix
    }
}
