use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{DyckError, Result};
use crate::model::BracketString;
use crate::query::ledger::{QueryLedger, Stage};

/// Constants hidden inside the asymptotic bounds, plus the injected error rate
/// of the idealized contract subroutines.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SubroutineModel {
    /// Probability that an idealized contract subroutine errs.
    pub epsilon_inject: f64,
    /// Multiplier for `O(√n · polylog)` contract charges and the Dürr–Høyer budget.
    pub c_grover: f64,
    /// Multiplier for the `√A` amplitude-amplification charge.
    pub c_aa: f64,
    /// A Grover search gives up after `⌈grover_cap_factor · √N⌉` oracle calls.
    pub grover_cap_factor: f64,
    pub rng_seed: u64,
}

impl Default for SubroutineModel {
    fn default() -> Self {
        SubroutineModel {
            epsilon_inject: 0.0,
            c_grover: 9.0 / 4.0,
            c_aa: core::f64::consts::FRAC_PI_4,
            grover_cap_factor: 9.0,
            rng_seed: 0,
        }
    }
}

impl SubroutineModel {
    pub fn with_seed(self, rng_seed: u64) -> Self {
        SubroutineModel { rng_seed, ..self }
    }

    pub fn validate(&self) -> Result<()> {
        if !(0.0..0.5).contains(&self.epsilon_inject) {
            return Err(DyckError::argument("epsilon_inject must lie in [0, 0.5)"));
        }
        let positive = |x: f64| x.is_finite() && x > 0.0;
        if !positive(self.c_grover) || !positive(self.c_aa) || !positive(self.grover_cap_factor) {
            return Err(DyckError::argument("cost constants must be positive and finite"));
        }
        Ok(())
    }
}

/// One simulated run: the cost model, the ledger it charges, and its private
/// random stream.
#[derive(Debug, Clone)]
pub struct QuerySim {
    pub model: SubroutineModel,
    pub ledger: QueryLedger,
    rng: ChaCha8Rng,
}

impl QuerySim {
    pub fn new(model: SubroutineModel) -> Self {
        QuerySim {
            model,
            ledger: QueryLedger::new(),
            rng: ChaCha8Rng::seed_from_u64(model.rng_seed),
        }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn charge(&mut self, queries: u64) {
        self.ledger.charge(queries);
    }

    /// Runs `f` against a fresh ledger and returns its result together with
    /// the queries it charged. Nothing is charged to the real ledger.
    pub fn scratch<T>(&mut self, f: impl FnOnce(&mut Self) -> T) -> (T, u64) {
        let fresh = QueryLedger::in_stage(self.ledger.stage());
        let saved = core::mem::replace(&mut self.ledger, fresh);
        let out = f(self);
        let cost = self.ledger.total();
        self.ledger = saved;
        (out, cost)
    }

    /// Runs `f` with charges attributed to `stage`, restoring the previous stage.
    pub fn in_stage<T>(&mut self, stage: Stage, f: impl FnOnce(&mut Self) -> T) -> T {
        let prev = self.ledger.stage();
        self.ledger.set_stage(stage);
        let out = f(self);
        self.ledger.set_stage(prev);
        out
    }

    /// Draws whether an idealized subroutine errs on this call. Consumes no
    /// randomness when the injected rate is zero.
    pub fn inject_error(&mut self) -> bool {
        let eps = self.model.epsilon_inject;
        eps > 0.0 && self.rng.random_bool(eps)
    }
}

/// Type and direction of one input position, as returned by a single query.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Symbol {
    pub type_id: u32,
    pub open: bool,
    pub code: u32,
}

/// Charged access to the input: one read exposes both `Type` and `Open` of a
/// position for one query.
#[derive(Debug, Clone, Copy)]
pub struct LedgeredOracle<'a> {
    source: &'a BracketString,
}

impl<'a> LedgeredOracle<'a> {
    pub fn new(source: &'a BracketString) -> Self {
        LedgeredOracle { source }
    }

    pub fn len(&self) -> usize {
        self.source.len()
    }

    pub fn is_empty(&self) -> bool {
        self.source.is_empty()
    }

    pub fn source(&self) -> &'a BracketString {
        self.source
    }

    pub fn read(&self, sim: &mut QuerySim, i: usize) -> Result<Symbol> {
        let c = self.source.get(i).ok_or(DyckError::IndexOutOfRange {
            l: i,
            r: i,
            n: self.source.len(),
        })?;
        sim.charge(1);
        Ok(Symbol {
            type_id: c.type_id(),
            open: c.is_open(),
            code: c.value(),
        })
    }
}
