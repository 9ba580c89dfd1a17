use core::fmt;
use core::str::FromStr;

use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{DyckError, Result};
use crate::model::{BracketString, DyckParams, Verdict};
use crate::quantum::check::step3;
use crate::quantum::contract::dyck_one_type;
use crate::quantum::step1::{step1_bounded, step1_general};
use crate::quantum::Tape;
use crate::query::{QueryLedger, QuerySim, Stage, SubroutineModel};

/// Which type-count check runs first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Step1Mode {
    /// Codes are known to be consecutive: reject any code above `2t`.
    #[default]
    Bounded,
    /// Arbitrary codes: count distinct types by repeated maximum finding.
    General,
}

impl Step1Mode {
    pub fn name(self) -> &'static str {
        match self {
            Step1Mode::Bounded => "bounded",
            Step1Mode::General => "general",
        }
    }
}

impl fmt::Display for Step1Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Step1Mode {
    type Err = DyckError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "bounded" => Ok(Step1Mode::Bounded),
            "general" => Ok(Step1Mode::General),
            _ => Err(DyckError::argument(alloc::format!("unknown step-1 mode `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverOptions {
    pub step1: Step1Mode,
    /// Require reported pairs to enclose a balanced interior; see
    /// [`find_wrong_fixed`](crate::quantum::check::find_wrong_fixed).
    pub zero_guard: bool,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions {
            step1: Step1Mode::Bounded,
            zero_guard: true,
        }
    }
}

/// One run of the recognizer. Accepts iff the type count is at most `t`, the
/// direction sequence is a Dyck word of height at most `k`, and no height
/// `1..=k` has a mismatched pair. Stops at the first failing stage; charges go
/// to the `step1`, `step2` and `step3` ledger stages.
pub fn solve(sim: &mut QuerySim, s: &BracketString, p: &DyckParams, opts: &SolverOptions) -> Verdict {
    if s.len() != p.n {
        return Verdict::Reject;
    }
    let tape = Tape::new(s);
    let prior = sim.ledger.stage();

    let verdict = (|| {
        let ok = sim.in_stage(Stage::Step1, |sim| match opts.step1 {
            Step1Mode::Bounded => step1_bounded(sim, &tape, p.t),
            Step1Mode::General => step1_general(sim, &tape, p.t).verdict,
        });
        if !ok.is_accept() {
            return Verdict::Reject;
        }
        if !sim.in_stage(Stage::Step2, |sim| dyck_one_type(sim, &tape, p.k)).is_accept() {
            return Verdict::Reject;
        }
        let wrong = sim.in_stage(Stage::Step3, |sim| step3(sim, &tape, p.k, opts.zero_guard));
        Verdict::from_bool(wrong.is_none())
    })();

    sim.ledger.set_stage(prior);
    verdict
}

/// Majority vote of independent [`solve`] runs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoostedRun {
    pub verdict: Verdict,
    pub accepts: usize,
    pub reps: usize,
    /// Sum of the per-run ledgers.
    pub ledger: QueryLedger,
}

/// Runs [`solve`] `reps` times, each with its own ledger and a seed drawn from
/// `model.rng_seed`, and returns the majority verdict. `reps` must be odd.
pub fn solve_boosted(
    s: &BracketString,
    p: &DyckParams,
    model: &SubroutineModel,
    opts: &SolverOptions,
    reps: usize,
) -> Result<BoostedRun> {
    if reps == 0 || reps.is_multiple_of(2) {
        return Err(DyckError::argument("reps must be odd"));
    }
    model.validate()?;
    let mut seeds = ChaCha8Rng::seed_from_u64(model.rng_seed);
    let seeds: Vec<u64> = (0..reps).map(|_| seeds.random()).collect();

    let mut ledger = QueryLedger::new();
    let mut accepts = 0;
    for seed in seeds {
        let mut sim = QuerySim::new(model.with_seed(seed));
        if solve(&mut sim, s, p, opts).is_accept() {
            accepts += 1;
        }
        ledger.absorb(&sim.ledger);
    }
    Ok(BoostedRun {
        verdict: Verdict::from_bool(2 * accepts > reps),
        accepts,
        reps,
        ledger,
    })
}
