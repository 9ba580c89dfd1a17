use core::fmt;

/// Breakdown label for charged queries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Stage {
    Step1,
    Step2,
    Step3,
    VmaxSearch,
    Other,
}

impl Stage {
    pub const ALL: [Stage; 5] = [
        Stage::Step1,
        Stage::Step2,
        Stage::Step3,
        Stage::VmaxSearch,
        Stage::Other,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Stage::Step1 => "step1",
            Stage::Step2 => "step2",
            Stage::Step3 => "step3",
            Stage::VmaxSearch => "vmax-search",
            Stage::Other => "other",
        }
    }

    fn slot(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Accumulator of charged quantum queries with a per-stage breakdown.
///
/// Charges go to the active stage. Counters only ever grow; `total` always
/// equals the sum of the breakdown.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QueryLedger {
    total: u64,
    breakdown: [u64; 5],
    stage: Stage,
}

impl Default for QueryLedger {
    fn default() -> Self {
        QueryLedger::new()
    }
}

impl QueryLedger {
    pub const fn new() -> Self {
        QueryLedger {
            total: 0,
            breakdown: [0; 5],
            stage: Stage::Other,
        }
    }

    /// A fresh ledger that charges to `stage`.
    pub const fn in_stage(stage: Stage) -> Self {
        QueryLedger {
            total: 0,
            breakdown: [0; 5],
            stage,
        }
    }

    pub fn charge(&mut self, queries: u64) {
        self.total += queries;
        self.breakdown[self.stage.slot()] += queries;
    }

    pub fn stage(&self) -> Stage {
        self.stage
    }

    pub fn set_stage(&mut self, stage: Stage) {
        self.stage = stage;
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn get(&self, stage: Stage) -> u64 {
        self.breakdown[stage.slot()]
    }

    pub fn breakdown(&self) -> impl Iterator<Item = (Stage, u64)> + '_ {
        Stage::ALL.into_iter().map(|s| (s, self.get(s)))
    }

    /// Adds every counter of `other` into `self`, stage by stage.
    pub fn absorb(&mut self, other: &QueryLedger) {
        self.total += other.total;
        for (slot, q) in other.breakdown.iter().enumerate() {
            self.breakdown[slot] += q;
        }
    }

    pub fn is_conserved(&self) -> bool {
        self.breakdown.iter().sum::<u64>() == self.total
    }
}
