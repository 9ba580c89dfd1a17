use crate::query::sim::QuerySim;

/// Amplitude amplification of a randomized subroutine, simulated by classical
/// repetition with a quadratically smaller charge.
///
/// Attempts run on a scratch ledger with fresh randomness. If the first
/// success is attempt `A`, the ledger is charged `⌈c_aa·√A⌉` times the mean
/// per-attempt cost instead of the raw sum; if no attempt succeeds within
/// `max_attempts`, the charge uses `A = max_attempts`.
pub fn amplitude_amplify<W>(
    sim: &mut QuerySim,
    max_attempts: u64,
    mut attempt: impl FnMut(&mut QuerySim) -> Option<W>,
) -> Option<W> {
    let max_attempts = max_attempts.max(1);
    let mut spent = 0u64;
    for a in 1..=max_attempts {
        let (out, cost) = sim.scratch(&mut attempt);
        spent += cost;
        if out.is_some() {
            charge(sim, a, spent);
            return out;
        }
    }
    charge(sim, max_attempts, spent);
    None
}

fn charge(sim: &mut QuerySim, attempts: u64, spent: u64) {
    let factor = libm::ceil(sim.model.c_aa * libm::sqrt(attempts as f64)) as u64;
    // ⌈factor · spent / attempts⌉
    let q = (factor * spent).div_ceil(attempts);
    sim.charge(q);
}
