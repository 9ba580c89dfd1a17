//! Dürr–Høyer maximum finding on top of the simulated Grover search.

use rand::Rng;

use crate::error::{DyckError, Result};
use crate::query::grover::grover_search_within;
use crate::query::sim::QuerySim;

/// Finds an index of the maximum of `value` over `1..=n` with constant error.
///
/// The threshold starts at a uniformly random index. Each round searches for
/// a strictly larger value and moves the threshold there; the run ends when a
/// search finds nothing or the budget of `⌈c_grover · √n⌉` queries is spent.
/// Every search is limited to the budget still available.
pub fn qmax(
    sim: &mut QuerySim,
    n: usize,
    mut value: impl FnMut(usize, &mut QuerySim) -> u64,
) -> Result<(usize, u64)> {
    if n == 0 {
        return Err(DyckError::argument("qmax over an empty domain"));
    }
    let start = sim.rng().random_range(1..=n);
    let (mut best, cost) = sim.scratch(|s| value(start, s));
    let read_cost = cost.max(1);
    sim.charge(read_cost);
    let mut best_index = start;
    if n == 1 {
        return Ok((best_index, best));
    }

    let budget = libm::ceil(sim.model.c_grover * libm::sqrt(n as f64)) as u64;
    let mut used = read_cost;
    while used < budget {
        let threshold = best;
        let calls = (budget - used) / read_cost;
        if calls == 0 {
            break;
        }
        let out = grover_search_within(sim, 1..=n, calls, |i, s| {
            let x = value(i, s);
            (x > threshold).then_some(x)
        });
        used += out.queries_charged;
        match out.found {
            Some((i, x)) => {
                best = x;
                best_index = i;
            }
            None => break,
        }
    }
    Ok((best_index, best))
}

/// Repeats [`qmax`] `reps` times and keeps the largest value seen.
pub fn qmax_boosted(
    sim: &mut QuerySim,
    n: usize,
    reps: usize,
    mut value: impl FnMut(usize, &mut QuerySim) -> u64,
) -> Result<(usize, u64)> {
    let mut best = qmax(sim, n, &mut value)?;
    for _ in 1..reps {
        let cand = qmax(sim, n, &mut value)?;
        if cand.1 > best.1 {
            best = cand;
        }
    }
    Ok(best)
}

/// Number of repetitions that drives the error of a type-count maximum
/// search down to `O(1/t²)`: `⌈2 · log₂ max(t, 2)⌉`.
pub fn boost_reps(t: u32) -> usize {
    libm::ceil(2.0 * libm::log2(t.max(2) as f64)) as usize
}
