//! Grover search with an unknown number of marked items (BBHT schedule),
//! simulated through its exact measurement statistics, and a statevector
//! reference used to validate those statistics.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::RangeInclusive;

use rand::Rng;

use crate::error::{DyckError, Result};
use crate::query::sim::QuerySim;

/// Growth factor of the BBHT iteration bound.
const BBHT_LAMBDA: f64 = 6.0 / 5.0;

/// Result of a simulated Grover search. `found` carries the measured index
/// and the witness its predicate produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroverOutcome<W = ()> {
    pub found: Option<(usize, W)>,
    pub queries_charged: u64,
}

impl<W> GroverOutcome<W> {
    pub fn index(&self) -> Option<usize> {
        self.found.as_ref().map(|(i, _)| *i)
    }

    pub fn is_found(&self) -> bool {
        self.found.is_some()
    }
}

/// Probability of measuring a marked element after `j` Grover iterations with
/// `m` of `n` elements marked: `sin²((2j + 1)·θ)`, `θ = arcsin √(m/n)`.
pub fn success_probability(n: u64, m: u64, j: u64) -> f64 {
    if n == 0 || m == 0 {
        return 0.0;
    }
    let theta = libm::asin(libm::sqrt(m as f64 / n as f64));
    let s = libm::sin((2 * j + 1) as f64 * theta);
    s * s
}

/// Oracle-call cap of a search over `n` elements.
pub fn grover_cap(sim: &QuerySim, n: usize) -> u64 {
    libm::ceil(sim.model.grover_cap_factor * libm::sqrt(n as f64)) as u64
}

/// Searches `range` for an index whose predicate yields a witness.
///
/// The marked set is found by one classical pass over the range; that pass is
/// simulation bookkeeping and charges nothing. Each predicate evaluation's
/// cost is measured on a scratch ledger and the most expensive one (at least
/// one query) is the price of a single oracle call. The BBHT schedule then
/// draws `j` uniformly below the current bound, charges `j + 1` calls and
/// succeeds with probability [`success_probability`]. Once the cap of
/// `⌈grover_cap_factor · √N⌉` calls would be exceeded the search reports
/// nothing; with no marked element exactly the cap is charged.
pub fn grover_search<W: Clone>(
    sim: &mut QuerySim,
    range: RangeInclusive<usize>,
    pred: impl FnMut(usize, &mut QuerySim) -> Option<W>,
) -> GroverOutcome<W> {
    grover_search_within(sim, range, u64::MAX, pred)
}

/// [`grover_search`] with the call cap further limited to `max_calls`.
pub fn grover_search_within<W: Clone>(
    sim: &mut QuerySim,
    range: RangeInclusive<usize>,
    max_calls: u64,
    mut pred: impl FnMut(usize, &mut QuerySim) -> Option<W>,
) -> GroverOutcome<W> {
    let (lo, hi) = (*range.start(), *range.end());
    if lo > hi {
        return GroverOutcome {
            found: None,
            queries_charged: 0,
        };
    }
    let n = hi - lo + 1;

    let mut marked: Vec<(usize, W)> = Vec::new();
    let mut per_call = 1u64;
    for i in lo..=hi {
        let (w, cost) = sim.scratch(|s| pred(i, s));
        per_call = per_call.max(cost);
        if let Some(w) = w {
            marked.push((i, w));
        }
    }

    let cap = grover_cap(sim, n).min(max_calls);
    let mut used = 0u64;
    let finish = |sim: &mut QuerySim, used: u64, found: Option<(usize, W)>| {
        sim.charge(used * per_call);
        GroverOutcome {
            found,
            queries_charged: used * per_call,
        }
    };
    if marked.is_empty() {
        return finish(sim, cap, None);
    }

    let m = marked.len() as u64;
    let sqrt_n = libm::sqrt(n as f64);
    let mut bound = 1.0f64;
    loop {
        let j = sim.rng().random_range(0..libm::ceil(bound) as u64);
        if used + j + 1 > cap {
            return finish(sim, cap, None);
        }
        used += j + 1;
        let p = success_probability(n as u64, m, j).clamp(0.0, 1.0);
        if sim.rng().random_bool(p) {
            let pick = sim.rng().random_range(0..marked.len());
            let hit = marked.swap_remove(pick);
            return finish(sim, used, Some(hit));
        }
        bound = (bound * BBHT_LAMBDA).min(sqrt_n);
    }
}

/// [`grover_search`] over a boolean predicate.
pub fn grover_find(
    sim: &mut QuerySim,
    range: RangeInclusive<usize>,
    mut pred: impl FnMut(usize, &mut QuerySim) -> bool,
) -> GroverOutcome {
    grover_search(sim, range, |i, s| pred(i, s).then_some(()))
}

/// Largest domain the statevector reference accepts.
pub const STATEVECTOR_MAX: usize = 1 << 20;

/// Exact Grover iterations on a real amplitude vector over `1..=n`: phase
/// flip on `marked`, then inversion about the mean. Returns the probability
/// mass on the marked states.
pub fn statevector_grover(n: usize, marked: &[usize], iterations: usize) -> Result<f64> {
    if n == 0 || n > STATEVECTOR_MAX {
        return Err(DyckError::argument("domain size must lie in 1..=2^20"));
    }
    if marked.iter().any(|&x| x == 0 || x > n) {
        return Err(DyckError::argument("marked index outside 1..=n"));
    }
    let mut is_marked = vec![false; n];
    for &x in marked {
        is_marked[x - 1] = true;
    }
    let mut amp = vec![1.0 / libm::sqrt(n as f64); n];
    for _ in 0..iterations {
        for (a, &m) in amp.iter_mut().zip(&is_marked) {
            if m {
                *a = -*a;
            }
        }
        let mean = amp.iter().sum::<f64>() / n as f64;
        for a in amp.iter_mut() {
            *a = 2.0 * mean - *a;
        }
    }
    Ok(amp
        .iter()
        .zip(&is_marked)
        .filter(|(_, &m)| m)
        .map(|(a, _)| a * a)
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::query::sim::SubroutineModel;

    fn sim(seed: u64) -> QuerySim {
        QuerySim::new(SubroutineModel::default().with_seed(seed))
    }

    #[test]
    fn closed_form_examples() {
        assert!((success_probability(4, 1, 1) - 1.0).abs() < 1e-12);
        for n in [1u64, 5, 64, 1000] {
            assert!((success_probability(n, n, 0) - 1.0).abs() < 1e-12);
        }
        assert_eq!(success_probability(16, 0, 3), 0.0);
    }

    #[test]
    fn statevector_examples() {
        assert!((statevector_grover(4, &[3], 1).unwrap() - 1.0).abs() < 1e-12);
        assert!((statevector_grover(2, &[1], 0).unwrap() - 0.5).abs() < 1e-15);
        let expected = libm::sin(51.0 * libm::asin(1.0 / 32.0));
        let got = statevector_grover(1024, &[700], 25).unwrap();
        assert!((got - expected * expected).abs() < 1e-9);
        assert_eq!(statevector_grover(8, &[], 3).unwrap(), 0.0);
        assert!(statevector_grover(8, &[9], 1).is_err());
        assert!(statevector_grover(0, &[], 1).is_err());
    }

    #[test]
    fn empty_range_charges_nothing() {
        let mut s = sim(0);
        #[allow(clippy::reversed_empty_ranges)]
        let out = grover_find(&mut s, 5..=4, |_, _| true);
        assert_eq!(out, GroverOutcome { found: None, queries_charged: 0 });
        assert_eq!(s.ledger.total(), 0);
    }

    #[test]
    fn no_marked_charges_the_cap() {
        let mut s = sim(1);
        let out = grover_find(&mut s, 1..=1024, |_, _| false);
        assert!(!out.is_found());
        assert_eq!(out.queries_charged, 9 * 32);
        assert_eq!(s.ledger.total(), 9 * 32);
    }

    #[test]
    fn per_call_cost_scales_charges() {
        let mut s = sim(1);
        let out = grover_find(&mut s, 1..=16, |_, s| {
            s.charge(3);
            false
        });
        assert_eq!(out.queries_charged, 36 * 3);
    }

    #[test]
    fn all_marked_succeeds_first_round() {
        for seed in 0..50 {
            let mut s = sim(seed);
            let out = grover_find(&mut s, 3..=40, |_, _| true);
            assert!(out.is_found());
            assert_eq!(out.queries_charged, 1);
        }
    }

    #[test]
    fn found_index_satisfies_predicate() {
        for seed in 0..200 {
            let mut s = sim(seed);
            let out = grover_find(&mut s, 1..=200, |i, _| i % 37 == 0);
            if let Some(i) = out.index() {
                assert_eq!(i % 37, 0);
            }
            assert!(out.queries_charged <= grover_cap(&s, 200));
            assert_eq!(s.ledger.total(), out.queries_charged);
        }
    }

    #[test]
    fn within_limits_the_cap() {
        let mut s = sim(0);
        let out = grover_search_within(&mut s, 1..=1024, 10, |_, _| None::<()>);
        assert_eq!(out.queries_charged, 10);
    }
}
