//! Idealized contract subroutines: exact classical semantics, ledger charge at
//! the published complexity, optional injected error.

use crate::bruteforce::SubstringWitness;
use crate::error::{DyckError, Result};
use crate::model::Verdict;
use crate::quantum::Tape;
use crate::query::QuerySim;
use crate::scan;

/// `⌈c · √len · max(log₂ len, 2)^exponent⌉`, with the exponent clamped at 0.
pub fn polylog_charge(c: f64, len: usize, exponent: f64) -> u64 {
    if len == 0 {
        return 0;
    }
    let len = len as f64;
    let log = libm::log2(len).max(2.0);
    libm::ceil(c * libm::sqrt(len) * libm::pow(log, exponent.max(0.0))) as u64
}

/// Whether `Y[l, r]` (directions only) is balanced, never dips below its
/// starting level, and rises at most `k` above it.
fn one_type_ok(prefix: &[i64], l: usize, r: usize, k: usize) -> bool {
    let base = prefix[l - 1];
    prefix[r] == base
        && prefix[l..=r]
            .iter()
            .all(|&x| x >= base && x - base <= k as i64)
}

/// Single-type Dyck recognition of `Y = (Open(s_1), …, Open(s_n))` with height
/// bound `k`. Charged `⌈c_grover·√n·max(log₂ n, 2)^{k/2}⌉`; the verdict is
/// flipped with probability `epsilon_inject`.
pub fn dyck_one_type(sim: &mut QuerySim, tape: &Tape<'_>, k: usize) -> Verdict {
    let n = tape.len();
    sim.charge(polylog_charge(sim.model.c_grover, n, 0.5 * k as f64));
    let exact = Verdict::from_bool(n == 0 || one_type_ok(tape.prefix(), 1, n, k));
    if sim.inject_error() {
        exact.flipped()
    } else {
        exact
    }
}

/// Single-type Dyck recognition restricted to `Y[l, r]`; an empty range is
/// accepted for free. Used to confirm that a candidate pair encloses a
/// balanced interior. No error is injected here.
pub fn dyck_one_type_range(sim: &mut QuerySim, tape: &Tape<'_>, l: usize, r: usize, k: usize) -> bool {
    if l > r {
        return true;
    }
    sim.charge(polylog_charge(sim.model.c_grover, r - l + 1, 0.5 * k as f64));
    one_type_ok(tape.prefix(), l, r, k)
}

fn check_window(tape: &Tape<'_>, l: usize, r: usize, v: usize, d: usize) -> Result<()> {
    if l == 0 || l > r || r > tape.len() {
        return Err(DyckError::IndexOutOfRange { l, r, n: tape.len() });
    }
    if v == 0 || d == 0 {
        return Err(DyckError::argument("v and d must be at least 1"));
    }
    Ok(())
}

fn pm_charge(sim: &QuerySim, l: usize, r: usize, v: usize) -> u64 {
    polylog_charge(sim.model.c_grover, r - l + 1, 0.5 * (v as f64 - 2.0))
}

/// Leftmost minimal ±v-substring of length `≤ d` in `S[l, r]`. Charged
/// `⌈c_grover·√(r−l+1)·max(log₂(r−l+1), 2)^{max(0,(v−2)/2)}⌉`; with probability
/// `epsilon_inject` reports nothing even when a substring exists.
pub fn leftmost_pm(
    sim: &mut QuerySim,
    tape: &Tape<'_>,
    l: usize,
    r: usize,
    v: usize,
    d: usize,
) -> Result<Option<SubstringWitness>> {
    check_window(tape, l, r, v, d)?;
    sim.charge(pm_charge(sim, l, r, v));
    let hit = scan::leftmost_pmv(tape.prefix(), l, r, v, d);
    Ok(if hit.is_some() && sim.inject_error() { None } else { hit })
}

/// Mirror of [`leftmost_pm`].
pub fn rightmost_pm(
    sim: &mut QuerySim,
    tape: &Tape<'_>,
    l: usize,
    r: usize,
    v: usize,
    d: usize,
) -> Result<Option<SubstringWitness>> {
    check_window(tape, l, r, v, d)?;
    sim.charge(pm_charge(sim, l, r, v));
    let hit = scan::rightmost_pmv(tape.prefix(), l, r, v, d);
    Ok(if hit.is_some() && sim.inject_error() { None } else { hit })
}
