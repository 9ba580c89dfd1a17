//! Search for a mismatched bracket pair enclosing a balanced interior, one
//! height at a time.

use alloc::vec::Vec;

use rand::Rng;

use crate::bruteforce::{Sign, SubstringWitness};
use crate::error::{DyckError, Result};
use crate::quantum::contract::{dyck_one_type_range, leftmost_pm, rightmost_pm};
use crate::quantum::Tape;
use crate::query::{amplitude_amplify, grover_search, QuerySim};

/// Outcome of a wrong-pair search and the queries it charged.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CheckOutcome {
    /// `(i_l, j_r)` with `s_{i_l}` open, `s_{j_r}` close and mismatched types.
    pub wrong: Option<(usize, usize)>,
    pub queries: u64,
}

/// Height-1 case: Grover search for an adjacent open/close pair of different
/// types. Two reads per predicate evaluation.
pub fn check_g1(sim: &mut QuerySim, tape: &Tape<'_>) -> CheckOutcome {
    let n = tape.len();
    if n < 2 {
        return CheckOutcome {
            wrong: None,
            queries: 0,
        };
    }
    let oracle = tape.oracle();
    let out = grover_search(sim, 1..=n - 1, |j, s| {
        let a = oracle.read(s, j).ok()?;
        let b = oracle.read(s, j + 1).ok()?;
        (a.open && !b.open && a.type_id != b.type_id).then_some(())
    });
    CheckOutcome {
        wrong: out.index().map(|j| (j, j + 1)),
        queries: out.queries_charged,
    }
}

/// One attempt at locating a wrong pair of height `v` and length about `d`
/// near position `b`.
///
/// Searches for the leftmost ±v-substring `u_r` starting in the window of
/// length `d` at `b`, then for the rightmost ±v-substring `u_l` ending just
/// before it. If no `u_r` exists, searches instead for `u_l` in the window
/// ending at `b` and then for `u_r` just after it. Reports `(i_l, j_r)` when
/// `u_l` rises, `u_r` falls, and the outer symbols differ in type.
///
/// With `zero_guard`, the pair is also required to be an open and a close
/// bracket around a single-type Dyck word of height at most `v − 1`; without
/// it, strings such as `1 5 5 5 6 6 6 2` yield pairs that enclose no
/// 0-substring at all.
pub fn find_wrong_fixed(
    sim: &mut QuerySim,
    tape: &Tape<'_>,
    v: usize,
    d: usize,
    b: usize,
    zero_guard: bool,
) -> Result<Option<(usize, usize)>> {
    let n = tape.len();
    if v < 2 {
        return Err(DyckError::argument("find_wrong_fixed needs v >= 2"));
    }
    if d == 0 {
        return Err(DyckError::argument("d must be at least 1"));
    }
    if b == 0 || b > n {
        return Err(DyckError::IndexOutOfRange { l: b, r: b, n });
    }

    let pair: Option<(SubstringWitness, SubstringWitness)> =
        match leftmost_pm(sim, tape, b, (b + d - 1).min(n), v, d)? {
            Some(u_r) => {
                if u_r.i <= 1 {
                    None
                } else {
                    let lo = u_r.i.saturating_sub(d).max(1);
                    rightmost_pm(sim, tape, lo, u_r.i - 1, v, d)?.map(|u_l| (u_l, u_r))
                }
            }
            None => match rightmost_pm(sim, tape, (b + 1).saturating_sub(d).max(1), b, v, d)? {
                Some(u_l) if u_l.j < n => {
                    leftmost_pm(sim, tape, u_l.j + 1, (u_l.j + d).min(n), v, d)?.map(|u_r| (u_l, u_r))
                }
                _ => None,
            },
        };

    let Some((u_l, u_r)) = pair else {
        return Ok(None);
    };
    if u_l.sigma != Sign::Plus || u_r.sigma != Sign::Minus {
        return Ok(None);
    }
    let (i_l, j_r) = (u_l.i, u_r.j);
    let left = tape.oracle().read(sim, i_l)?;
    let right = tape.oracle().read(sim, j_r)?;
    if left.type_id == right.type_id {
        return Ok(None);
    }
    if zero_guard
        && !(left.open && !right.open && dyck_one_type_range(sim, tape, i_l + 1, j_r - 1, v - 1))
    {
        return Ok(None);
    }
    Ok(Some((i_l, j_r)))
}

/// Length bounds searched over: `{2⁰, 2¹, …, 2^⌈log₂ n⌉}`.
pub fn length_domain(n: usize) -> Vec<usize> {
    let top = n.max(1).next_power_of_two().trailing_zeros();
    (0..=top).map(|e| 1usize << e).collect()
}

/// Looks for a wrong pair of height `v`, assuming all lower heights are clean.
///
/// For `v = 1` this is [`check_g1`]. Otherwise a Grover search runs over the
/// length bounds `d` of [`length_domain`]; the predicate at `d` amplifies
/// [`find_wrong_fixed`] over uniformly random `b` with at most `⌈4n/d⌉`
/// attempts.
pub fn check_substr(sim: &mut QuerySim, tape: &Tape<'_>, v: usize, zero_guard: bool) -> CheckOutcome {
    if v <= 1 {
        return check_g1(sim, tape);
    }
    let n = tape.len();
    if n < 2 {
        return CheckOutcome {
            wrong: None,
            queries: 0,
        };
    }
    let lengths = length_domain(n);
    let out = grover_search(sim, 1..=lengths.len(), |e, s| {
        let d = lengths[e - 1];
        amplitude_amplify(s, (4 * n).div_ceil(d) as u64, |s| {
            let b = s.rng().random_range(1..=n);
            find_wrong_fixed(s, tape, v, d, b, zero_guard).ok().flatten()
        })
    });
    CheckOutcome {
        wrong: out.found.map(|(_, pair)| pair),
        queries: out.queries_charged,
    }
}

/// Runs [`check_substr`] for `v = 1, …, k` and returns the first wrong pair,
/// tagged with its height.
pub fn step3(
    sim: &mut QuerySim,
    tape: &Tape<'_>,
    k: usize,
    zero_guard: bool,
) -> Option<(usize, (usize, usize))> {
    (1..=k).find_map(|v| check_substr(sim, tape, v, zero_guard).wrong.map(|w| (v, w)))
}
