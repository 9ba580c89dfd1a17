//! Type-count checks: the Grover search for codes above `2t`, and the
//! iterated maximum search that handles arbitrary type encodings.

use alloc::vec::Vec;

use crate::error::{DyckError, Result};
use crate::model::Verdict;
use crate::quantum::Tape;
use crate::query::{boost_reps, grover_find, qmax_boosted, QuerySim};

/// Rejects iff some code exceeds `2t`, found by Grover search over `1..=n`.
pub fn step1_bounded(sim: &mut QuerySim, tape: &Tape<'_>, t: u32) -> Verdict {
    let oracle = tape.oracle();
    let out = grover_find(sim, 1..=tape.len(), |i, s| {
        oracle.read(s, i).map(|sym| sym.code > 2 * t).unwrap_or(false)
    });
    Verdict::from_bool(!out.is_found())
}

/// `q(i, r)`: the type at position `i` when it is below `r`, else 0. One query.
pub fn q_fn(sim: &mut QuerySim, tape: &Tape<'_>, i: usize, r: u32) -> Result<u32> {
    if i == 0 || i > tape.len() {
        return Err(DyckError::IndexOutOfRange { l: i, r: i, n: tape.len() });
    }
    let ty = tape.oracle().read(sim, i)?.type_id;
    Ok(if ty < r { ty } else { 0 })
}

/// Verdict of the general type-count check and the maxima it observed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step1Trace {
    pub verdict: Verdict,
    /// `y_1, y_2, …` as computed, ending with 0 unless cut short.
    pub maxima: Vec<u32>,
}

/// Counts distinct types by descending maxima: `y_1 = max q(·, 2T + 1)`,
/// `y_j = max q(·, y_{j−1})`, until `y_j = 0`. Rejects as soon as a nonzero
/// maximum beyond the `t`-th appears. Each maximum search is repeated
/// [`boost_reps`]`(t)` times.
pub fn step1_general(sim: &mut QuerySim, tape: &Tape<'_>, t: u32) -> Step1Trace {
    let n = tape.len();
    let mut maxima = Vec::new();
    if n == 0 {
        maxima.push(0);
        return Step1Trace {
            verdict: Verdict::Accept,
            maxima,
        };
    }
    let reps = boost_reps(t);
    let alphabet = tape.source().alphabet();
    let search = |sim: &mut QuerySim, below: u32| -> u32 {
        qmax_boosted(sim, n, reps, |i, s| q_fn(s, tape, i, below).unwrap_or(0) as u64)
            .map(|(_, y)| y as u32)
            .unwrap_or(0)
    };

    let mut y = search(sim, 2 * alphabet + 1);
    maxima.push(y);
    let mut j = 1u32;
    while y != 0 {
        if j > t {
            return Step1Trace {
                verdict: Verdict::Reject,
                maxima,
            };
        }
        j += 1;
        y = search(sim, y);
        maxima.push(y);
    }
    Step1Trace {
        verdict: Verdict::Accept,
        maxima,
    }
}
