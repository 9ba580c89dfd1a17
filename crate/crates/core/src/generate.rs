//! Seeded input generators: balanced words of a target height and
//! single-defect corruptions of them.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{DyckError, Result};
use crate::model::{classical_check, BracketCode, BracketString, DyckParams, Verdict};

/// Returns a well-balanced word of length `n` with at most `t` types and
/// height at most `k`. When `n ≥ 2k` the height is exactly `k`; shorter words
/// peak at `n / 2`.
///
/// The open/close skeleton is a random walk restricted to moves that keep the
/// target peak reachable; types are drawn uniformly at each opening bracket.
pub fn gen_balanced(n: usize, k: usize, t: u32, seed: u64) -> Result<BracketString> {
    if n % 2 == 1 || n < 2 {
        return Err(DyckError::argument("length must be even and at least 2"));
    }
    if k == 0 || t == 0 {
        return Err(DyckError::argument("k and t must be at least 1"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let peak = k.min(n / 2);
    let mut reached = false;
    let mut level = 0usize;
    let mut stack: Vec<u32> = Vec::with_capacity(peak);
    let mut out = Vec::with_capacity(n);

    for step in 0..n {
        let remaining = n - step - 1;
        let feasible = |next: usize| -> bool {
            if next > k {
                return false;
            }
            let hit = reached || next == peak;
            let needed = if hit { next } else { 2 * peak - next };
            needed <= remaining
        };
        let up = feasible(level + 1);
        let down = level > 0 && feasible(level - 1);
        let go_up = match (up, down) {
            (true, true) => rng.random_bool(0.5),
            (true, false) => true,
            (false, true) => false,
            (false, false) => unreachable!("walk always has a feasible move"),
        };
        if go_up {
            let ty = rng.random_range(1..=t);
            stack.push(ty);
            out.push(BracketCode::from_parts(ty, true));
            level += 1;
        } else {
            let ty = stack.pop().expect("level > 0");
            out.push(BracketCode::from_parts(ty, false));
            level -= 1;
        }
        if level == peak {
            reached = true;
        }
    }
    BracketString::from_symbols(out, t)
}

/// Kind of single defect introduced by [`corrupt`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CorruptMode {
    /// Change one bracket's type, keeping its direction.
    TypeSwap,
    /// Flip one bracket's direction, keeping its type.
    BalanceBreak,
    /// Wrap the word in enough extra nesting to exceed `k`.
    HeightExceed,
    /// Replace one code by a code of type `t + 1`, keeping its direction.
    CodeOverflow,
}

impl CorruptMode {
    pub const ALL: [CorruptMode; 4] = [
        CorruptMode::TypeSwap,
        CorruptMode::BalanceBreak,
        CorruptMode::HeightExceed,
        CorruptMode::CodeOverflow,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CorruptMode::TypeSwap => "type-swap",
            CorruptMode::BalanceBreak => "balance-break",
            CorruptMode::HeightExceed => "height-exceed",
            CorruptMode::CodeOverflow => "code-overflow",
        }
    }
}

impl fmt::Display for CorruptMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CorruptMode {
    type Err = DyckError;

    fn from_str(s: &str) -> Result<Self> {
        CorruptMode::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| DyckError::argument(alloc::format!("unknown corrupt mode `{s}`")))
    }
}

/// Applies `mode` at the 1-based `position` (ignored for `HeightExceed`).
///
/// Type swaps move to the next type cyclically. The result's alphabet is
/// widened when a code of type `t + 1` is introduced.
pub fn corrupt_at(
    s: &BracketString,
    mode: CorruptMode,
    position: usize,
    p: &DyckParams,
) -> Result<BracketString> {
    let n = s.len();
    if n == 0 {
        return Err(DyckError::argument("cannot corrupt an empty string"));
    }
    if mode != CorruptMode::HeightExceed && (position == 0 || position > n) {
        return Err(DyckError::IndexOutOfRange {
            l: position,
            r: position,
            n,
        });
    }
    let mut symbols = s.symbols().to_vec();
    let mut alphabet = s.alphabet();
    match mode {
        CorruptMode::TypeSwap => {
            if p.t < 2 {
                return Err(DyckError::argument("type-swap needs at least two types"));
            }
            let c = symbols[position - 1];
            let next = c.type_id() % p.t + 1;
            symbols[position - 1] = BracketCode::from_parts(next, c.is_open());
            alphabet = alphabet.max(next);
        }
        CorruptMode::BalanceBreak => {
            let c = symbols[position - 1];
            symbols[position - 1] = BracketCode::from_parts(c.type_id(), !c.is_open());
        }
        CorruptMode::CodeOverflow => {
            let c = symbols[position - 1];
            symbols[position - 1] = BracketCode::from_parts(p.t + 1, c.is_open());
            alphabet = alphabet.max(p.t + 1);
        }
        CorruptMode::HeightExceed => {
            let h = crate::model::height(s, 1, n)?.max(0) as usize;
            let extra = (p.k + 1).saturating_sub(h).max(1);
            let mut wrapped = Vec::with_capacity(n + 2 * extra);
            wrapped.extend(core::iter::repeat_n(BracketCode::from_parts(1, true), extra));
            wrapped.extend_from_slice(&symbols);
            wrapped.extend(core::iter::repeat_n(BracketCode::from_parts(1, false), extra));
            symbols = wrapped;
        }
    }
    BracketString::from_symbols(symbols, alphabet)
}

/// Seeded corruption whose result is rejected by [`classical_check`] under
/// `p` (with `n` adjusted to the corrupted length). Positions are tried in a
/// seeded random order; fails if no position yields a rejected word.
pub fn corrupt(
    s: &BracketString,
    mode: CorruptMode,
    p: &DyckParams,
    seed: u64,
) -> Result<BracketString> {
    if s.is_empty() {
        return Err(DyckError::argument("cannot corrupt an empty string"));
    }
    if mode == CorruptMode::TypeSwap && p.t < 2 {
        return Err(DyckError::argument("type-swap needs at least two types"));
    }
    let rejected = |x: &BracketString| {
        let q = DyckParams { n: x.len(), ..*p };
        classical_check(x, &q) == Verdict::Reject
    };
    if mode == CorruptMode::HeightExceed {
        let out = corrupt_at(s, mode, 1, p)?;
        return if rejected(&out) {
            Ok(out)
        } else {
            Err(DyckError::argument("height-exceed did not produce a rejected word"))
        };
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut positions: Vec<usize> = (1..=s.len()).collect();
    positions.shuffle(&mut rng);
    for pos in positions {
        let out = if mode == CorruptMode::TypeSwap {
            // random replacement type instead of the cyclic successor
            let c = s.at(pos);
            let mut ty = rng.random_range(1..p.t);
            if ty >= c.type_id() {
                ty += 1;
            }
            let mut symbols = s.symbols().to_vec();
            symbols[pos - 1] = BracketCode::from_parts(ty, c.is_open());
            BracketString::from_symbols(symbols, s.alphabet().max(ty))?
        } else {
            corrupt_at(s, mode, pos, p)?
        };
        if rejected(&out) {
            return Ok(out);
        }
    }
    Err(DyckError::argument(alloc::format!(
        "no position yields a rejected word under {mode}"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::height;

    fn params(k: usize, t: u32, n: usize) -> DyckParams {
        DyckParams::new(k, t, n).unwrap()
    }

    #[test]
    fn shortest_word_is_unique() {
        for seed in 0..8 {
            assert_eq!(gen_balanced(2, 1, 1, seed).unwrap().codes(), [1, 2]);
        }
    }

    #[test]
    fn forced_height_two_on_four_symbols() {
        for seed in 0..16 {
            assert_eq!(gen_balanced(4, 2, 1, seed).unwrap().codes(), [1, 1, 2, 2]);
        }
    }

    #[test]
    fn rejects_bad_arguments() {
        assert!(gen_balanced(3, 1, 1, 0).is_err());
        assert!(gen_balanced(0, 1, 1, 0).is_err());
        assert!(gen_balanced(4, 0, 1, 0).is_err());
        assert!(gen_balanced(4, 1, 0, 0).is_err());
    }

    #[test]
    fn generated_words_are_accepted_and_reach_height() {
        for seed in 0..200u64 {
            let n = 2 * (1 + (seed as usize * 7) % 60);
            let k = 1 + (seed as usize % 5);
            let t = 1 + (seed as u32 % 4);
            let w = gen_balanced(n, k, t, seed).unwrap();
            assert_eq!(w.len(), n);
            assert_eq!(classical_check(&w, &params(k, t, n)), Verdict::Accept);
            assert_eq!(height(&w, 1, n).unwrap() as usize, k.min(n / 2));
        }
    }

    #[test]
    fn generator_is_deterministic() {
        let a = gen_balanced(128, 3, 3, 42).unwrap();
        let b = gen_balanced(128, 3, 3, 42).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn corrupt_at_examples() {
        let w = BracketString::from_codes(&[1, 3, 4, 2]).unwrap();
        let p = params(2, 2, 4);
        let out = corrupt_at(&w, CorruptMode::TypeSwap, 4, &p).unwrap();
        assert_eq!(out.codes(), [1, 3, 4, 4]);
        assert_eq!(classical_check(&out, &p), Verdict::Reject);

        let w = BracketString::from_codes(&[3, 4]).unwrap();
        let out = corrupt_at(&w, CorruptMode::BalanceBreak, 2, &params(1, 2, 2)).unwrap();
        assert_eq!(out.codes(), [3, 3]);

        let w = BracketString::from_codes(&[1, 2]).unwrap();
        let out = corrupt_at(&w, CorruptMode::CodeOverflow, 1, &params(1, 1, 2)).unwrap();
        assert_eq!(out.codes(), [3, 2]);
        assert!(out.alphabet() >= 2);
    }

    #[test]
    fn type_swap_needs_two_types() {
        let w = BracketString::from_codes(&[1, 2]).unwrap();
        assert!(corrupt(&w, CorruptMode::TypeSwap, &params(1, 1, 2), 0).is_err());
        assert!(corrupt_at(&w, CorruptMode::TypeSwap, 1, &params(1, 1, 2)).is_err());
    }

    #[test]
    fn height_exceed_wraps_past_k() {
        let w = gen_balanced(16, 2, 2, 3).unwrap();
        let p = params(3, 2, 16);
        let out = corrupt(&w, CorruptMode::HeightExceed, &p, 0).unwrap();
        assert_eq!(height(&out, 1, out.len()).unwrap(), 4);
        assert_eq!(out.len(), 20);
    }

    #[test]
    fn corrupted_words_are_rejected() {
        for seed in 0..200u64 {
            let n = 2 * (1 + (seed as usize * 5) % 40);
            let k = 1 + (seed as usize % 4);
            let t = 2 + (seed as u32 % 3);
            let w = gen_balanced(n, k, t, seed).unwrap();
            let p = params(k, t, n);
            for mode in CorruptMode::ALL {
                let out = corrupt(&w, mode, &p, seed ^ 0x55).unwrap();
                assert_ne!(out, w);
                let q = DyckParams { n: out.len(), ..p };
                assert_eq!(classical_check(&out, &q), Verdict::Reject, "{mode} seed {seed}");
            }
        }
    }

    #[test]
    fn mode_names_round_trip() {
        for m in CorruptMode::ALL {
            assert_eq!(m.name().parse::<CorruptMode>().unwrap(), m);
        }
        assert!("bogus".parse::<CorruptMode>().is_err());
    }
}
