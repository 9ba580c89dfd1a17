//! Bracket encoding, balance/height arithmetic and the stack-based reference
//! recognizer.
//!
//! A bracket of type `τ` is encoded as `2τ − 1` when opening and `2τ` when
//! closing, so `"[()]"` with square brackets as type 1 and parentheses as
//! type 2 is the code sequence `1, 3, 4, 2`. All public positions are 1-based:
//! `S[l, r]` is `(s_l, …, s_r)`.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{DyckError, Result};

/// Type id of a bracket code: `⌈code / 2⌉`.
#[inline]
pub const fn type_of(code: u32) -> u32 {
    code.div_ceil(2)
}

/// `1` for an opening bracket, `0` for a closing one.
#[inline]
pub const fn open_of(code: u32) -> u32 {
    code % 2
}

/// A single bracket code, valid against some alphabet bound `T` (`1 ≤ code ≤ 2T`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BracketCode(u32);

impl BracketCode {
    pub fn new(value: u32, alphabet: u32) -> Result<Self> {
        if value == 0 || value > alphabet.saturating_mul(2) {
            return Err(DyckError::InvalidCode {
                code: value,
                position: 0,
                max: alphabet.saturating_mul(2),
            });
        }
        Ok(BracketCode(value))
    }

    /// Builds a code from its type and direction.
    pub const fn from_parts(type_id: u32, open: bool) -> Self {
        BracketCode(2 * type_id - open as u32)
    }

    #[inline]
    pub const fn value(self) -> u32 {
        self.0
    }

    #[inline]
    pub const fn type_id(self) -> u32 {
        type_of(self.0)
    }

    #[inline]
    pub const fn is_open(self) -> bool {
        open_of(self.0) == 1
    }

    /// `+1` for an opening bracket, `−1` for a closing one.
    #[inline]
    pub const fn step(self) -> i64 {
        if self.is_open() {
            1
        } else {
            -1
        }
    }
}

/// The input word `s_1 … s_n` together with its alphabet bound `T`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BracketString {
    symbols: Vec<BracketCode>,
    alphabet: u32,
}

impl BracketString {
    /// Validates every code against `1..=2·alphabet`.
    pub fn new(codes: &[u32], alphabet: u32) -> Result<Self> {
        if alphabet == 0 {
            return Err(DyckError::argument("alphabet bound must be at least 1"));
        }
        let max = alphabet.saturating_mul(2);
        let symbols = codes
            .iter()
            .enumerate()
            .map(|(pos, &code)| {
                if code == 0 || code > max {
                    Err(DyckError::InvalidCode {
                        code,
                        position: pos + 1,
                        max,
                    })
                } else {
                    Ok(BracketCode(code))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(BracketString { symbols, alphabet })
    }

    /// Uses the smallest alphabet bound that admits every code (at least 1).
    pub fn from_codes(codes: &[u32]) -> Result<Self> {
        let alphabet = codes.iter().map(|&c| type_of(c)).max().unwrap_or(1).max(1);
        Self::new(codes, alphabet)
    }

    pub fn from_symbols(symbols: Vec<BracketCode>, alphabet: u32) -> Result<Self> {
        let codes: Vec<u32> = symbols.iter().map(|s| s.value()).collect();
        Self::new(&codes, alphabet)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// The alphabet bound `T`; codes lie in `1..=2T`.
    #[inline]
    pub fn alphabet(&self) -> u32 {
        self.alphabet
    }

    #[inline]
    pub fn symbols(&self) -> &[BracketCode] {
        &self.symbols
    }

    pub fn codes(&self) -> Vec<u32> {
        self.symbols.iter().map(|s| s.value()).collect()
    }

    /// Symbol at 1-based position `i`.
    #[inline]
    pub fn at(&self, i: usize) -> BracketCode {
        self.symbols[i - 1]
    }

    pub fn get(&self, i: usize) -> Option<BracketCode> {
        i.checked_sub(1).and_then(|k| self.symbols.get(k)).copied()
    }

    /// `P[0..=n]` with `P[0] = 0` and `P[i] = f(S[1, i])`.
    pub fn prefix_balances(&self) -> Vec<i64> {
        let mut out = Vec::with_capacity(self.len() + 1);
        out.push(0);
        let mut acc = 0;
        for s in &self.symbols {
            acc += s.step();
            out.push(acc);
        }
        out
    }

    pub fn with_alphabet(mut self, alphabet: u32) -> Result<Self> {
        let max = alphabet.saturating_mul(2);
        if let Some((pos, s)) = self
            .symbols
            .iter()
            .enumerate()
            .find(|(_, s)| s.value() > max)
        {
            return Err(DyckError::InvalidCode {
                code: s.value(),
                position: pos + 1,
                max,
            });
        }
        self.alphabet = alphabet;
        Ok(self)
    }
}

impl fmt::Display for BracketString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, s) in self.symbols.iter().enumerate() {
            if idx > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", s.value())?;
        }
        Ok(())
    }
}

/// Language parameters: maximum height `k`, maximum number of types `t`,
/// input length `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DyckParams {
    pub k: usize,
    pub t: u32,
    pub n: usize,
}

impl DyckParams {
    pub fn new(k: usize, t: u32, n: usize) -> Result<Self> {
        if k == 0 || t == 0 {
            return Err(DyckError::argument("k and t must be at least 1"));
        }
        Ok(DyckParams { k, t, n })
    }

    /// Parameters whose `n` matches the given input.
    pub fn for_input(k: usize, t: u32, s: &BracketString) -> Result<Self> {
        Self::new(k, t, s.len())
    }
}

/// Outcome of a recognition run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Reject,
    Accept,
}

impl Verdict {
    #[inline]
    pub fn from_bool(accepted: bool) -> Self {
        if accepted {
            Verdict::Accept
        } else {
            Verdict::Reject
        }
    }

    #[inline]
    pub fn is_accept(self) -> bool {
        self == Verdict::Accept
    }

    /// `1` for accept, `0` for reject.
    #[inline]
    pub fn bit(self) -> u8 {
        self.is_accept() as u8
    }

    pub fn flipped(self) -> Self {
        Verdict::from_bool(!self.is_accept())
    }
}

fn check_range(s: &BracketString, l: usize, r: usize) -> Result<()> {
    if l == 0 || r > s.len() {
        return Err(DyckError::IndexOutOfRange { l, r, n: s.len() });
    }
    Ok(())
}

/// `f(S[l, r])`: opening minus closing brackets. An empty range (`l > r`) has
/// balance 0.
pub fn balance(s: &BracketString, l: usize, r: usize) -> Result<i64> {
    check_range(s, l, r)?;
    if l > r {
        return Ok(0);
    }
    Ok(s.symbols[l - 1..r].iter().map(|c| c.step()).sum())
}

/// `h(S[l, r]) = max_{l ≤ i ≤ r} f(S[l, i])`.
pub fn height(s: &BracketString, l: usize, r: usize) -> Result<i64> {
    check_range(s, l, r)?;
    if l > r {
        return Err(DyckError::IndexOutOfRange { l, r, n: s.len() });
    }
    let mut acc = 0;
    let mut best = i64::MIN;
    for c in &s.symbols[l - 1..r] {
        acc += c.step();
        best = best.max(acc);
    }
    Ok(best)
}

/// Whether a run of symbols is well-balanced with matching types, ignoring any
/// height or type-count bound.
pub fn is_well_balanced(symbols: &[BracketCode]) -> bool {
    let mut stack: Vec<u32> = Vec::new();
    for s in symbols {
        if s.is_open() {
            stack.push(s.type_id());
        } else if stack.pop() != Some(s.type_id()) {
            return false;
        }
    }
    stack.is_empty()
}

/// Number of distinct type ids occurring in `s`.
pub fn distinct_types(s: &BracketString) -> usize {
    let mut seen: Vec<u32> = s.symbols.iter().map(|c| c.type_id()).collect();
    seen.sort_unstable();
    seen.dedup();
    seen.len()
}

/// Reference recognizer: one stack pass checking type-matched balance, height
/// `≤ k`, and at most `t` distinct types. Malformed inputs are rejected, never
/// reported as errors.
pub fn classical_check(s: &BracketString, p: &DyckParams) -> Verdict {
    if s.len() != p.n {
        return Verdict::Reject;
    }
    let mut stack: Vec<u32> = Vec::new();
    let mut present: Vec<bool> = Vec::new();
    let mut distinct = 0usize;
    for c in &s.symbols {
        let ty = c.type_id() as usize;
        if ty >= present.len() {
            present.resize(ty + 1, false);
        }
        if !present[ty] {
            present[ty] = true;
            distinct += 1;
            if distinct > p.t as usize {
                return Verdict::Reject;
            }
        }
        if c.is_open() {
            stack.push(c.type_id());
            if stack.len() > p.k {
                return Verdict::Reject;
            }
        } else if stack.pop() != Some(c.type_id()) {
            return Verdict::Reject;
        }
    }
    Verdict::from_bool(stack.is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn s(codes: &[u32]) -> BracketString {
        BracketString::from_codes(codes).unwrap()
    }

    #[test]
    fn type_and_open_of_small_codes() {
        assert_eq!(type_of(1), 1);
        assert_eq!(type_of(4), 2);
        assert_eq!(type_of(3), 2);
        assert_eq!(type_of(2), 1);
        assert_eq!(open_of(1), 1);
        assert_eq!(open_of(4), 0);
        assert_eq!(open_of(2), 0);
        assert_eq!(open_of(3), 1);
    }

    #[test]
    fn round_trip_every_code() {
        for x in 1..=512u32 {
            assert_eq!(x, 2 * type_of(x) - open_of(x));
            let c = BracketCode::from_parts(type_of(x), open_of(x) == 1);
            assert_eq!(c.value(), x);
        }
    }

    #[test]
    fn rejects_codes_outside_alphabet() {
        assert!(matches!(
            BracketString::new(&[1, 5], 2),
            Err(DyckError::InvalidCode { code: 5, position: 2, max: 4 })
        ));
        assert!(BracketString::new(&[0], 2).is_err());
        assert!(BracketString::new(&[1], 0).is_err());
    }

    #[test]
    fn balance_examples() {
        // "[ ] ( )" with the codes used by the substring example: 1,2,3,4
        let x = s(&[1, 2, 3, 4]);
        assert_eq!(balance(&x, 2, 4).unwrap(), -1);
        assert_eq!(balance(&x, 2, 2).unwrap(), -1);
        assert_eq!(balance(&s(&[1, 3, 4, 2]), 1, 4).unwrap(), 0);
        assert_eq!(balance(&s(&[1, 3, 4, 4]), 1, 2).unwrap(), 2);
        assert_eq!(balance(&x, 3, 2).unwrap(), 0);
        assert!(balance(&x, 0, 2).is_err());
        assert!(balance(&x, 1, 5).is_err());
    }

    #[test]
    fn height_examples() {
        assert_eq!(height(&s(&[1, 3, 4, 2]), 1, 4).unwrap(), 2);
        assert_eq!(height(&s(&[3, 4]), 1, 2).unwrap(), 1);
        // closing then opening: prefix balances −1, 0
        assert_eq!(height(&s(&[2, 1]), 1, 2).unwrap(), 0);
        assert!(height(&s(&[2, 1]), 2, 1).is_err());
        assert!(height(&s(&[2, 1]), 1, 3).is_err());
    }

    #[test]
    fn classical_check_examples() {
        let good = s(&[1, 3, 4, 2]);
        let crossed = s(&[1, 3, 2, 4]);
        let p = DyckParams::new(2, 2, 4).unwrap();
        assert_eq!(classical_check(&good, &p), Verdict::Accept);
        assert_eq!(classical_check(&crossed, &p), Verdict::Reject);

        let empty = BracketString::new(&[], 3).unwrap();
        assert_eq!(
            classical_check(&empty, &DyckParams::new(1, 1, 0).unwrap()),
            Verdict::Accept
        );
        // height bound
        assert_eq!(
            classical_check(&good, &DyckParams::new(1, 2, 4).unwrap()),
            Verdict::Reject
        );
        // type-count bound
        assert_eq!(
            classical_check(&good, &DyckParams::new(2, 1, 4).unwrap()),
            Verdict::Reject
        );
        // length mismatch
        assert_eq!(
            classical_check(&good, &DyckParams::new(2, 2, 6).unwrap()),
            Verdict::Reject
        );
    }

    #[test]
    fn type_count_is_distinct_not_maximum() {
        // types 1 and 4 only
        let x = s(&[1, 2, 7, 8]);
        assert_eq!(distinct_types(&x), 2);
        assert_eq!(
            classical_check(&x, &DyckParams::new(1, 2, 4).unwrap()),
            Verdict::Accept
        );
    }

    #[test]
    fn prefix_balances_track_steps() {
        assert_eq!(s(&[1, 3, 4, 2]).prefix_balances(), vec![0, 1, 2, 1, 0]);
    }

    #[test]
    fn display_is_space_separated_codes() {
        assert_eq!(alloc::format!("{}", s(&[1, 3, 4, 2])), "1 3 4 2");
    }
}
