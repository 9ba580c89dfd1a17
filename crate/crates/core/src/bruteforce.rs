//! Exhaustive reference oracles for ±v-substring search and for the
//! structure of prefix-minimal 0-substrings.
//!
//! Everything here is deliberately naive (quadratic or worse); these functions
//! define the exact semantics that the ledgered subroutines are tested against.

use alloc::vec::Vec;

use crate::error::{DyckError, Result};
use crate::model::{is_well_balanced, BracketString};

/// Sign of a ±v-substring's balance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn of(balance: i64) -> Self {
        if balance >= 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// A ±v-substring `S[i, j]` with `sign(f(S[i, j])) = sigma`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SubstringWitness {
    pub i: usize,
    pub j: usize,
    pub sigma: Sign,
}

fn check_search_args(s: &BracketString, l: usize, r: usize, v: usize, d: usize) -> Result<()> {
    if l == 0 || l > r || r > s.len() {
        return Err(DyckError::IndexOutOfRange { l, r, n: s.len() });
    }
    if v == 0 || d == 0 {
        return Err(DyckError::argument("v and d must be at least 1"));
    }
    Ok(())
}

/// Leftmost ±v-substring of length at most `d` inside `S[l, r]`: the one whose
/// end `j` is smallest, and among those the shortest (largest `i`). The result
/// is always a minimal ±v-substring.
pub fn bf_leftmost_pmv(
    s: &BracketString,
    l: usize,
    r: usize,
    v: usize,
    d: usize,
) -> Result<Option<SubstringWitness>> {
    check_search_args(s, l, r, v, d)?;
    let p = s.prefix_balances();
    let v = v as i64;
    for j in l..=r {
        let lo = l.max((j + 1).saturating_sub(d));
        for i in (lo..=j).rev() {
            let f = p[j] - p[i - 1];
            if f.abs() == v {
                return Ok(Some(SubstringWitness { i, j, sigma: Sign::of(f) }));
            }
        }
    }
    Ok(None)
}

/// Mirror of [`bf_leftmost_pmv`]: largest start `i`, then the shortest
/// (smallest `j`).
pub fn bf_rightmost_pmv(
    s: &BracketString,
    l: usize,
    r: usize,
    v: usize,
    d: usize,
) -> Result<Option<SubstringWitness>> {
    check_search_args(s, l, r, v, d)?;
    let p = s.prefix_balances();
    let v = v as i64;
    for i in (l..=r).rev() {
        let hi = r.min(i + d - 1);
        for j in i..=hi {
            let f = p[j] - p[i - 1];
            if f.abs() == v {
                return Ok(Some(SubstringWitness { i, j, sigma: Sign::of(f) }));
            }
        }
    }
    Ok(None)
}

/// All prefix-minimal 0-substrings `S[l, r]` with `h(S[l, r]) = v`, ordered by
/// `l`. Each start has at most one prefix-minimal 0-substring: the first return
/// to balance zero.
pub fn bf_prefix_minimal_zero(s: &BracketString, v: usize) -> Vec<(usize, usize)> {
    let n = s.len();
    let mut out = Vec::new();
    for l in 1..=n {
        let mut acc = 0i64;
        let mut peak = i64::MIN;
        for r in l..=n {
            acc += s.at(r).step();
            peak = peak.max(acc);
            if acc == 0 {
                if peak == v as i64 {
                    out.push((l, r));
                }
                break;
            }
        }
    }
    out
}

/// Leftmost prefix-minimal 0-substring of height `v` whose end brackets have
/// different types.
pub fn bf_find_wrong(s: &BracketString, v: usize) -> Option<(usize, usize)> {
    bf_prefix_minimal_zero(s, v)
        .into_iter()
        .find(|&(l, r)| s.at(l).type_id() != s.at(r).type_id())
}

fn has_pmv_inside(p: &[i64], a: usize, b: usize, v: i64) -> bool {
    // any S[x, y] with a ≤ x ≤ y ≤ b and |f| = v
    (a..=b).any(|x| (x..=b).any(|y| (p[y] - p[x - 1]).abs() == v))
}

/// For the prefix-minimal 0-substring `S[l, r]` of height `v`, searches for
/// `l ≤ r' < l' ≤ r` with `f(S[l, r']) = +v`, `f(S[l', r]) = −v` and no
/// ±v-substring inside `S[r' + 1, l' − 1]`. Returns the first pair found.
pub fn structure_witness(
    s: &BracketString,
    l: usize,
    r: usize,
    v: usize,
) -> Option<(usize, usize)> {
    let p = s.prefix_balances();
    let v = v as i64;
    for rp in l..r {
        if p[rp] - p[l - 1] != v {
            continue;
        }
        for lp in rp + 1..=r {
            if p[r] - p[lp - 1] != -v {
                continue;
            }
            if lp == rp + 1 || !has_pmv_inside(&p, rp + 1, lp - 1, v) {
                return Some((rp, lp));
            }
        }
    }
    None
}

/// Whether every prefix-minimal 0-substring of height `v` admits a
/// [`structure_witness`].
pub fn verify_structure_lemma(s: &BracketString, v: usize) -> bool {
    bf_prefix_minimal_zero(s, v)
        .into_iter()
        .all(|(l, r)| structure_witness(s, l, r, v).is_some())
}

/// All 0-substrings (not only prefix-minimal ones) with height exactly `h`.
pub fn zero_substrings_of_height(s: &BracketString, h: i64) -> Vec<(usize, usize)> {
    let n = s.len();
    let mut out = Vec::new();
    for l in 1..=n {
        let mut acc = 0i64;
        let mut peak = i64::MIN;
        for r in l..=n {
            acc += s.at(r).step();
            peak = peak.max(acc);
            if acc == 0 && peak == h {
                out.push((l, r));
            }
        }
    }
    out
}

/// Interior lemma for one height: if every 0-substring of height `v − 1` is
/// well-balanced, then every prefix-minimal 0-substring of height `v` has an
/// empty or well-balanced interior. Vacuously true when the premise fails.
pub fn verify_interior_lemma(s: &BracketString, v: usize) -> bool {
    let syms = s.symbols();
    let premise = zero_substrings_of_height(s, v as i64 - 1)
        .into_iter()
        .all(|(l, r)| is_well_balanced(&syms[l - 1..r]));
    if !premise {
        return true;
    }
    bf_prefix_minimal_zero(s, v)
        .into_iter()
        .all(|(l, r)| r == l + 1 || is_well_balanced(&syms[l..r - 1]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(codes: &[u32]) -> BracketString {
        BracketString::from_codes(codes).unwrap()
    }

    fn w(i: usize, j: usize, sign: i8) -> Option<SubstringWitness> {
        Some(SubstringWitness {
            i,
            j,
            sigma: if sign > 0 { Sign::Plus } else { Sign::Minus },
        })
    }

    #[test]
    fn leftmost_examples() {
        let x = s(&[1, 3, 4, 4]);
        assert_eq!(bf_leftmost_pmv(&x, 1, 4, 2, 2).unwrap(), w(1, 2, 1));
        assert_eq!(bf_leftmost_pmv(&x, 3, 4, 2, 2).unwrap(), w(3, 4, -1));
        assert_eq!(bf_leftmost_pmv(&s(&[3, 4]), 1, 2, 2, 2).unwrap(), None);
    }

    #[test]
    fn rightmost_examples() {
        assert_eq!(bf_rightmost_pmv(&s(&[1, 3, 4, 4]), 1, 2, 2, 2).unwrap(), w(1, 2, 1));
        assert_eq!(bf_rightmost_pmv(&s(&[1, 1, 2, 2]), 1, 4, 2, 4).unwrap(), w(3, 4, -1));
        assert_eq!(bf_rightmost_pmv(&s(&[1, 2]), 1, 2, 3, 2).unwrap(), None);
    }

    #[test]
    fn leftmost_prefers_earliest_end() {
        // [ ] ] ] ] : S[1, 5] starts first but contains the shorter S[2, 4]
        let x = s(&[1, 2, 2, 2, 2]);
        assert_eq!(bf_leftmost_pmv(&x, 1, 5, 3, 5).unwrap(), w(2, 4, -1));
        // mirrored: [ [ [ [ ]
        let y = s(&[1, 1, 1, 1, 2]);
        assert_eq!(bf_rightmost_pmv(&y, 1, 5, 3, 5).unwrap(), w(2, 4, 1));
    }

    #[test]
    fn search_argument_errors() {
        let x = s(&[1, 2]);
        assert!(bf_leftmost_pmv(&x, 0, 2, 1, 1).is_err());
        assert!(bf_leftmost_pmv(&x, 2, 1, 1, 1).is_err());
        assert!(bf_rightmost_pmv(&x, 1, 3, 1, 1).is_err());
        assert!(bf_rightmost_pmv(&x, 1, 2, 0, 1).is_err());
        assert!(bf_rightmost_pmv(&x, 1, 2, 1, 0).is_err());
    }

    #[test]
    fn prefix_minimal_examples() {
        let x = s(&[1, 3, 4, 2]);
        assert_eq!(bf_prefix_minimal_zero(&x, 2), [(1, 4)]);
        assert_eq!(bf_prefix_minimal_zero(&x, 1), [(2, 3)]);
        assert!(bf_prefix_minimal_zero(&s(&[1, 2]), 2).is_empty());
    }

    #[test]
    fn find_wrong_examples() {
        assert_eq!(bf_find_wrong(&s(&[1, 3, 4, 4]), 2), Some((1, 4)));
        assert_eq!(bf_find_wrong(&s(&[1, 3, 2, 4]), 1), Some((2, 3)));
        for v in 1..=3 {
            assert_eq!(bf_find_wrong(&s(&[1, 3, 4, 2]), v), None);
        }
    }

    #[test]
    fn structure_lemma_examples() {
        let x = s(&[1, 3, 4, 2]);
        assert_eq!(structure_witness(&x, 1, 4, 2), Some((2, 3)));
        assert!(verify_structure_lemma(&x, 2));
        assert!(verify_structure_lemma(&s(&[1, 1, 2, 2]), 2));
        assert_eq!(structure_witness(&s(&[3, 4]), 1, 2, 1), Some((1, 2)));
    }

    #[test]
    fn interior_lemma_examples() {
        assert!(verify_interior_lemma(&s(&[1, 3, 4, 2]), 2));
        // premise holds (no mismatched height-1 zero substring), interior "( )"
        assert!(verify_interior_lemma(&s(&[1, 3, 4, 4]), 2));
    }
}
