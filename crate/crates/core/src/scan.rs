//! Linear-time leftmost/rightmost ±v-substring search over prefix balances.
//!
//! Same results as [`crate::bruteforce::bf_leftmost_pmv`] and
//! [`crate::bruteforce::bf_rightmost_pmv`], but one sliding-window pass over the
//! range. Because prefix balances move in unit steps, a window of start
//! offsets contains one at distance exactly `v` from `P[j]` as soon as its
//! range of values reaches `P[j] ± v`.

use alloc::collections::VecDeque;

use crate::bruteforce::{Sign, SubstringWitness};

/// Sliding window extremum over prefix-balance indices.
struct Extremum<'a> {
    p: &'a [i64],
    idx: VecDeque<usize>,
    max: bool,
}

impl<'a> Extremum<'a> {
    fn new(p: &'a [i64], max: bool) -> Self {
        Extremum {
            p,
            idx: VecDeque::new(),
            max,
        }
    }

    fn beats(&self, a: usize, b: usize) -> bool {
        if self.max {
            self.p[a] >= self.p[b]
        } else {
            self.p[a] <= self.p[b]
        }
    }

    fn push_back(&mut self, x: usize) {
        while let Some(&last) = self.idx.back() {
            if self.beats(x, last) {
                self.idx.pop_back();
            } else {
                break;
            }
        }
        self.idx.push_back(x);
    }

    fn expire_front(&mut self, keep: impl Fn(usize) -> bool) {
        while let Some(&first) = self.idx.front() {
            if keep(first) {
                break;
            }
            self.idx.pop_front();
        }
    }

    fn value(&self) -> Option<i64> {
        self.idx.front().map(|&x| self.p[x])
    }
}

/// Leftmost minimal ±v-substring of length `≤ d` inside `S[l, r]`, given the
/// prefix balances `p` of the whole string. Requires `1 ≤ l ≤ r < p.len()`,
/// `v ≥ 1`, `d ≥ 1`.
pub fn leftmost_pmv(p: &[i64], l: usize, r: usize, v: usize, d: usize) -> Option<SubstringWitness> {
    debug_assert!(l >= 1 && l <= r && r < p.len() && v >= 1 && d >= 1);
    let v = v as i64;
    let mut hi = Extremum::new(p, true);
    let mut lo = Extremum::new(p, false);
    for j in l..=r {
        // start offsets x = i − 1 range over [max(l, j + 1 − d) − 1, j − 1]
        let first = l.max((j + 1).saturating_sub(d)) - 1;
        hi.push_back(j - 1);
        lo.push_back(j - 1);
        hi.expire_front(|x| x >= first);
        lo.expire_front(|x| x >= first);
        let target = p[j];
        let up = hi.value().is_some_and(|m| m >= target + v);
        let down = lo.value().is_some_and(|m| m <= target - v);
        if up || down {
            let x = (first..j)
                .rev()
                .find(|&x| (p[x] - target).abs() == v)
                .expect("unit steps guarantee an exact hit");
            return Some(SubstringWitness {
                i: x + 1,
                j,
                sigma: Sign::of(target - p[x]),
            });
        }
    }
    None
}

/// Rightmost minimal ±v-substring of length `≤ d` inside `S[l, r]`.
pub fn rightmost_pmv(p: &[i64], l: usize, r: usize, v: usize, d: usize) -> Option<SubstringWitness> {
    debug_assert!(l >= 1 && l <= r && r < p.len() && v >= 1 && d >= 1);
    let v = v as i64;
    let mut hi = Extremum::new(p, true);
    let mut lo = Extremum::new(p, false);
    for i in (l..=r).rev() {
        // end indices y range over [i, min(r, i + d − 1)]
        let last = r.min(i + d - 1);
        hi.push_back(i);
        lo.push_back(i);
        hi.expire_front(|y| y <= last);
        lo.expire_front(|y| y <= last);
        let base = p[i - 1];
        let up = hi.value().is_some_and(|m| m >= base + v);
        let down = lo.value().is_some_and(|m| m <= base - v);
        if up || down {
            let y = (i..=last)
                .find(|&y| (p[y] - base).abs() == v)
                .expect("unit steps guarantee an exact hit");
            return Some(SubstringWitness {
                i,
                j: y,
                sigma: Sign::of(p[y] - base),
            });
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bruteforce::{bf_leftmost_pmv, bf_rightmost_pmv};
    use crate::model::BracketString;
    use alloc::vec::Vec;
    use proptest::prelude::*;

    fn word() -> impl Strategy<Value = BracketString> {
        prop::collection::vec(1u32..=4, 1..96)
            .prop_map(|codes| BracketString::new(&codes, 2).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(2000))]

        #[test]
        fn matches_bruteforce(
            s in word(),
            a in 0usize..96,
            b in 0usize..96,
            v in 1usize..6,
            d in 1usize..40,
        ) {
            let n = s.len();
            let (l, r) = {
                let x = a % n + 1;
                let y = b % n + 1;
                (x.min(y), x.max(y))
            };
            let p = s.prefix_balances();
            prop_assert_eq!(leftmost_pmv(&p, l, r, v, d), bf_leftmost_pmv(&s, l, r, v, d).unwrap());
            prop_assert_eq!(rightmost_pmv(&p, l, r, v, d), bf_rightmost_pmv(&s, l, r, v, d).unwrap());
        }
    }

    #[test]
    fn single_symbol_windows() {
        let s = BracketString::from_codes(&[1, 2]).unwrap();
        let p: Vec<i64> = s.prefix_balances();
        let hit = leftmost_pmv(&p, 2, 2, 1, 1).unwrap();
        assert_eq!((hit.i, hit.j, hit.sigma), (2, 2, Sign::Minus));
        assert_eq!(rightmost_pmv(&p, 1, 2, 2, 2), None);
    }
}
