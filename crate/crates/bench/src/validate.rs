//! Invariant suites behind `dyck validate`.

use std::fmt;

use dyck_core::bruteforce::{verify_interior_lemma, verify_structure_lemma};
use dyck_core::query::{statevector_grover, success_probability};
use dyck_core::{solve_boosted, BracketString, SolverOptions, SubroutineModel};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::corpus::{all_words, exhaustive, fixtures, Instance};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Lemmas,
    Grover,
    E2e,
    All,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub passed: usize,
    pub failed: usize,
    pub detail: String,
}

impl SuiteReport {
    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<8} {:>8} {:>8}  {}  {}",
            self.name,
            self.passed,
            self.failed,
            if self.ok() { "PASS" } else { "FAIL" },
            self.detail
        )
    }
}

/// Both structural lemmas for every height `1..=n/2`, on every word of length
/// `≤ exhaustive_len` over two types and on `random` words of length
/// `1..=random_len`. One check per word.
pub fn lemmas(exhaustive_len: usize, random: usize, random_len: usize, seed: u64) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut words = all_words(exhaustive_len, 2);
    words.extend((0..random).map(|_| {
        let n = rng.random_range(1..=random_len);
        (0..n).map(|_| rng.random_range(1..=4)).collect()
    }));
    let failures: Vec<Vec<u32>> = words
        .par_iter()
        .filter(|w| {
            let s = BracketString::new(w, 2).expect("codes within alphabet");
            !(1..=w.len() / 2).all(|v| verify_interior_lemma(&s, v) && verify_structure_lemma(&s, v))
        })
        .cloned()
        .collect();
    SuiteReport {
        name: "lemmas",
        passed: words.len() - failures.len(),
        failed: failures.len(),
        detail: match failures.first() {
            Some(w) => format!("first counterexample {w:?}"),
            None => format!("{} words", words.len()),
        },
    }
}

/// Largest deviation between the statevector and the closed form on one grid
/// cell set: `N = 2, 4, …, max_n`, `1..=3` marked, `j ≤ 2√N`.
pub fn grover_max_error(max_n: usize) -> (f64, usize) {
    let mut worst = 0.0f64;
    let mut cells = 0;
    let mut n = 2;
    while n <= max_n {
        for m in 1..=3usize.min(n) {
            // spread over the domain; only the count matters to the dynamics
            let marked: Vec<usize> = (1..=m).map(|x| x * n / (m + 1) + 1).collect();
            let jmax = (2.0 * (n as f64).sqrt()).floor() as usize;
            for j in 0..=jmax {
                let sv = statevector_grover(n, &marked, j).expect("valid grid cell");
                let cf = success_probability(n as u64, m as u64, j as u64);
                worst = worst.max((sv - cf).abs());
                cells += 1;
            }
        }
        n *= 2;
    }
    (worst, cells)
}

pub fn grover(tolerance: f64) -> SuiteReport {
    let (worst, cells) = grover_max_error(1024);
    let ok = worst <= tolerance;
    SuiteReport {
        name: "grover",
        passed: if ok { cells } else { 0 },
        failed: if ok { 0 } else { cells },
        detail: format!("max |statevector - sin^2| = {worst:.3e} over {cells} cells"),
    }
}

/// Fraction of `instances` on which the boosted solver's majority verdict
/// matches the reference, and the first mismatch.
pub fn agreement(
    instances: &[Instance],
    model: &SubroutineModel,
    options: &SolverOptions,
    reps: usize,
) -> (usize, Option<usize>) {
    let hits: Vec<bool> = instances
        .par_iter()
        .enumerate()
        .map(|(i, x)| {
            let m = model.with_seed(model.rng_seed ^ (i as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
            solve_boosted(&x.word, &x.params, &m, options, reps)
                .map(|r| r.verdict == x.expected)
                .unwrap_or(false)
        })
        .collect();
    (hits.iter().filter(|&&h| h).count(), hits.iter().position(|&h| !h))
}

/// Boosted solver against the classical checker on every word of length
/// `≤ 6` over two types (`k = 4`, `t = 2`) and on `count` seeded fixtures.
pub fn e2e(count: usize, model: &SubroutineModel, options: &SolverOptions, reps: usize) -> SuiteReport {
    let mut instances = exhaustive(6, 2, 4, 2);
    instances.extend(fixtures(count, 256, model.rng_seed));
    let (agree, first_miss) = agreement(&instances, model, options, reps);
    SuiteReport {
        name: "e2e",
        passed: agree,
        failed: instances.len() - agree,
        detail: match first_miss {
            Some(i) => format!("first disagreement on `{}`", instances[i].word),
            None => format!("{} instances, reps {reps}", instances.len()),
        },
    }
}

pub fn run(suite: Suite, model: &SubroutineModel, options: &SolverOptions, reps: usize) -> Vec<SuiteReport> {
    let mut out = Vec::new();
    if matches!(suite, Suite::Lemmas | Suite::All) {
        out.push(lemmas(8, 10_000, 64, model.rng_seed));
    }
    if matches!(suite, Suite::Grover | Suite::All) {
        out.push(grover(1e-9));
    }
    if matches!(suite, Suite::E2e | Suite::All) {
        out.push(e2e(100, model, options, reps));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass() {
        assert!(lemmas(4, 50, 16, 1).ok());
        assert!(grover(1e-9).ok());
        let r = e2e(4, &SubroutineModel::default(), &SolverOptions::default(), 5);
        assert!(r.ok(), "{r}");
    }

    #[test]
    fn report_line() {
        let r = SuiteReport {
            name: "grover",
            passed: 3,
            failed: 0,
            detail: "x".into(),
        };
        assert!(r.to_string().contains("PASS"));
    }
}
