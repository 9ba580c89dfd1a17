//! Instance corpora shared by the validation suites and the acceptance tests.

use dyck_core::generate::{corrupt, gen_balanced, CorruptMode};
use dyck_core::{classical_check, BracketString, DyckParams, Result, Verdict};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A word with the parameters it is judged under and its reference verdict.
#[derive(Debug, Clone)]
pub struct Instance {
    pub word: BracketString,
    pub params: DyckParams,
    pub expected: Verdict,
}

impl Instance {
    pub fn new(word: BracketString, k: usize, t: u32) -> Result<Self> {
        let params = DyckParams::for_input(k, t, &word)?;
        let expected = classical_check(&word, &params);
        Ok(Instance {
            word,
            params,
            expected,
        })
    }
}

/// All code sequences of length `0..=max_len` over `types` bracket types, in
/// length-then-lexicographic order.
pub fn all_words(max_len: usize, types: u32) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    let mut layer: Vec<Vec<u32>> = vec![Vec::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w| {
                (1..=2 * types).map(move |c| {
                    let mut x = w.clone();
                    x.push(c);
                    x
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

/// [`all_words`] as instances under `(k, t)`.
pub fn exhaustive(max_len: usize, types: u32, k: usize, t: u32) -> Vec<Instance> {
    all_words(max_len, types)
        .into_iter()
        .map(|w| {
            let word = BracketString::new(&w, types).expect("codes within alphabet");
            Instance::new(word, k, t).expect("valid parameters")
        })
        .collect()
}

/// Seeded mix of generated and corrupted instances with even `n ≤ max_n`,
/// `k ≤ 4` and `t ≤ 4`. Every other instance is corrupted with a randomly
/// chosen mode; modes that cannot apply fall back to the next one.
pub fn fixtures(count: usize, max_n: usize, seed: u64) -> Vec<Instance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let n = 2 * rng.random_range(1..=max_n / 2);
            let k = rng.random_range(1..=4);
            let t = rng.random_range(1..=4);
            let word_seed = rng.random();
            let valid = gen_balanced(n, k, t, word_seed).expect("valid generator input");
            if i % 2 == 0 {
                return Instance::new(valid, k, t).expect("valid parameters");
            }
            let p = DyckParams::new(k, t, n).expect("valid parameters");
            let first = rng.random_range(0..CorruptMode::ALL.len());
            let broken = (0..CorruptMode::ALL.len())
                .map(|j| CorruptMode::ALL[(first + j) % CorruptMode::ALL.len()])
                .find_map(|mode| corrupt(&valid, mode, &p, word_seed).ok())
                .expect("some corruption applies");
            Instance::new(broken, k, t).expect("valid parameters")
        })
        .collect()
}
