//! Query-count sweeps over generated instances, emitted as CSV.

use std::io::Write;
use std::time::Instant;

use anyhow::{ensure, Result};
use dyck_core::generate::gen_balanced;
use dyck_core::{classical_check, solve, DyckParams, QuerySim, SolverOptions, Stage, SubroutineModel};
use rayon::prelude::*;
use serde::Serialize;

/// One solver run. Field order is the CSV column order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BenchRecord {
    pub n: usize,
    pub k: usize,
    pub t: u32,
    pub seed: u64,
    pub verdict: u8,
    pub expected: u8,
    pub queries_total: u64,
    pub queries_step1: u64,
    pub queries_step2: u64,
    pub queries_step3: u64,
    pub wall_ms: u64,
}

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub n_min: usize,
    pub n_max: usize,
    pub k: usize,
    pub t: u32,
    pub trials: usize,
    pub seed: u64,
    pub model: SubroutineModel,
    pub options: SolverOptions,
    /// Record elapsed time; off by default so output depends only on the seed.
    pub wall_clock: bool,
}

/// Powers of two from `n_min` to `n_max`.
pub fn sizes(n_min: usize, n_max: usize) -> Result<Vec<usize>> {
    ensure!(
        n_min >= 2 && n_min.is_power_of_two() && n_max.is_power_of_two(),
        "n range bounds must be powers of two, at least 2"
    );
    ensure!(n_min <= n_max, "n-min exceeds n-max");
    Ok(std::iter::successors(Some(n_min), |&n| (n < n_max).then_some(2 * n)).collect())
}

/// Seed of trial `trial` at size `n`; also seeds that run's simulator.
pub fn instance_seed(seed: u64, n: usize, trial: usize) -> u64 {
    seed ^ ((n as u64) << 32) ^ trial as u64
}

/// Runs a single solve on `gen_balanced(n, k, t, instance_seed)`.
pub fn run_one(cfg: &BenchConfig, n: usize, trial: usize) -> Result<BenchRecord> {
    let seed = instance_seed(cfg.seed, n, trial);
    let word = gen_balanced(n, cfg.k, cfg.t, seed)?;
    let params = DyckParams::new(cfg.k, cfg.t, n)?;
    let mut sim = QuerySim::new(cfg.model.with_seed(seed));
    let start = Instant::now();
    let verdict = solve(&mut sim, &word, &params, &cfg.options);
    let elapsed = start.elapsed().as_millis() as u64;
    let ledger = sim.ledger;
    Ok(BenchRecord {
        n,
        k: cfg.k,
        t: cfg.t,
        seed,
        verdict: verdict.bit(),
        expected: classical_check(&word, &params).bit(),
        queries_total: ledger.total(),
        queries_step1: ledger.get(Stage::Step1),
        queries_step2: ledger.get(Stage::Step2),
        queries_step3: ledger.get(Stage::Step3),
        wall_ms: if cfg.wall_clock { elapsed } else { 0 },
    })
}

/// All `(n, trial)` rows, sorted by `n` then trial. Trials run in parallel.
pub fn run(cfg: &BenchConfig) -> Result<Vec<BenchRecord>> {
    ensure!(cfg.trials >= 1, "trials must be at least 1");
    cfg.model.validate()?;
    let jobs: Vec<(usize, usize)> = sizes(cfg.n_min, cfg.n_max)?
        .into_iter()
        .flat_map(|n| (0..cfg.trials).map(move |trial| (n, trial)))
        .collect();
    jobs.into_par_iter()
        .map(|(n, trial)| run_one(cfg, n, trial))
        .collect()
}

pub fn write_csv(rows: &[BenchRecord], out: impl Write) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config() -> BenchConfig {
        BenchConfig {
            n_min: 16,
            n_max: 64,
            k: 2,
            t: 2,
            trials: 3,
            seed: 5,
            model: SubroutineModel::default(),
            options: SolverOptions::default(),
            wall_clock: false,
        }
    }

    #[test]
    fn size_ranges() {
        assert_eq!(sizes(1024, 4096).unwrap(), [1024, 2048, 4096]);
        assert_eq!(sizes(8, 8).unwrap(), [8]);
        assert!(sizes(12, 64).is_err());
        assert!(sizes(64, 16).is_err());
    }

    #[test]
    fn rows_are_ordered_and_conserved() {
        let rows = run(&config()).unwrap();
        assert_eq!(rows.len(), 9);
        let keys: Vec<usize> = rows.iter().map(|r| r.n).collect();
        assert_eq!(keys, [16, 16, 16, 32, 32, 32, 64, 64, 64]);
        for r in &rows {
            assert_eq!(r.queries_total, r.queries_step1 + r.queries_step2 + r.queries_step3);
            assert_eq!((r.verdict, r.expected), (1, 1));
        }
    }

    #[test]
    fn csv_header() {
        let mut buf = Vec::new();
        write_csv(&run(&config()).unwrap(), &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(
            text.lines().next().unwrap(),
            "n,k,t,seed,verdict,expected,queries_total,queries_step1,queries_step2,queries_step3,wall_ms"
        );
        assert_eq!(text.lines().count(), 10);
    }
}
