use std::fs;
use std::io::{self, Read};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use dyck_bench::bench::{self, BenchConfig};
use dyck_bench::format::parse_instance;
use dyck_bench::validate::{self, Suite};
use dyck_core::generate::{corrupt, gen_balanced, CorruptMode};
use dyck_core::{solve_boosted, DyckParams, SolverOptions, Stage, Step1Mode, SubroutineModel};

/// Ledgered quantum-query simulation of a Dyck language recognizer.
#[derive(Debug, Parser)]
#[command(name = "dyck", version)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Global {
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Independent solver runs per verdict (odd).
    #[arg(long, global = true, default_value_t = 15)]
    reps: usize,
    /// Error rate of the idealized subroutines.
    #[arg(long, global = true, default_value_t = 0.0)]
    epsilon_inject: f64,
    /// Type-count check: `bounded` or `general`.
    #[arg(long, global = true, default_value = "bounded")]
    step1_mode: Step1Mode,
    #[arg(long, global = true, default_value_t = 2.25)]
    c_grover: f64,
    #[arg(long, global = true, default_value_t = std::f64::consts::FRAC_PI_4)]
    c_aa: f64,
    #[arg(long, global = true, default_value_t = 9.0)]
    grover_cap_factor: f64,
    /// Skip the balanced-interior check on reported pairs.
    #[arg(long, global = true)]
    no_zero_guard: bool,
    /// Record elapsed time in bench output (makes it nondeterministic).
    #[arg(long, global = true)]
    wall_clock: bool,
}

impl Global {
    fn model(&self) -> Result<SubroutineModel> {
        let model = SubroutineModel {
            epsilon_inject: self.epsilon_inject,
            c_grover: self.c_grover,
            c_aa: self.c_aa,
            grover_cap_factor: self.grover_cap_factor,
            rng_seed: self.seed,
        };
        model.validate()?;
        Ok(model)
    }

    fn options(&self) -> SolverOptions {
        SolverOptions {
            step1: self.step1_mode,
            zero_guard: !self.no_zero_guard,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide membership of one instance; exit 0 on accept, 2 on reject.
    Solve {
        /// Instance file, or `-` for standard input.
        input: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        t: u32,
    },
    /// Print a random well-balanced instance, optionally corrupted.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        t: u32,
        /// type-swap, balance-break, height-exceed or code-overflow.
        #[arg(long)]
        corrupt: Option<CorruptMode>,
    },
    /// Write a CSV of query counts over a range of sizes.
    Bench {
        #[arg(long)]
        n_min: usize,
        #[arg(long)]
        n_max: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        t: u32,
        #[arg(long, default_value_t = 10)]
        trials: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run an invariant suite; exit 0 iff every check passes.
    Validate {
        #[arg(long, value_enum)]
        suite: Suite,
    },
}

fn read_input(path: &PathBuf) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text)?;
        return Ok(text);
    }
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn run(cli: Cli) -> Result<ExitCode> {
    let g = &cli.global;
    match &cli.command {
        Command::Solve { input, k, t } => {
            let word = parse_instance(&read_input(input)?)
                .with_context(|| format!("cannot parse {}", input.display()))?;
            let params = DyckParams::for_input(*k, *t, &word)?;
            let run = solve_boosted(&word, &params, &g.model()?, &g.options(), g.reps)?;
            let l = run.ledger;
            println!("verdict {}", run.verdict.bit());
            println!(
                "queries {} (step1 {}, step2 {}, step3 {})",
                l.total(),
                l.get(Stage::Step1),
                l.get(Stage::Step2),
                l.get(Stage::Step3)
            );
            println!("votes {}/{} accept", run.accepts, run.reps);
            Ok(if run.verdict.is_accept() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            })
        }
        Command::Gen { n, k, t, corrupt: mode } => {
            let word = gen_balanced(*n, *k, *t, g.seed)?;
            let word = match mode {
                Some(mode) => corrupt(&word, *mode, &DyckParams::new(*k, *t, *n)?, g.seed)?,
                None => word,
            };
            println!("{word}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Bench {
            n_min,
            n_max,
            k,
            t,
            trials,
            out,
        } => {
            let cfg = BenchConfig {
                n_min: *n_min,
                n_max: *n_max,
                k: *k,
                t: *t,
                trials: *trials,
                seed: g.seed,
                model: g.model()?,
                options: g.options(),
                wall_clock: g.wall_clock,
            };
            let rows = bench::run(&cfg)?;
            let file = fs::File::create(out).with_context(|| format!("cannot write {}", out.display()))?;
            bench::write_csv(&rows, io::BufWriter::new(file))?;
            eprintln!("wrote {} rows to {}", rows.len(), out.display());
            Ok(ExitCode::SUCCESS)
        }
        Command::Validate { suite } => {
            if g.reps.is_multiple_of(2) {
                bail!("reps must be odd");
            }
            let reports = validate::run(*suite, &g.model()?, &g.options(), g.reps);
            println!("{:<8} {:>8} {:>8}", "suite", "passed", "failed");
            for r in &reports {
                println!("{r}");
            }
            Ok(if reports.iter().all(|r| r.ok()) {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
