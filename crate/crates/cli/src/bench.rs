use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Args, ValueEnum};
use ramsey_core::evaluator::{choose_strategy, eval_ramsey, EvalError};
use ramsey_core::solvers::SolveError;
use ramsey_core::structures::{generate, Graph};

use crate::{parse_threshold, SolverArgs};

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Complete,
    Gnp,
    Planted,
    NearComplete,
}

#[derive(Args)]
pub struct BenchArgs {
    #[arg(long = "fn")]
    function: String,
    #[arg(long, value_enum, default_value = "gnp")]
    family: Family,
    #[arg(long, default_value_t = 1)]
    n_min: usize,
    #[arg(long)]
    n_max: usize,
    #[arg(long, default_value_t = 1)]
    step: usize,
    /// Instances per size (random families only)
    #[arg(long, default_value_t = 1)]
    trials: usize,
    /// Edge probability for gnp and planted
    #[arg(long, default_value_t = 0.5)]
    p: f64,
    /// Removed edges for near-complete
    #[arg(long, default_value_t = 4)]
    missing: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// CSV destination; stdout when absent
    #[arg(long)]
    out: Option<PathBuf>,
    #[command(flatten)]
    solver: SolverArgs,
}

const HEADER: [&str; 10] = ["fn", "n", "k", "strategy", "outcome", "wall_us", "subsets", "nodes", "branches", "seed"];

pub fn run(args: &BenchArgs) -> Result<ExitCode> {
    if args.step == 0 || args.n_min == 0 || args.n_min > args.n_max {
        bail!("need 1 <= n-min <= n-max and step >= 1");
    }
    let f = parse_threshold(&args.function)?;
    let config = args.solver.config();
    let sink: Box<dyn Write> = match &args.out {
        Some(path) => Box::new(File::create(path).with_context(|| format!("creating {}", path.display()))?),
        None => Box::new(io::stdout().lock()),
    };
    let mut csv = csv::Writer::from_writer(sink);
    csv.write_record(HEADER)?;
    let trials = match args.family {
        Family::Complete => 1,
        _ => args.trials,
    };
    for n in (args.n_min..=args.n_max).step_by(args.step) {
        for trial in 0..trials {
            // one seed per (n, trial) so rows are reproducible individually
            let seed = args.seed.wrapping_mul(1_000_003).wrapping_add((n * 1000 + trial) as u64);
            let g = instance(args, n, seed);
            let start = Instant::now();
            let result = eval_ramsey(&g, &f, &config);
            let wall_us = start.elapsed().as_micros();
            let k = f.eval(n as u64)?;
            let (strategy, outcome, stats) = match result {
                Ok(e) => (e.strategy.kind, e.outcome().to_string(), e.certificate.stats),
                Err(EvalError::Solve(SolveError::BudgetExhausted { stats })) => {
                    let kind = choose_strategy(n, k.min(n as u128 + 1) as usize, &config).kind;
                    (kind, "budget-exhausted".to_string(), stats)
                }
                Err(e) => return Err(e.into()),
            };
            csv.write_record([
                f.source().to_string(),
                n.to_string(),
                k.to_string(),
                strategy.to_string(),
                outcome,
                wall_us.to_string(),
                stats.subsets.to_string(),
                stats.nodes.to_string(),
                stats.branches.to_string(),
                seed.to_string(),
            ])?;
        }
    }
    csv.flush()?;
    Ok(ExitCode::SUCCESS)
}

fn instance(args: &BenchArgs, n: usize, seed: u64) -> Graph {
    let mut rng = generate::rng(seed);
    match args.family {
        Family::Complete => Graph::complete(n),
        Family::Gnp => generate::gnp(n, args.p, &mut rng),
        Family::Planted => generate::planted_clique(n, args.p, n.div_ceil(2), &mut rng).0,
        Family::NearComplete => generate::near_complete(n, args.missing, &mut rng),
    }
}
