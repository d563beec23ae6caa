//! `ramsey`: evaluate, classify and transform Ramsey-quantifier instances.
//!
//! Exit codes: 0 true / success, 1 false, 2 error, 3 oracle-check failure.

mod bench;
mod check;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use ramsey_core::evaluator::{eval_ramsey, EvalConfig, StrategyKind};
use ramsey_core::reductions::{
    embed_kclique_linear, embed_kclique_sublinear, pad_instance, probe_function, ReductionOutput,
};
use ramsey_core::solvers::SolveError;
use ramsey_core::structures::{generate, save_graph};
use ramsey_core::threshold::{classify, dichotomy_verdict, Certainty, Threshold};

use crate::input::{Instance, InstanceArgs};

#[derive(Parser)]
#[command(name = "ramsey", version, about = "Model checking for Ramsey quantifiers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether the instance has a homogeneous set of size f(n)
    Eval(EvalArgs),
    /// Place f in the four-case classification and report the verdict
    Classify {
        #[arg(long = "fn")]
        function: String,
    },
    /// Transform an instance with one of the padding constructions
    Reduce {
        #[command(subcommand)]
        kind: ReduceKind,
    },
    /// Recover f(n) using only membership queries
    Probe {
        #[arg(long = "fn")]
        function: String,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        solver: SolverArgs,
    },
    /// Compare the evaluator and every engine with brute force on random graphs
    OracleCheck(check::CheckArgs),
    /// Time the evaluator over a graph family and emit CSV
    Bench(bench::BenchArgs),
    /// Write a random or structured graph in DIMACS format
    Gen(GenArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum StrategyArg {
    Auto,
    Enum,
    Vc,
    Bnb,
    Oracle,
}

#[derive(Args, Clone)]
struct SolverArgs {
    #[arg(long, value_enum, default_value = "auto")]
    strategy: StrategyArg,
    /// Time budget for branch-and-bound, in milliseconds
    #[arg(long)]
    budget_ms: Option<u64>,
    /// Enumerate when f(n) <= c-small
    #[arg(long, default_value_t = 4)]
    c_small: usize,
    /// Vertex cover when n - f(n) <= c-log * ceil(log2 n)
    #[arg(long, default_value_t = 2)]
    c_log: usize,
}

impl SolverArgs {
    fn config(&self) -> EvalConfig {
        EvalConfig {
            c_small: self.c_small,
            c_log: self.c_log,
            force: match self.strategy {
                StrategyArg::Auto => None,
                StrategyArg::Enum => Some(StrategyKind::EnumerateSmall),
                StrategyArg::Vc => Some(StrategyKind::VertexCoverNearN),
                StrategyArg::Bnb => Some(StrategyKind::BranchAndBound),
                StrategyArg::Oracle => Some(StrategyKind::Oracle),
            },
            budget: self.budget_ms.map(Duration::from_millis),
        }
    }
}

#[derive(Args)]
struct EvalArgs {
    #[command(flatten)]
    instance: InstanceArgs,
    #[arg(long = "fn")]
    function: String,
    /// Print the homogeneous set found
    #[arg(long)]
    witness: bool,
    #[command(flatten)]
    solver: SolverArgs,
}

#[derive(Subcommand)]
enum ReduceKind {
    /// Add universal vertices until f(n') <= b'
    Pad(ReduceArgs),
    /// Embed a k-clique question into R_f for unbounded sublinear f
    Sublinear(ReduceArgs),
    /// Embed an m-clique question into R_f for linear f far from n
    Linear(ReduceArgs),
}

#[derive(Args)]
struct ReduceArgs {
    #[command(flatten)]
    instance: InstanceArgs,
    #[arg(long = "fn")]
    function: String,
    /// Clique size b, k or m of the input question
    #[arg(long)]
    target: u64,
    /// Output DIMACS file; parameters go to <out>.params
    #[arg(long)]
    out: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Gnp,
    Planted,
    Complete,
    Cycle,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long = "model", value_enum)]
    family: Family,
    #[arg(long)]
    n: usize,
    /// Edge probability
    #[arg(long, default_value_t = 0.5)]
    p: f64,
    /// Planted clique size
    #[arg(long, default_value_t = 0)]
    k: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: PathBuf,
}

fn parse_threshold(src: &str) -> Result<Threshold> {
    let f = Threshold::parse(src).with_context(|| format!("cannot parse threshold {src:?}"))?;
    f.validate().with_context(|| format!("threshold {src:?} rejected"))?;
    Ok(f)
}

fn cmd_eval(args: &EvalArgs) -> Result<ExitCode> {
    let f = parse_threshold(&args.function)?;
    let instance = Instance::load(&args.instance)?;
    let g = &instance.graph;
    let evaluation = match eval_ramsey(g, &f, &args.solver.config()) {
        Err(ramsey_core::evaluator::EvalError::Solve(SolveError::BudgetExhausted { stats })) => {
            println!("RESULT unknown");
            println!("stats subsets={} nodes={} branches={}", stats.subsets, stats.nodes, stats.branches);
            bail!("time budget exhausted before a decision");
        }
        other => other?,
    };
    let c = &evaluation.certificate;
    println!("RESULT {}", c.outcome);
    println!("n {}", g.size());
    println!("f(n) {}", evaluation.threshold);
    println!("strategy {}", evaluation.strategy.kind);
    println!("engine {}", c.engine);
    println!("stats subsets={} nodes={} branches={}", c.stats.subsets, c.stats.nodes, c.stats.branches);
    if args.witness {
        if let Some(w) = &c.witness {
            let ids: Vec<String> = w.iter().map(|&v| instance.external_id(v).to_string()).collect();
            println!("witness {}", ids.join(" "));
        }
    }
    Ok(if c.outcome { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn cmd_classify(src: &str) -> Result<ExitCode> {
    let f = Threshold::parse(src).with_context(|| format!("cannot parse threshold {src:?}"))?;
    let validation = f.validate().with_context(|| format!("threshold {src:?} rejected"))?;
    let class = classify(&f)?;
    let verdict = dichotomy_verdict(&class);
    println!("function {f}");
    println!("case {}", class.case);
    match class.certainty {
        Certainty::Proved => println!("certainty proved"),
        Certainty::Empirical { horizon } => println!("certainty empirical up to n={horizon}"),
    }
    if validation.max_dip > 0 {
        if let Some((m, n)) = validation.dip_at {
            println!("note f dips by up to {} below earlier values (first at n={m}..{n})", validation.max_dip);
        }
    }
    println!("verdict {verdict}");
    Ok(ExitCode::SUCCESS)
}

fn cmd_reduce(kind: &ReduceKind) -> Result<ExitCode> {
    let (args, run): (&ReduceArgs, fn(&_, u64, &Threshold) -> Result<ReductionOutput, _>) = match kind {
        ReduceKind::Pad(a) => (a, pad_instance),
        ReduceKind::Sublinear(a) => (a, embed_kclique_sublinear),
        ReduceKind::Linear(a) => (a, embed_kclique_linear),
    };
    let f = parse_threshold(&args.function)?;
    let instance = Instance::load(&args.instance)?;
    let out = run(&instance.graph, args.target, &f)?;
    save_graph(&args.out, &out.graph).with_context(|| format!("writing {}", args.out.display()))?;
    let mut sidecar = args.out.clone().into_os_string();
    sidecar.push(".params");
    let block = format!(
        "construction {}\nfunction {}\ninput_size {}\ninput_target {}\n{}\n",
        out.provenance.construction,
        out.provenance.function,
        out.provenance.input_size,
        out.provenance.input_target,
        out.params.to_string().replace(' ', "\n").replace('=', " "),
    );
    std::fs::write(&sidecar, &block).with_context(|| format!("writing {}", PathBuf::from(&sidecar).display()))?;
    print!("{block}");
    println!("target {}", out.params.target());
    Ok(ExitCode::SUCCESS)
}

fn cmd_probe(src: &str, n: usize, solver: &SolverArgs) -> Result<ExitCode> {
    let f = parse_threshold(src)?;
    if n == 0 {
        bail!("n must be at least 1");
    }
    let config = solver.config();
    let mut queries = 0;
    let probe = probe_function(
        |g| {
            queries += 1;
            eval_ramsey(g, &f, &config).map(|e| e.outcome())
        },
        n,
    )?;
    println!("f({n}) {probe}");
    println!("queries {queries}");
    Ok(ExitCode::SUCCESS)
}

fn cmd_gen(args: &GenArgs) -> Result<ExitCode> {
    let mut rng = generate::rng(args.seed);
    let g = match args.family {
        Family::Gnp => generate::gnp(args.n, args.p, &mut rng),
        Family::Planted => {
            if args.k > args.n {
                bail!("cannot plant a {}-clique in {} vertices", args.k, args.n);
            }
            generate::planted_clique(args.n, args.p, args.k, &mut rng).0
        }
        Family::Complete => ramsey_core::structures::Graph::complete(args.n),
        Family::Cycle => ramsey_core::structures::Graph::cycle(args.n),
    };
    save_graph(&args.out, &g).with_context(|| format!("writing {}", args.out.display()))?;
    println!("wrote {} vertices, {} edges to {}", g.size(), g.edge_count(), args.out.display());
    Ok(ExitCode::SUCCESS)
}

fn run(cli: Cli) -> Result<ExitCode> {
    match &cli.command {
        Command::Eval(args) => cmd_eval(args),
        Command::Classify { function } => cmd_classify(function),
        Command::Reduce { kind } => cmd_reduce(kind),
        Command::Probe { function, n, solver } => cmd_probe(function, *n, solver),
        Command::OracleCheck(args) => check::run(args),
        Command::Bench(args) => bench::run(args),
        Command::Gen(args) => cmd_gen(args),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
