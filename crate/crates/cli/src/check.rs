use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::Args;
use ramsey_core::evaluator::{eval_ramsey, EvalConfig};
use ramsey_core::solvers::{
    clique_by_branch_and_bound, clique_by_enumeration, clique_by_vertex_cover, clique_oracle, ORACLE_LIMIT,
};
use ramsey_core::structures::{generate, save_graph, Graph};
use ramsey_core::threshold::Threshold;

const SUITE: [&str; 10] = [
    "0",
    "1",
    "2",
    "3",
    "ceil(log2(n))",
    "ceil(sqrt(n))",
    "ceil(1/2 * n)",
    "n - ceil(log2(n))",
    "n",
    "n + 1",
];

#[derive(Args)]
pub struct CheckArgs {
    #[arg(long, default_value_t = 10)]
    max_n: usize,
    /// Random graphs per size
    #[arg(long, default_value_t = 200)]
    trials: usize,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Extra threshold to check besides the built-in suite
    #[arg(long = "fn")]
    function: Option<String>,
    /// Where to write a failing instance
    #[arg(long, default_value = "oracle-check-failure.dimacs")]
    out: PathBuf,
}

struct Failure {
    graph: Graph,
    what: String,
}

pub fn run(args: &CheckArgs) -> Result<ExitCode> {
    if args.max_n > ORACLE_LIMIT {
        bail!("--max-n is limited to {ORACLE_LIMIT}, the brute-force oracle's range");
    }
    let mut functions = Vec::new();
    for src in SUITE.iter().copied().chain(args.function.as_deref()) {
        let f = Threshold::parse(src).with_context(|| format!("cannot parse threshold {src:?}"))?;
        f.validate().with_context(|| format!("threshold {src:?} rejected"))?;
        functions.push(f);
    }
    let mut rng = generate::rng(args.seed);
    let config = EvalConfig::default();
    let mut runs = 0u64;
    for n in 1..=args.max_n {
        for trial in 0..args.trials {
            let p = (trial as f64 + 0.5) / args.trials as f64;
            let g = generate::gnp_with_eligibility(n, p, if trial % 2 == 0 { 1.0 } else { 0.8 }, &mut rng);
            if let Some(failure) = check_graph(&g, &functions, &config, &mut runs)? {
                save_graph(&args.out, &failure.graph).with_context(|| format!("writing {}", args.out.display()))?;
                println!("FAIL {}", failure.what);
                println!("instance written to {}", args.out.display());
                return Ok(ExitCode::from(3));
            }
        }
    }
    println!("OK {runs} checks");
    Ok(ExitCode::SUCCESS)
}

fn check_graph(g: &Graph, functions: &[Threshold], config: &EvalConfig, runs: &mut u64) -> Result<Option<Failure>> {
    let n = g.size();
    let fail = |what: String| Ok(Some(Failure { graph: g.clone(), what }));
    let truth: Vec<bool> = (0..=n + 1).map(|k| clique_oracle(g, k).map(|c| c.outcome)).collect::<Result<_, _>>()?;
    for f in functions {
        let k = f.eval(n as u64)?;
        let expected = k <= n as u128 && truth[k as usize];
        let e = eval_ramsey(g, f, config)?;
        *runs += 1;
        if e.outcome() != expected {
            return fail(format!("eval_ramsey with f = {f} on n = {n}: {} vs oracle {expected}", e.outcome()));
        }
        if !e.certificate.verify(g, k.min(n as u128 + 1) as usize) {
            return fail(format!("eval_ramsey with f = {f} on n = {n}: invalid certificate"));
        }
    }
    for (k, &expected) in truth.iter().enumerate() {
        let mut results = vec![
            ("vertex-cover", clique_by_vertex_cover(g, k)?),
            ("branch-and-bound", clique_by_branch_and_bound(g, k, None)?),
        ];
        if k <= config.c_small {
            results.push(("enumeration", clique_by_enumeration(g, k, config.c_small)?));
        }
        for (name, c) in results {
            *runs += 1;
            if c.outcome != expected || !c.verify(g, k) {
                return fail(format!("{name} with k = {k} on n = {n}: {} vs oracle {expected}", c.outcome));
            }
        }
    }
    Ok(None)
}
