mod common;

use rand::Rng;
use ramsey_core::evaluator::{eval_ramsey, eval_ramsey_model, EvalConfig, StrategyKind};
use ramsey_core::structures::{generate, Graph, Model};
use ramsey_core::threshold::Threshold;

#[test]
fn forcing_the_oracle_never_changes_the_answer() {
    let auto = EvalConfig::default();
    let forced = EvalConfig {
        force: Some(StrategyKind::Oracle),
        ..EvalConfig::default()
    };
    for (g, f) in common::corpus(31, 50, 20).iter().zip(common::suite().iter().cycle()) {
        let a = eval_ramsey(g, f, &auto).unwrap();
        let b = eval_ramsey(g, f, &forced).unwrap();
        assert_eq!(a.outcome(), b.outcome(), "{f} {g:?}");
        assert_eq!(a.strategy.n, g.size());
    }
}

#[test]
fn dispatch_covers_all_three_regimes() {
    let cfg = EvalConfig::default();
    let g = generate::gnp(64, 0.5, &mut generate::rng(32));
    let kind = |src: &str| eval_ramsey(&g, &Threshold::parse(src).unwrap(), &cfg).unwrap().strategy.kind;
    assert_eq!(kind("3"), StrategyKind::EnumerateSmall);
    assert_eq!(kind("ceil(1/2 * n)"), StrategyKind::BranchAndBound);
    assert_eq!(kind("n - 2*ceil(log2(n))"), StrategyKind::VertexCoverNearN);
}

#[test]
fn cutoffs_are_configurable() {
    let g = Graph::complete(64);
    let f = Threshold::parse("ceil(1/2 * n)").unwrap();
    let cfg = EvalConfig {
        c_small: 40,
        ..EvalConfig::default()
    };
    assert_eq!(eval_ramsey(&g, &f, &cfg).unwrap().strategy.kind, StrategyKind::EnumerateSmall);
    let cfg = EvalConfig {
        c_log: 6,
        ..EvalConfig::default()
    };
    assert_eq!(eval_ramsey(&g, &f, &cfg).unwrap().strategy.kind, StrategyKind::VertexCoverNearN);
}

#[test]
fn model_witnesses_use_universe_ids() {
    // homogeneous on {1, 3}; 0 and 2 lack loops
    let pairs = [(1, 1), (3, 3), (1, 3), (3, 1), (0, 1), (1, 0)];
    let m = Model::new(4, pairs).unwrap();
    let e = eval_ramsey_model(&m, &Threshold::parse("2").unwrap(), &EvalConfig::default()).unwrap();
    assert_eq!(e.certificate.witness, Some(vec![1, 3]));
    assert!(m.is_homogeneous(&[1, 3]));
}

#[test]
fn near_n_work_is_polynomial_on_dense_graphs() {
    let f = Threshold::parse("n - 2*ceil(log2(n))").unwrap();
    let mut rng = generate::rng(33);
    for _ in 0..20 {
        let n = rng.random_range(32..=300);
        let g = generate::near_complete(n, rng.random_range(0..=12), &mut rng);
        let e = eval_ramsey(&g, &f, &EvalConfig::default()).unwrap();
        assert_eq!(e.strategy.kind, StrategyKind::VertexCoverNearN);
        // at most 2^(n-k+1) nodes, n - k = 2 ceil(log2 n)
        let depth = n - e.strategy.k;
        assert!(e.certificate.stats.nodes < 1u64 << (depth + 1));
    }
}
