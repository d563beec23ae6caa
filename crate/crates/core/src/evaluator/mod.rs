//! Decides `M |= R_f`: is there a homogeneous set of size at least `f(|M|)`?
//!
//! Dispatch is per instance, on `n` and `k = f(n)` only: small `k` goes to
//! subset enumeration, `k` close to `n` to the vertex-cover search, and
//! everything else to branch-and-bound.

use std::fmt;
use std::time::Duration;

use thiserror::Error;

use crate::solvers::{
    clique_by_branch_and_bound, clique_by_enumeration, clique_by_vertex_cover, clique_oracle, Certificate, Engine,
    SearchStats, SolveError,
};
use crate::structures::{Graph, Model};
use crate::threshold::{ceil_log2, Threshold, ThresholdError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StrategyKind {
    EnumerateSmall,
    VertexCoverNearN,
    BranchAndBound,
    /// Brute force; for testing.
    Oracle,
}

impl StrategyKind {
    pub fn name(self) -> &'static str {
        match self {
            StrategyKind::EnumerateSmall => "EnumerateSmall",
            StrategyKind::VertexCoverNearN => "VertexCoverNearN",
            StrategyKind::BranchAndBound => "BranchAndBound",
            StrategyKind::Oracle => "Oracle",
        }
    }
}

impl fmt::Display for StrategyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EvalStrategy {
    pub kind: StrategyKind,
    pub n: usize,
    pub k: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvalConfig {
    /// Enumerate when `k <= c_small`.
    pub c_small: usize,
    /// Vertex cover when `n - k <= c_log * ceil(log2(n))`.
    pub c_log: usize,
    /// Overrides dispatch.
    pub force: Option<StrategyKind>,
    /// Time budget for branch-and-bound.
    pub budget: Option<Duration>,
}

impl Default for EvalConfig {
    fn default() -> Self {
        EvalConfig {
            c_small: 4,
            c_log: 2,
            force: None,
            budget: None,
        }
    }
}

/// Picks the engine from `n` and `k` alone. When both the small-`k` and the
/// near-`n` rule apply (only for tiny `n`), the vertex-cover search wins:
/// its tree has at most `2^(c_log * ceil(log2 n))` leaves either way.
pub fn choose_strategy(n: usize, k: usize, config: &EvalConfig) -> EvalStrategy {
    let kind = if let Some(kind) = config.force {
        kind
    } else if n.saturating_sub(k) as u128 <= config.c_log as u128 * ceil_log2(n as u128) {
        StrategyKind::VertexCoverNearN
    } else if k <= config.c_small {
        StrategyKind::EnumerateSmall
    } else {
        StrategyKind::BranchAndBound
    };
    EvalStrategy { kind, n, k }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EvalError {
    #[error(transparent)]
    Threshold(#[from] ThresholdError),
    #[error(transparent)]
    Solve(#[from] SolveError),
}

/// Result of [`eval_ramsey`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Evaluation {
    /// `f(n)` as evaluated, possibly above `n`.
    pub threshold: u128,
    /// Dispatch decision for `(n, min(f(n), n + 1))`. Recorded even when the
    /// answer is fixed without search; the certificate's engine is then
    /// [`Engine::Trivial`].
    pub strategy: EvalStrategy,
    pub certificate: Certificate,
}

impl Evaluation {
    pub fn outcome(&self) -> bool {
        self.certificate.outcome
    }
}

/// Decides whether `g` has a clique of at least `f(n)` eligible vertices.
pub fn eval_ramsey(g: &Graph, f: &Threshold, config: &EvalConfig) -> Result<Evaluation, EvalError> {
    let n = g.size();
    let threshold = f.eval(n as u64)?;
    let k = threshold.min(n as u128 + 1) as usize;
    let strategy = choose_strategy(n, k, config);
    let certificate = if k > n {
        Certificate {
            outcome: false,
            witness: None,
            engine: Engine::Trivial,
            stats: SearchStats::default(),
        }
    } else if k == 0 {
        Certificate {
            outcome: true,
            witness: Some(Vec::new()),
            engine: Engine::Trivial,
            stats: SearchStats::default(),
        }
    } else {
        run(g, strategy, config)?
    };
    Ok(Evaluation {
        threshold,
        strategy,
        certificate,
    })
}

/// [`eval_ramsey`] on the graph view of a model. Witness ids are universe
/// elements.
pub fn eval_ramsey_model(m: &Model, f: &Threshold, config: &EvalConfig) -> Result<Evaluation, EvalError> {
    eval_ramsey(&m.to_graph(), f, config)
}

fn run(g: &Graph, strategy: EvalStrategy, config: &EvalConfig) -> Result<Certificate, SolveError> {
    let k = strategy.k;
    match strategy.kind {
        StrategyKind::EnumerateSmall => clique_by_enumeration(g, k, config.c_small),
        StrategyKind::VertexCoverNearN => clique_by_vertex_cover(g, k),
        StrategyKind::BranchAndBound => clique_by_branch_and_bound(g, k, config.budget),
        StrategyKind::Oracle => clique_oracle(g, k),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(src: &str) -> Threshold {
        Threshold::parse(src).unwrap()
    }

    fn full_model(n: usize) -> Model {
        Model::new(n, (0..n).flat_map(|a| (0..n).map(move |b| (a, b)))).unwrap()
    }

    #[test]
    fn examples() {
        let cfg = EvalConfig::default();
        assert!(eval_ramsey_model(&full_model(4), &t("3"), &cfg).unwrap().outcome());
        let edgeless = Model::new(4, (0..4).map(|a| (a, a))).unwrap();
        assert!(!eval_ramsey_model(&edgeless, &t("2"), &cfg).unwrap().outcome());
        for n in 1..6 {
            assert!(!eval_ramsey_model(&full_model(n), &t("n + 1"), &cfg).unwrap().outcome());
        }
        assert!(!eval_ramsey(&Graph::cycle(5), &t("ceil(log2(n))"), &cfg).unwrap().outcome());
    }

    #[test]
    fn strategy_examples() {
        let cfg = EvalConfig::default();
        assert_eq!(choose_strategy(1000, 2, &cfg).kind, StrategyKind::EnumerateSmall);
        assert_eq!(choose_strategy(1024, 1004, &cfg).kind, StrategyKind::VertexCoverNearN);
        assert_eq!(choose_strategy(1024, 1003, &cfg).kind, StrategyKind::BranchAndBound);
        assert_eq!(choose_strategy(100, 50, &cfg).kind, StrategyKind::BranchAndBound);
        let forced = EvalConfig {
            force: Some(StrategyKind::Oracle),
            ..cfg
        };
        assert_eq!(choose_strategy(100, 50, &forced).kind, StrategyKind::Oracle);
    }

    #[test]
    fn trivial_answers_record_strategy() {
        let cfg = EvalConfig::default();
        let e = eval_ramsey(&Graph::cycle(7), &t("0"), &cfg).unwrap();
        assert_eq!(e.certificate.engine, Engine::Trivial);
        assert_eq!(e.certificate.witness, Some(vec![]));
        let e = eval_ramsey(&Graph::complete(3), &t("n + 1"), &cfg).unwrap();
        assert_eq!(e.strategy.k, 4);
        assert!(!e.outcome());
    }

    #[test]
    fn values_above_n_plus_one_are_false() {
        let e = eval_ramsey(&Graph::complete(1), &t("3"), &EvalConfig::default()).unwrap();
        assert_eq!(e.threshold, 3);
        assert!(!e.outcome());
    }

    #[test]
    fn forced_engine_errors_propagate() {
        let cfg = EvalConfig {
            force: Some(StrategyKind::Oracle),
            ..EvalConfig::default()
        };
        assert!(matches!(
            eval_ramsey(&Graph::complete(30), &t("n"), &cfg),
            Err(EvalError::Solve(SolveError::OracleLimit { .. }))
        ));
    }

    #[test]
    fn near_n_regime_is_polynomial_on_complete_graphs() {
        let f = t("n - 2*ceil(log2(n))");
        for n in [16usize, 100, 500] {
            let e = eval_ramsey(&Graph::complete(n), &f, &EvalConfig::default()).unwrap();
            assert_eq!(e.strategy.kind, StrategyKind::VertexCoverNearN);
            assert!(e.outcome());
            assert!(e.certificate.stats.nodes <= (n * n + n) as u64);
        }
    }
}
