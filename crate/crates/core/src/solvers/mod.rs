//! Exact engines for "does `g` have a clique of at least `k` eligible
//! vertices?". Each returns a [`Certificate`] carrying a witness when the
//! answer is yes.

mod branch_bound;
mod enumerate;
mod oracle;
mod vertex_cover;

use std::fmt;
use std::ops::AddAssign;

use thiserror::Error;

use crate::structures::Graph;

pub use branch_bound::clique_by_branch_and_bound;
pub use enumerate::clique_by_enumeration;
pub use oracle::{clique_oracle, ORACLE_LIMIT};
pub use vertex_cover::clique_by_vertex_cover;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Engine {
    /// Answer fixed by `k` alone (`k = 0`, or `k` above the vertex count).
    Trivial,
    Oracle,
    Enumeration,
    VertexCover,
    BranchAndBound,
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Engine::Trivial => "trivial",
            Engine::Oracle => "oracle",
            Engine::Enumeration => "enumeration",
            Engine::VertexCover => "vertex-cover",
            Engine::BranchAndBound => "branch-and-bound",
        })
    }
}

/// Work counters. Each engine fills the ones that apply to it: `subsets`
/// for subset enumeration, `nodes` and `branches` for search trees.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub subsets: u64,
    pub nodes: u64,
    pub branches: u64,
}

impl AddAssign for SearchStats {
    fn add_assign(&mut self, rhs: Self) {
        self.subsets += rhs.subsets;
        self.nodes += rhs.nodes;
        self.branches += rhs.branches;
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub outcome: bool,
    /// Sorted vertex ids; present iff `outcome`.
    pub witness: Option<Vec<usize>>,
    pub engine: Engine,
    pub stats: SearchStats,
}

impl Certificate {
    pub(crate) fn yes(witness: Vec<usize>, engine: Engine, stats: SearchStats) -> Self {
        let mut witness = witness;
        witness.sort_unstable();
        Certificate {
            outcome: true,
            witness: Some(witness),
            engine,
            stats,
        }
    }

    pub(crate) fn no(engine: Engine, stats: SearchStats) -> Self {
        Certificate {
            outcome: false,
            witness: None,
            engine,
            stats,
        }
    }

    /// Independent check: a `true` certificate must carry at least `k`
    /// distinct eligible, pairwise adjacent vertices; a `false` one no witness.
    pub fn verify(&self, g: &Graph, k: usize) -> bool {
        match (&self.outcome, &self.witness) {
            (true, Some(w)) => w.len() >= k && g.is_homogeneous(w),
            (false, None) => true,
            _ => false,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error("graph has {n} vertices; the brute-force oracle is limited to {limit}")]
    OracleLimit { n: usize, limit: usize },
    #[error("enumeration refuses k = {k} above its cutoff {cutoff}")]
    EnumerationCutoff { k: usize, cutoff: usize },
    #[error("time budget exhausted after {} search nodes", stats.nodes)]
    BudgetExhausted { stats: SearchStats },
}

/// Answers that need no search: `k = 0` is witnessed by the empty set, and
/// `k` above the number of eligible vertices is impossible.
pub(crate) fn trivial_answer(g: &Graph, k: usize, engine: Engine) -> Option<Certificate> {
    if k == 0 {
        Some(Certificate::yes(Vec::new(), engine, SearchStats::default()))
    } else if k > g.eligible_count() {
        Some(Certificate::no(engine, SearchStats::default()))
    } else {
        None
    }
}
