use std::time::{Duration, Instant};

use super::{trivial_answer, Certificate, Engine, SearchStats, SolveError};
use crate::structures::{Graph, VertexSet};

/// Depth-first clique extension over eligible vertices, pruned by a greedy
/// colouring bound: a candidate set coloured with `c` colours cannot add
/// more than `c` vertices. With a `budget`, running out of time is
/// [`SolveError::BudgetExhausted`], never `false`.
pub fn clique_by_branch_and_bound(g: &Graph, k: usize, budget: Option<Duration>) -> Result<Certificate, SolveError> {
    if let Some(c) = trivial_answer(g, k, Engine::BranchAndBound) {
        return Ok(c);
    }
    let mut search = Search {
        g,
        k,
        deadline: budget.map(|b| Instant::now() + b),
        stats: SearchStats::default(),
        clique: Vec::with_capacity(k),
    };
    match search.expand(g.eligible().clone()) {
        Ok(true) => Ok(Certificate::yes(search.clique, Engine::BranchAndBound, search.stats)),
        Ok(false) => Ok(Certificate::no(Engine::BranchAndBound, search.stats)),
        Err(()) => Err(SolveError::BudgetExhausted { stats: search.stats }),
    }
}

struct Search<'a> {
    g: &'a Graph,
    k: usize,
    deadline: Option<Instant>,
    stats: SearchStats,
    clique: Vec<usize>,
}

impl Search<'_> {
    fn expand(&mut self, mut candidates: VertexSet) -> Result<bool, ()> {
        self.stats.nodes += 1;
        if self.stats.nodes % 1024 == 1 && self.deadline.is_some_and(|d| Instant::now() >= d) {
            return Err(());
        }
        if self.clique.len() >= self.k {
            return Ok(true);
        }
        let (order, colors) = color_sort(self.g, &candidates);
        for i in (0..order.len()).rev() {
            if self.clique.len() + colors[i] < self.k {
                return Ok(false);
            }
            let v = order[i];
            self.stats.branches += 1;
            self.clique.push(v);
            if self.expand(candidates.intersection(self.g.neighbors(v)))? {
                return Ok(true);
            }
            self.clique.pop();
            candidates.remove(v);
        }
        Ok(false)
    }
}

// Greedy sequential colouring. Returns vertices by nondecreasing colour and
// each one's colour (1-based); `colors[i]` bounds the clique size within
// `order[..=i]`.
fn color_sort(g: &Graph, candidates: &VertexSet) -> (Vec<usize>, Vec<usize>) {
    let mut order = Vec::with_capacity(candidates.len());
    let mut colors = Vec::with_capacity(candidates.len());
    let mut uncolored = candidates.clone();
    let mut color = 0;
    while !uncolored.is_empty() {
        color += 1;
        let mut class = uncolored.clone();
        while let Some(v) = class.first() {
            class.remove(v);
            class.difference_with(g.neighbors(v));
            uncolored.remove(v);
            order.push(v);
            colors.push(color);
        }
    }
    (order, colors)
}
