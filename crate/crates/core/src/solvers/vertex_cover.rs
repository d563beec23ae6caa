use super::{trivial_answer, Certificate, Engine, SearchStats, SolveError};
use crate::structures::{Graph, VertexSet};

/// Clique of size `k` among eligible vertices iff the complement of the
/// eligible-induced subgraph has a vertex cover of size at most
/// `eligible - k`. Ineligible vertices count against the budget `n - k`
/// first; the rest is the classic two-way branching on an uncovered edge,
/// `O(2^(n-k) * n^2 / 64)` time. The witness is everything left uncovered.
pub fn clique_by_vertex_cover(g: &Graph, k: usize) -> Result<Certificate, SolveError> {
    if let Some(c) = trivial_answer(g, k, Engine::VertexCover) {
        return Ok(c);
    }
    let forced = g.size() - g.eligible_count();
    let budget = g.size() - k - forced;
    let mut stats = SearchStats::default();
    let mut remaining = g.eligible().clone();
    let found = search(g, &mut remaining, budget, &mut stats);
    Ok(if found {
        Certificate::yes(remaining.iter().collect(), Engine::VertexCover, stats)
    } else {
        Certificate::no(Engine::VertexCover, stats)
    })
}

// Uncovered complement edge `(u, v)` inside `remaining`, least `u` first.
fn non_edge(g: &Graph, remaining: &VertexSet) -> Option<(usize, usize)> {
    remaining.iter().find_map(|u| {
        let mut missing = remaining.clone();
        missing.difference_with(g.neighbors(u));
        missing.remove(u);
        missing.first().map(|v| (u, v))
    })
}

// On success `remaining` holds the uncovered vertices, a clique.
fn search(g: &Graph, remaining: &mut VertexSet, budget: usize, stats: &mut SearchStats) -> bool {
    stats.nodes += 1;
    let Some((u, v)) = non_edge(g, remaining) else {
        return true;
    };
    if budget == 0 {
        return false;
    }
    stats.branches += 1;
    for w in [u, v] {
        remaining.remove(w);
        if search(g, remaining, budget - 1, stats) {
            return true;
        }
        remaining.insert(w);
    }
    false
}
