use super::{trivial_answer, Certificate, Engine, SearchStats, SolveError};
use crate::structures::Graph;

/// Largest graph the oracle accepts.
pub const ORACLE_LIMIT: usize = 20;

/// Brute force over every subset of the eligible vertices. Returns the
/// lexicographically least `k`-clique when one exists.
pub fn clique_oracle(g: &Graph, k: usize) -> Result<Certificate, SolveError> {
    let n = g.size();
    if n > ORACLE_LIMIT {
        return Err(SolveError::OracleLimit { n, limit: ORACLE_LIMIT });
    }
    if let Some(c) = trivial_answer(g, k, Engine::Oracle) {
        return Ok(c);
    }
    let verts: Vec<usize> = g.eligible().iter().collect();
    let m = verts.len();
    // nbr[i]: eligible neighbours of verts[i], as a mask over positions
    let nbr: Vec<u32> = verts
        .iter()
        .map(|&u| (0..m).filter(|&j| g.has_edge(u, verts[j])).fold(0, |acc, j| acc | 1 << j))
        .collect();
    let total = 1usize << m;
    // is_clique[mask] by peeling the lowest member
    let mut is_clique = vec![false; total];
    is_clique[0] = true;
    let mut best: Option<u32> = None;
    for mask in 1..total as u32 {
        let low = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        let clique = is_clique[rest as usize] && rest & !nbr[low] == 0;
        is_clique[mask as usize] = clique;
        if clique && mask.count_ones() as usize == k && best.is_none_or(|b| lex_less(mask, b)) {
            best = Some(mask);
        }
    }
    let stats = SearchStats {
        subsets: total as u64,
        ..SearchStats::default()
    };
    Ok(match best {
        Some(mask) => Certificate::yes(
            (0..m).filter(|&j| mask >> j & 1 == 1).map(|j| verts[j]).collect(),
            Engine::Oracle,
            stats,
        ),
        None => Certificate::no(Engine::Oracle, stats),
    })
}

// Equal-size sets as masks: the sorted member lists compare at the first
// differing position, i.e. the lowest bit of the symmetric difference.
fn lex_less(a: u32, b: u32) -> bool {
    let diff = a ^ b;
    diff != 0 && a >> diff.trailing_zeros() & 1 == 1
}
