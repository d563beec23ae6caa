use super::{trivial_answer, Certificate, Engine, SearchStats, SolveError};
use crate::structures::{Graph, VertexSet};

/// Enumerates eligible `k`-subsets in lexicographic order, extending a
/// prefix only while it is still a clique. Cost `O(n^k * k)` at worst.
/// Refuses `k > cutoff`.
pub fn clique_by_enumeration(g: &Graph, k: usize, cutoff: usize) -> Result<Certificate, SolveError> {
    if k > cutoff {
        return Err(SolveError::EnumerationCutoff { k, cutoff });
    }
    if let Some(c) = trivial_answer(g, k, Engine::Enumeration) {
        return Ok(c);
    }
    let mut stats = SearchStats::default();
    let mut chosen = Vec::with_capacity(k);
    let found = extend(g, k, &mut chosen, g.eligible().clone(), &mut stats);
    Ok(if found {
        Certificate::yes(chosen, Engine::Enumeration, stats)
    } else {
        Certificate::no(Engine::Enumeration, stats)
    })
}

// `candidates`: eligible vertices after the last chosen one, adjacent to
// every chosen one.
fn extend(g: &Graph, k: usize, chosen: &mut Vec<usize>, mut candidates: VertexSet, stats: &mut SearchStats) -> bool {
    stats.subsets += 1;
    if chosen.len() == k {
        return true;
    }
    let order: Vec<usize> = candidates.iter().collect();
    for v in order {
        if chosen.len() + candidates.len() < k {
            return false;
        }
        candidates.remove(v);
        let next = candidates.intersection(g.neighbors(v));
        chosen.push(v);
        if extend(g, k, chosen, next, stats) {
            return true;
        }
        chosen.pop();
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let g = Graph::from_edges(5, Graph::complete(5).edges().filter(|&e| e != (0, 1))).unwrap();
        let c = clique_by_enumeration(&g, 4, 4).unwrap();
        assert_eq!(c.witness, Some(vec![0, 2, 3, 4]));
        assert!(!clique_by_enumeration(&Graph::empty(6), 2, 4).unwrap().outcome);
        assert!(clique_by_enumeration(&Graph::empty(6), 1, 4).unwrap().outcome);
    }

    #[test]
    fn cutoff_enforced() {
        assert_eq!(
            clique_by_enumeration(&Graph::complete(6), 5, 4),
            Err(SolveError::EnumerationCutoff { k: 5, cutoff: 4 })
        );
    }

    #[test]
    fn subset_count_on_complete_graph() {
        // the first root-to-leaf path succeeds: root plus k extensions
        let c = clique_by_enumeration(&Graph::complete(30), 4, 4).unwrap();
        assert_eq!(c.stats.subsets, 5);
        assert_eq!(c.witness, Some(vec![0, 1, 2, 3]));
    }
}
