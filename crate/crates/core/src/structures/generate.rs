//! Seeded instance generators. All randomness comes from ChaCha8 seeded
//! with a `u64`, so a seed fixes the instance.

use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::graph::Graph;

pub type InstanceRng = ChaCha8Rng;

pub fn rng(seed: u64) -> InstanceRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdos-Renyi `G(n, p)`, all vertices eligible.
pub fn gnp(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// `G(n, p)` plus a clique on `k` random vertices. Returns the planted set,
/// sorted.
pub fn planted_clique(n: usize, p: f64, k: usize, rng: &mut impl Rng) -> (Graph, Vec<usize>) {
    assert!(k <= n, "cannot plant a {k}-clique in {n} vertices");
    let mut g = gnp(n, p, rng);
    let mut planted = index::sample(rng, n, k).into_vec();
    planted.sort_unstable();
    for (i, &u) in planted.iter().enumerate() {
        for &v in &planted[i + 1..] {
            g.add_edge(u, v);
        }
    }
    (g, planted)
}

/// `K_n` with `missing` distinct random edges removed.
pub fn near_complete(n: usize, missing: usize, rng: &mut impl Rng) -> Graph {
    let total = n * n.saturating_sub(1) / 2;
    let missing = missing.min(total);
    let mut g = Graph::empty(n);
    let drop: std::collections::HashSet<usize> = index::sample(rng, total, missing).into_iter().collect();
    let mut idx = 0;
    for u in 0..n {
        for v in u + 1..n {
            if !drop.contains(&idx) {
                g.add_edge(u, v);
            }
            idx += 1;
        }
    }
    g
}

/// `G(n, p)` where each vertex is independently eligible with probability
/// `q`.
pub fn gnp_with_eligibility(n: usize, p: f64, q: f64, rng: &mut impl Rng) -> Graph {
    let mut g = gnp(n, p, rng);
    for v in 0..n {
        let keep = rng.random_bool(q);
        g.set_eligible(v, keep);
    }
    g
}
