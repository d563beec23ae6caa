#![allow(dead_code)]

use rand::Rng;
use ramsey_core::structures::{generate, Graph};
use ramsey_core::threshold::Threshold;

/// The ten-function test suite.
pub const SUITE: [&str; 10] = [
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

pub fn suite() -> Vec<Threshold> {
    SUITE.iter().map(|s| Threshold::parse(s).unwrap()).collect()
}

/// Random graph with edge density drawn per graph (sometimes 0 or 1) and,
/// for half the graphs, some vertices ineligible.
pub fn random_graph(n: usize, rng: &mut impl Rng) -> Graph {
    let p = match rng.random_range(0..10) {
        0 => 0.0,
        1 => 1.0,
        _ => rng.random_range(0.0..=1.0),
    };
    let mut g = generate::gnp(n, p, rng);
    if rng.random_bool(0.5) {
        for v in 0..n {
            if rng.random_bool(0.2) {
                g.set_eligible(v, false);
            }
        }
    }
    g
}

/// `per_small` graphs for each `n` in `1..=6`, `per_large` for `7..=12`.
pub fn corpus(seed: u64, per_small: usize, per_large: usize) -> Vec<Graph> {
    let mut rng = generate::rng(seed);
    let mut out = Vec::new();
    for n in 1..=12 {
        let count = if n <= 6 { per_small } else { per_large };
        for _ in 0..count {
            out.push(random_graph(n, &mut rng));
        }
    }
    out
}

/// Pairwise re-check of a witness, written against the raw graph API.
pub fn witness_ok(g: &Graph, witness: &[usize], k: usize) -> bool {
    if witness.len() < k {
        return false;
    }
    for (i, &a) in witness.iter().enumerate() {
        if a >= g.size() || !g.is_eligible(a) {
            return false;
        }
        for &b in &witness[i + 1..] {
            if a == b || !g.has_edge(a, b) {
                return false;
            }
        }
    }
    true
}
