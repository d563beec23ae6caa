//! Answer-preserving instance transformations between clique problems and
//! `R_f`, plus recovery of `f(n)` from a membership oracle.
//!
//! All constructions pad with universal vertices (raising the clique number
//! by one each) and isolated vertices (changing nothing unless the target
//! size is at most 1, in which case they are added ineligible).

use std::fmt;

use thiserror::Error;

use crate::structures::Graph;
use crate::threshold::{classify, Case, Threshold, ThresholdError};

/// Linear scans stop here and switch to doubling.
const SCAN_LIMIT: u64 = 4096;
/// No construction searches beyond this many added vertices.
const SEARCH_HORIZON: u64 = 1 << 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Construction {
    Pad,
    EmbedSublinear,
    EmbedLinear,
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Construction::Pad => "pad",
            Construction::EmbedSublinear => "sublinear",
            Construction::EmbedLinear => "linear",
        })
    }
}

/// Derived quantities of a construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReductionParams {
    /// `delta` universal vertices; `f(n') <= b'`, `b' = b + delta`.
    Pad { delta: u64, b_prime: u64, n_prime: u64 },
    /// `q = f^-1(k)`, `ell = f(q) - k`. `padding` extra vertices beyond
    /// `max(n, q)` were needed; `universal = k' - k`; `k' = f(n')`.
    Sublinear {
        q: u64,
        ell: u64,
        padding: u64,
        universal: u64,
        n_prime: u64,
        k_prime: u64,
    },
    /// `ell` new vertices, `ell_prime` of them universal;
    /// `m + ell' = f(n + ell) = k'`.
    Linear {
        ell: u64,
        ell_prime: u64,
        n_prime: u64,
        k_prime: u64,
    },
}

impl ReductionParams {
    pub fn n_prime(&self) -> u64 {
        match *self {
            ReductionParams::Pad { n_prime, .. }
            | ReductionParams::Sublinear { n_prime, .. }
            | ReductionParams::Linear { n_prime, .. } => n_prime,
        }
    }

    /// Clique size asked of the output graph.
    pub fn target(&self) -> u64 {
        match *self {
            ReductionParams::Pad { b_prime, .. } => b_prime,
            ReductionParams::Sublinear { k_prime, .. } | ReductionParams::Linear { k_prime, .. } => k_prime,
        }
    }
}

impl fmt::Display for ReductionParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReductionParams::Pad { delta, b_prime, n_prime } => {
                write!(f, "delta={delta} b_prime={b_prime} n_prime={n_prime}")
            }
            ReductionParams::Sublinear {
                q,
                ell,
                padding,
                universal,
                n_prime,
                k_prime,
            } => write!(
                f,
                "q={q} ell={ell} padding={padding} universal={universal} n_prime={n_prime} k_prime={k_prime}"
            ),
            ReductionParams::Linear {
                ell,
                ell_prime,
                n_prime,
                k_prime,
            } => write!(f, "ell={ell} ell_prime={ell_prime} n_prime={n_prime} k_prime={k_prime}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Provenance {
    pub construction: Construction,
    pub function: String,
    pub input_size: usize,
    /// `b`, `k` or `m`.
    pub input_target: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionOutput {
    pub graph: Graph,
    pub params: ReductionParams,
    pub provenance: Provenance,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReductionError {
    #[error(transparent)]
    Threshold(#[from] ThresholdError),
    #[error("{construction} needs {needed}, but f is {found}")]
    WrongCase {
        construction: Construction,
        needed: &'static str,
        found: String,
    },
    #[error("{construction}: {msg}")]
    Precondition { construction: Construction, msg: String },
}

fn require_case(f: &Threshold, construction: Construction, needed: &'static str, ok: impl Fn(&Case) -> bool) -> Result<(), ReductionError> {
    let class = classify(f)?;
    if ok(&class.case) {
        Ok(())
    } else {
        Err(ReductionError::WrongCase {
            construction,
            needed,
            found: format!("Case{}", class.case.number()),
        })
    }
}

fn eval(f: &Threshold, n: u64) -> Result<u64, ThresholdError> {
    let v = f.eval(n)?;
    Ok(u64::try_from(v).unwrap_or(u64::MAX))
}

/// Least `x` in `from..` with `pred(x)`: linear up to `from + SCAN_LIMIT`,
/// then doubling steps (the first hit, not necessarily the least, there).
fn search(from: u64, mut pred: impl FnMut(u64) -> Result<bool, ThresholdError>) -> Result<Option<u64>, ThresholdError> {
    for x in from..=from + SCAN_LIMIT {
        if pred(x)? {
            return Ok(Some(x));
        }
    }
    let mut step = SCAN_LIMIT * 2;
    while step <= SEARCH_HORIZON {
        if pred(from + step)? {
            return Ok(Some(from + step));
        }
        step *= 2;
    }
    Ok(None)
}

fn padded(g: &Graph, universal: u64, isolated: u64, target: u64) -> Graph {
    g.pad(universal as usize, isolated as usize, target > 1)
}

/// Adds `delta` universal vertices, `delta` least with
/// `f(n + delta) <= b + delta`. Then `g` has a `b`-clique iff the output has
/// a `(b + delta)`-clique. Needs `f = o(n)` (bounded or sublinear).
pub fn pad_instance(g: &Graph, b: u64, f: &Threshold) -> Result<ReductionOutput, ReductionError> {
    let construction = Construction::Pad;
    require_case(f, construction, "a sublinear function (Case1 or Case2)", |c| {
        matches!(c, Case::Bounded { .. } | Case::SublinearUnbounded { .. })
    })?;
    let n = g.size() as u64;
    let delta = search(0, |d| Ok(eval(f, n + d)? <= b + d))?.ok_or_else(|| ReductionError::Precondition {
        construction,
        msg: format!("no delta up to {SEARCH_HORIZON} with f(n + delta) <= b + delta"),
    })?;
    Ok(ReductionOutput {
        graph: g.add_vertices(delta as usize, 0),
        params: ReductionParams::Pad {
            delta,
            b_prime: b + delta,
            n_prime: n + delta,
        },
        provenance: Provenance {
            construction,
            function: f.source().to_string(),
            input_size: g.size(),
            input_target: b,
        },
    })
}

/// Clique of size `k` to `R_f` for unbounded sublinear `f`. Picks the least
/// `n' >= max(n, f^-1(k))` at which the `f(n') - k` universal vertices fit
/// in the `n' - n` new ones; the remainder is isolated. Then `g` has a
/// `k`-clique iff the output is in `R_f`, and `k' = f(n')`.
pub fn embed_kclique_sublinear(g: &Graph, k: u64, f: &Threshold) -> Result<ReductionOutput, ReductionError> {
    let construction = Construction::EmbedSublinear;
    if k == 0 {
        return Err(ReductionError::Precondition {
            construction,
            msg: "k must be at least 1".into(),
        });
    }
    require_case(f, construction, "an unbounded sublinear function (Case2)", |c| {
        matches!(c, Case::SublinearUnbounded { .. })
    })?;
    let n = g.size() as u64;
    let q = f.inverse(k as u128)?.ok_or_else(|| ReductionError::Precondition {
        construction,
        msg: format!("f never reaches {k}"),
    })?;
    let ell = eval(f, q)? - k;
    let start = n.max(q);
    let n_prime = search(start, |x| {
        let v = eval(f, x)?;
        Ok(v >= k && v - k <= x - n)
    })?
    .ok_or_else(|| ReductionError::Precondition {
        construction,
        msg: format!("no size n' up to {SEARCH_HORIZON} above {start} accommodates the padding"),
    })?;
    let k_prime = eval(f, n_prime)?;
    let universal = k_prime - k;
    Ok(ReductionOutput {
        graph: padded(g, universal, n_prime - n - universal, k_prime),
        params: ReductionParams::Sublinear {
            q,
            ell,
            padding: n_prime - start,
            universal,
            n_prime,
            k_prime,
        },
        provenance: Provenance {
            construction,
            function: f.source().to_string(),
            input_size: g.size(),
            input_target: k,
        },
    })
}

/// Clique of size `m` to `R_f` for linear `f` far from `n`: least `ell` with
/// `m <= f(n + ell) <= m + ell`, `ell' = f(n + ell) - m` of the new vertices
/// universal and the rest isolated. Then `g` has an `m`-clique iff the
/// output is in `R_f`.
pub fn embed_kclique_linear(g: &Graph, m: u64, f: &Threshold) -> Result<ReductionOutput, ReductionError> {
    let construction = Construction::EmbedLinear;
    if m == 0 {
        return Err(ReductionError::Precondition {
            construction,
            msg: "m must be at least 1".into(),
        });
    }
    require_case(f, construction, "a linear function far from n (Case3)", |c| {
        matches!(c, Case::LinearFarFromN { .. })
    })?;
    let n = g.size() as u64;
    let ell = search(0, |l| {
        let v = eval(f, n + l)?;
        Ok(m <= v && v <= m + l)
    })?
    .ok_or_else(|| ReductionError::Precondition {
        construction,
        msg: format!("no ell up to {SEARCH_HORIZON} with m <= f(n + ell) <= m + ell"),
    })?;
    let k_prime = eval(f, n + ell)?;
    let ell_prime = k_prime - m;
    Ok(ReductionOutput {
        graph: padded(g, ell_prime, ell - ell_prime, k_prime),
        params: ReductionParams::Linear {
            ell,
            ell_prime,
            n_prime: n + ell,
            k_prime,
        },
        provenance: Provenance {
            construction,
            function: f.source().to_string(),
            input_size: g.size(),
            input_target: m,
        },
    })
}

/// `G_i`: `n` vertices, a clique on the first `i`, and only those `i`
/// eligible. Its largest homogeneous set has exactly `i` elements.
pub fn probe_graph(n: usize, i: usize) -> Graph {
    let mut g = Graph::empty(n);
    for v in 0..n {
        g.set_eligible(v, v < i);
    }
    for v in 0..i.min(n) {
        for u in 0..v {
            g.add_edge(u, v);
        }
    }
    g
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Probe {
    Value(u64),
    /// No `G_i` qualifies: `f(n) > n`.
    AboveN,
}

impl fmt::Display for Probe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Probe::Value(v) => write!(f, "{v}"),
            Probe::AboveN => f.write_str("> n"),
        }
    }
}

/// Recovers `f(n)` from a membership oracle for `R_f` on `n`-vertex graphs:
/// `G_i` is in `R_f` iff `i >= f(n)`, so the least qualifying `i` is `f(n)`.
/// Binary search, `O(log n)` oracle calls.
pub fn probe_function<E>(mut oracle: impl FnMut(&Graph) -> Result<bool, E>, n: usize) -> Result<Probe, E> {
    if !oracle(&probe_graph(n, n))? {
        return Ok(Probe::AboveN);
    }
    if oracle(&probe_graph(n, 0))? {
        return Ok(Probe::Value(0));
    }
    // G_lo fails, G_hi qualifies
    let (mut lo, mut hi) = (0usize, n);
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if oracle(&probe_graph(n, mid))? {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(Probe::Value(hi as u64))
}
