use super::bitset::VertexSet;
use super::StructureError;

/// Simple undirected graph on `0..n` with bitset adjacency rows.
///
/// `eligible` marks the vertices allowed in a homogeneous set. A set is
/// homogeneous iff it is a clique of eligible vertices.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    eligible: VertexSet,
}

impl Graph {
    /// Edgeless graph with every vertex eligible.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![VertexSet::new(n); n],
            eligible: VertexSet::full(n),
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for v in 0..n {
            let mut row = VertexSet::full(n);
            row.remove(v);
            g.adj[v] = row;
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::empty(n);
        if n >= 3 {
            for v in 0..n {
                g.add_edge(v, (v + 1) % n);
            }
        } else if n == 2 {
            g.add_edge(0, 1);
        }
        g
    }

    /// Graph with the given edges and every vertex eligible.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, StructureError> {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(StructureError::VertexOutOfRange {
                    vertex: u.max(v),
                    size: n,
                });
            }
            if u == v {
                return Err(StructureError::SelfLoop { vertex: u });
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Idempotent. Panics on a self-loop or an out-of-range endpoint.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert_ne!(u, v, "self-loop on vertex {u}");
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn set_eligible(&mut self, v: usize, eligible: bool) {
        if eligible {
            self.eligible.insert(v);
        } else {
            self.eligible.remove(v);
        }
    }

    pub fn with_all_eligible(mut self) -> Self {
        self.eligible = VertexSet::full(self.n);
        self
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn eligible(&self) -> &VertexSet {
        &self.eligible
    }

    pub fn is_eligible(&self, v: usize) -> bool {
        self.eligible.contains(v)
    }

    pub fn eligible_count(&self) -> usize {
        self.eligible.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Pairwise adjacency plus eligibility, checked vertex by vertex.
    pub fn is_homogeneous(&self, set: &[usize]) -> bool {
        set.iter().all(|&v| v < self.n && self.is_eligible(v))
            && set
                .iter()
                .enumerate()
                .all(|(i, &u)| set[i + 1..].iter().all(|&v| u != v && self.has_edge(u, v)))
    }

    /// Edge `{a, b}` iff `a != b` and `{a, b}` is absent here. Eligibility is kept.
    pub fn complement(&self) -> Graph {
        let adj = (0..self.n)
            .map(|v| {
                let mut row = VertexSet::full(self.n);
                row.difference_with(&self.adj[v]);
                row.remove(v);
                row
            })
            .collect();
        Graph {
            n: self.n,
            adj,
            eligible: self.eligible.clone(),
        }
    }

    /// Appends `universal` vertices adjacent to every other vertex (old and
    /// new) and `isolated` vertices with no edges. All new vertices are
    /// eligible; original ids and edges are unchanged.
    pub fn add_vertices(&self, universal: usize, isolated: usize) -> Graph {
        self.pad(universal, isolated, true)
    }

    /// [`Graph::add_vertices`] with a choice of eligibility for the isolated
    /// vertices.
    pub fn pad(&self, universal: usize, isolated: usize, isolated_eligible: bool) -> Graph {
        let n = self.n + universal + isolated;
        let universals = self.n..self.n + universal;
        let mut adj: Vec<VertexSet> = self.adj.iter().map(|row| row.grown(n)).collect();
        for row in adj.iter_mut() {
            for u in universals.clone() {
                row.insert(u);
            }
        }
        for u in universals.clone() {
            let mut row = VertexSet::from_iter_with_capacity(n, 0..self.n + universal);
            row.remove(u);
            adj.push(row);
        }
        adj.extend((0..isolated).map(|_| VertexSet::new(n)));
        let mut eligible = self.eligible.grown(n);
        for u in universals {
            eligible.insert(u);
        }
        if isolated_eligible {
            for v in self.n + universal..n {
                eligible.insert(v);
            }
        }
        Graph { n, adj, eligible }
    }

    /// Subgraph induced by `keep`, relabelled to `0..keep.len()` in order.
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let mut g = Graph::empty(keep.len());
        for (i, &u) in keep.iter().enumerate() {
            g.set_eligible(i, self.is_eligible(u));
            for (j, &v) in keep.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }
}
