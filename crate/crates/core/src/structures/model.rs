use std::collections::BTreeSet;

use super::graph::Graph;
use super::StructureError;

/// Finite relational structure `(M, S)` with `M = {0, ..., size-1}` and one
/// binary relation `S`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Model {
    size: usize,
    relation: BTreeSet<(usize, usize)>,
}

impl Model {
    pub fn new(size: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, StructureError> {
        if size == 0 {
            return Err(StructureError::EmptyUniverse);
        }
        let mut relation = BTreeSet::new();
        for (a, b) in pairs {
            if a >= size || b >= size {
                return Err(StructureError::VertexOutOfRange { vertex: a.max(b), size });
            }
            if !relation.insert((a, b)) {
                return Err(StructureError::DuplicatePair { a, b });
            }
        }
        Ok(Model { size, relation })
    }

    /// The relation that is symmetric on the graph's edges and reflexive
    /// exactly on its eligible vertices.
    pub fn from_graph(g: &Graph) -> Result<Self, StructureError> {
        let loops = g.eligible().iter().map(|v| (v, v));
        let edges = g.edges().flat_map(|(u, v)| [(u, v), (v, u)]);
        Model::new(g.size(), loops.chain(edges))
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn relation(&self) -> &BTreeSet<(usize, usize)> {
        &self.relation
    }

    pub fn holds(&self, a: usize, b: usize) -> bool {
        self.relation.contains(&(a, b))
    }

    /// `S(a, b)` for every ordered pair of members of `set`, diagonal included.
    pub fn is_homogeneous(&self, set: &[usize]) -> bool {
        set.iter().all(|&a| set.iter().all(|&b| self.holds(a, b)))
    }

    /// Vertex `a` is eligible iff `S(a, a)`; edge `{a, b}` iff both `S(a, b)`
    /// and `S(b, a)`.
    pub fn to_graph(&self) -> Graph {
        let mut g = Graph::empty(self.size);
        for v in 0..self.size {
            g.set_eligible(v, self.holds(v, v));
        }
        for &(a, b) in &self.relation {
            if a < b && self.holds(b, a) {
                g.add_edge(a, b);
            }
        }
        g
    }
}
