//! Finite relational models, their graph view, file formats and graph
//! construction utilities.

mod bitset;
pub mod generate;
mod graph;
pub mod io;
mod model;

use thiserror::Error;

pub use bitset::VertexSet;
pub use graph::Graph;
pub use io::{load_graph, load_model, read_dimacs, read_model, save_graph, save_model, write_dimacs, write_model};
pub use model::Model;

#[derive(Debug, Error)]
pub enum StructureError {
    #[error("vertex {vertex} out of range for universe of size {size}")]
    VertexOutOfRange { vertex: usize, size: usize },
    #[error("self-loop on vertex {vertex}")]
    SelfLoop { vertex: usize },
    #[error("duplicate pair ({a}, {b})")]
    DuplicatePair { a: usize, b: usize },
    #[error("universe must be nonempty")]
    EmptyUniverse,
    #[error("line {line}: {msg}")]
    Format { line: usize, msg: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl PartialEq for StructureError {
    fn eq(&self, other: &Self) -> bool {
        use StructureError::*;
        match (self, other) {
            (VertexOutOfRange { vertex: a, size: b }, VertexOutOfRange { vertex: c, size: d }) => a == c && b == d,
            (SelfLoop { vertex: a }, SelfLoop { vertex: b }) => a == b,
            (DuplicatePair { a, b }, DuplicatePair { a: c, b: d }) => a == c && b == d,
            (EmptyUniverse, EmptyUniverse) => true,
            (Format { line: a, msg: b }, Format { line: c, msg: d }) => a == c && b == d,
            (Io(a), Io(b)) => a.kind() == b.kind(),
            _ => false,
        }
    }
}

/// Graph view of a model: see [`Model::to_graph`].
pub fn model_to_graph(m: &Model) -> Graph {
    m.to_graph()
}

/// See [`Graph::add_vertices`].
pub fn add_vertices(g: &Graph, universal: usize, isolated: usize) -> Graph {
    g.add_vertices(universal, isolated)
}

/// See [`Graph::complement`].
pub fn complement(g: &Graph) -> Graph {
    g.complement()
}
