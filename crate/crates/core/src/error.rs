use thiserror::Error;

use crate::graph::Vertex;

/// Errors raised by graph construction and the operations built on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop on vertex {0}")]
    SelfLoop(Vertex),
    #[error("edge {0}-{1} has an endpoint outside the vertex set")]
    DanglingEdge(Vertex, Vertex),
    #[error("vertex set is not a subset of the graph's vertices")]
    NotSubset,
    #[error("vertex {0} is not in the graph")]
    VertexNotFound(Vertex),
    #[error("multiplicity of vertex {0} is zero")]
    ZeroMultiplicity(Vertex),
    #[error("map is undefined on vertex {0}")]
    PartialMap(Vertex),
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("assignment is not a proper coloring of the graph")]
    InvalidColoring,
    #[error("collection is not a stable cover of the graph")]
    NotAStableCover,
    #[error("graph has {n} vertices, above the cap of {cap}")]
    TooLarge { n: usize, cap: usize },
}

pub type Result<T, E = GraphError> = std::result::Result<T, E>;
