//! Finite simple graphs with exact invariants, the replication / expansion /
//! separation constructions, and a certifying pipeline that turns a perfect
//! graph into a clique cover of size α(G) and a matching coloring of its
//! complement. Brute-force oracles and exhaustive sweeps cross-check all of it.

pub mod constructions;
pub mod error;
pub mod graph;
pub mod invariants;
pub mod io;
pub mod isomorphism;
pub mod named;
pub mod oracles;
pub mod pipeline;

mod mask;
mod search;

pub use error::{GraphError, Result};
pub use graph::{is_induced_subgraph, union_over, Cover, Graph, Vertex, VertexSet};
pub use invariants::{Coloring, CoverKind, GraphParameters};
