//! Streams of small labeled graphs on `{1..n}`.
//!
//! Vertex pairs are numbered `(1,2), (1,3), .., (1,n), (2,3), ..`; bit `i` of
//! an edge mask says whether pair `i` is an edge.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{GraphError, Result};
use crate::graph::{Graph, Vertex};

use super::limits;

/// Default cap on `n` for exhaustive enumeration.
pub const EXHAUSTIVE_MAX_N: usize = 6;

/// Seed used when a caller asks for random graphs without choosing one.
pub const DEFAULT_SEED: u64 = 42;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EnumerationMode {
    /// Every labeled graph, in increasing edge-mask order.
    Exhaustive,
    /// `count` samples of G(n, 1/2) from ChaCha8 seeded with `seed`.
    Random { seed: u64, count: usize },
}

/// Vertex pairs of `{1..n}` in mask-bit order.
pub fn pairs(n: usize) -> Vec<(Vertex, Vertex)> {
    let n = n as Vertex;
    (1..=n)
        .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
        .collect()
}

/// Graph on `{1..n}` whose edges are the pairs selected by `mask`.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let edges = pairs(n)
        .into_iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, e)| e);
    Graph::new(1..=n as Vertex, edges).expect("pairs are distinct vertices of 1..=n")
}

/// Deterministic stream of graphs on `{1..n}`.
pub fn enumerate_graphs(
    n: usize,
    mode: EnumerationMode,
) -> Result<Box<dyn Iterator<Item = Graph> + Send>> {
    match mode {
        EnumerationMode::Exhaustive => {
            let cap = limits::cap(EXHAUSTIVE_MAX_N);
            let bits = n * n.saturating_sub(1) / 2;
            if n > cap || bits >= 64 {
                return Err(GraphError::TooLarge { n, cap });
            }
            Ok(Box::new(
                (0..1u64 << bits).map(move |m| graph_from_mask(n, m)),
            ))
        }
        EnumerationMode::Random { seed, count } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let pairs = pairs(n);
            Ok(Box::new((0..count).map(move |_| {
                let edges: Vec<_> = pairs
                    .iter()
                    .copied()
                    .filter(|_| rng.gen::<bool>())
                    .collect();
                Graph::new(1..=n as Vertex, edges).expect("pairs are distinct vertices of 1..=n")
            })))
        }
    }
}
