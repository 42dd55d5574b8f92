//! Subset-enumeration parameters and definition-based perfection.
//!
//! Nothing here calls into the invariants module: every answer comes from
//! plain enumeration over the edge relation.

use crate::error::{GraphError, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::invariants::{Coloring, GraphParameters};

use super::limits;

/// Default cap on the order accepted by [`oracle_parameters`].
pub const ORACLE_MAX_N: usize = 20;

fn subset(vs: &[Vertex], mask: u64) -> Vec<Vertex> {
    vs.iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, &v)| v)
        .collect()
}

fn all_pairs(set: &[Vertex], mut pred: impl FnMut(Vertex, Vertex) -> bool) -> bool {
    for i in 0..set.len() {
        for j in i + 1..set.len() {
            if !pred(set[i], set[j]) {
                return false;
            }
        }
    }
    true
}

/// Tries every assignment of `k` colors, odometer style.
fn k_coloring(g: &Graph, vs: &[Vertex], k: usize) -> Option<Vec<usize>> {
    let n = vs.len();
    if n == 0 {
        return Some(Vec::new());
    }
    if k == 0 {
        return None;
    }
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| g.has_edge(vs[i], vs[j]))
        .collect();
    let mut colors = vec![0usize; n];
    loop {
        if edges.iter().all(|&(i, j)| colors[i] != colors[j]) {
            return Some(colors);
        }
        let mut pos = 0;
        loop {
            if pos == n {
                return None;
            }
            colors[pos] += 1;
            if colors[pos] < k {
                break;
            }
            colors[pos] = 0;
            pos += 1;
        }
    }
}

fn check_size(g: &Graph, cap: usize) -> Result<()> {
    if g.order() > cap {
        Err(GraphError::TooLarge { n: g.order(), cap })
    } else {
        Ok(())
    }
}

/// α and ω by enumerating every vertex subset; χ by trying every coloring
/// with 1, 2, ... colors.
pub fn oracle_parameters(g: &Graph) -> Result<GraphParameters> {
    check_size(g, limits::cap(ORACLE_MAX_N))?;
    let vs = g.nodes().as_slice();
    let n = vs.len();
    let mut best_clique: Vec<Vertex> = Vec::new();
    let mut best_stable: Vec<Vertex> = Vec::new();
    for mask in 0..(1u64 << n) {
        let s = subset(vs, mask);
        if s.len() > best_clique.len() && all_pairs(&s, |u, v| g.has_edge(u, v)) {
            best_clique = s.clone();
        }
        if s.len() > best_stable.len() && all_pairs(&s, |u, v| !g.has_edge(u, v)) {
            best_stable = s;
        }
    }
    let (chi, colors) = (0..=n)
        .find_map(|k| k_coloring(g, vs, k).map(|c| (k, c)))
        .expect("n colors always suffice");
    Ok(GraphParameters {
        alpha: best_stable.len(),
        omega: best_clique.len(),
        chi,
        max_clique_witness: VertexSet::from(best_clique),
        max_stable_witness: VertexSet::from(best_stable),
        chi_witness: vs.iter().copied().zip(colors).collect::<Coloring>(),
    })
}

/// χ > ω on the subgraph induced by `set`, by enumeration.
pub fn oracle_not_nice(g: &Graph, set: &VertexSet) -> Result<bool> {
    let sub = g.induced_subgraph(set)?;
    let p = oracle_parameters(&sub)?;
    Ok(p.chi > p.omega)
}

/// Perfection straight from the definition: every induced subgraph nice,
/// with parameters from [`oracle_parameters`].
pub fn oracle_is_perfect(g: &Graph) -> Result<bool> {
    check_size(g, limits::cap(ORACLE_MAX_N))?;
    let vs = g.nodes().as_slice();
    for mask in 0..(1u64 << vs.len()) {
        let set: VertexSet = subset(vs, mask).into();
        if oracle_not_nice(g, &set)? {
            return Ok(false);
        }
    }
    Ok(true)
}
