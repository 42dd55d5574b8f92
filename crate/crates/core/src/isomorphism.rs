//! Isomorphism witnesses between graphs with possibly different vertex ids.
//!
//! A witness is a pair of maps `(forward, backward)`: both must be
//! morphisms and `backward` must undo `forward` on the source vertices.

use std::collections::BTreeMap;

use crate::error::{GraphError, Result};
use crate::graph::{Graph, Vertex, VertexSet};

pub type VertexMap = BTreeMap<Vertex, Vertex>;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IsoWitness {
    pub forward: VertexMap,
    pub backward: VertexMap,
}

/// Image of `set` under `f`; vertices where `f` is undefined are skipped.
pub fn image(f: &VertexMap, set: &VertexSet) -> VertexSet {
    set.iter().filter_map(|v| f.get(&v).copied()).collect()
}

/// Checks that `f` maps the vertices of `g` onto those of `h` and that
/// adjacency between any two vertices of `g` equals adjacency of their images.
pub fn verify_morph(f: &VertexMap, g: &Graph, h: &Graph) -> Result<bool> {
    if let Some(v) = g.nodes().iter().find(|v| !f.contains_key(v)) {
        return Err(GraphError::PartialMap(v));
    }
    if image(f, g.nodes()) != *h.nodes() {
        return Ok(false);
    }
    let vs = g.nodes().as_slice();
    for (i, &x) in vs.iter().enumerate() {
        for &y in &vs[i + 1..] {
            if g.has_edge(x, y) != h.has_edge(f[&x], f[&y]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub fn verify_iso_witness(w: &IsoWitness, g: &Graph, h: &Graph) -> bool {
    verify_morph(&w.forward, g, h).unwrap_or(false)
        && verify_morph(&w.backward, h, g).unwrap_or(false)
        && g.nodes()
            .iter()
            .all(|x| w.backward.get(&w.forward[&x]) == Some(&x))
}

/// A morphism that is one-to-one on the source vertices yields a witness
/// whose backward map is its inverse.
pub fn witness_from_morph(f: &VertexMap, g: &Graph, h: &Graph) -> Option<IsoWitness> {
    if !verify_morph(f, g, h).ok()? {
        return None;
    }
    let forward: VertexMap = g.nodes().iter().map(|v| (v, f[&v])).collect();
    let backward: VertexMap = forward.iter().map(|(&a, &b)| (b, a)).collect();
    (backward.len() == forward.len()).then_some(IsoWitness { forward, backward })
}

/// Witness for `g → k` from witnesses for `g → h` and `h → k`.
pub fn compose(first: &IsoWitness, second: &IsoWitness) -> IsoWitness {
    let chain = |a: &VertexMap, b: &VertexMap| -> VertexMap {
        a.iter()
            .filter_map(|(&x, y)| b.get(y).map(|&z| (x, z)))
            .collect()
    };
    IsoWitness {
        forward: chain(&first.forward, &second.forward),
        backward: chain(&second.backward, &first.backward),
    }
}

/// Restricts a witness for `g → h` to the subgraph of `g` induced on
/// `subset`, returning the matching induced subgraph of `h` with it.
pub fn restrict(w: &IsoWitness, h: &Graph, subset: &VertexSet) -> Result<(Graph, IsoWitness)> {
    let target = image(&w.forward, subset);
    let sub_h = h.induced_subgraph(&target)?;
    let forward = subset
        .iter()
        .map(|v| {
            w.forward
                .get(&v)
                .map(|&u| (v, u))
                .ok_or(GraphError::PartialMap(v))
        })
        .collect::<Result<VertexMap>>()?;
    let backward = target
        .iter()
        .map(|u| {
            w.backward
                .get(&u)
                .map(|&v| (u, v))
                .ok_or(GraphError::PartialMap(u))
        })
        .collect::<Result<VertexMap>>()?;
    Ok((sub_h, IsoWitness { forward, backward }))
}

/// Per-vertex signature: degree and sorted multiset of neighbor degrees.
fn signatures(g: &Graph) -> Vec<(usize, Vec<usize>)> {
    (0..g.order())
        .map(|i| {
            let mut nd: Vec<usize> = g
                .neighbor_indices(i)
                .iter()
                .map(|&j| g.neighbor_indices(j).len())
                .collect();
            nd.sort_unstable();
            (nd.len(), nd)
        })
        .collect()
}

fn matrix(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.order();
    let mut m = vec![vec![false; n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        for &j in g.neighbor_indices(i) {
            row[j] = true;
        }
    }
    m
}

/// Backtracking search for an isomorphism. Vertex pairs must agree on
/// degree and neighbor-degree multiset before adjacency is checked.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<IsoWitness> {
    if g.order() != h.order() || g.size() != h.size() {
        return None;
    }
    let sg = signatures(g);
    let sh = signatures(h);
    let mut sorted_g = sg.clone();
    let mut sorted_h = sh.clone();
    sorted_g.sort();
    sorted_h.sort();
    if sorted_g != sorted_h {
        return None;
    }

    let n = g.order();
    let candidates: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..n).filter(|&j| sh[j] == sg[i]).collect())
        .collect();
    // most constrained first, then higher degree
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| (candidates[i].len(), std::cmp::Reverse(sg[i].0), i));

    let ag = matrix(g);
    let ah = matrix(h);
    let mut assigned: Vec<Option<usize>> = vec![None; n];
    let mut used = vec![false; n];

    fn extend(
        pos: usize,
        order: &[usize],
        candidates: &[Vec<usize>],
        ag: &[Vec<bool>],
        ah: &[Vec<bool>],
        assigned: &mut [Option<usize>],
        used: &mut [bool],
    ) -> bool {
        let Some(&i) = order.get(pos) else {
            return true;
        };
        for &j in &candidates[i] {
            if used[j] {
                continue;
            }
            let consistent = order[..pos].iter().all(|&k| {
                let mk = assigned[k].expect("earlier positions are assigned");
                ag[i][k] == ah[j][mk]
            });
            if !consistent {
                continue;
            }
            assigned[i] = Some(j);
            used[j] = true;
            if extend(pos + 1, order, candidates, ag, ah, assigned, used) {
                return true;
            }
            assigned[i] = None;
            used[j] = false;
        }
        false
    }

    if !extend(0, &order, &candidates, &ag, &ah, &mut assigned, &mut used) {
        return None;
    }
    let forward: VertexMap = (0..n)
        .map(|i| (g.vertex_at(i), h.vertex_at(assigned[i].expect("complete"))))
        .collect();
    let backward = forward.iter().map(|(&a, &b)| (b, a)).collect();
    Some(IsoWitness { forward, backward })
}
