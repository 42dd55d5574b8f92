//! Graph-building operations: single-vertex replication, expansion of every
//! vertex into a clique, the disjoint re-tagging of a cover, and the
//! separated graph in which intersecting maximum stable sets are pulled apart.
//!
//! Fresh vertices take consecutive ids above the largest existing id, so all
//! outputs are deterministic.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{GraphError, Result};
use crate::graph::{Cover, Graph, Vertex, VertexSet};
use crate::invariants::max_stable_sets;
use crate::isomorphism::{IsoWitness, VertexMap};

/// Origin vertex and copy / part index for each fresh vertex.
pub type OriginTags = BTreeMap<Vertex, (Vertex, usize)>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReplicationWitness {
    pub base: Vertex,
    pub clone: Vertex,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpansionWitness {
    pub back: VertexMap,
    pub origin_tags: OriginTags,
}

/// Adds a clone of `a` adjacent to `a` and to every neighbor of `a`.
pub fn replicate(g: &Graph, a: Vertex) -> Result<(Graph, ReplicationWitness)> {
    if !g.contains(a) {
        return Err(GraphError::VertexNotFound(a));
    }
    let clone = g.next_fresh_id();
    let new_edges: Vec<(Vertex, Vertex)> = g
        .neighbors(a)
        .chain(std::iter::once(a))
        .map(|x| (x, clone))
        .collect();
    let h = Graph::new(
        g.nodes().iter().chain(std::iter::once(clone)),
        g.edges().chain(new_edges),
    )?;
    Ok((h, ReplicationWitness { base: a, clone }))
}

/// Checks every clause of the replication relation between `g` and `h`.
/// Neighbor mirroring is checked for vertices of `g`; edges are false
/// elsewhere by construction of [`Graph`].
pub fn verify_replication(g: &Graph, w: &ReplicationWitness, h: &Graph) -> bool {
    let ReplicationWitness { base: a, clone } = *w;
    let same_nodes = *h.nodes()
        == g.nodes()
            .iter()
            .chain(std::iter::once(clone))
            .collect::<VertexSet>();
    let vs = g.nodes().as_slice();
    let preserved = vs.iter().enumerate().all(|(i, &x)| {
        vs[i + 1..]
            .iter()
            .all(|&y| g.has_edge(x, y) == h.has_edge(x, y))
    });
    let mirrored = vs
        .iter()
        .filter(|&&x| x != a)
        .all(|&x| g.has_edge(x, a) == h.has_edge(x, clone));
    g.contains(a)
        && !g.contains(clone)
        && same_nodes
        && h.has_edge(a, clone)
        && preserved
        && mirrored
}

/// Witness that `g` is isomorphic to `h - base` through the map swapping
/// base and clone.
pub fn replication_embedding(g: &Graph, w: &ReplicationWitness) -> IsoWitness {
    let swap = |v: Vertex| if v == w.base { w.clone } else { v };
    let forward: VertexMap = g.nodes().iter().map(|v| (v, swap(v))).collect();
    let backward = forward.iter().map(|(&x, &y)| (y, x)).collect();
    IsoWitness { forward, backward }
}

/// Replaces each vertex `v` by a clique on `mult[v]` fresh vertices tagged
/// `(v, 0..mult[v])`. Vertices from different cliques are adjacent exactly
/// when their origins are. Fresh ids are allocated in `(origin, copy)` order.
pub fn expand(g: &Graph, mult: &BTreeMap<Vertex, usize>) -> Result<(Graph, ExpansionWitness)> {
    for v in g.nodes().iter() {
        match mult.get(&v) {
            None => return Err(GraphError::PartialMap(v)),
            Some(0) => return Err(GraphError::ZeroMultiplicity(v)),
            Some(_) => {}
        }
    }
    let mut next = g.next_fresh_id();
    let mut origin_tags = OriginTags::new();
    let mut blocks: BTreeMap<Vertex, Vec<Vertex>> = BTreeMap::new();
    for v in g.nodes().iter() {
        for copy in 0..mult[&v] {
            origin_tags.insert(next, (v, copy));
            blocks.entry(v).or_default().push(next);
            next += 1;
        }
    }
    let mut edges = Vec::new();
    for block in blocks.values() {
        for (i, &x) in block.iter().enumerate() {
            edges.extend(block[i + 1..].iter().map(|&y| (x, y)));
        }
    }
    for (u, v) in g.edges() {
        for &x in &blocks[&u] {
            edges.extend(blocks[&v].iter().map(|&y| (x, y)));
        }
    }
    let h = Graph::new(origin_tags.keys().copied(), edges)?;
    let back = origin_tags.iter().map(|(&x, &(v, _))| (x, v)).collect();
    Ok((h, ExpansionWitness { back, origin_tags }))
}

/// Checks that `h` is an expansion of `g` through `back`: the image of
/// `h`'s vertices is exactly `g`'s, vertices with the same image are
/// adjacent, and vertices with distinct images are adjacent iff the images are.
pub fn verify_expansion(g: &Graph, h: &Graph, back: &VertexMap) -> Result<bool> {
    if let Some(v) = h.nodes().iter().find(|v| !back.contains_key(v)) {
        return Err(GraphError::PartialMap(v));
    }
    let img: VertexSet = h.nodes().iter().map(|v| back[&v]).collect();
    if img != *g.nodes() {
        return Ok(false);
    }
    let vs = h.nodes().as_slice();
    for (i, &x) in vs.iter().enumerate() {
        for &y in &vs[i + 1..] {
            let (gx, gy) = (back[&x], back[&y]);
            let expected = gx == gy || g.has_edge(gx, gy);
            if h.has_edge(x, y) != expected {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Re-tags part `i` of the cover with fresh vertices standing for `(v, i)`,
/// making the parts pairwise disjoint. Fresh ids start above the largest
/// covered vertex and follow `(part index, origin)` order.
pub fn mk_disj(cover: &Cover) -> (Cover, OriginTags) {
    let mut next = cover.union_over().last().map_or(0, |v| v + 1);
    let mut tags = OriginTags::new();
    let parts = cover
        .iter()
        .enumerate()
        .map(|(i, part)| {
            part.iter()
                .map(|v| {
                    let id = next;
                    next += 1;
                    tags.insert(id, (v, i));
                    id
                })
                .collect::<VertexSet>()
        })
        .collect();
    (parts, tags)
}

/// The separation construction on `g`.
#[derive(Clone, Debug)]
pub struct SeparatedGraph {
    /// Maximum stable sets of `g`, in lexicographic order.
    pub cover: Cover,
    /// Subgraph of `g` induced on the union of `cover`.
    pub gs: Graph,
    /// `cover` re-tagged into disjoint parts of fresh vertices.
    pub disjoint_cover: Cover,
    pub gs_prime: Graph,
    /// Origin projection from `gs_prime` to `gs`.
    pub back: VertexMap,
    pub tags: OriginTags,
}

/// Builds `Gs` and `Gs'`. Two fresh vertices of `Gs'` with the same origin
/// are adjacent iff their part indices differ; with different origins they
/// are adjacent iff the origins are adjacent in `Gs`.
pub fn build_separated_graph(g: &Graph) -> Result<SeparatedGraph> {
    if g.is_empty() {
        return Err(GraphError::EmptyGraph);
    }
    let cover = max_stable_sets(g);
    let gs = g.induced_subgraph(&cover.union_over())?;
    let (disjoint_cover, tags) = mk_disj(&cover);
    let fresh: Vec<Vertex> = tags.keys().copied().collect();
    let mut edges = BTreeSet::new();
    for (i, &x) in fresh.iter().enumerate() {
        let (ox, ix) = tags[&x];
        for &y in &fresh[i + 1..] {
            let (oy, iy) = tags[&y];
            let adjacent = if ox == oy {
                ix != iy
            } else {
                gs.has_edge(ox, oy)
            };
            if adjacent {
                edges.insert((x, y));
            }
        }
    }
    let gs_prime = Graph::new(fresh, edges)?;
    let back = tags.iter().map(|(&x, &(v, _))| (x, v)).collect();
    Ok(SeparatedGraph {
        cover,
        gs,
        disjoint_cover,
        gs_prime,
        back,
        tags,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::{is_nice, is_perfect};
    use crate::isomorphism::{find_isomorphism, verify_iso_witness};
    use crate::named;

    #[test]
    fn replication_examples() {
        let (g2, w) = replicate(&named::cycle(5), 4).unwrap();
        assert_eq!(w, ReplicationWitness { base: 4, clone: 6 });
        assert_eq!(g2.order(), 6);
        assert!(is_nice(&g2));
        assert!(verify_replication(&named::cycle(5), &w, &g2));

        let (g3, w3) = replicate(&g2, 2).unwrap();
        assert!(!is_nice(&g3));
        assert!(verify_replication(&g2, &w3, &g3));

        let (k2, _) = replicate(&named::complete(1), 1).unwrap();
        assert_eq!(k2, named::complete(2));
        assert_eq!(
            replicate(&named::complete(1), 5),
            Err(GraphError::VertexNotFound(5))
        );
    }

    #[test]
    fn replication_checker_rejects_mutations() {
        let g = named::house();
        let (h, w) = replicate(&g, 3).unwrap();
        let without_clone_edge =
            Graph::new(h.nodes().iter(), h.edges().filter(|&e| e != (3, w.clone))).unwrap();
        assert!(!verify_replication(&g, &w, &without_clone_edge));

        // 1 is not adjacent to 3, give the clone the extra neighbor 1
        let extra = Graph::new(h.nodes().iter(), h.edges().chain([(1, w.clone)])).unwrap();
        assert!(!verify_replication(&g, &w, &extra));
    }

    #[test]
    fn replication_embeds_source() {
        let g = named::house();
        for a in g.nodes().iter() {
            let (h, w) = replicate(&g, a).unwrap();
            let rest = h.nodes().difference(&[a].into());
            let h_minus_a = h.induced_subgraph(&rest).unwrap();
            let iso = replication_embedding(&g, &w);
            assert!(verify_iso_witness(&iso, &g, &h_minus_a));
        }
    }

    #[test]
    fn expansion_of_square() {
        // a, b, c, d = 1, 2, 3, 4 around the square
        let g = named::cycle(4);
        let mult = BTreeMap::from([(1, 2), (2, 3), (3, 4), (4, 1)]);
        let (h, w) = expand(&g, &mult).unwrap();
        assert_eq!(h.order(), 10);
        // 10 edges inside the cliques plus 6 + 12 + 4 + 2 between them
        assert_eq!(h.size(), 34);
        assert_eq!(verify_expansion(&g, &h, &w.back), Ok(true));
        assert_eq!(w.origin_tags[&5], (1, 0));
        assert_eq!(w.origin_tags[&14], (4, 0));
        assert!(is_perfect(&h));
    }

    #[test]
    fn expansion_edge_cases() {
        let g = named::house();
        let ones: BTreeMap<_, _> = g.nodes().iter().map(|v| (v, 1)).collect();
        let (h, w) = expand(&g, &ones).unwrap();
        let iso = crate::isomorphism::witness_from_morph(&w.back, &h, &g).unwrap();
        assert!(verify_iso_witness(&iso, &h, &g));

        let (k3, _) = expand(&named::complete(1), &BTreeMap::from([(1, 3)])).unwrap();
        assert!(find_isomorphism(&k3, &named::complete(3)).is_some());

        assert_eq!(
            expand(&named::complete(2), &BTreeMap::from([(1, 1)])).unwrap_err(),
            GraphError::PartialMap(2)
        );
        assert_eq!(
            expand(&named::complete(2), &BTreeMap::from([(1, 1), (2, 0)])).unwrap_err(),
            GraphError::ZeroMultiplicity(2)
        );

        let id: VertexMap = g.nodes().iter().map(|v| (v, v)).collect();
        assert_eq!(verify_expansion(&g, &g, &id), Ok(true));
        assert_eq!(
            verify_expansion(&g, &g, &VertexMap::new()),
            Err(GraphError::PartialMap(1))
        );
    }

    #[test]
    fn disjoint_tagging() {
        let c: Cover = vec![[1, 2].into(), [2, 3].into()].into();
        let (parts, tags) = mk_disj(&c);
        assert_eq!(parts, Cover::from(vec![[4, 5].into(), [6, 7].into()]));
        assert_eq!(
            tags.into_iter().collect::<Vec<_>>(),
            vec![(4, (1, 0)), (5, (2, 0)), (6, (2, 1)), (7, (3, 1))]
        );
        let (empty, tags) = mk_disj(&Cover::new());
        assert!(empty.is_empty() && tags.is_empty());

        let (parts, tags) = mk_disj(&max_stable_sets(&named::cycle(5)));
        assert_eq!(parts.len(), 5);
        assert_eq!(tags.len(), 10);
        assert!(parts.iter().all(|p| p.len() == 2));
    }

    #[test]
    fn separated_square() {
        let s = build_separated_graph(&named::cycle(4)).unwrap();
        assert_eq!(s.cover, Cover::from(vec![[1, 3].into(), [2, 4].into()]));
        assert_eq!(s.gs, named::cycle(4));
        assert!(find_isomorphism(&s.gs_prime, &named::cycle(4)).is_some());
        let images: BTreeSet<Vertex> = s.back.values().copied().collect();
        assert_eq!(images.len(), s.back.len());
        assert_eq!(verify_expansion(&s.gs, &s.gs_prime, &s.back), Ok(true));
    }

    #[test]
    fn separated_pentagon_doubles_every_vertex() {
        let c5 = named::cycle(5);
        let s = build_separated_graph(&c5).unwrap();
        assert_eq!(s.gs_prime.order(), 10);
        let doubled = expand(&c5, &c5.nodes().iter().map(|v| (v, 2)).collect())
            .unwrap()
            .0;
        assert!(find_isomorphism(&s.gs_prime, &doubled).is_some());
    }

    #[test]
    fn separated_edge() {
        let s = build_separated_graph(&named::complete(2)).unwrap();
        assert_eq!(s.cover, Cover::from(vec![[1].into(), [2].into()]));
        assert!(find_isomorphism(&s.gs_prime, &named::complete(2)).is_some());
        assert_eq!(
            build_separated_graph(&Graph::empty()).unwrap_err(),
            GraphError::EmptyGraph
        );
    }
}
