//! Decidable predicates and exact parameters: stable sets, cliques,
//! colorings, α / ω / χ with witnesses, covers, niceness and perfection.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{GraphError, Result};
use crate::graph::{Cover, Graph, Vertex, VertexSet};
use crate::mask::{Mask, WideMask};
use crate::search;

/// Assignment of color indices to vertices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Coloring(BTreeMap<Vertex, usize>);

impl Coloring {
    pub fn new() -> Self {
        Coloring(BTreeMap::new())
    }

    pub fn get(&self, v: Vertex) -> Option<usize> {
        self.0.get(&v).copied()
    }

    pub fn insert(&mut self, v: Vertex, color: usize) {
        self.0.insert(v, color);
    }

    pub fn iter(&self) -> impl Iterator<Item = (Vertex, usize)> + '_ {
        self.0.iter().map(|(&v, &c)| (v, c))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Colors assigned to the vertices of `g`.
    pub fn colors_used(&self, g: &Graph) -> BTreeSet<usize> {
        g.nodes().iter().filter_map(|v| self.get(v)).collect()
    }

    pub fn domain(&self) -> VertexSet {
        self.0.keys().copied().collect()
    }
}

impl FromIterator<(Vertex, usize)> for Coloring {
    fn from_iter<I: IntoIterator<Item = (Vertex, usize)>>(iter: I) -> Self {
        Coloring(iter.into_iter().collect())
    }
}

impl<const N: usize> From<[(Vertex, usize); N]> for Coloring {
    fn from(pairs: [(Vertex, usize); N]) -> Self {
        pairs.into_iter().collect()
    }
}

/// Exact α, ω, χ with witnesses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphParameters {
    pub alpha: usize,
    pub omega: usize,
    pub chi: usize,
    pub max_clique_witness: VertexSet,
    pub max_stable_witness: VertexSet,
    pub chi_witness: Coloring,
}

impl GraphParameters {
    /// Re-checks every witness against `g`.
    pub fn witnesses_valid(&self, g: &Graph) -> bool {
        self.omega <= self.chi
            && is_clique(g, &self.max_clique_witness)
            && self.max_clique_witness.len() == self.omega
            && is_stable(g, &self.max_stable_witness)
            && self.max_stable_witness.len() == self.alpha
            && is_valid_coloring(g, &self.chi_witness)
            && self.chi_witness.colors_used(g).len() == self.chi
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoverKind {
    Stable,
    Clique,
}

/// `set` lies inside the graph and no two members are adjacent.
pub fn is_stable(g: &Graph, set: &VertexSet) -> bool {
    set.is_subset(g.nodes()) && pairs(set).all(|(u, v)| !g.has_edge(u, v))
}

/// `set` lies inside the graph and every two members are adjacent.
pub fn is_clique(g: &Graph, set: &VertexSet) -> bool {
    set.is_subset(g.nodes()) && pairs(set).all(|(u, v)| g.has_edge(u, v))
}

fn pairs(set: &VertexSet) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
    let s = set.as_slice();
    s.iter()
        .enumerate()
        .flat_map(move |(i, &u)| s[i + 1..].iter().map(move |&v| (u, v)))
}

/// Total on the vertices of `g` and proper on its edges.
pub fn is_valid_coloring(g: &Graph, f: &Coloring) -> bool {
    g.nodes().iter().all(|v| f.get(v).is_some()) && g.edges().all(|(u, v)| f.get(u) != f.get(v))
}

fn to_vertices(g: &Graph, idx: impl IntoIterator<Item = usize>) -> VertexSet {
    idx.into_iter().map(|i| g.vertex_at(i)).collect()
}

fn parameters_with<M: Mask>(g: &Graph) -> GraphParameters {
    let adj = g.adjacency_masks::<M>();
    let full = M::full(g.order());
    let clique = search::max_clique(&adj, &full);
    let stable = search::max_clique(&search::complement_masks(&adj), &full);
    let (chi, coloring) = search::chromatic(&adj, &full, &clique);
    GraphParameters {
        alpha: stable.len(),
        omega: clique.len(),
        chi,
        max_clique_witness: to_vertices(g, clique),
        max_stable_witness: to_vertices(g, stable),
        chi_witness: coloring
            .into_iter()
            .map(|(i, c)| (g.vertex_at(i), c))
            .collect(),
    }
}

/// Exact α, ω and χ. The empty graph has all three equal to 0.
///
/// Witness cliques and stable sets are the lexicographically least of
/// maximum size; χ is found by deepening from ω.
pub fn graph_parameters(g: &Graph) -> GraphParameters {
    if g.order() <= 64 {
        parameters_with::<u64>(g)
    } else {
        parameters_with::<WideMask>(g)
    }
}

fn max_clique_of<M: Mask>(g: &Graph, adj: &[M]) -> VertexSet {
    to_vertices(g, search::max_clique(adj, &M::full(g.order())))
}

/// Lexicographically least maximum clique.
pub fn maximum_clique(g: &Graph) -> VertexSet {
    if g.order() <= 64 {
        max_clique_of(g, &g.adjacency_masks::<u64>())
    } else {
        max_clique_of(g, &g.adjacency_masks::<WideMask>())
    }
}

/// Lexicographically least maximum stable set.
pub fn maximum_stable_set(g: &Graph) -> VertexSet {
    if g.order() <= 64 {
        max_clique_of(g, &search::complement_masks(&g.adjacency_masks::<u64>()))
    } else {
        max_clique_of(
            g,
            &search::complement_masks(&g.adjacency_masks::<WideMask>()),
        )
    }
}

pub fn clique_number(g: &Graph) -> usize {
    maximum_clique(g).len()
}

pub fn stability_number(g: &Graph) -> usize {
    maximum_stable_set(g).len()
}

fn max_stable_sets_with<M: Mask>(g: &Graph) -> Cover {
    let comp = search::complement_masks(&g.adjacency_masks::<M>());
    let full = M::full(g.order());
    let alpha = search::max_clique(&comp, &full).len();
    search::cliques_of_size(&comp, &full, alpha)
        .into_iter()
        .map(|s| to_vertices(g, s))
        .collect()
}

/// All stable sets of size α(G), in lexicographic order.
///
/// The position of a set in this sequence is its index for the
/// separation construction. The empty graph yields the single empty set.
pub fn max_stable_sets(g: &Graph) -> Cover {
    if g.order() <= 64 {
        max_stable_sets_with::<u64>(g)
    } else {
        max_stable_sets_with::<WideMask>(g)
    }
}

/// χ(G) = ω(G).
pub fn is_nice(g: &Graph) -> bool {
    let p = graph_parameters(g);
    p.chi == p.omega
}

/// Smallest-first search for a vertex subset whose induced subgraph is not
/// nice. Subsets are visited by increasing size, then in increasing bitmask
/// order over vertex positions.
///
/// # Panics
///
/// If the graph has 64 or more vertices; every subset is visited.
pub fn find_imperfect_subgraph(g: &Graph) -> Option<VertexSet> {
    let n = g.order();
    assert!(
        n < 64,
        "perfection check enumerates 2^n subsets; n = {n} is out of range"
    );
    let adj = g.adjacency_masks::<u64>();
    // graphs on at most 3 vertices are always nice
    for k in 4..=n {
        let mut subset: u64 = (1u64 << k) - 1;
        let limit = 1u64 << n;
        while subset < limit {
            let clique = search::max_clique(&adj, &subset);
            if search::color_with(&adj, &subset, &clique, clique.len()).is_none() {
                return Some(to_vertices(g, subset.ones()));
            }
            // next subset of the same size (Gosper)
            let low = subset & subset.wrapping_neg();
            let ripple = subset + low;
            subset = (((ripple ^ subset) >> 2) / low) | ripple;
        }
    }
    None
}

/// Every induced subgraph is nice, checked over all vertex subsets.
pub fn is_perfect(g: &Graph) -> bool {
    find_imperfect_subgraph(g).is_none()
}

/// Union of the parts equals the vertex set and each part is stable
/// (resp. a clique).
pub fn check_cover(g: &Graph, cover: &Cover, kind: CoverKind) -> bool {
    cover.union_over() == *g.nodes()
        && cover.iter().all(|part| match kind {
            CoverKind::Stable => is_stable(g, part),
            CoverKind::Clique => is_clique(g, part),
        })
}

/// Color classes of a proper coloring, ordered by color index.
pub fn coloring_to_cover(g: &Graph, f: &Coloring) -> Result<Cover> {
    if !is_valid_coloring(g, f) {
        return Err(GraphError::InvalidColoring);
    }
    let mut classes: BTreeMap<usize, Vec<Vertex>> = BTreeMap::new();
    for v in g.nodes().iter() {
        classes.entry(f.get(v).expect("total")).or_default().push(v);
    }
    Ok(classes.into_values().map(VertexSet::from).collect())
}

/// Colors each vertex with the index of the first part containing it.
///
/// Uses at most `|cover|` colors, and exactly `|cover|` when the parts are
/// pairwise disjoint and nonempty.
pub fn cover_to_coloring(g: &Graph, cover: &Cover) -> Result<Coloring> {
    if !check_cover(g, cover, CoverKind::Stable) {
        return Err(GraphError::NotAStableCover);
    }
    Ok(g.nodes()
        .iter()
        .map(|v| {
            let idx = cover
                .iter()
                .position(|part| part.contains(v))
                .expect("cover spans the vertices");
            (v, idx)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    fn c5() -> Graph {
        named::cycle(5)
    }

    fn pentagon_one_clone() -> Graph {
        // pentagon with v4 replicated as 6
        Graph::new(
            1..=6,
            [
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 5),
                (5, 1),
                (6, 3),
                (6, 4),
                (6, 5),
            ],
        )
        .unwrap()
    }

    fn pentagon_two_clones() -> Graph {
        let mut edges: Vec<_> = pentagon_one_clone().edges().collect();
        edges.extend([(7, 1), (7, 2), (7, 3)]);
        Graph::new(1..=7, edges).unwrap()
    }

    #[test]
    fn stable_sets() {
        assert!(is_stable(&c5(), &[1, 3].into()));
        assert!(!is_stable(&c5(), &[1, 2].into()));
        assert!(is_stable(&named::house(), &[1, 3].into()));
        assert!(!is_stable(&named::house(), &[2, 4].into()));
        assert!(!is_stable(&c5(), &[1, 9].into()));
    }

    #[test]
    fn cliques() {
        assert!(is_clique(&named::house(), &[2, 3, 4].into()));
        for v in c5().nodes().iter() {
            assert!(is_clique(&c5(), &[v].into()));
        }
        assert!(!is_clique(&c5(), &[1, 2, 3].into()));
        assert!(!is_clique(&c5(), &[6].into()));
    }

    #[test]
    fn colorings() {
        let good = Coloring::from([(1, 0), (2, 1), (3, 0), (4, 1), (5, 2)]);
        assert!(is_valid_coloring(&c5(), &good));
        let bad = Coloring::from([(1, 0), (2, 1), (3, 0), (4, 1), (5, 0)]);
        assert!(!is_valid_coloring(&c5(), &bad));
        let k3 = named::complete(3);
        assert!(is_valid_coloring(
            &k3,
            &Coloring::from([(1, 7), (2, 3), (3, 0)])
        ));
        // partial
        assert!(!is_valid_coloring(&k3, &Coloring::from([(1, 0), (2, 1)])));
    }

    #[test]
    fn parameters_of_small_graphs() {
        let p = graph_parameters(&c5());
        assert_eq!((p.alpha, p.omega, p.chi), (2, 2, 3));
        assert!(p.witnesses_valid(&c5()));

        let double = named::join(&c5(), &c5());
        let p = graph_parameters(&double);
        assert_eq!((p.omega, p.chi), (4, 6));
        assert!(p.witnesses_valid(&double));

        let p = graph_parameters(&named::complete(4));
        assert_eq!((p.alpha, p.omega, p.chi), (1, 4, 4));
        let p = graph_parameters(&named::edgeless(3));
        assert_eq!((p.alpha, p.omega, p.chi), (3, 1, 1));
        let p = graph_parameters(&Graph::empty());
        assert_eq!((p.alpha, p.omega, p.chi), (0, 0, 0));
        assert!(p.witnesses_valid(&Graph::empty()));
    }

    #[test]
    fn maximum_stable_sets() {
        let expect =
            |v: Vec<[Vertex; 2]>| -> Cover { v.into_iter().map(VertexSet::from).collect() };
        assert_eq!(
            max_stable_sets(&c5()),
            expect(vec![[1, 3], [1, 4], [2, 4], [2, 5], [3, 5]])
        );
        assert_eq!(
            max_stable_sets(&named::cycle(4)),
            expect(vec![[1, 3], [2, 4]])
        );
        let k3: Cover = vec![[1].into(), [2].into(), [3].into()].into();
        assert_eq!(max_stable_sets(&named::complete(3)), k3);
        assert_eq!(
            max_stable_sets(&Graph::empty()),
            Cover::from(vec![VertexSet::new()])
        );
    }

    #[test]
    fn replication_flips_niceness() {
        assert!(!is_nice(&c5()));
        assert!(is_nice(&pentagon_one_clone()));
        assert!(!is_nice(&pentagon_two_clones()));
    }

    #[test]
    fn perfection() {
        assert!(is_perfect(&named::house()));
        assert!(!is_perfect(&c5()));
        for n in 1..=6 {
            assert!(is_perfect(&named::complete(n)));
            assert!(is_perfect(&named::path(n)));
            assert!(is_perfect(&named::edgeless(n)));
        }
        assert_eq!(
            find_imperfect_subgraph(&pentagon_one_clone()),
            Some([1, 2, 3, 4, 5].into())
        );
    }

    #[test]
    fn covers() {
        let stable: Cover = vec![[1, 3].into(), [2, 4].into(), [5].into()].into();
        assert!(check_cover(&c5(), &stable, CoverKind::Stable));
        let cliques: Cover = vec![[1, 2].into(), [3, 4].into()].into();
        assert!(check_cover(&named::cycle(4), &cliques, CoverKind::Clique));
        let short: Cover = vec![[1, 3].into(), [2, 4].into()].into();
        assert!(!check_cover(&c5(), &short, CoverKind::Stable));
    }

    #[test]
    fn coloring_cover_conversions() {
        let f = Coloring::from([(1, 0), (2, 1), (3, 0), (4, 1), (5, 2)]);
        let cover = coloring_to_cover(&c5(), &f).unwrap();
        let expect: Cover = vec![[1, 3].into(), [2, 4].into(), [5].into()].into();
        assert_eq!(cover, expect);
        let back = cover_to_coloring(&c5(), &cover).unwrap();
        assert_eq!(back.colors_used(&c5()).len(), 3);

        let k3 = named::complete(3);
        let cover = coloring_to_cover(&k3, &Coloring::from([(1, 0), (2, 1), (3, 2)])).unwrap();
        assert_eq!(cover.len(), 3);

        let e2 = named::edgeless(2);
        let cover = coloring_to_cover(&e2, &Coloring::from([(1, 4), (2, 4)])).unwrap();
        assert_eq!(cover, Cover::from(vec![[1, 2].into()]));

        let bad = Coloring::from([(1, 0), (2, 0), (3, 1)]);
        assert_eq!(
            coloring_to_cover(&k3, &bad),
            Err(GraphError::InvalidColoring)
        );

        let c4 = named::cycle(4);
        let dup: Cover = vec![[1, 3].into(), [1, 3].into(), [2, 4].into()].into();
        let f = cover_to_coloring(&c4, &dup).unwrap();
        assert!(is_valid_coloring(&c4, &f));
        assert_eq!(f.colors_used(&c4).len(), 2);

        let k1 = named::complete(1);
        let f = cover_to_coloring(&k1, &Cover::from(vec![[1].into()])).unwrap();
        assert_eq!(f.colors_used(&k1).len(), 1);

        let not_stable: Cover = vec![[1, 2].into(), [3, 4].into()].into();
        assert_eq!(
            cover_to_coloring(&c4, &not_stable),
            Err(GraphError::NotAStableCover)
        );
    }
}
