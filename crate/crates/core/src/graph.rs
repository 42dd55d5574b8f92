//! Canonical finite simple undirected graphs over integer vertices.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{GraphError, Result};
use crate::mask::Mask;

/// Vertices are non-negative integers under their natural order.
pub type Vertex = u32;

/// A strictly increasing sequence of vertices.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "Vec<Vertex>", into = "Vec<Vertex>")]
pub struct VertexSet(Vec<Vertex>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = Vertex> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn first(&self) -> Option<Vertex> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<Vertex> {
        self.0.last().copied()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.iter().chain(other.iter()).collect()
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.iter().filter(|&v| other.contains(v)).collect())
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.iter().filter(|&v| !other.contains(v)).collect())
    }

    /// True when the two sets share at least one vertex.
    pub fn meets(&self, other: &VertexSet) -> bool {
        self.iter().any(|v| other.contains(v))
    }

    pub fn into_vec(self) -> Vec<Vertex> {
        self.0
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        let mut v: Vec<Vertex> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}

impl From<Vec<Vertex>> for VertexSet {
    fn from(v: Vec<Vertex>) -> Self {
        v.into_iter().collect()
    }
}

impl<const N: usize> From<[Vertex; N]> for VertexSet {
    fn from(v: [Vertex; N]) -> Self {
        v.into_iter().collect()
    }
}

impl From<VertexSet> for Vec<Vertex> {
    fn from(s: VertexSet) -> Self {
        s.0
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// A sequence of vertex sets. Parts may overlap and may repeat.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Cover(Vec<VertexSet>);

impl Cover {
    pub fn new() -> Self {
        Cover(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn parts(&self) -> &[VertexSet] {
        &self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, VertexSet> {
        self.0.iter()
    }

    pub fn push(&mut self, part: VertexSet) {
        self.0.push(part);
    }

    pub fn into_parts(self) -> Vec<VertexSet> {
        self.0
    }

    /// Sorted, duplicate-free union of all parts.
    pub fn union_over(&self) -> VertexSet {
        self.0.iter().flat_map(|p| p.iter()).collect()
    }
}

impl From<Vec<VertexSet>> for Cover {
    fn from(parts: Vec<VertexSet>) -> Self {
        Cover(parts)
    }
}

impl FromIterator<VertexSet> for Cover {
    fn from_iter<I: IntoIterator<Item = VertexSet>>(iter: I) -> Self {
        Cover(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a Cover {
    type Item = &'a VertexSet;
    type IntoIter = std::slice::Iter<'a, VertexSet>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// Sorted, duplicate-free union of all parts of `cover`.
pub fn union_over(cover: &Cover) -> VertexSet {
    cover.union_over()
}

/// A finite simple undirected graph.
///
/// Edges are stored once as `(low, high)` pairs, both endpoints are always
/// vertices of the graph and there are no self-loops. Values are immutable
/// once built.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    nodes: VertexSet,
    edges: BTreeSet<(Vertex, Vertex)>,
    // neighbor indices per vertex index, derived from `edges`
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a canonical graph from raw input. Vertices and edges may be
    /// unsorted or repeated; `(u, v)` and `(v, u)` denote the same edge.
    pub fn new<N, E>(nodes: N, edges: E) -> Result<Graph>
    where
        N: IntoIterator<Item = Vertex>,
        E: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let nodes: VertexSet = nodes.into_iter().collect();
        let mut canon = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if !nodes.contains(u) || !nodes.contains(v) {
                return Err(GraphError::DanglingEdge(u, v));
            }
            canon.insert((u.min(v), u.max(v)));
        }
        Ok(Self::from_canonical(nodes, canon))
    }

    /// Graph with no vertices.
    pub fn empty() -> Graph {
        Self::from_canonical(VertexSet::new(), BTreeSet::new())
    }

    pub(crate) fn from_canonical(nodes: VertexSet, edges: BTreeSet<(Vertex, Vertex)>) -> Graph {
        let mut adjacency = vec![Vec::new(); nodes.len()];
        for &(u, v) in &edges {
            let iu = nodes.0.binary_search(&u).expect("edge endpoint in nodes");
            let iv = nodes.0.binary_search(&v).expect("edge endpoint in nodes");
            adjacency[iu].push(iv);
            adjacency[iv].push(iu);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Graph {
            nodes,
            edges,
            adjacency,
        }
    }

    pub fn nodes(&self) -> &VertexSet {
        &self.nodes
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.nodes.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.nodes.contains(v)
    }

    /// Edges as `(low, high)` pairs in increasing order.
    pub fn edges(&self) -> impl ExactSizeIterator<Item = (Vertex, Vertex)> + '_ {
        self.edges.iter().copied()
    }

    /// Edge relation; false whenever either endpoint is not a vertex.
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u != v && self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        let list = match self.index_of(v) {
            Some(i) => self.adjacency[i].as_slice(),
            None => &[],
        };
        list.iter().map(|&j| self.nodes.0[j])
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.index_of(v).map_or(0, |i| self.adjacency[i].len())
    }

    pub(crate) fn index_of(&self, v: Vertex) -> Option<usize> {
        self.nodes.0.binary_search(&v).ok()
    }

    pub(crate) fn vertex_at(&self, i: usize) -> Vertex {
        self.nodes.0[i]
    }

    pub(crate) fn neighbor_indices(&self, i: usize) -> &[usize] {
        &self.adjacency[i]
    }

    /// Adjacency as one bitset of neighbor indices per vertex index.
    pub(crate) fn adjacency_masks<M: Mask>(&self) -> Vec<M> {
        let n = self.order();
        self.adjacency
            .iter()
            .map(|list| {
                let mut m = M::empty(n);
                for &j in list {
                    m.insert(j);
                }
                m
            })
            .collect()
    }

    /// Smallest id strictly above every vertex (0 for the empty graph).
    pub fn next_fresh_id(&self) -> Vertex {
        self.nodes.last().map_or(0, |v| v + 1)
    }

    /// Subgraph induced on `subset`.
    pub fn induced_subgraph(&self, subset: &VertexSet) -> Result<Graph> {
        if !subset.is_subset(&self.nodes) {
            return Err(GraphError::NotSubset);
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| subset.contains(u) && subset.contains(v))
            .copied()
            .collect();
        Ok(Self::from_canonical(subset.clone(), edges))
    }

    /// Same vertices; distinct `u`, `v` adjacent iff they are not adjacent here.
    pub fn complement(&self) -> Graph {
        let vs = self.nodes.as_slice();
        let mut edges = BTreeSet::new();
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                if !self.edges.contains(&(u, v)) {
                    edges.insert((u, v));
                }
            }
        }
        Self::from_canonical(self.nodes.clone(), edges)
    }

    /// True iff `self` is the subgraph of `host` induced on `self`'s vertices.
    pub fn is_induced_subgraph_of(&self, host: &Graph) -> bool {
        self.nodes.is_subset(&host.nodes)
            && host
                .induced_subgraph(&self.nodes)
                .is_ok_and(|sub| sub.edges == self.edges)
    }
}

/// True iff `h` is an induced subgraph of `g`.
pub fn is_induced_subgraph(h: &Graph, g: &Graph) -> bool {
    h.is_induced_subgraph_of(g)
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("nodes", &self.nodes)
            .field("edges", &self.edges)
            .finish()
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "V={} E=[", self.nodes)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    #[test]
    fn builds_pentagon() {
        let g = Graph::new(1..=5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)]).unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(g.size(), 5);
        assert!(g.has_edge(5, 1));
        assert!(!g.has_edge(1, 3));
    }

    #[test]
    fn canonicalizes_permissive_input() {
        let g = Graph::new([3, 1, 2, 1], [(2, 1), (1, 2), (3, 2)]).unwrap();
        assert_eq!(g.nodes().as_slice(), &[1, 2, 3]);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(1, 2), (2, 3)]);
        let again = Graph::new(g.nodes().iter(), g.edges()).unwrap();
        assert_eq!(again, g);
    }

    #[test]
    fn edgeless_and_errors() {
        let g = Graph::new([1, 2, 3], []).unwrap();
        assert_eq!(g.size(), 0);
        assert_eq!(Graph::new([1, 2], [(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert_eq!(
            Graph::new([1, 2], [(1, 7)]),
            Err(GraphError::DanglingEdge(1, 7))
        );
    }

    #[test]
    fn induced_subgraphs() {
        let c5 = named::cycle(5);
        let p = c5.induced_subgraph(&[1, 2, 3].into()).unwrap();
        assert_eq!(p, named::path(3));
        assert_eq!(c5.induced_subgraph(c5.nodes()).unwrap(), c5);
        assert_eq!(
            c5.induced_subgraph(&[1, 9].into()),
            Err(GraphError::NotSubset)
        );

        // house = C5 + chord 2-4; {2,3,4} keeps 23, 34, 24
        let tri = named::house().induced_subgraph(&[2, 3, 4].into()).unwrap();
        assert_eq!(
            tri.edges().collect::<Vec<_>>(),
            vec![(2, 3), (2, 4), (3, 4)]
        );
    }

    #[test]
    fn complement_examples() {
        let house_c = named::house().complement();
        let chain = Graph::new(1..=5, [(4, 1), (1, 3), (3, 5), (5, 2)]).unwrap();
        assert_eq!(house_c, chain);

        let c5c = named::cycle(5).complement();
        let star = Graph::new(1..=5, [(1, 3), (3, 5), (5, 2), (2, 4), (4, 1)]).unwrap();
        assert_eq!(c5c, star);
        assert_eq!(c5c.complement(), named::cycle(5));
    }

    #[test]
    fn union_over_examples() {
        let c: Cover = vec![[1, 3].into(), [2, 4].into()].into();
        assert_eq!(c.union_over().as_slice(), &[1, 2, 3, 4]);
        assert!(Cover::new().union_over().is_empty());
        let c5_max: Cover = vec![
            [1, 3].into(),
            [3, 5].into(),
            [5, 2].into(),
            [2, 4].into(),
            [4, 1].into(),
        ]
        .into();
        assert_eq!(union_over(&c5_max).as_slice(), &[1, 2, 3, 4, 5]);
    }

    #[test]
    fn induced_subgraph_check() {
        assert!(is_induced_subgraph(&named::path(3), &named::cycle(5)));
        let edgeless = Graph::new([1, 2], []).unwrap();
        assert!(!is_induced_subgraph(&edgeless, &named::complete(2)));
        let tri = Graph::new([2, 3, 4], [(2, 3), (3, 4), (2, 4)]).unwrap();
        assert!(is_induced_subgraph(&tri, &named::house()));
        // not a subset
        assert!(!is_induced_subgraph(&named::path(3), &named::complete(2)));
    }

    #[test]
    fn vertex_set_serde_canonicalizes() {
        let s: VertexSet = serde_json::from_str("[3,1,3,2]").unwrap();
        assert_eq!(s.as_slice(), &[1, 2, 3]);
        assert_eq!(serde_json::to_string(&s).unwrap(), "[1,2,3]");
    }
}
