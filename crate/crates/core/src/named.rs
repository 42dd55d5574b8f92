//! Small graph families on vertices `1..=n`, plus join and relabeling helpers.

use std::collections::BTreeMap;

use crate::graph::{Graph, Vertex};

fn build(n: u32, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Graph {
    Graph::new(1..=n, edges).expect("family edges stay inside 1..=n")
}

/// Cycle `1-2-...-n-1`. For `n < 3` this degenerates to a path.
pub fn cycle(n: u32) -> Graph {
    let closing = (n >= 3).then_some((n, 1));
    build(n, (1..n).map(|i| (i, i + 1)).chain(closing))
}

/// Path `1-2-...-n`.
pub fn path(n: u32) -> Graph {
    build(n, (1..n).map(|i| (i, i + 1)))
}

pub fn complete(n: u32) -> Graph {
    build(n, (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))))
}

pub fn edgeless(n: u32) -> Graph {
    build(n, [])
}

/// The house: pentagon `1-2-3-4-5` with the chord `2-4`.
pub fn house() -> Graph {
    build(5, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1), (2, 4)])
}

/// Shifts every vertex id by `offset`.
pub fn shifted(g: &Graph, offset: Vertex) -> Graph {
    Graph::new(
        g.nodes().iter().map(|v| v + offset),
        g.edges().map(|(u, v)| (u + offset, v + offset)),
    )
    .expect("shifting preserves validity")
}

/// Applies a vertex bijection. Panics if `map` is not injective on the vertices.
pub fn relabeled(g: &Graph, map: &BTreeMap<Vertex, Vertex>) -> Graph {
    let nodes: Vec<Vertex> = g.nodes().iter().map(|v| map[&v]).collect();
    let out = Graph::new(nodes, g.edges().map(|(u, v)| (map[&u], map[&v])))
        .expect("relabeling preserves validity");
    assert_eq!(out.order(), g.order(), "relabeling must be injective");
    out
}

/// Disjoint union; `h` is shifted above the vertices of `g`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let offset = g.next_fresh_id();
    let h = shifted(h, offset);
    Graph::new(
        g.nodes().iter().chain(h.nodes().iter()),
        g.edges().chain(h.edges()),
    )
    .expect("union of valid graphs")
}

/// Join: disjoint union plus every edge between the two sides.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let offset = g.next_fresh_id();
    let h = shifted(h, offset);
    let cross: Vec<(Vertex, Vertex)> = g
        .nodes()
        .iter()
        .flat_map(|u| h.nodes().iter().map(move |v| (u, v)))
        .collect();
    Graph::new(
        g.nodes().iter().chain(h.nodes().iter()),
        g.edges().chain(h.edges()).chain(cross),
    )
    .expect("join of valid graphs")
}
