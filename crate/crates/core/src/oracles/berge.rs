//! Odd holes and odd antiholes by enumerating vertex subsets.

use std::fmt;

use crate::error::{GraphError, Result};
use crate::graph::{Graph, Vertex};

use super::limits;

/// Default cap on the order accepted by [`find_odd_hole_or_antihole`].
pub const BERGE_MAX_N: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HoleKind {
    Hole,
    Antihole,
}

/// An induced chordless odd cycle of length at least 5, in `g` (hole) or in
/// its complement (antihole). `cycle` lists the vertices in cyclic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OddHole {
    pub kind: HoleKind,
    pub cycle: Vec<Vertex>,
}

impl fmt::Display for OddHole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            HoleKind::Hole => "odd hole",
            HoleKind::Antihole => "odd antihole",
        };
        let cycle: Vec<String> = self.cycle.iter().map(|v| v.to_string()).collect();
        write!(f, "{kind} {}", cycle.join("-"))
    }
}

/// Cyclic order of `set` if it induces a single cycle in `g`.
fn induced_cycle(g: &Graph, set: &[Vertex]) -> Option<Vec<Vertex>> {
    let nbrs =
        |v: Vertex| -> Vec<Vertex> { set.iter().copied().filter(|&u| g.has_edge(u, v)).collect() };
    if set.iter().any(|&v| nbrs(v).len() != 2) {
        return None;
    }
    let start = set[0];
    let mut order = vec![start];
    let mut prev = start;
    let mut cur = nbrs(start)[0];
    while cur != start {
        order.push(cur);
        let next = nbrs(cur)
            .into_iter()
            .find(|&u| u != prev)
            .expect("degree two");
        prev = cur;
        cur = next;
    }
    // 2-regular but disconnected means several shorter cycles
    (order.len() == set.len()).then_some(order)
}

/// Smallest odd hole or antihole, holes first at each length.
pub fn find_odd_hole_or_antihole(g: &Graph) -> Result<Option<OddHole>> {
    let cap = limits::cap(BERGE_MAX_N);
    if g.order() > cap {
        return Err(GraphError::TooLarge { n: g.order(), cap });
    }
    let complement = g.complement();
    let vs = g.nodes().as_slice();
    let n = vs.len();
    for len in (5..=n).step_by(2) {
        let mut subsets = Vec::new();
        for mask in 0u64..(1 << n) {
            if mask.count_ones() as usize == len {
                subsets.push(mask);
            }
        }
        for (kind, host) in [(HoleKind::Hole, g), (HoleKind::Antihole, &complement)] {
            for &mask in &subsets {
                let set: Vec<Vertex> = (0..n)
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| vs[i])
                    .collect();
                if let Some(cycle) = induced_cycle(host, &set) {
                    return Ok(Some(OddHole { kind, cycle }));
                }
            }
        }
    }
    Ok(None)
}

/// No odd hole and no odd antihole.
pub fn is_berge(g: &Graph) -> Result<bool> {
    Ok(find_odd_hole_or_antihole(g)?.is_none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    #[test]
    fn pentagon_is_its_own_hole() {
        let hole = find_odd_hole_or_antihole(&named::cycle(5))
            .unwrap()
            .unwrap();
        assert_eq!(hole.kind, HoleKind::Hole);
        assert_eq!(hole.cycle, vec![1, 2, 3, 4, 5]);
        assert!(!is_berge(&named::cycle(5)).unwrap());
    }

    #[test]
    fn heptagon_complement_is_an_antihole() {
        let g = named::cycle(7).complement();
        let found = find_odd_hole_or_antihole(&g).unwrap().unwrap();
        assert_eq!(found.kind, HoleKind::Antihole);
        assert_eq!(found.cycle.len(), 7);
    }

    #[test]
    fn berge_examples() {
        assert!(is_berge(&named::house()).unwrap());
        assert!(is_berge(&named::cycle(6)).unwrap());
        // pentagon plus a vertex on 2, 3, 4: nice, but holds the pentagon
        let pentagon_plus = Graph::new(
            1..=6,
            [
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 5),
                (5, 1),
                (6, 2),
                (6, 3),
                (6, 4),
            ],
        )
        .unwrap();
        assert!(crate::invariants::is_nice(&pentagon_plus));
        assert!(!is_berge(&pentagon_plus).unwrap());
        // two disjoint triangles are 2-regular but not a cycle
        let tt = named::disjoint_union(&named::complete(3), &named::complete(3));
        assert!(induced_cycle(&tt, tt.nodes().as_slice()).is_none());
    }

    #[test]
    fn size_cap() {
        let g = named::edgeless(BERGE_MAX_N as u32 + 1);
        assert!(matches!(
            find_odd_hole_or_antihole(&g),
            Err(GraphError::TooLarge { .. })
        ));
    }
}
