//! Exact branch-and-bound searches over vertex-index bitsets.

use crate::mask::Mask;

/// Number of color classes in a greedy sequential coloring of `cand`;
/// an upper bound on the clique number of the subgraph it induces.
fn greedy_color_bound<M: Mask>(adj: &[M], cand: &M) -> usize {
    let mut uncolored = cand.clone();
    let mut classes = 0;
    while !uncolored.is_empty() {
        classes += 1;
        let mut avail = uncolored.clone();
        while let Some(v) = avail.first() {
            uncolored.remove(v);
            avail.remove(v);
            avail = avail.and_not(&adj[v]);
        }
    }
    classes
}

/// Lexicographically least maximum clique among the vertices of `within`,
/// as increasing vertex indices.
///
/// Branches visit cliques in lexicographic order and a branch is cut only
/// when it cannot beat the incumbent strictly, so the first clique of
/// maximum size reached is the lexicographically least one.
pub(crate) fn max_clique<M: Mask>(adj: &[M], within: &M) -> Vec<usize> {
    let mut best = Vec::new();
    let mut current = Vec::new();
    expand(adj, within.clone(), &mut current, &mut best);
    best
}

fn expand<M: Mask>(adj: &[M], mut cand: M, current: &mut Vec<usize>, best: &mut Vec<usize>) {
    if current.len() > best.len() {
        best.clone_from(current);
    }
    if cand.is_empty() || current.len() + greedy_color_bound(adj, &cand) <= best.len() {
        return;
    }
    while let Some(v) = cand.first() {
        if current.len() + cand.count() <= best.len() {
            return;
        }
        cand.remove(v);
        current.push(v);
        let next = cand.and(&adj[v]);
        expand(adj, next, current, best);
        current.pop();
    }
}

/// Every clique of exactly `size` vertices inside `within`, in lexicographic order.
pub(crate) fn cliques_of_size<M: Mask>(adj: &[M], within: &M, size: usize) -> Vec<Vec<usize>> {
    fn rec<M: Mask>(
        adj: &[M],
        mut cand: M,
        size: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if current.len() == size {
            out.push(current.clone());
            return;
        }
        while let Some(v) = cand.first() {
            if current.len() + cand.count() < size {
                return;
            }
            cand.remove(v);
            current.push(v);
            rec(adj, cand.and(&adj[v]), size, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    rec(adj, within.clone(), size, &mut Vec::new(), &mut out);
    out
}

/// Proper coloring of the vertices in `within` with at most `k` colors,
/// returned as `(vertex index, color)` pairs, or `None` if none exists.
///
/// Vertices of `seed_clique` are colored first, then the rest by decreasing
/// degree inside `within`. A vertex may only open the next unused color,
/// which fixes the first vertex to color 0 and removes color permutations.
pub(crate) fn color_with<M: Mask>(
    adj: &[M],
    within: &M,
    seed_clique: &[usize],
    k: usize,
) -> Option<Vec<(usize, usize)>> {
    let mut order: Vec<usize> = seed_clique.to_vec();
    let mut rest: Vec<usize> = within
        .ones()
        .into_iter()
        .filter(|v| !seed_clique.contains(v))
        .collect();
    rest.sort_by_key(|&v| (std::cmp::Reverse(adj[v].and(within).count()), v));
    order.extend(rest);
    if order.is_empty() {
        return Some(Vec::new());
    }
    if k == 0 || seed_clique.len() > k {
        return None;
    }

    let n = adj.len();
    let mut classes = vec![M::empty(n); k];
    let mut colors = vec![0usize; order.len()];
    if assign(adj, &order, 0, 0, &mut classes, &mut colors) {
        Some(order.into_iter().zip(colors).collect())
    } else {
        None
    }
}

fn assign<M: Mask>(
    adj: &[M],
    order: &[usize],
    pos: usize,
    used: usize,
    classes: &mut [M],
    colors: &mut [usize],
) -> bool {
    if pos == order.len() {
        return true;
    }
    let v = order[pos];
    let limit = (used + 1).min(classes.len());
    for c in 0..limit {
        if adj[v].intersects(&classes[c]) {
            continue;
        }
        classes[c].insert(v);
        colors[pos] = c;
        if assign(adj, order, pos + 1, used.max(c + 1), classes, colors) {
            return true;
        }
        classes[c].remove(v);
    }
    false
}

/// Chromatic number of the subgraph on `within` together with an optimal
/// coloring. Deepens from the clique number, which is a lower bound.
pub(crate) fn chromatic<M: Mask>(
    adj: &[M],
    within: &M,
    clique: &[usize],
) -> (usize, Vec<(usize, usize)>) {
    let n = within.count();
    for k in clique.len()..=n {
        if let Some(coloring) = color_with(adj, within, clique, k) {
            return (k, coloring);
        }
    }
    unreachable!("n colors always suffice")
}

/// Complement adjacency restricted to `n` vertices.
pub(crate) fn complement_masks<M: Mask>(adj: &[M]) -> Vec<M> {
    let n = adj.len();
    let full = M::full(n);
    adj.iter()
        .enumerate()
        .map(|(i, a)| {
            let mut c = full.and_not(a);
            c.remove(i);
            c
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn masks(n: usize, edges: &[(usize, usize)]) -> Vec<u64> {
        let mut adj = vec![0u64; n];
        for &(u, v) in edges {
            adj[u].insert(v);
            adj[v].insert(u);
        }
        adj
    }

    #[test]
    fn pentagon() {
        let adj = masks(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]);
        let full = u64::full(5);
        let k = max_clique(&adj, &full);
        assert_eq!(k, vec![0, 1]);
        let (chi, _) = chromatic(&adj, &full, &k);
        assert_eq!(chi, 3);
        let comp = complement_masks(&adj);
        assert_eq!(cliques_of_size(&comp, &full, 2).len(), 5);
    }

    #[test]
    fn lexicographically_least_maximum_clique() {
        // two triangles {1,2,3} and {0,4,5}; least is [0,4,5]
        let adj = masks(6, &[(1, 2), (2, 3), (1, 3), (0, 4), (4, 5), (0, 5)]);
        assert_eq!(max_clique(&adj, &u64::full(6)), vec![0, 4, 5]);
    }
}
