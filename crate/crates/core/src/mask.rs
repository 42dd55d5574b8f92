//! Vertex-index bitsets used by the exact search routines.
//!
//! Algorithms are written once against [`Mask`] and run on `u64` when the
//! graph has at most 64 vertices, or on [`WideMask`] otherwise.

pub(crate) trait Mask: Clone {
    fn empty(n: usize) -> Self;
    fn insert(&mut self, i: usize);
    fn remove(&mut self, i: usize);
    fn and(&self, other: &Self) -> Self;
    fn and_not(&self, other: &Self) -> Self;
    fn count(&self) -> usize;
    fn is_empty(&self) -> bool;
    fn first(&self) -> Option<usize>;
    fn intersects(&self, other: &Self) -> bool;

    fn full(n: usize) -> Self {
        let mut m = Self::empty(n);
        for i in 0..n {
            m.insert(i);
        }
        m
    }

    fn ones(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.count());
        let mut rest = self.clone();
        while let Some(i) = rest.first() {
            out.push(i);
            rest.remove(i);
        }
        out
    }
}

impl Mask for u64 {
    #[inline]
    fn empty(n: usize) -> Self {
        debug_assert!(n <= 64);
        0
    }
    #[inline]
    fn insert(&mut self, i: usize) {
        *self |= 1 << i;
    }
    #[inline]
    fn remove(&mut self, i: usize) {
        *self &= !(1 << i);
    }
    #[inline]
    fn and(&self, other: &Self) -> Self {
        self & other
    }
    #[inline]
    fn and_not(&self, other: &Self) -> Self {
        self & !other
    }
    #[inline]
    fn count(&self) -> usize {
        self.count_ones() as usize
    }
    #[inline]
    fn is_empty(&self) -> bool {
        *self == 0
    }
    #[inline]
    fn first(&self) -> Option<usize> {
        (*self != 0).then(|| self.trailing_zeros() as usize)
    }
    #[inline]
    fn intersects(&self, other: &Self) -> bool {
        self & other != 0
    }
}

/// Growable bitset for graphs with more than 64 vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct WideMask(Vec<u64>);

impl Mask for WideMask {
    fn empty(n: usize) -> Self {
        WideMask(vec![0; n.div_ceil(64)])
    }
    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn remove(&mut self, i: usize) {
        self.0[i / 64] &= !(1 << (i % 64));
    }
    fn and(&self, other: &Self) -> Self {
        WideMask(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }
    fn and_not(&self, other: &Self) -> Self {
        WideMask(self.0.iter().zip(&other.0).map(|(a, b)| a & !b).collect())
    }
    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }
    fn first(&self) -> Option<usize> {
        self.0
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(k, w)| k * 64 + w.trailing_zeros() as usize)
    }
    fn intersects(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).any(|(a, b)| a & b != 0)
    }
}
