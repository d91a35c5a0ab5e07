//! Single-word bit-vector subsets of a graph's vertex set.

use std::fmt;

/// Largest graph order supported by the single-word representation.
pub const MAX_ORDER: usize = 64;

/// A subset of `0..universe` stored as one `u64`.
///
/// Binary operations require both operands to share the same universe and
/// panic otherwise, the same way slice operations panic on length mismatch.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    bits: u64,
    universe: u8,
}

#[inline]
fn universe_mask(universe: usize) -> u64 {
    if universe == 64 {
        u64::MAX
    } else {
        (1u64 << universe) - 1
    }
}

impl VertexSet {
    pub fn empty(universe: usize) -> Self {
        assert!(universe <= MAX_ORDER, "universe {universe} exceeds {MAX_ORDER}");
        VertexSet { bits: 0, universe: universe as u8 }
    }

    pub fn full(universe: usize) -> Self {
        assert!(universe <= MAX_ORDER, "universe {universe} exceeds {MAX_ORDER}");
        VertexSet { bits: universe_mask(universe), universe: universe as u8 }
    }

    pub fn singleton(universe: usize, v: usize) -> Self {
        let mut s = Self::empty(universe);
        s.insert(v);
        s
    }

    /// Builds a set from raw bits. Bits at or above `universe` must be clear.
    pub fn from_bits(universe: usize, bits: u64) -> Self {
        assert!(universe <= MAX_ORDER, "universe {universe} exceeds {MAX_ORDER}");
        assert!(bits & !universe_mask(universe) == 0, "bits outside universe {universe}");
        VertexSet { bits, universe: universe as u8 }
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(universe: usize, vertices: I) -> Self {
        let mut s = Self::empty(universe);
        for v in vertices {
            s.insert(v);
        }
        s
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.bits
    }

    #[inline]
    pub fn universe(self) -> usize {
        self.universe as usize
    }

    #[inline]
    pub fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < self.universe() && self.bits >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < self.universe(), "vertex {v} outside universe {}", self.universe);
        self.bits |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        assert!(v < self.universe(), "vertex {v} outside universe {}", self.universe);
        self.bits &= !(1 << v);
    }

    #[inline]
    fn check(self, other: VertexSet) {
        assert_eq!(self.universe, other.universe, "vertex sets over different universes");
    }

    #[inline]
    pub fn union(self, other: VertexSet) -> VertexSet {
        self.check(other);
        VertexSet { bits: self.bits | other.bits, ..self }
    }

    #[inline]
    pub fn intersection(self, other: VertexSet) -> VertexSet {
        self.check(other);
        VertexSet { bits: self.bits & other.bits, ..self }
    }

    #[inline]
    pub fn difference(self, other: VertexSet) -> VertexSet {
        self.check(other);
        VertexSet { bits: self.bits & !other.bits, ..self }
    }

    #[inline]
    pub fn complement(self) -> VertexSet {
        VertexSet { bits: !self.bits & universe_mask(self.universe()), ..self }
    }

    #[inline]
    pub fn is_subset(self, other: VertexSet) -> bool {
        self.check(other);
        self.bits & !other.bits == 0
    }

    /// Smallest member, if any.
    #[inline]
    pub fn first(self) -> Option<usize> {
        (self.bits != 0).then(|| self.bits.trailing_zeros() as usize)
    }

    pub fn iter(self) -> Iter {
        Iter { bits: self.bits }
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

/// Members in increasing order.
#[derive(Clone, Debug)]
pub struct Iter {
    bits: u64,
}

impl Iterator for Iter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.bits == 0 {
            return None;
        }
        let v = self.bits.trailing_zeros() as usize;
        self.bits &= self.bits - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.bits.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_set_algebra() {
        let a = VertexSet::from_vertices(5, [0, 2, 4]);
        let b = VertexSet::from_vertices(5, [2, 3]);
        assert_eq!(a.union(b), VertexSet::from_vertices(5, [0, 2, 3, 4]));
        assert_eq!(a.intersection(b), VertexSet::singleton(5, 2));
        assert_eq!(a.difference(b), VertexSet::from_vertices(5, [0, 4]));
        assert_eq!(a.complement(), VertexSet::from_vertices(5, [1, 3]));
        assert_eq!(a.len(), 3);
        assert!(VertexSet::singleton(5, 4).is_subset(a));
        assert!(!b.is_subset(a));
        assert_eq!(a.iter().collect::<Vec<_>>(), vec![0, 2, 4]);
        assert_eq!(a.to_string(), "{0,2,4}");
    }

    #[test]
    fn full_universe_of_64() {
        let s = VertexSet::full(64);
        assert_eq!(s.len(), 64);
        assert!(s.complement().is_empty());
        assert!(s.contains(63));
    }

    #[test]
    #[should_panic(expected = "different universes")]
    fn mixing_universes_panics() {
        let _ = VertexSet::empty(3).union(VertexSet::empty(4));
    }

    #[test]
    fn contains_outside_universe_is_false() {
        assert!(!VertexSet::full(3).contains(7));
    }
}
