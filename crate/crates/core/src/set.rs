use std::fmt;

use fixedbitset::FixedBitSet;

/// A subset of the vertices `0..order` of some graph or digraph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    bits: FixedBitSet,
}

impl VertexSet {
    pub fn empty(order: usize) -> Self {
        VertexSet { bits: FixedBitSet::with_capacity(order) }
    }

    pub fn full(order: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(order);
        bits.insert_range(..);
        VertexSet { bits }
    }

    /// Builds a set from explicit members. Members must be `< order`.
    pub fn from_vertices<I: IntoIterator<Item = usize>>(order: usize, vertices: I) -> crate::Result<Self> {
        let mut set = Self::empty(order);
        for v in vertices {
            if v >= order {
                return Err(crate::Error::VertexOutOfRange { vertex: v, order });
            }
            set.bits.insert(v);
        }
        Ok(set)
    }

    /// Subset of `0..order` given by the low bits of `mask`.
    pub fn from_mask(order: usize, mask: u64) -> Self {
        debug_assert!(order <= 64);
        let mut set = Self::empty(order);
        for v in 0..order {
            if mask >> v & 1 == 1 {
                set.bits.insert(v);
            }
        }
        set
    }

    /// Size of the ground set `0..order`.
    pub fn order(&self) -> usize {
        self.bits.len()
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.order()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.bits.contains(v)
    }

    pub fn insert(&mut self, v: usize) {
        self.bits.insert(v);
    }

    pub fn remove(&mut self, v: usize) {
        self.bits.set(v, false);
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.bits.is_disjoint(&other.bits)
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut bits = self.bits.clone();
        bits.union_with(&other.bits);
        VertexSet { bits }
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut bits = self.bits.clone();
        bits.intersect_with(&other.bits);
        VertexSet { bits }
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut bits = self.bits.clone();
        bits.difference_with(&other.bits);
        VertexSet { bits }
    }

    pub fn complement(&self) -> VertexSet {
        let mut bits = self.bits.clone();
        bits.toggle_range(..);
        VertexSet { bits }
    }

    /// Number of members also in `other`.
    pub(crate) fn count_common(&self, other: &VertexSet) -> usize {
        self.bits.intersection_count(&other.bits)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
