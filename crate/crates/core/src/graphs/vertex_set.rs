use std::fmt;

use fixedbitset::FixedBitSet;

use super::{Dimension, Vertex};

/// A set of vertices of a fixed dimension, stored as a bitset over `2^n` slots.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    dim: Dimension,
    bits: FixedBitSet,
}

impl VertexSet {
    pub fn empty(dim: Dimension) -> Self {
        VertexSet {
            dim,
            bits: FixedBitSet::with_capacity(dim.vertex_count()),
        }
    }

    pub fn full(dim: Dimension) -> Self {
        let mut set = VertexSet::empty(dim);
        set.bits.insert_range(..);
        set
    }

    /// Builds a set from vertices; labels must be valid for `dim`.
    pub fn from_vertices(dim: Dimension, vertices: impl IntoIterator<Item = Vertex>) -> Self {
        let mut set = VertexSet::empty(dim);
        for v in vertices {
            set.insert(v);
        }
        set
    }

    pub fn dim(&self) -> Dimension {
        self.dim
    }

    /// Inserts `v`, returning whether it was newly added.
    ///
    /// Panics if the label does not fit the set's dimension.
    pub fn insert(&mut self, v: Vertex) -> bool {
        !self.bits.put(v.index())
    }

    pub fn remove(&mut self, v: Vertex) {
        if v.index() < self.bits.len() {
            self.bits.set(v.index(), false);
        }
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.bits.contains(v.index())
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    /// Smallest member label.
    pub fn first(&self) -> Option<Vertex> {
        self.bits
            .ones()
            .next()
            .map(|i| Vertex::from_label(i as u32))
    }

    /// Members in ascending label order.
    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.bits.ones().map(|i| Vertex::from_label(i as u32))
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        self.bits.union_with(&other.bits);
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut bits = self.bits.clone();
        bits.intersect_with(&other.bits);
        VertexSet {
            dim: self.dim,
            bits,
        }
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut bits = self.bits.clone();
        bits.difference_with(&other.bits);
        VertexSet {
            dim: self.dim,
            bits,
        }
    }

    pub fn complement(&self) -> VertexSet {
        let mut bits = self.bits.clone();
        bits.toggle_range(..);
        VertexSet {
            dim: self.dim,
            bits,
        }
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.bits.is_disjoint(&other.bits)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    /// Binary string rendering of every member, ascending by label.
    pub fn to_bit_strings(&self) -> Vec<String> {
        self.iter().map(|v| v.to_bits(self.dim)).collect()
    }

    pub(crate) fn to_mask(&self) -> u128 {
        debug_assert!(self.dim.get() <= 7);
        self.iter().fold(0u128, |m, v| m | 1u128 << v.index())
    }

    pub(crate) fn from_mask(dim: Dimension, mask: u128) -> VertexSet {
        VertexSet::from_vertices(
            dim,
            super::mask::bits(mask).map(|i| Vertex::from_label(i as u32)),
        )
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.to_bit_strings()).finish()
    }
}
