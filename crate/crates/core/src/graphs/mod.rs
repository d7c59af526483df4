//! Bit-level models of the hypercube `Q_n` and the folded hypercube `FQ_n`.
//!
//! A vertex is an `n`-bit label. Coordinate position `i` (1-based, as written
//! in `u = u_1 u_2 ... u_n`) lives in bit `i - 1` of the label, and the string
//! form prints position 1 first. Adjacency is always computed from the labels;
//! no edge list is ever materialized.

pub(crate) mod anchored;
mod components;
mod enumerate;
pub(crate) mod mask;
mod vertex_set;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use components::{components_after_removal, min_vertex_cut, odd_girth};
pub use enumerate::{enumerate_connected_subgraphs, ConnectedSubgraphs};
pub use vertex_set::VertexSet;

/// Smallest supported dimension.
pub const MIN_DIM: u32 = 2;
/// Largest supported dimension; `2^24` vertices is the enumeration ceiling.
pub const MAX_DIM: u32 = 24;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("dimension {0} is outside the supported range {MIN_DIM}..={MAX_DIM}")]
    InvalidDimension(u32),
    #[error("vertex label {label} is not valid in dimension {n}")]
    InvalidVertex { label: u64, n: u32 },
    #[error("coordinate position {position} is outside 1..={n}")]
    PositionOutOfRange { position: u32, n: u32 },
    #[error("subgraph size {size} is outside 1..={max}")]
    SizeOutOfRange { size: usize, max: usize },
    #[error("dimension {n} exceeds the exhaustive limit of {limit}")]
    TooLarge { n: u32, limit: u32 },
    #[error("vertex set belongs to dimension {found}, expected {expected}")]
    DimensionMismatch { expected: u32, found: u32 },
    #[error("cannot parse {0:?} as a binary vertex string")]
    ParseVertex(String),
    #[error("unknown graph family {0:?} (expected Q or FQ)")]
    ParseFamily(String),
}

/// Which of the two cube families a [`Graph`] belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    /// The hypercube `Q_n`.
    #[serde(rename = "Q")]
    Hypercube,
    /// The folded hypercube `FQ_n`: `Q_n` plus every complementary pair.
    #[serde(rename = "FQ")]
    Folded,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Hypercube => "Q",
            Family::Folded => "FQ",
        })
    }
}

impl FromStr for Family {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "q" => Ok(Family::Hypercube),
            "fq" => Ok(Family::Folded),
            _ => Err(GraphError::ParseFamily(s.to_string())),
        }
    }
}

/// Number of coordinates, `2 <= n <= 24`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct Dimension(u32);

impl Dimension {
    pub fn new(n: u32) -> Result<Self, GraphError> {
        if (MIN_DIM..=MAX_DIM).contains(&n) {
            Ok(Dimension(n))
        } else {
            Err(GraphError::InvalidDimension(n))
        }
    }

    pub const fn get(self) -> u32 {
        self.0
    }

    pub const fn vertex_count(self) -> usize {
        1usize << self.0
    }

    /// Label with every coordinate set.
    pub const fn full_mask(self) -> u32 {
        ((1u64 << self.0) - 1) as u32
    }
}

impl TryFrom<u32> for Dimension {
    type Error = GraphError;

    fn try_from(n: u32) -> Result<Self, Self::Error> {
        Dimension::new(n)
    }
}

impl From<Dimension> for u32 {
    fn from(d: Dimension) -> u32 {
        d.0
    }
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A hypercube node, identified by its label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex(u32);

impl Vertex {
    /// The all-zero vertex `0...0`.
    pub const ORIGIN: Vertex = Vertex(0);

    /// Wraps a raw label without checking it against any dimension.
    pub const fn from_label(label: u32) -> Self {
        Vertex(label)
    }

    pub fn new(label: u64, dim: Dimension) -> Result<Self, GraphError> {
        if label < dim.vertex_count() as u64 {
            Ok(Vertex(label as u32))
        } else {
            Err(GraphError::InvalidVertex {
                label,
                n: dim.get(),
            })
        }
    }

    pub const fn label(self) -> u32 {
        self.0
    }

    pub const fn index(self) -> usize {
        self.0 as usize
    }

    /// Coordinate `u_i` for a 1-based position.
    pub const fn coordinate(self, position: u32) -> bool {
        self.0 >> (position - 1) & 1 == 1
    }

    /// Flips the given 1-based positions (`u^A`).
    pub fn flip(self, positions: &[u32], dim: Dimension) -> Result<Vertex, GraphError> {
        let mut mask = 0u32;
        for &position in positions {
            if position == 0 || position > dim.get() {
                return Err(GraphError::PositionOutOfRange {
                    position,
                    n: dim.get(),
                });
            }
            mask |= 1 << (position - 1);
        }
        Ok(Vertex(self.0 ^ mask))
    }

    /// The complementary vertex `ū`.
    pub const fn complement(self, dim: Dimension) -> Vertex {
        Vertex(self.0 ^ dim.full_mask())
    }

    /// Fixed-width binary rendering, position 1 leftmost.
    pub fn to_bits(self, dim: Dimension) -> String {
        (1..=dim.get())
            .map(|i| if self.coordinate(i) { '1' } else { '0' })
            .collect()
    }

    /// Parses a binary string; its length fixes the dimension.
    pub fn parse_bits(s: &str) -> Result<(Vertex, Dimension), GraphError> {
        let n = u32::try_from(s.len()).map_err(|_| GraphError::ParseVertex(s.to_string()))?;
        let dim = Dimension::new(n).map_err(|_| GraphError::ParseVertex(s.to_string()))?;
        let mut label = 0u32;
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => label |= 1 << i,
                _ => return Err(GraphError::ParseVertex(s.to_string())),
            }
        }
        Ok((Vertex(label), dim))
    }
}

/// `flip(v, A, n)`: the vertex `v^A`.
pub fn flip(v: Vertex, positions: &[u32], dim: Dimension) -> Result<Vertex, GraphError> {
    v.flip(positions, dim)
}

/// Maps an integer onto `{1..n}` by the cyclic convention `((x - 1) mod n) + 1`.
pub fn wrap_position(x: i64, n: u32) -> u32 {
    ((x - 1).rem_euclid(i64::from(n)) + 1) as u32
}

/// A cube graph: a family together with a dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Graph {
    pub family: Family,
    #[serde(rename = "n")]
    pub dim: Dimension,
}

impl Graph {
    pub fn new(family: Family, n: u32) -> Result<Self, GraphError> {
        Ok(Graph {
            family,
            dim: Dimension::new(n)?,
        })
    }

    pub fn hypercube(n: u32) -> Result<Self, GraphError> {
        Graph::new(Family::Hypercube, n)
    }

    pub fn folded(n: u32) -> Result<Self, GraphError> {
        Graph::new(Family::Folded, n)
    }

    pub const fn n(&self) -> u32 {
        self.dim.get()
    }

    pub const fn vertex_count(&self) -> usize {
        self.dim.vertex_count()
    }

    pub const fn degree(&self) -> usize {
        match self.family {
            Family::Hypercube => self.dim.get() as usize,
            Family::Folded => self.dim.get() as usize + 1,
        }
    }

    pub fn contains(&self, v: Vertex) -> bool {
        (v.0 as usize) < self.vertex_count()
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<(), GraphError> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(GraphError::InvalidVertex {
                label: u64::from(v.0),
                n: self.n(),
            })
        }
    }

    /// Adjacency by popcount of the label difference: 1 for `Q`, 1 or `n` for `FQ`.
    pub fn adjacent(&self, a: Vertex, b: Vertex) -> bool {
        let d = (a.0 ^ b.0).count_ones();
        d == 1 || (self.family == Family::Folded && d == self.n())
    }

    /// Neighbors in ascending position order, the complement last for `FQ`.
    /// The vertex is assumed valid.
    pub fn neighbor_iter(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        let folded = (self.family == Family::Folded).then(|| v.complement(self.dim));
        (0..self.n())
            .map(move |bit| Vertex(v.0 ^ (1 << bit)))
            .chain(folded)
    }

    pub fn neighbors(&self, v: Vertex) -> Result<VertexSet, GraphError> {
        self.check_vertex(v)?;
        Ok(VertexSet::from_vertices(self.dim, self.neighbor_iter(v)))
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        (0..self.vertex_count() as u32).map(Vertex)
    }

    /// Neighborhood `N(A)` of a vertex set: vertices outside `A` adjacent to it.
    pub fn set_neighborhood(&self, set: &VertexSet) -> Result<VertexSet, GraphError> {
        self.check_set(set)?;
        let mut out = VertexSet::empty(self.dim);
        for v in set.iter() {
            for w in self.neighbor_iter(v) {
                if !set.contains(w) {
                    out.insert(w);
                }
            }
        }
        Ok(out)
    }

    pub(crate) fn check_set(&self, set: &VertexSet) -> Result<(), GraphError> {
        if set.dim() == self.dim {
            Ok(())
        } else {
            Err(GraphError::DimensionMismatch {
                expected: self.n(),
                found: set.dim().get(),
            })
        }
    }

    /// Renders a vertex as its binary string in this graph's dimension.
    pub fn bits(&self, v: Vertex) -> String {
        v.to_bits(self.dim)
    }

    /// Parses a binary vertex string of exactly this graph's width.
    pub fn parse_vertex(&self, s: &str) -> Result<Vertex, GraphError> {
        let (v, dim) = Vertex::parse_bits(s)?;
        if dim != self.dim {
            return Err(GraphError::ParseVertex(s.to_string()));
        }
        Ok(v)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.family, self.dim)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: &str) -> Vertex {
        Vertex::parse_bits(s).unwrap().0
    }

    fn labels(set: &VertexSet, dim: Dimension) -> Vec<String> {
        let mut out: Vec<String> = set.iter().map(|x| x.to_bits(dim)).collect();
        out.sort();
        out
    }

    #[test]
    fn bit_order_puts_position_one_first() {
        let d = Dimension::new(4).unwrap();
        assert_eq!(Vertex::from_label(1).to_bits(d), "1000");
        assert_eq!(v("0101").label(), 0b1010);
        assert_eq!(v("0101").to_bits(d), "0101");
    }

    #[test]
    fn dimension_bounds() {
        assert!(Dimension::new(1).is_err());
        assert!(Dimension::new(2).is_ok());
        assert!(Dimension::new(24).is_ok());
        assert_eq!(Dimension::new(25), Err(GraphError::InvalidDimension(25)));
    }

    #[test]
    fn neighbors_examples() {
        let q3 = Graph::hypercube(3).unwrap();
        let d3 = q3.dim;
        assert_eq!(
            labels(&q3.neighbors(v("000")).unwrap(), d3),
            ["001", "010", "100"]
        );
        let fq3 = Graph::folded(3).unwrap();
        assert_eq!(
            labels(&fq3.neighbors(v("000")).unwrap(), d3),
            ["001", "010", "100", "111"]
        );
        let q4 = Graph::hypercube(4).unwrap();
        assert_eq!(
            labels(&q4.neighbors(v("1111")).unwrap(), q4.dim),
            ["0111", "1011", "1101", "1110"]
        );
    }

    #[test]
    fn neighbors_rejects_out_of_range_label() {
        let q3 = Graph::hypercube(3).unwrap();
        assert_eq!(
            q3.neighbors(Vertex::from_label(8)),
            Err(GraphError::InvalidVertex { label: 8, n: 3 })
        );
    }

    #[test]
    fn flip_examples() {
        let d = Dimension::new(3).unwrap();
        assert_eq!(flip(v("000"), &[1, 2], d).unwrap(), v("110"));
        assert_eq!(flip(v("000"), &[1, 2, 3], d).unwrap(), v("111"));
        assert_eq!(v("000").complement(d), v("111"));
        assert_eq!(flip(v("101"), &[], d).unwrap(), v("101"));
        assert_eq!(
            flip(v("000"), &[0], d),
            Err(GraphError::PositionOutOfRange { position: 0, n: 3 })
        );
        assert_eq!(
            flip(v("000"), &[4], d),
            Err(GraphError::PositionOutOfRange { position: 4, n: 3 })
        );
    }

    #[test]
    fn wrap_is_one_based() {
        assert_eq!(wrap_position(5, 5), 5);
        assert_eq!(wrap_position(6, 5), 1);
        assert_eq!(wrap_position(0, 5), 5);
        assert_eq!(wrap_position(12, 5), 2);
    }

    #[test]
    fn degree_and_regularity() {
        for n in 2..=8 {
            for g in [Graph::hypercube(n).unwrap(), Graph::folded(n).unwrap()] {
                for x in g.vertices() {
                    let nb = g.neighbors(x).unwrap();
                    assert_eq!(nb.len(), g.degree(), "{g} at {}", g.bits(x));
                    assert!(nb.iter().all(|y| g.adjacent(x, y)));
                }
            }
        }
    }

    #[test]
    fn graph_json_shape() {
        let g = Graph::folded(5).unwrap();
        let s = serde_json::to_string(&g).unwrap();
        assert_eq!(s, r#"{"family":"FQ","n":5}"#);
        let back: Graph = serde_json::from_str(r#"{"family":"Q","n":4}"#).unwrap();
        assert_eq!(back, Graph::hypercube(4).unwrap());
        assert!(serde_json::from_str::<Graph>(r#"{"family":"Q","n":30}"#).is_err());
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(Vertex::parse_bits("01a1").is_err());
        assert!(Vertex::parse_bits("1").is_err());
        let q4 = Graph::hypercube(4).unwrap();
        assert!(q4.parse_vertex("010").is_err());
    }
}
