//! Star embeddings `K_{1,r}`, cut families built from them, and the explicit
//! families that isolate `0...0` in `Q_n` and `FQ_n`.

mod construct;
mod intersect;
mod witness;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graphs::{Graph, GraphError, Vertex, VertexSet};

pub use construct::{build_fqn_cut, build_qn_cut, ConstructionError};
pub use intersect::{family_intersections, IntersectionPair, IntersectionReport};
pub use witness::{WitnessError, WitnessFile, WitnessStar};

/// Whether members must be full stars `K_{1,r}` or any connected subgraph of one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Structure,
    Substructure,
}

impl Mode {
    pub const BOTH: [Mode; 2] = [Mode::Structure, Mode::Substructure];

    /// Whether a star with `leaves` leaves is an allowed member.
    pub fn admits(self, leaves: usize, r: usize) -> bool {
        match self {
            Mode::Structure => leaves == r,
            Mode::Substructure => leaves <= r,
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Structure => "structure",
            Mode::Substructure => "substructure",
        })
    }
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "structure" => Ok(Mode::Structure),
            "substructure" => Ok(Mode::Substructure),
            _ => Err(format!(
                "unknown mode {s:?} (expected structure or substructure)"
            )),
        }
    }
}

/// A center plus an ordered list of leaves, claimed to form a star.
///
/// No leaves is a single vertex `K_{1,0}`; one leaf is an edge.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StarEmbedding {
    pub center: Vertex,
    pub leaves: Vec<Vertex>,
}

impl StarEmbedding {
    pub fn new(center: Vertex, leaves: Vec<Vertex>) -> Self {
        StarEmbedding { center, leaves }
    }

    pub fn leaf_count(&self) -> usize {
        self.leaves.len()
    }

    /// Center first, then leaves in order.
    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        std::iter::once(self.center).chain(self.leaves.iter().copied())
    }

    /// Vertex set of the star; labels must be valid in `g`.
    pub fn vertex_set(&self, g: &Graph) -> Result<VertexSet, GraphError> {
        for v in self.vertices() {
            g.check_vertex(v)?;
        }
        Ok(VertexSet::from_vertices(g.dim, self.vertices()))
    }
}

/// Why a [`StarEmbedding`] is not a star of the graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum StarViolation {
    #[error("center {0:?} is not a vertex of the graph")]
    InvalidCenter(Vertex),
    #[error("leaf {0:?} is not a vertex of the graph")]
    InvalidLeaf(Vertex),
    #[error("leaf {0:?} equals the center")]
    LeafIsCenter(Vertex),
    #[error("leaf {0:?} appears twice")]
    DuplicateLeaf(Vertex),
    #[error("leaf {0:?} is not adjacent to the center")]
    NotAdjacent(Vertex),
}

/// Checks every star invariant, reporting the first failing leaf in order.
pub fn validate_star(g: &Graph, s: &StarEmbedding) -> Result<(), StarViolation> {
    if !g.contains(s.center) {
        return Err(StarViolation::InvalidCenter(s.center));
    }
    for (i, &leaf) in s.leaves.iter().enumerate() {
        if !g.contains(leaf) {
            return Err(StarViolation::InvalidLeaf(leaf));
        }
        if leaf == s.center {
            return Err(StarViolation::LeafIsCenter(leaf));
        }
        if s.leaves[..i].contains(&leaf) {
            return Err(StarViolation::DuplicateLeaf(leaf));
        }
        if !g.adjacent(s.center, leaf) {
            return Err(StarViolation::NotAdjacent(leaf));
        }
    }
    Ok(())
}

/// An ordered list of stars in one graph whose vertex union is a candidate
/// separator. Members may share vertices.
///
/// Members are stored as given; [`CutFamily::validate`] and the oracle
/// verifier check them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutFamily {
    graph: Graph,
    members: Vec<StarEmbedding>,
}

impl CutFamily {
    pub fn new(graph: Graph, members: Vec<StarEmbedding>) -> Self {
        CutFamily { graph, members }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn members(&self) -> &[StarEmbedding] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Validates every member, returning the index of the first bad one.
    pub fn validate(&self) -> Result<(), (usize, StarViolation)> {
        for (i, s) in self.members.iter().enumerate() {
            validate_star(&self.graph, s).map_err(|e| (i, e))?;
        }
        Ok(())
    }

    /// Union of all member vertex sets.
    pub fn vertex_union(&self) -> Result<VertexSet, GraphError> {
        let mut out = VertexSet::empty(self.graph.dim);
        for s in &self.members {
            out.union_with(&s.vertex_set(&self.graph)?);
        }
        Ok(out)
    }
}
