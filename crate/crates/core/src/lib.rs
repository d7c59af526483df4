//! Star-structure and star-substructure cuts of hypercubes `Q_n` and folded
//! hypercubes `FQ_n`.
//!
//! * [`graphs`]: bit-level cube models and classical connectivity primitives.
//! * [`stars`]: star embeddings, cut families and the explicit constructions
//!   that isolate `0...0`.
//! * [`bounds`]: exact threshold functions, extra-connectivity formulas and
//!   the table of settled connectivity values.
//! * [`oracles`]: cut verification, exact small-scale search and exhaustive
//!   checks of the counting lemmas.

pub mod bounds;
pub mod graphs;
pub mod oracles;
pub mod stars;

pub use graphs::{Dimension, Family, Graph, GraphError, Vertex, VertexSet};
pub use stars::{CutFamily, Mode, StarEmbedding};
