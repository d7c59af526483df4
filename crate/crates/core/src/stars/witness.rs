//! JSON witness files: a cut family written with binary vertex strings so it
//! can be re-verified offline.
//!
//! ```json
//! {"family":"Q","n":3,"r":2,"stars":[{"center":"110","leaves":["100","010"]}]}
//! ```

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{CutFamily, StarEmbedding};
use crate::graphs::{Family, Graph, GraphError};

#[derive(Debug, Error)]
pub enum WitnessError {
    #[error("malformed witness JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessStar {
    pub center: String,
    pub leaves: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessFile {
    pub family: Family,
    pub n: u32,
    pub r: usize,
    pub stars: Vec<WitnessStar>,
}

impl WitnessFile {
    pub fn from_family(f: &CutFamily, r: usize) -> Self {
        let g = f.graph();
        WitnessFile {
            family: g.family,
            n: g.n(),
            r,
            stars: f
                .members()
                .iter()
                .map(|s| WitnessStar {
                    center: g.bits(s.center),
                    leaves: s.leaves.iter().map(|&l| g.bits(l)).collect(),
                })
                .collect(),
        }
    }

    pub fn graph(&self) -> Result<Graph, GraphError> {
        Graph::new(self.family, self.n)
    }

    /// Parses vertex strings back into a family. Star validity is left to the
    /// verifier.
    pub fn to_family(&self) -> Result<CutFamily, WitnessError> {
        let g = self.graph()?;
        let members = self
            .stars
            .iter()
            .map(|s| {
                Ok(StarEmbedding::new(
                    g.parse_vertex(&s.center)?,
                    s.leaves
                        .iter()
                        .map(|l| g.parse_vertex(l))
                        .collect::<Result<_, _>>()?,
                ))
            })
            .collect::<Result<Vec<_>, GraphError>>()?;
        Ok(CutFamily::new(g, members))
    }

    /// Pretty-printed JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("witness serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, WitnessError> {
        Ok(serde_json::from_str(text)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stars::build_qn_cut;

    #[test]
    fn round_trip_is_byte_identical() {
        let f = build_qn_cut(5, 4).unwrap();
        let w = WitnessFile::from_family(&f, 4);
        let text = w.to_json();
        let back = WitnessFile::from_json(&text).unwrap();
        assert_eq!(back.to_json(), text);
        assert_eq!(back.to_family().unwrap(), f);
    }

    #[test]
    fn compact_form_parses() {
        let text =
            r#"{"family":"Q","n":3,"r":2,"stars":[{"center":"110","leaves":["100","010"]}]}"#;
        let w = WitnessFile::from_json(text).unwrap();
        let f = w.to_family().unwrap();
        assert_eq!(f.len(), 1);
        assert_eq!(f.members()[0].center.label(), 0b011);
    }

    #[test]
    fn wrong_width_vertex_is_rejected() {
        let text = r#"{"family":"FQ","n":3,"r":2,"stars":[{"center":"1100","leaves":[]}]}"#;
        let w = WitnessFile::from_json(text).unwrap();
        assert!(matches!(w.to_family(), Err(WitnessError::Graph(_))));
        assert!(WitnessFile::from_json("{").is_err());
    }
}
