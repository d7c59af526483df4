use super::CutFamily;
use crate::graphs::{GraphError, VertexSet};

/// Two members sharing vertices. Positions are 1-based member numbers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionPair {
    pub first: usize,
    pub second: usize,
    pub shared: VertexSet,
}

/// Every nonempty pairwise intersection of a family, sorted by `(first, second)`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct IntersectionReport {
    pub pairs: Vec<IntersectionPair>,
}

impl IntersectionReport {
    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

pub fn family_intersections(f: &CutFamily) -> Result<IntersectionReport, GraphError> {
    let sets = f
        .members()
        .iter()
        .map(|s| s.vertex_set(f.graph()))
        .collect::<Result<Vec<_>, _>>()?;
    let mut pairs = Vec::new();
    for (i, a) in sets.iter().enumerate() {
        for (j, b) in sets.iter().enumerate().skip(i + 1) {
            let shared = a.intersection(b);
            if !shared.is_empty() {
                pairs.push(IntersectionPair {
                    first: i + 1,
                    second: j + 1,
                    shared,
                });
            }
        }
    }
    Ok(IntersectionReport { pairs })
}
