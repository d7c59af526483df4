//! JSON record of a solver run:
//!
//! ```json
//! {"claim": {"family": "Q", "n": 3, "r": 2, "mode": "structure"},
//!  "value": {"kind": "exact", "count": 2},
//!  "witness": {...},
//!  "search": {"components": 17, "covers": 3, "workers": 1}}
//! ```

use serde::{Deserialize, Serialize};

use super::{SolveResult, SolveValue};
use crate::graphs::{Family, Graph};
use crate::stars::{Mode, WitnessError, WitnessFile};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateClaim {
    pub family: Family,
    pub n: u32,
    pub r: usize,
    pub mode: Mode,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateSearch {
    pub components: u64,
    pub covers: u64,
    pub workers: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub claim: CertificateClaim,
    pub value: SolveValue,
    pub witness: Option<WitnessFile>,
    pub search: CertificateSearch,
}

impl Certificate {
    pub fn from_result(g: &Graph, r: usize, mode: Mode, result: &SolveResult) -> Self {
        Certificate {
            claim: CertificateClaim {
                family: g.family,
                n: g.n(),
                r,
                mode,
            },
            value: result.value,
            witness: result
                .witness
                .as_ref()
                .map(|f| WitnessFile::from_family(f, r)),
            search: CertificateSearch {
                components: result.stats.components,
                covers: result.stats.covers,
                workers: result.stats.workers,
            },
        }
    }

    /// Pretty-printed JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("certificate serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, WitnessError> {
        Ok(serde_json::from_str(text)?)
    }
}
