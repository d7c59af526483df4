//! Explicit cut families that isolate `u = 0...0`.
//!
//! Members are numbered from 1. For `i <= floor(n/2)` member `i` is centered
//! at `u^{2i-1,2i}` with leaves `u^{2i-1}`, `u^{2i}` followed by the vertices
//! `u^{2i-1,2i,2i+j}` for ascending `j`, where `2i+j` is reduced cyclically
//! into `{1..n}`. A last member covers the neighbors of `u` that remain.

use thiserror::Error;

use super::{CutFamily, StarEmbedding};
use crate::graphs::{wrap_position, Dimension, Family, Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("no construction for {family}_{n} with r = {r}")]
    Unsupported { family: Family, n: u32, r: usize },
    #[error("Q_{n} has no K_(1,{r})-structure cut")]
    NoCutKnown { n: u32, r: usize },
    #[error("member {member}: wrapped position {position} collides with its center's positions")]
    IndexCollision { member: u32, position: u32 },
}

/// Builder for the vertices `u^A` and `ū^A` around the origin.
struct Around {
    n: u32,
    dim: Dimension,
}

impl Around {
    fn u(&self, positions: &[u32]) -> Vertex {
        Vertex::ORIGIN
            .flip(positions, self.dim)
            .expect("construction positions lie in 1..=n")
    }

    fn ubar(&self, positions: &[u32]) -> Vertex {
        self.u(positions).complement(self.dim)
    }

    /// Member `i` centered at `u^{2i-1,2i}` with `extra` leaves of the form
    /// `u^{2i-1,2i,2i+j}`.
    fn pair_star(&self, i: u32, extra: usize) -> Result<StarEmbedding, ConstructionError> {
        let (a, b) = (2 * i - 1, 2 * i);
        let mut leaves = vec![self.u(&[a]), self.u(&[b])];
        for j in 1..=extra as i64 {
            let k = wrap_position(i64::from(b) + j, self.n);
            if k == a || k == b {
                return Err(ConstructionError::IndexCollision {
                    member: i,
                    position: k,
                });
            }
            leaves.push(self.u(&[a, b, k]));
        }
        Ok(StarEmbedding::new(self.u(&[a, b]), leaves))
    }
}

fn setup(family: Family, n: u32, r: usize) -> Result<(Graph, Around), ConstructionError> {
    let unsupported = ConstructionError::Unsupported { family, n, r };
    let graph = Graph::new(family, n).map_err(|_| unsupported.clone())?;
    Ok((graph, Around { n, dim: graph.dim }))
}

/// The `⌈n/2⌉`-member `K_{1,r}`-structure cut of `Q_n`, `n >= 3`, `2 <= r <= n`.
pub fn build_qn_cut(n: u32, r: usize) -> Result<CutFamily, ConstructionError> {
    if (n, r) == (2, 2) {
        return Err(ConstructionError::NoCutKnown { n, r });
    }
    if n < 3 || r < 2 || r > n as usize {
        return Err(ConstructionError::Unsupported {
            family: Family::Hypercube,
            n,
            r,
        });
    }
    let (graph, at) = setup(Family::Hypercube, n, r)?;
    let mut members = (1..=n / 2)
        .map(|i| at.pair_star(i, r - 2))
        .collect::<Result<Vec<_>, _>>()?;
    if n % 2 == 1 {
        let center = at.u(&[n, 1]);
        let (mut leaves, last_j) = if r < n as usize {
            (vec![at.u(&[n])], r as u32)
        } else {
            (vec![at.u(&[n]), at.u(&[1])], r as u32 - 1)
        };
        leaves.extend((2..=last_j).map(|j| at.u(&[n, 1, j])));
        members.push(StarEmbedding::new(center, leaves));
    }
    Ok(CutFamily::new(graph, members))
}

/// The `⌈(n+1)/2⌉`-member `K_{1,r}`-structure cut of `FQ_n`, `n >= 3`,
/// `2 <= r <= n + 1`.
pub fn build_fqn_cut(n: u32, r: usize) -> Result<CutFamily, ConstructionError> {
    if n < 3 || r < 2 || r > n as usize + 1 {
        return Err(ConstructionError::Unsupported {
            family: Family::Folded,
            n,
            r,
        });
    }
    let (graph, at) = setup(Family::Folded, n, r)?;
    let full = r == n as usize + 1;
    let mut members = Vec::with_capacity(n as usize / 2 + 1);
    for i in 1..=n / 2 {
        let mut star = at.pair_star(i, if full { n as usize - 2 } else { r - 2 })?;
        if full {
            star.leaves.push(at.ubar(&[2 * i - 1, 2 * i]));
        }
        members.push(star);
    }
    let last = if n % 2 == 1 {
        let mut leaves = vec![at.u(&[n]), at.ubar(&[])];
        leaves.extend((1..=r as u32 - 2).map(|j| at.ubar(&[n, j])));
        StarEmbedding::new(at.ubar(&[n]), leaves)
    } else if !full {
        StarEmbedding::new(
            at.ubar(&[]),
            (1..=r as u32).map(|j| at.ubar(&[j])).collect(),
        )
    } else {
        let mut leaves = vec![at.ubar(&[]), at.u(&[1])];
        leaves.extend((2..=n).map(|j| at.ubar(&[1, j])));
        StarEmbedding::new(at.ubar(&[1]), leaves)
    };
    members.push(last);
    Ok(CutFamily::new(graph, members))
}
