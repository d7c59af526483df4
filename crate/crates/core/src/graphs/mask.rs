//! Word-sized vertex sets for the exhaustive regime (`n <= 7`, at most 128 vertices).

use super::{Graph, GraphError};

pub(crate) type Mask = u128;

/// Largest dimension whose vertex set fits in a [`Mask`].
pub(crate) const MASK_MAX_DIM: u32 = 7;

/// Iterates the set bit positions of a mask in ascending order.
pub(crate) fn bits(mut mask: Mask) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

pub(crate) fn popcount(mask: Mask) -> usize {
    mask.count_ones() as usize
}

/// Precomputed neighbor masks of a small cube graph.
#[derive(Debug, Clone)]
pub(crate) struct MaskGraph {
    pub graph: Graph,
    pub all: Mask,
    nbr: Vec<Mask>,
}

impl MaskGraph {
    pub fn new(graph: Graph) -> Result<Self, GraphError> {
        if graph.n() > MASK_MAX_DIM {
            return Err(GraphError::TooLarge {
                n: graph.n(),
                limit: MASK_MAX_DIM,
            });
        }
        let nbr = graph
            .vertices()
            .map(|v| {
                graph
                    .neighbor_iter(v)
                    .fold(0 as Mask, |m, w| m | 1 << w.index())
            })
            .collect();
        let count = graph.vertex_count();
        let all = if count == 128 {
            Mask::MAX
        } else {
            (1 << count) - 1
        };
        Ok(MaskGraph { graph, all, nbr })
    }

    pub fn vertex_count(&self) -> usize {
        self.nbr.len()
    }

    pub fn nbr(&self, v: usize) -> Mask {
        self.nbr[v]
    }

    /// `N(set)`: vertices outside `set` adjacent to a member.
    pub fn neighborhood(&self, set: Mask) -> Mask {
        bits(set).fold(0, |m, v| m | self.nbr[v]) & !set
    }

    #[cfg(test)]
    pub fn is_connected(&self, set: Mask) -> bool {
        if set == 0 {
            return true;
        }
        let mut reached: Mask = 1 << set.trailing_zeros();
        loop {
            let grown = (reached | self.neighborhood(reached)) & set;
            if grown == reached {
                return reached == set;
            }
            reached = grown;
        }
    }

    /// Connected components of the subgraph induced by `set`, each as a mask,
    /// in ascending order of their minimum vertex.
    pub fn components(&self, mut set: Mask) -> Vec<Mask> {
        let mut out = Vec::new();
        while set != 0 {
            let mut comp: Mask = 1 << set.trailing_zeros();
            loop {
                let grown = (comp | self.neighborhood(comp)) & set;
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            set &= !comp;
            out.push(comp);
        }
        out
    }

    /// Translation `v -> v XOR w` applied to a whole set.
    pub fn translate(&self, set: Mask, w: usize) -> Mask {
        bits(set).fold(0, |m, v| m | 1 << (v ^ w))
    }
}
