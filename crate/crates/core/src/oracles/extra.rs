use std::ops::ControlFlow;

use super::translations_preserve_edges;
use crate::graphs::anchored::{Allowance, Explorer, Partial, Walker};
use crate::graphs::mask::{bits, popcount, Mask, MaskGraph};
use crate::graphs::{enumerate_connected_subgraphs, Graph, GraphError, Vertex, VertexSet};

/// Largest dimension accepted by [`min_neighborhood`].
pub const NEIGHBORHOOD_MAX_DIM: u32 = 6;
/// Largest set size accepted by [`min_neighborhood`].
pub const NEIGHBORHOOD_MAX_SIZE: usize = 6;
/// Largest dimension accepted by [`brute_kappa_g`].
pub const KAPPA_G_MAX_DIM: u32 = 5;
/// Up to this dimension [`brute_kappa_g`] scans every vertex subset.
const KAPPA_G_SCAN_DIM: u32 = 4;

/// Minimum `|N(C)|` over connected `C` with `|C| = k`, together with the
/// lexicographically first minimizer containing `0...0`.
pub fn min_neighborhood(g: &Graph, k: usize) -> Result<(usize, VertexSet), GraphError> {
    if g.n() > NEIGHBORHOOD_MAX_DIM {
        return Err(GraphError::TooLarge {
            n: g.n(),
            limit: NEIGHBORHOOD_MAX_DIM,
        });
    }
    if k == 0 || k > NEIGHBORHOOD_MAX_SIZE {
        return Err(GraphError::SizeOutOfRange {
            size: k,
            max: NEIGHBORHOOD_MAX_SIZE,
        });
    }
    let mg = MaskGraph::new(*g)?;
    assert!(
        translations_preserve_edges(&mg),
        "translations must be automorphisms"
    );
    let mut best: Option<(usize, Vec<usize>, Mask)> = None;
    for set in enumerate_connected_subgraphs(g, k, Some(Vertex::ORIGIN))? {
        let c = set.to_mask();
        let size = popcount(mg.neighborhood(c));
        let key: Vec<usize> = bits(c).collect();
        let better = match &best {
            None => true,
            Some((b, bkey, _)) => size < *b || (size == *b && key < *bkey),
        };
        if better {
            best = Some((size, key, c));
        }
    }
    let (size, _, c) = best.expect("k <= vertex count");
    Ok((size, VertexSet::from_mask(g.dim, c)))
}

/// The `g`-extra connectivity: the fewest vertices whose removal disconnects
/// the graph and leaves only components with more than `extra` vertices.
/// `None` when no such set exists.
///
/// Up to `n = 4` every vertex subset is scanned. For `n = 5` the smallest
/// remaining component is enumerated instead, fixed to contain `0...0`.
pub fn brute_kappa_g(g: &Graph, extra: usize) -> Result<Option<usize>, GraphError> {
    if g.n() > KAPPA_G_MAX_DIM {
        return Err(GraphError::TooLarge {
            n: g.n(),
            limit: KAPPA_G_MAX_DIM,
        });
    }
    let mg = MaskGraph::new(*g)?;
    if g.n() <= KAPPA_G_SCAN_DIM {
        Ok(scan_all_subsets(&mg, extra))
    } else {
        assert!(
            translations_preserve_edges(&mg),
            "translations must be automorphisms"
        );
        Ok(anchored_kappa_g(&mg, extra))
    }
}

fn scan_all_subsets(mg: &MaskGraph, extra: usize) -> Option<usize> {
    let mut best: Option<usize> = None;
    for removed in 0..=mg.all {
        let size = popcount(removed);
        if best.is_some_and(|b| size >= b) {
            continue;
        }
        let comps = mg.components(mg.all & !removed);
        if comps.len() >= 2 && comps.iter().all(|&c| popcount(c) > extra) {
            best = Some(size);
        }
    }
    best
}

fn anchored_kappa_g(mg: &MaskGraph, extra: usize) -> Option<usize> {
    let mut search = ExtraSearch {
        mg,
        extra,
        total: mg.vertex_count(),
        best: None,
    };
    Walker::new(mg, Allowance::unlimited()).walk(Partial::anchored(mg, 0), &mut search);
    search.best
}

/// Enumerates the smallest component `C` of a valid separation. The cheapest
/// separator for a given `C` is `N(C)` plus every component of the rest that
/// is too small to keep.
struct ExtraSearch<'a> {
    mg: &'a MaskGraph,
    extra: usize,
    total: usize,
    best: Option<usize>,
}

impl Explorer for ExtraSearch<'_> {
    fn admissible(&self, node: &Partial) -> bool {
        let excluded = popcount(node.excluded);
        self.best.is_none_or(|b| excluded < b) && 2 * popcount(node.comp) + excluded <= self.total
    }

    fn complete(&mut self, node: &Partial) -> ControlFlow<()> {
        if popcount(node.comp) <= self.extra {
            return ControlFlow::Continue(());
        }
        let rest = self.mg.all & !(node.comp | node.excluded);
        let (small, large): (Vec<Mask>, Vec<Mask>) = self
            .mg
            .components(rest)
            .into_iter()
            .partition(|&c| popcount(c) <= self.extra);
        if !large.is_empty() {
            let cost = popcount(node.excluded) + small.iter().map(|&c| popcount(c)).sum::<usize>();
            if self.best.is_none_or(|b| cost < b) {
                self.best = Some(cost);
            }
        }
        ControlFlow::Continue(())
    }
}
