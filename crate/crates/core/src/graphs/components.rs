use std::collections::VecDeque;
use std::ops::ControlFlow;

use super::anchored::{Allowance, Explorer, Partial, Walker};
use super::mask::{popcount, MaskGraph};
use super::{Graph, GraphError, Vertex, VertexSet};

/// Largest dimension handled by [`min_vertex_cut`].
pub const VERTEX_CUT_MAX_DIM: u32 = 6;

/// Connected components of `g - removed`, ordered by size and then by
/// smallest member label.
pub fn components_after_removal(
    g: &Graph,
    removed: &VertexSet,
) -> Result<Vec<VertexSet>, GraphError> {
    g.check_set(removed)?;
    let mut seen = removed.clone();
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    for start in g.vertices() {
        if seen.contains(start) {
            continue;
        }
        let mut comp = VertexSet::empty(g.dim);
        seen.insert(start);
        queue.push_back(start);
        while let Some(x) = queue.pop_front() {
            comp.insert(x);
            for y in g.neighbor_iter(x) {
                if seen.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        out.push(comp);
    }
    // Discovery order already ascends by minimum vertex; stable sort keeps it.
    out.sort_by_key(VertexSet::len);
    Ok(out)
}

/// Length of a shortest odd cycle, or `None` when the graph is bipartite.
///
/// Breadth-first search from the origin suffices: translations are
/// automorphisms, so some shortest odd cycle passes through `0...0`, and for
/// such a cycle the edge opposite the root joins two vertices on the same
/// level.
pub fn odd_girth(g: &Graph) -> Option<usize> {
    let mut dist = vec![u32::MAX; g.vertex_count()];
    let mut queue = VecDeque::new();
    dist[0] = 0;
    queue.push_back(Vertex::ORIGIN);
    let mut best: Option<usize> = None;
    while let Some(x) = queue.pop_front() {
        let dx = dist[x.index()];
        if let Some(b) = best {
            if 2 * dx as usize + 1 >= b {
                break;
            }
        }
        for y in g.neighbor_iter(x) {
            let dy = dist[y.index()];
            if dy == u32::MAX {
                dist[y.index()] = dx + 1;
                queue.push_back(y);
            } else if dy == dx {
                let len = 2 * dx as usize + 1;
                best = Some(best.map_or(len, |b| b.min(len)));
            }
        }
    }
    best
}

/// Classical vertex connectivity `κ(g)` by anchored component enumeration:
/// the minimum `|N(C)|` over connected `C` containing the origin that leave at
/// least one vertex outside `C ∪ N(C)`.
pub fn min_vertex_cut(g: &Graph) -> Result<usize, GraphError> {
    if g.n() > VERTEX_CUT_MAX_DIM {
        return Err(GraphError::TooLarge {
            n: g.n(),
            limit: VERTEX_CUT_MAX_DIM,
        });
    }
    let mg = MaskGraph::new(*g)?;
    let mut search = CutSearch {
        total: mg.vertex_count(),
        all: mg.all,
        best: g.degree(),
    };
    Walker::new(&mg, Allowance::unlimited()).walk(Partial::anchored(&mg, 0), &mut search);
    Ok(search.best)
}

struct CutSearch {
    total: usize,
    all: u128,
    best: usize,
}

impl Explorer for CutSearch {
    fn admissible(&self, node: &Partial) -> bool {
        let excluded = popcount(node.excluded);
        // Only strictly smaller cuts matter, and `C` may be taken to be the
        // smaller side of the separation.
        excluded < self.best && 2 * popcount(node.comp) + excluded <= self.total
    }

    fn complete(&mut self, node: &Partial) -> ControlFlow<()> {
        if node.comp | node.excluded != self.all {
            self.best = self.best.min(popcount(node.excluded));
        }
        ControlFlow::Continue(())
    }
}
