//! Enumeration of connected vertex sets that contain a fixed anchor vertex.
//!
//! The search keeps a partial component `comp` and a set `excluded` of
//! boundary vertices that were decided to stay outside. At each node the
//! smallest undecided boundary vertex is either excluded (explored first) or
//! absorbed into the component. A node whose boundary is fully decided is a
//! complete candidate with `N(comp) == excluded`. Every connected set holding
//! the anchor is reached exactly once.
//!
//! Because `excluded` only grows and `comp` only grows along a branch, any
//! condition that is inherited by all completions can prune a node.

use std::ops::ControlFlow;
use std::time::Instant;

use super::mask::{Mask, MaskGraph};

/// A node of the search tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Partial {
    pub comp: Mask,
    /// `N(comp)`, kept incrementally.
    pub nbhd: Mask,
    pub excluded: Mask,
}

impl Partial {
    pub fn anchored(g: &MaskGraph, anchor: usize) -> Self {
        Partial {
            comp: 1 << anchor,
            nbhd: g.nbr(anchor),
            excluded: 0,
        }
    }

    fn undecided(&self) -> Mask {
        self.nbhd & !self.excluded
    }

    fn exclude(&self, v: Mask) -> Self {
        Partial {
            excluded: self.excluded | v,
            ..*self
        }
    }

    fn absorb(&self, g: &MaskGraph, v: Mask) -> Self {
        let comp = self.comp | v;
        Partial {
            comp,
            nbhd: (self.nbhd | g.nbr(v.trailing_zeros() as usize)) & !comp,
            excluded: self.excluded,
        }
    }
}

pub(crate) trait Explorer {
    /// A condition every completion of `node` must satisfy to be of interest.
    fn admissible(&self, node: &Partial) -> bool;

    /// Visits a complete candidate whose boundary is `node.excluded`.
    fn complete(&mut self, node: &Partial) -> ControlFlow<()>;
}

/// Why a walk ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum WalkEnd {
    Exhausted,
    Stopped,
    OutOfBudget,
}

/// Node and time allowance shared by one walk.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Allowance {
    pub max_nodes: u64,
    pub deadline: Option<Instant>,
}

impl Allowance {
    pub fn unlimited() -> Self {
        Allowance {
            max_nodes: u64::MAX,
            deadline: None,
        }
    }
}

pub(crate) struct Walker<'a> {
    graph: &'a MaskGraph,
    allowance: Allowance,
    pub nodes: u64,
}

impl<'a> Walker<'a> {
    pub fn new(graph: &'a MaskGraph, allowance: Allowance) -> Self {
        Walker {
            graph,
            allowance,
            nodes: 0,
        }
    }

    pub fn walk<E: Explorer>(&mut self, start: Partial, explorer: &mut E) -> WalkEnd {
        match self.visit(start, explorer) {
            ControlFlow::Continue(()) => WalkEnd::Exhausted,
            ControlFlow::Break(end) => end,
        }
    }

    fn visit<E: Explorer>(&mut self, node: Partial, explorer: &mut E) -> ControlFlow<WalkEnd> {
        self.nodes += 1;
        if self.nodes > self.allowance.max_nodes {
            return ControlFlow::Break(WalkEnd::OutOfBudget);
        }
        if self.nodes & 0xfff == 0 {
            if let Some(deadline) = self.allowance.deadline {
                if Instant::now() >= deadline {
                    return ControlFlow::Break(WalkEnd::OutOfBudget);
                }
            }
        }
        if !explorer.admissible(&node) {
            return ControlFlow::Continue(());
        }
        let undecided = node.undecided();
        if undecided == 0 {
            return match explorer.complete(&node) {
                ControlFlow::Continue(()) => ControlFlow::Continue(()),
                ControlFlow::Break(()) => ControlFlow::Break(WalkEnd::Stopped),
            };
        }
        let v = undecided & undecided.wrapping_neg();
        self.visit(node.exclude(v), explorer)?;
        self.visit(node.absorb(self.graph, v), explorer)
    }
}

/// Expands admissible nodes breadth-limited to `depth` decisions, returning
/// the frontier in depth-first order. Complete nodes met earlier are kept as
/// frontier entries of their own. The second value counts expanded interior
/// nodes.
pub(crate) fn split<E: Explorer>(
    graph: &MaskGraph,
    start: Partial,
    depth: usize,
    explorer: &E,
) -> (Vec<Partial>, u64) {
    fn go<E: Explorer>(
        graph: &MaskGraph,
        node: Partial,
        depth: usize,
        explorer: &E,
        out: &mut Vec<Partial>,
        expanded: &mut u64,
    ) {
        let undecided = node.undecided();
        if depth == 0 || undecided == 0 {
            out.push(node);
            return;
        }
        *expanded += 1;
        if !explorer.admissible(&node) {
            return;
        }
        let v = undecided & undecided.wrapping_neg();
        go(graph, node.exclude(v), depth - 1, explorer, out, expanded);
        go(
            graph,
            node.absorb(graph, v),
            depth - 1,
            explorer,
            out,
            expanded,
        );
    }
    let mut out = Vec::new();
    let mut expanded = 0;
    go(graph, start, depth, explorer, &mut out, &mut expanded);
    (out, expanded)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::mask::popcount;
    use crate::graphs::Graph;

    struct CollectAll(Vec<Mask>);

    impl Explorer for CollectAll {
        fn admissible(&self, _: &Partial) -> bool {
            true
        }
        fn complete(&mut self, node: &Partial) -> ControlFlow<()> {
            self.0.push(node.comp);
            ControlFlow::Continue(())
        }
    }

    fn brute_connected_with_anchor(g: &MaskGraph) -> Vec<Mask> {
        (1..=g.all)
            .filter(|&s| s & 1 == 1 && g.is_connected(s))
            .collect()
    }

    #[test]
    fn reaches_every_anchored_connected_set_once() {
        for graph in [
            Graph::hypercube(3).unwrap(),
            Graph::folded(3).unwrap(),
            Graph::hypercube(4).unwrap(),
        ] {
            let g = MaskGraph::new(graph).unwrap();
            let mut c = CollectAll(Vec::new());
            let end =
                Walker::new(&g, Allowance::unlimited()).walk(Partial::anchored(&g, 0), &mut c);
            assert_eq!(end, WalkEnd::Exhausted);
            let mut got = c.0.clone();
            got.sort_unstable();
            let before = got.len();
            got.dedup();
            assert_eq!(before, got.len(), "duplicate candidates on {graph}");
            assert_eq!(got, brute_connected_with_anchor(&g), "{graph}");
        }
    }

    #[test]
    fn split_frontier_covers_the_same_sets() {
        let g = MaskGraph::new(Graph::hypercube(4).unwrap()).unwrap();
        let all = CollectAll(Vec::new());
        let (units, _) = split(&g, Partial::anchored(&g, 0), 6, &all);
        let mut c = CollectAll(Vec::new());
        for u in units {
            Walker::new(&g, Allowance::unlimited()).walk(u, &mut c);
        }
        let mut whole = CollectAll(Vec::new());
        Walker::new(&g, Allowance::unlimited()).walk(Partial::anchored(&g, 0), &mut whole);
        assert_eq!(c.0, whole.0);
        assert!(c.0.iter().all(|&s| popcount(s) >= 1));
    }

    #[test]
    fn node_budget_stops_the_walk() {
        let g = MaskGraph::new(Graph::hypercube(4).unwrap()).unwrap();
        let mut c = CollectAll(Vec::new());
        let allowance = Allowance {
            max_nodes: 10,
            deadline: None,
        };
        let end = Walker::new(&g, allowance).walk(Partial::anchored(&g, 0), &mut c);
        assert_eq!(end, WalkEnd::OutOfBudget);
    }
}
