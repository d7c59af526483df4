//! Connected vertex sets of a fixed size, each produced exactly once.
//!
//! Sets grow one vertex at a time from a root. A vertex may join only through
//! the extension list of the set it first became adjacent to (its exclusive
//! neighborhood), which fixes a unique parent for every set and removes the
//! need for a global table of sets already seen. Without an anchor every
//! vertex is tried as the root and only larger labels may join, so each set is
//! grown from its smallest member.

use super::{Graph, GraphError, Vertex, VertexSet};

/// Streams every connected vertex set of `size` vertices, restricted to sets
/// containing `anchor` when one is given.
pub fn enumerate_connected_subgraphs(
    g: &Graph,
    size: usize,
    anchor: Option<Vertex>,
) -> Result<ConnectedSubgraphs, GraphError> {
    let max = g.vertex_count();
    if size == 0 || size > max {
        return Err(GraphError::SizeOutOfRange { size, max });
    }
    if let Some(a) = anchor {
        g.check_vertex(a)?;
    }
    let mut it = ConnectedSubgraphs {
        graph: *g,
        size,
        anchored: anchor.is_some(),
        next_root: 0,
        stack: Vec::new(),
    };
    if let Some(a) = anchor {
        it.push_root(a.label());
        it.next_root = max as u32;
    }
    Ok(it)
}

struct Frame {
    members: Vec<u32>,
    /// Candidate extensions, sorted descending so the smallest pops first.
    extension: Vec<u32>,
}

pub struct ConnectedSubgraphs {
    graph: Graph,
    size: usize,
    anchored: bool,
    next_root: u32,
    stack: Vec<Frame>,
}

impl ConnectedSubgraphs {
    fn root(&self) -> u32 {
        self.stack[0].members[0]
    }

    fn eligible(&self, root: u32, u: u32) -> bool {
        self.anchored || u > root
    }

    fn push_root(&mut self, root: u32) {
        let mut extension: Vec<u32> = self
            .graph
            .neighbor_iter(Vertex::from_label(root))
            .map(Vertex::label)
            .filter(|&u| self.anchored || u > root)
            .collect();
        extension.sort_unstable_by(|a, b| b.cmp(a));
        self.stack.push(Frame {
            members: vec![root],
            extension,
        });
    }

    fn emit(&self, members: &[u32]) -> VertexSet {
        VertexSet::from_vertices(
            self.graph.dim,
            members.iter().map(|&l| Vertex::from_label(l)),
        )
    }
}

impl Iterator for ConnectedSubgraphs {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        loop {
            if self.stack.is_empty() {
                if (self.next_root as usize) >= self.graph.vertex_count() {
                    return None;
                }
                let root = self.next_root;
                self.next_root += 1;
                self.push_root(root);
            }
            let root = self.root();
            let top = self.stack.last_mut().expect("stack is non-empty");
            if top.members.len() == self.size {
                let frame = self.stack.pop().expect("stack is non-empty");
                return Some(self.emit(&frame.members));
            }
            let Some(w) = top.extension.pop() else {
                self.stack.pop();
                continue;
            };
            let members = top.members.clone();
            let mut extension = top.extension.clone();
            let graph = self.graph;
            for u in graph
                .neighbor_iter(Vertex::from_label(w))
                .map(Vertex::label)
            {
                if !self.eligible(root, u) || members.contains(&u) {
                    continue;
                }
                let touches = members
                    .iter()
                    .any(|&m| graph.adjacent(Vertex::from_label(m), Vertex::from_label(u)));
                if !touches {
                    extension.push(u);
                }
            }
            extension.sort_unstable_by(|a, b| b.cmp(a));
            extension.dedup();
            let mut members = members;
            members.push(w);
            self.stack.push(Frame { members, extension });
        }
    }
}
