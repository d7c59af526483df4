//! The exact solvers against direct enumeration that shares none of their
//! machinery: no anchoring, no pruning, no cover search. Only adjacency and
//! component counting from the graph model are reused.

use starcut::graphs::components_after_removal;
use starcut::oracles::{
    brute_kappa_g, min_neighborhood, min_star_cut, star_cover_number, CoverNumber, SearchBudget,
    SolveValue,
};
use starcut::{Graph, Mode, Vertex, VertexSet};

fn budget() -> SearchBudget {
    SearchBudget {
        workers: 1,
        ..SearchBudget::default()
    }
}

/// Every vertex set of a star with `0..=r` leaves (substructure) or exactly
/// `r` leaves (structure), deduplicated.
fn all_star_sets(g: &Graph, r: usize, mode: Mode) -> Vec<VertexSet> {
    let mut out: Vec<VertexSet> = Vec::new();
    for c in g.vertices() {
        let nbrs: Vec<Vertex> = g.neighbor_iter(c).collect();
        for pick in 0u32..(1 << nbrs.len()) {
            let leaves = pick.count_ones() as usize;
            if !mode.admits(leaves, r) {
                continue;
            }
            let set = VertexSet::from_vertices(
                g.dim,
                std::iter::once(c).chain(
                    nbrs.iter()
                        .enumerate()
                        .filter(|(i, _)| pick >> i & 1 == 1)
                        .map(|(_, &v)| v),
                ),
            );
            if !out.contains(&set) {
                out.push(set);
            }
        }
    }
    out
}

fn disconnects(g: &Graph, removed: &VertexSet) -> bool {
    components_after_removal(g, removed).unwrap().len() >= 2
}

/// Smallest number of stars (up to `max`) whose union disconnects `g`.
fn brute_min_cut(g: &Graph, r: usize, mode: Mode, max: usize) -> Option<usize> {
    let sets = all_star_sets(g, r, mode);
    let mut layer: Vec<(usize, VertexSet)> = vec![(0, VertexSet::empty(g.dim))];
    for size in 1..=max {
        let mut next = Vec::new();
        for (last, union) in &layer {
            // Members may repeat, so start again at `last`.
            for (i, s) in sets.iter().enumerate().skip(*last) {
                let mut u = union.clone();
                u.union_with(s);
                if disconnects(g, &u) {
                    return Some(size);
                }
                next.push((i, u));
            }
        }
        layer = next;
    }
    None
}

fn exact(res: SolveValue) -> Option<usize> {
    match res {
        SolveValue::Exact { count } => Some(count),
        _ => None,
    }
}

#[test]
fn q3_and_fq3_with_r2_match_direct_enumeration() {
    for g in [Graph::hypercube(3).unwrap(), Graph::folded(3).unwrap()] {
        for mode in Mode::BOTH {
            let solved = min_star_cut(&g, 2, mode, &budget()).unwrap();
            let brute = brute_min_cut(&g, 2, mode, 3);
            assert!(brute.is_some(), "{g} {mode}: no cut of at most 3 members");
            assert_eq!(exact(solved.value), brute, "{g} {mode}");
        }
    }
}

#[test]
fn other_small_cases_match_direct_enumeration() {
    let cases = [
        (Graph::hypercube(3).unwrap(), 1),
        (Graph::hypercube(3).unwrap(), 3),
        (Graph::folded(3).unwrap(), 1),
        (Graph::folded(3).unwrap(), 4),
        (Graph::hypercube(2).unwrap(), 1),
    ];
    for (g, r) in cases {
        for mode in Mode::BOTH {
            let solved = min_star_cut(&g, r, mode, &budget()).unwrap();
            assert_eq!(
                exact(solved.value),
                brute_min_cut(&g, r, mode, 4),
                "{g} r={r} {mode}"
            );
        }
    }
}

#[test]
fn q2_with_r2_matches_direct_enumeration() {
    let q2 = Graph::hypercube(2).unwrap();
    // K_{1,2} in a 4-cycle has 3 of the 4 vertices, and any union of such
    // sets leaves at most one vertex.
    assert_eq!(brute_min_cut(&q2, 2, Mode::Structure, 4), None);
    assert_eq!(
        min_star_cut(&q2, 2, Mode::Structure, &budget())
            .unwrap()
            .value,
        SolveValue::NoCutExists
    );
    assert_eq!(brute_min_cut(&q2, 2, Mode::Substructure, 4), Some(2));
}

#[test]
fn q4_with_r2_matches_direct_enumeration() {
    let q4 = Graph::hypercube(4).unwrap();
    for mode in Mode::BOTH {
        let solved = min_star_cut(&q4, 2, mode, &budget()).unwrap();
        assert_eq!(
            exact(solved.value),
            brute_min_cut(&q4, 2, mode, 2),
            "{mode}"
        );
    }
}

#[test]
fn cover_number_matches_direct_enumeration() {
    let q3 = Graph::hypercube(3).unwrap();
    let origin = VertexSet::from_vertices(q3.dim, [Vertex::ORIGIN]);
    let target = q3.neighbors(Vertex::ORIGIN).unwrap();
    let sets: Vec<VertexSet> = all_star_sets(&q3, 2, Mode::Substructure)
        .into_iter()
        .filter(|s| s.is_disjoint(&origin))
        .collect();
    let brute = (1..=3)
        .find(|&k| {
            let mut stack = vec![(0usize, 0usize, VertexSet::empty(q3.dim))];
            while let Some((start, used, u)) = stack.pop() {
                if target.is_subset(&u) {
                    return true;
                }
                if used == k {
                    continue;
                }
                for (i, s) in sets.iter().enumerate().skip(start) {
                    let mut v = u.clone();
                    v.union_with(s);
                    stack.push((i + 1, used + 1, v));
                }
            }
            false
        })
        .unwrap();
    assert_eq!(brute, 2);
    assert_eq!(
        star_cover_number(&q3, &target, &origin, 2, Mode::Substructure, 5),
        Ok(CoverNumber::Exactly(brute))
    );
}

/// `|N(C)|` minimized over all connected `k`-subsets, by scanning every subset.
fn brute_min_neighborhood(g: &Graph, k: usize) -> usize {
    let count = g.vertex_count();
    let mut best = usize::MAX;
    for bits in 0u64..(1 << count) {
        if bits.count_ones() as usize != k {
            continue;
        }
        let set = VertexSet::from_vertices(
            g.dim,
            (0..count)
                .filter(|i| bits >> i & 1 == 1)
                .map(|i| Vertex::from_label(i as u32)),
        );
        let rest = set.complement();
        let inside = components_after_removal(g, &rest).unwrap();
        if inside.len() != 1 {
            continue;
        }
        best = best.min(g.set_neighborhood(&set).unwrap().len());
    }
    best
}

#[test]
fn min_neighborhood_matches_subset_scan() {
    for g in [
        Graph::hypercube(4).unwrap(),
        Graph::folded(4).unwrap(),
        Graph::folded(3).unwrap(),
    ] {
        for k in 1..=4 {
            let (value, set) = min_neighborhood(&g, k).unwrap();
            assert_eq!(value, brute_min_neighborhood(&g, k), "{g} k={k}");
            assert_eq!(set.len(), k);
            assert_eq!(g.set_neighborhood(&set).unwrap().len(), value);
        }
    }
}

#[test]
fn kappa_g_respects_its_definition() {
    // A vertex with all its neighbors removed is a component of size 1, so
    // for g = 0 the value is the classical connectivity.
    for g in [
        Graph::hypercube(3).unwrap(),
        Graph::folded(3).unwrap(),
        Graph::hypercube(4).unwrap(),
    ] {
        assert_eq!(
            brute_kappa_g(&g, 0).unwrap(),
            Some(starcut::graphs::min_vertex_cut(&g).unwrap())
        );
    }
}
