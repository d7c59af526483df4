use super::{LemmaCase, LemmaId, LemmaReport, OracleError};
use crate::graphs::mask::{bits, popcount, Mask, MaskGraph};
use crate::graphs::{enumerate_connected_subgraphs, Family, Graph, GraphError, Vertex};

/// Largest dimension accepted by [`check_star_bounds`].
pub const STAR_BOUNDS_MAX_DIM: u32 = 5;
/// Largest component size accepted by [`check_star_bounds`].
pub const STAR_BOUNDS_MAX_K: usize = 5;
/// Largest dimension accepted by [`check_common_neighbors`].
pub const COMMON_NEIGHBORS_MAX_DIM: u32 = 8;

fn vertices(mask: Mask) -> Vec<Vertex> {
    bits(mask).map(|i| Vertex::from_label(i as u32)).collect()
}

/// Checks that every pair of distinct vertices has 0 or 2 common neighbors.
///
/// The law is claimed for `Q_n`, `n >= 3`, and `FQ_n`, `n >= 4`; violations
/// elsewhere are marked as expected.
pub fn check_common_neighbors(g: &Graph) -> Result<LemmaReport, GraphError> {
    if g.n() > COMMON_NEIGHBORS_MAX_DIM {
        return Err(GraphError::TooLarge {
            n: g.n(),
            limit: COMMON_NEIGHBORS_MAX_DIM,
        });
    }
    let claimed = match g.family {
        Family::Hypercube => g.n() >= 3,
        Family::Folded => g.n() >= 4,
    };
    let count = g.vertex_count();
    let mut report = LemmaReport::new(LemmaId::CommonNeighbors, *g);
    let mut common = vec![0usize; count];
    for a in g.vertices() {
        common.iter_mut().for_each(|c| *c = 0);
        for x in g.neighbor_iter(a) {
            for y in g.neighbor_iter(x) {
                common[y.index()] += 1;
            }
        }
        for b in (a.index() + 1..count).map(|i| Vertex::from_label(i as u32)) {
            report.instances_checked += 1;
            let c = common[b.index()];
            report.observe(2, c);
            if c != 0 && c != 2 {
                let mut shared: Vec<Vertex> =
                    g.neighbor_iter(a).filter(|&x| g.adjacent(x, b)).collect();
                shared.sort();
                report.violations.push(LemmaCase {
                    subject: vec![a, b],
                    related: shared,
                    value: c,
                    expected: !claimed,
                });
            }
        }
    }
    Ok(report.finish())
}

/// Exhaustively checks how many vertices of a star `K_{1,r}` a disjoint
/// connected set `C` with `|C| = k <= kmax` can see:
///
/// * `k = 1`: at most 2, and 2 only when the vertex sees two leaves;
/// * `k >= 2`: at most `2(k - 1)`, with equality only when some vertex of `C`
///   is adjacent to all the others.
///
/// Violations for `FQ_n` below the claimed dimensions (`n >= 4` for `k = 1`,
/// `n >= 5` for `k >= 2`) are marked as expected.
pub fn check_star_bounds(g: &Graph, r: usize, kmax: usize) -> Result<LemmaReport, OracleError> {
    if g.n() > STAR_BOUNDS_MAX_DIM {
        return Err(GraphError::TooLarge {
            n: g.n(),
            limit: STAR_BOUNDS_MAX_DIM,
        }
        .into());
    }
    if kmax == 0 || kmax > STAR_BOUNDS_MAX_K {
        return Err(GraphError::SizeOutOfRange {
            size: kmax,
            max: STAR_BOUNDS_MAX_K,
        }
        .into());
    }
    let degree = g.degree();
    if r < 2 || r > degree {
        return Err(OracleError::ROutOfRange {
            r,
            min: 2,
            max: degree,
        });
    }
    let claimed = |k: usize| match g.family {
        Family::Hypercube => true,
        Family::Folded => g.n() >= if k == 1 { 4 } else { 5 },
    };
    let mg = MaskGraph::new(*g)?;
    let stars = stars_of(&mg, r);
    let mut report = LemmaReport::new(LemmaId::StarBounds, *g);
    for k in 1..=kmax.min(g.vertex_count()) {
        let bound = if k == 1 { 2 } else { 2 * (k - 1) };
        for set in enumerate_connected_subgraphs(g, k, None)? {
            let c = set.to_mask();
            let nc = mg.neighborhood(c);
            let spanning_star = bits(c).any(|v| mg.nbr(v) & c == c & !(1 << v));
            for &(center, star) in &stars {
                if star & c != 0 {
                    continue;
                }
                report.instances_checked += 1;
                let h = popcount(nc & star);
                report.observe(k, h);
                let sees_center = nc >> center & 1 == 1;
                let bad = h > bound
                    || (h == bound && k == 1 && sees_center)
                    || (h == bound && k >= 2 && !spanning_star);
                let case = || LemmaCase {
                    subject: vertices(c),
                    related: std::iter::once(Vertex::from_label(center as u32))
                        .chain(vertices(star & !(1 << center)))
                        .collect(),
                    value: h,
                    expected: !claimed(k),
                };
                if bad {
                    report.violations.push(case());
                } else if h == bound {
                    report.extremal_count += 1;
                    if report.extremal_witnesses.len() < 4 * super::EXTREMAL_KEEP {
                        report.extremal_witnesses.push(case());
                    }
                }
            }
        }
    }
    Ok(report.finish())
}

/// Every `K_{1,r}` as `(center, vertex mask)`, centers ascending and leaf
/// sets in lexicographic order.
fn stars_of(mg: &MaskGraph, r: usize) -> Vec<(usize, Mask)> {
    fn leaf_sets(pool: &[usize], r: usize, acc: Mask, out: &mut Vec<Mask>) {
        if r == 0 {
            out.push(acc);
            return;
        }
        for i in 0..=pool.len() - r {
            leaf_sets(&pool[i + 1..], r - 1, acc | 1 << pool[i], out);
        }
    }
    let mut out = Vec::new();
    for c in 0..mg.vertex_count() {
        let pool: Vec<usize> = bits(mg.nbr(c)).collect();
        let mut sets = Vec::new();
        leaf_sets(&pool, r, 1 << c, &mut sets);
        out.extend(sets.into_iter().map(|s| (c, s)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::LemmaStatus;

    fn binom(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn star_count_is_vertices_times_binomial() {
        for (g, r) in [
            (Graph::hypercube(4).unwrap(), 3),
            (Graph::folded(4).unwrap(), 5),
            (Graph::hypercube(3).unwrap(), 2),
        ] {
            let mg = MaskGraph::new(g).unwrap();
            let stars = stars_of(&mg, r);
            assert_eq!(stars.len(), g.vertex_count() * binom(g.degree(), r));
            let mut sorted = stars.clone();
            sorted.dedup();
            assert_eq!(sorted.len(), stars.len());
            assert!(stars.iter().all(|&(_, s)| popcount(s) == r + 1));
        }
    }

    #[test]
    fn q4_common_neighbors_pass() {
        let r = check_common_neighbors(&Graph::hypercube(4).unwrap()).unwrap();
        assert_eq!(r.status(), LemmaStatus::Pass);
        assert_eq!(r.instances_checked, 120);
    }

    #[test]
    fn fq3_common_neighbor_exception() {
        let g = Graph::folded(3).unwrap();
        let r = check_common_neighbors(&g).unwrap();
        assert_eq!(r.status(), LemmaStatus::PassWithException);
        let a = g.parse_vertex("011").unwrap();
        let b = g.parse_vertex("110").unwrap();
        let (a, b) = (a.min(b), a.max(b));
        let case = r
            .violations
            .iter()
            .find(|c| c.subject == vec![a, b])
            .unwrap();
        let mut expected: Vec<Vertex> = ["010", "001", "100", "111"]
            .iter()
            .map(|s| g.parse_vertex(s).unwrap())
            .collect();
        expected.sort();
        assert_eq!(case.related, expected);
        assert_eq!(case.value, 4);
    }

    #[test]
    fn q4_single_vertex_bound() {
        let r = check_star_bounds(&Graph::hypercube(4).unwrap(), 3, 1).unwrap();
        assert_eq!(r.status(), LemmaStatus::Pass);
        assert_eq!(r.max_observed, vec![(1, 2)]);
        assert!(r.extremal_count > 0);
    }

    #[test]
    fn fq5_star_bounds_pass() {
        let r = check_star_bounds(&Graph::folded(5).unwrap(), 4, 3).unwrap();
        assert_eq!(r.status(), LemmaStatus::Pass);
    }

    #[test]
    fn argument_checks() {
        let q4 = Graph::hypercube(4).unwrap();
        assert!(check_star_bounds(&q4, 5, 2).is_err());
        assert!(check_star_bounds(&q4, 1, 2).is_err());
        assert!(check_star_bounds(&q4, 2, 6).is_err());
        assert!(check_star_bounds(&Graph::hypercube(6).unwrap(), 2, 2).is_err());
    }
}
