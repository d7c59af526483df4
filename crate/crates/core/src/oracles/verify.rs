use thiserror::Error;

use crate::graphs::{components_after_removal, Graph};
use crate::stars::{CutFamily, Mode, StarViolation};

/// Why a family is not a `K_{1,r}`-(sub)structure cut.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CutRejection {
    #[error("family belongs to {found}, expected {expected}")]
    GraphMismatch { expected: Graph, found: Graph },
    #[error("member {index}: {violation}")]
    InvalidMember {
        index: usize,
        violation: StarViolation,
    },
    #[error("member {index} has {leaves} leaves, {mode} mode allows r = {r}")]
    WrongLeafCount {
        index: usize,
        leaves: usize,
        r: usize,
        mode: Mode,
    },
    #[error("removal leaves {components} component(s)")]
    NotDisconnected { components: usize },
}

/// Checks that `f` is a cut of `g` whose members are `K_{1,r}` (structure)
/// or stars with at most `r` leaves (substructure).
pub fn check_structure_cut(
    g: &Graph,
    f: &CutFamily,
    mode: Mode,
    r: usize,
) -> Result<(), CutRejection> {
    if f.graph() != g {
        return Err(CutRejection::GraphMismatch {
            expected: *g,
            found: *f.graph(),
        });
    }
    f.validate()
        .map_err(|(index, violation)| CutRejection::InvalidMember { index, violation })?;
    for (index, s) in f.members().iter().enumerate() {
        if !mode.admits(s.leaf_count(), r) {
            return Err(CutRejection::WrongLeafCount {
                index,
                leaves: s.leaf_count(),
                r,
                mode,
            });
        }
    }
    let removed = f
        .vertex_union()
        .expect("validated members lie in the graph");
    let components = components_after_removal(g, &removed)
        .expect("same graph")
        .len();
    if components < 2 {
        return Err(CutRejection::NotDisconnected { components });
    }
    Ok(())
}

pub fn is_structure_cut(g: &Graph, f: &CutFamily, mode: Mode, r: usize) -> bool {
    check_structure_cut(g, f, mode, r).is_ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::Vertex;
    use crate::stars::{build_qn_cut, StarEmbedding};

    fn star(g: &Graph, center: &str, leaves: &[&str]) -> StarEmbedding {
        StarEmbedding::new(
            g.parse_vertex(center).unwrap(),
            leaves.iter().map(|l| g.parse_vertex(l).unwrap()).collect(),
        )
    }

    #[test]
    fn constructed_q3_family_is_a_cut() {
        let q3 = Graph::hypercube(3).unwrap();
        let f = build_qn_cut(3, 2).unwrap();
        assert!(is_structure_cut(&q3, &f, Mode::Structure, 2));
        assert!(is_structure_cut(&q3, &f, Mode::Substructure, 3));
        assert!(matches!(
            check_structure_cut(&q3, &f, Mode::Structure, 3),
            Err(CutRejection::WrongLeafCount {
                index: 0,
                leaves: 2,
                ..
            })
        ));
    }

    #[test]
    fn one_star_does_not_cut_q3() {
        let q3 = Graph::hypercube(3).unwrap();
        let f = CutFamily::new(q3, vec![star(&q3, "110", &["100", "010"])]);
        assert_eq!(
            check_structure_cut(&q3, &f, Mode::Structure, 2),
            Err(CutRejection::NotDisconnected { components: 1 })
        );
    }

    #[test]
    fn covering_all_of_q2_is_not_a_cut() {
        let q2 = Graph::hypercube(2).unwrap();
        let f = CutFamily::new(
            q2,
            vec![
                star(&q2, "10", &["00", "11"]),
                star(&q2, "01", &["00", "11"]),
            ],
        );
        assert_eq!(
            check_structure_cut(&q2, &f, Mode::Structure, 2),
            Err(CutRejection::NotDisconnected { components: 0 })
        );
    }

    #[test]
    fn malformed_members_and_foreign_graphs_are_rejected() {
        let q3 = Graph::hypercube(3).unwrap();
        let f = CutFamily::new(
            q3,
            vec![StarEmbedding::new(
                Vertex::ORIGIN,
                vec![Vertex::from_label(3)],
            )],
        );
        assert!(matches!(
            check_structure_cut(&q3, &f, Mode::Substructure, 2),
            Err(CutRejection::InvalidMember { index: 0, .. })
        ));
        let fq3 = Graph::folded(3).unwrap();
        assert!(matches!(
            check_structure_cut(&fq3, &build_qn_cut(3, 2).unwrap(), Mode::Structure, 2),
            Err(CutRejection::GraphMismatch { .. })
        ));
    }
}
