//! Covering a target vertex set by few stars that avoid a forbidden set.
//!
//! The search branches on the smallest uncovered target `t`: some member
//! contains `t`, either as its center or as a leaf of a neighboring center.
//! A member's leaves among the still uncovered targets are taken all at once
//! when there are at most `r` of them, otherwise every `r`-subset is tried
//! (one containing `t` when `t` is a leaf). In structure mode the remaining
//! leaf slots are padded from the center's other allowed neighbors once the
//! targets are covered.
//!
//! With a survivor region the cover must also leave at least one vertex of
//! that region untouched, padding included.

use std::time::Instant;

use thiserror::Error;

use crate::graphs::mask::{bits, popcount, Mask, MaskGraph};
use crate::graphs::{Graph, GraphError, Vertex, VertexSet};
use crate::stars::{Mode, StarEmbedding};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoverError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("target and forbidden sets overlap")]
    Overlap,
    #[error("some target vertex lies in no admissible star")]
    Infeasible,
}

/// Result of [`star_cover_number`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoverNumber {
    Exactly(usize),
    MoreThan(usize),
}

/// Minimum number of stars avoiding `forbidden` whose vertex union contains
/// `target`. Structure mode needs stars with exactly `r` leaves, where leaves
/// outside the target are allowed; substructure mode allows `0..=r` leaves.
pub fn star_cover_number(
    g: &Graph,
    target: &VertexSet,
    forbidden: &VertexSet,
    r: usize,
    mode: Mode,
    max: usize,
) -> Result<CoverNumber, CoverError> {
    g.check_set(target)?;
    g.check_set(forbidden)?;
    if !target.is_disjoint(forbidden) {
        return Err(CoverError::Overlap);
    }
    let mg = MaskGraph::new(*g)?;
    let problem = CoverProblem::new(&mg, forbidden.to_mask(), r, mode, None);
    let target = target.to_mask();
    if !problem.feasible(target) {
        return Err(CoverError::Infeasible);
    }
    let mut budget = CoverBudget::unlimited();
    for k in 0..=max {
        match problem.search(target, k, &mut budget) {
            CoverOutcome::Found(_) => return Ok(CoverNumber::Exactly(k)),
            CoverOutcome::Impossible => {}
            CoverOutcome::Budget => unreachable!("unlimited budget"),
        }
    }
    Ok(CoverNumber::MoreThan(max))
}

/// Branch counter and deadline for one or more searches.
#[derive(Debug, Clone, Copy)]
pub(crate) struct CoverBudget {
    pub branches: u64,
    pub max_branches: u64,
    pub deadline: Option<Instant>,
}

impl CoverBudget {
    pub fn unlimited() -> Self {
        CoverBudget {
            branches: 0,
            max_branches: u64::MAX,
            deadline: None,
        }
    }

    fn spend(&mut self) -> bool {
        self.branches += 1;
        if self.branches > self.max_branches {
            return false;
        }
        if self.branches & 0x3ff == 0 {
            if let Some(d) = self.deadline {
                return Instant::now() < d;
            }
        }
        true
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum CoverOutcome {
    /// Stars as `(center, leaves)` vertex indices.
    Found(Vec<(usize, Vec<usize>)>),
    Impossible,
    Budget,
}

pub(crate) struct CoverProblem<'a> {
    g: &'a MaskGraph,
    forbidden: Mask,
    r: usize,
    mode: Mode,
    survivors: Option<Mask>,
    /// Vertices that can center an admissible star.
    centers: Mask,
}

struct Chosen {
    center: usize,
    core: Mask,
}

enum Flow {
    Continue,
    Found(Vec<(usize, Vec<usize>)>),
    Budget,
}

impl<'a> CoverProblem<'a> {
    pub fn new(
        g: &'a MaskGraph,
        forbidden: Mask,
        r: usize,
        mode: Mode,
        survivors: Option<Mask>,
    ) -> Self {
        let centers = bits(g.all & !forbidden)
            .filter(|&c| mode == Mode::Substructure || popcount(g.nbr(c) & !forbidden) >= r)
            .fold(0, |m, c| m | 1 << c);
        CoverProblem {
            g,
            forbidden,
            r,
            mode,
            survivors,
            centers,
        }
    }

    /// Whether every target lies in some admissible star.
    pub fn feasible(&self, target: Mask) -> bool {
        bits(target).all(|t| (self.g.nbr(t) | 1 << t) & self.centers != 0)
    }

    /// Largest number of vertices of `unc` a single admissible star can hold.
    pub fn max_coverage(&self, unc: Mask) -> usize {
        bits(self.centers)
            .map(|c| usize::from(unc >> c & 1 == 1) + popcount(self.g.nbr(c) & unc).min(self.r))
            .max()
            .unwrap_or(0)
    }

    /// Looks for a cover of `target` with at most `limit` stars.
    pub fn search(&self, target: Mask, limit: usize, budget: &mut CoverBudget) -> CoverOutcome {
        let mut chosen = Vec::with_capacity(limit);
        match self.dfs(target, 0, limit, &mut chosen, budget) {
            Flow::Continue => CoverOutcome::Impossible,
            Flow::Found(stars) => CoverOutcome::Found(stars),
            Flow::Budget => CoverOutcome::Budget,
        }
    }

    fn dfs(
        &self,
        unc: Mask,
        covered: Mask,
        left: usize,
        chosen: &mut Vec<Chosen>,
        budget: &mut CoverBudget,
    ) -> Flow {
        if unc == 0 {
            return match self.finish(covered, chosen) {
                Some(stars) => Flow::Found(stars),
                None => Flow::Continue,
            };
        }
        if left == 0 || left * self.max_coverage(unc) < popcount(unc) {
            return Flow::Continue;
        }
        let t = unc.trailing_zeros() as usize;
        let candidates = (self.g.nbr(t) | 1 << t) & self.centers;
        for c in bits(candidates) {
            let reach = self.g.nbr(c) & unc;
            let required = if c == t { 0 } else { 1 << t };
            let mut flow = Flow::Continue;
            for_each_core(reach, required, self.r, &mut |core| {
                if !budget.spend() {
                    flow = Flow::Budget;
                    return false;
                }
                let gained = core | 1 << c;
                chosen.push(Chosen { center: c, core });
                flow = self.dfs(unc & !gained, covered | gained, left - 1, chosen, budget);
                chosen.pop();
                matches!(flow, Flow::Continue)
            });
            if !matches!(flow, Flow::Continue) {
                return flow;
            }
        }
        Flow::Continue
    }

    /// Pads structure stars and picks a survivor; `None` when no survivor can
    /// be kept.
    fn finish(&self, covered: Mask, chosen: &[Chosen]) -> Option<Vec<(usize, Vec<usize>)>> {
        let pad_need = |s: &Chosen| match self.mode {
            Mode::Structure => self.r - popcount(s.core),
            Mode::Substructure => 0,
        };
        let pool = |s: &Chosen| self.g.nbr(s.center) & !self.forbidden & !s.core;
        let mut keep: Mask = 0;
        if let Some(region) = self.survivors {
            let blocked = chosen
                .iter()
                .filter(|s| pad_need(s) > 0 && popcount(pool(s)) == pad_need(s))
                .fold(0, |m, s| m | pool(s));
            let free = region & !covered & !blocked;
            if free == 0 {
                return None;
            }
            keep = free & free.wrapping_neg();
        }
        let mut used = covered;
        let stars = chosen
            .iter()
            .map(|s| {
                let need = pad_need(s);
                let avail = pool(s) & !keep;
                let padding: Mask = bits(avail & used)
                    .chain(bits(avail & !used))
                    .take(need)
                    .fold(0, |m, v| m | 1 << v);
                debug_assert_eq!(popcount(padding), need);
                used |= padding;
                (s.center, bits(s.core).chain(bits(padding)).collect())
            })
            .collect();
        Some(stars)
    }
}

/// Calls `f` with each admissible core leaf set drawn from `reach`: all of it
/// when it has at most `r` vertices, otherwise each `r`-subset containing
/// `required`, in lexicographic order. Stops when `f` returns false.
fn for_each_core(reach: Mask, required: Mask, r: usize, f: &mut dyn FnMut(Mask) -> bool) {
    if popcount(reach) <= r {
        f(reach);
        return;
    }
    let pool: Vec<usize> = bits(reach & !required).collect();
    let need = r - popcount(required);
    let mut idx: Vec<usize> = (0..need).collect();
    loop {
        let core = idx.iter().fold(required, |m, &i| m | 1 << pool[i]);
        if !f(core) {
            return;
        }
        // Advance to the next combination of `need` indices out of `pool.len()`.
        let mut i = need;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] < pool.len() - need + i {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..need {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Turns index pairs from a [`CoverOutcome::Found`] into star embeddings.
pub(crate) fn to_embeddings(stars: &[(usize, Vec<usize>)]) -> Vec<StarEmbedding> {
    stars
        .iter()
        .map(|(c, leaves)| {
            StarEmbedding::new(
                Vertex::from_label(*c as u32),
                leaves
                    .iter()
                    .map(|&l| Vertex::from_label(l as u32))
                    .collect(),
            )
        })
        .collect()
}
