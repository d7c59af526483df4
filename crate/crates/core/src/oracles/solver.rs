//! Exact minimum `K_{1,r}`-(sub)structure cuts for `n <= 7`.
//!
//! An upper bound comes from the explicit constructions when they apply.
//! Then for `m = 1, 2, ...` the search decides whether some `m`-member family
//! is a cut. Any cut has a smallest component `C`; translating it to contain
//! `0...0`, the family must cover `N(C)` with stars avoiding `C` and leave a
//! vertex outside `C ∪ N(C)`. Candidates `C` are enumerated with pruning
//!
//! * `2|C| + |N(C)| <= |V|` (a smallest component),
//! * `|N(C)| <= m(r + 1)`,
//! * `m * maxcov >= |N(C)|`, where `maxcov` is the most of the boundary seen
//!   so far a single allowed star can contain,
//!
//! and for each complete candidate the cover search decides coverability.
//! The first `m` with a cover is the answer; members may coincide, so `m`
//! covers imply covers with more members.
//!
//! The enumeration tree is split into work units at a fixed depth. Units
//! run on `workers` threads, but results are merged in unit order with the
//! same stopping rule a single thread uses, so values, witnesses and counts
//! do not depend on the worker count (unless the wall-clock limit strikes).

use std::cell::Cell;
use std::ops::ControlFlow;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use super::cover::{to_embeddings, CoverBudget, CoverOutcome, CoverProblem};
use super::{check_structure_cut, is_structure_cut, translations_preserve_edges, OracleError};
use crate::graphs::anchored::{split, Allowance, Explorer, Partial, WalkEnd, Walker};
use crate::graphs::mask::{popcount, Mask, MaskGraph};
use crate::graphs::{Family, Graph};
use crate::stars::{build_fqn_cut, build_qn_cut, CutFamily, Mode};

/// Environment variable holding the default worker count.
pub const WORKERS_ENV: &str = "STARCUT_WORKERS";

const SPLIT_DEPTH: usize = 12;

/// Limits for one [`min_star_cut`] call.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    /// Enumeration nodes allowed per phase; each work unit may also use up
    /// to this many on its own.
    pub max_components: u64,
    /// Candidate components larger than this are skipped, which makes the
    /// search inconclusive if it ever happens.
    pub max_component_size: usize,
    /// Branches allowed for a single cover search.
    pub max_cover_branches: u64,
    pub wall_limit: Duration,
    pub workers: usize,
}

impl SearchBudget {
    pub const DEFAULT_COMPONENTS: u64 = 1_000_000;
    pub const DEFAULT_COVER_BRANCHES: u64 = 1_000_000;
    pub const DEFAULT_WALL_LIMIT: Duration = Duration::from_secs(60);

    /// Worker count from `STARCUT_WORKERS`, or 1.
    pub fn workers_from_env() -> usize {
        std::env::var(WORKERS_ENV)
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .filter(|&w| w >= 1)
            .unwrap_or(1)
    }

    fn validate(&self) -> Result<(), OracleError> {
        if self.max_components == 0 {
            return Err(OracleError::Budget("component budget must be positive"));
        }
        if self.max_component_size == 0 {
            return Err(OracleError::Budget("component size cap must be positive"));
        }
        if self.max_cover_branches == 0 {
            return Err(OracleError::Budget("cover branch budget must be positive"));
        }
        if self.wall_limit.is_zero() {
            return Err(OracleError::Budget("wall-clock limit must be positive"));
        }
        if self.workers == 0 {
            return Err(OracleError::Budget("worker count must be positive"));
        }
        Ok(())
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_components: Self::DEFAULT_COMPONENTS,
            max_component_size: usize::MAX,
            max_cover_branches: Self::DEFAULT_COVER_BRANCHES,
            wall_limit: Self::DEFAULT_WALL_LIMIT,
            workers: Self::workers_from_env(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum SolveValue {
    Exact { count: usize },
    NoCutExists,
    Inconclusive { best_upper: Option<usize> },
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    /// Enumeration nodes visited.
    pub components: u64,
    /// Cover searches started.
    pub covers: u64,
    pub workers: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub value: SolveValue,
    /// A verified cut: of the exact size, or the best upper bound when
    /// inconclusive.
    pub witness: Option<CutFamily>,
    pub stats: SearchStats,
}

/// Computes `κ(g; K_{1,r})` (structure) or `κ^s(g; K_{1,r})` (substructure).
pub fn min_star_cut(
    g: &Graph,
    r: usize,
    mode: Mode,
    budget: &SearchBudget,
) -> Result<SolveResult, OracleError> {
    if r == 0 {
        return Err(OracleError::ROutOfRange {
            r,
            min: 1,
            max: usize::MAX,
        });
    }
    budget.validate()?;
    let mg = MaskGraph::new(*g)?;
    assert!(
        translations_preserve_edges(&mg),
        "translations must be automorphisms"
    );
    let deadline = Instant::now() + budget.wall_limit;
    let upper = construction_bound(g, r, mode);
    let ub = upper.as_ref().map(CutFamily::len);
    let mut stats = SearchStats {
        workers: budget.workers,
        ..SearchStats::default()
    };
    for m in 1.. {
        if let Some(u) = ub.filter(|&u| m >= u) {
            return Ok(SolveResult {
                value: SolveValue::Exact { count: u },
                witness: upper,
                stats,
            });
        }
        let config = PhaseConfig {
            mg: &mg,
            m,
            r,
            mode,
            total: mg.vertex_count(),
            size_cap: budget.max_component_size,
            max_cover_branches: budget.max_cover_branches,
            deadline,
        };
        let phase = run_phase(&config, budget);
        stats.components += phase.components;
        stats.covers += phase.covers;
        if let Some(stars) = phase.found {
            let family = CutFamily::new(*g, to_embeddings(&stars));
            check_structure_cut(g, &family, mode, r).map_err(OracleError::Unverified)?;
            return Ok(SolveResult {
                value: SolveValue::Exact { count: m },
                witness: Some(family),
                stats,
            });
        }
        if !phase.complete {
            return Ok(SolveResult {
                value: SolveValue::Inconclusive { best_upper: ub },
                witness: upper,
                stats,
            });
        }
        if !phase.m_limited && ub.is_none() {
            // Nothing in this phase depended on `m`, so no size works.
            return Ok(SolveResult {
                value: SolveValue::NoCutExists,
                witness: None,
                stats,
            });
        }
    }
    unreachable!()
}

/// The explicit construction as an upper bound, when one applies. A
/// `K_{1,r'}` family with `r' <= r` is a substructure cut for `r`.
fn construction_bound(g: &Graph, r: usize, mode: Mode) -> Option<CutFamily> {
    let n = g.n();
    let largest = match g.family {
        Family::Hypercube => n as usize,
        Family::Folded => n as usize + 1,
    };
    let r_used = match mode {
        Mode::Structure => r,
        Mode::Substructure => r.min(largest),
    };
    let family = match g.family {
        Family::Hypercube => build_qn_cut(n, r_used),
        Family::Folded => build_fqn_cut(n, r_used),
    }
    .ok()?;
    is_structure_cut(g, &family, mode, r).then_some(family)
}

struct PhaseConfig<'a> {
    mg: &'a MaskGraph,
    m: usize,
    r: usize,
    mode: Mode,
    total: usize,
    size_cap: usize,
    max_cover_branches: u64,
    deadline: Instant,
}

type Stars = Vec<(usize, Vec<usize>)>;

struct PhaseOutcome {
    found: Option<Stars>,
    /// Every candidate was decided.
    complete: bool,
    /// Some candidate was rejected only because of the member limit.
    m_limited: bool,
    components: u64,
    covers: u64,
}

struct PhaseExplorer<'a> {
    cfg: &'a PhaseConfig<'a>,
    covers: u64,
    found: Option<Stars>,
    m_limited: Cell<bool>,
    capped: Cell<bool>,
    cover_budget_hit: bool,
}

impl<'a> PhaseExplorer<'a> {
    fn new(cfg: &'a PhaseConfig<'a>) -> Self {
        PhaseExplorer {
            cfg,
            covers: 0,
            found: None,
            m_limited: Cell::new(false),
            capped: Cell::new(false),
            cover_budget_hit: false,
        }
    }
}

impl Explorer for PhaseExplorer<'_> {
    fn admissible(&self, node: &Partial) -> bool {
        let cfg = self.cfg;
        let (c, x) = (popcount(node.comp), popcount(node.excluded));
        if 2 * c + x > cfg.total {
            return false;
        }
        if x > cfg.m * (cfg.r + 1) {
            self.m_limited.set(true);
            return false;
        }
        if c > cfg.size_cap {
            self.capped.set(true);
            return false;
        }
        if x > 0 {
            let problem = CoverProblem::new(cfg.mg, node.comp, cfg.r, cfg.mode, None);
            let reach = problem.max_coverage(node.excluded);
            if cfg.m * reach < x {
                if reach > 0 {
                    self.m_limited.set(true);
                }
                return false;
            }
        }
        true
    }

    fn complete(&mut self, node: &Partial) -> ControlFlow<()> {
        let cfg = self.cfg;
        let boundary: Mask = node.excluded;
        let rest = cfg.mg.all & !(node.comp | boundary);
        if rest == 0 {
            return ControlFlow::Continue(());
        }
        self.covers += 1;
        let problem = CoverProblem::new(cfg.mg, node.comp, cfg.r, cfg.mode, Some(rest));
        if !problem.feasible(boundary) {
            return ControlFlow::Continue(());
        }
        let mut budget = CoverBudget {
            branches: 0,
            max_branches: cfg.max_cover_branches,
            deadline: Some(cfg.deadline),
        };
        match problem.search(boundary, cfg.m, &mut budget) {
            CoverOutcome::Found(stars) => {
                self.found = Some(stars);
                ControlFlow::Break(())
            }
            CoverOutcome::Impossible => {
                if popcount(boundary) > cfg.m {
                    self.m_limited.set(true);
                }
                ControlFlow::Continue(())
            }
            CoverOutcome::Budget => {
                self.cover_budget_hit = true;
                ControlFlow::Continue(())
            }
        }
    }
}

struct UnitResult {
    nodes: u64,
    covers: u64,
    found: Option<Stars>,
    complete: bool,
    m_limited: bool,
}

fn run_unit(cfg: &PhaseConfig<'_>, start: Partial, max_nodes: u64) -> UnitResult {
    let mut explorer = PhaseExplorer::new(cfg);
    let mut walker = Walker::new(
        cfg.mg,
        Allowance {
            max_nodes,
            deadline: Some(cfg.deadline),
        },
    );
    let end = walker.walk(start, &mut explorer);
    UnitResult {
        nodes: walker.nodes.min(max_nodes),
        covers: explorer.covers,
        complete: end != WalkEnd::OutOfBudget
            && !explorer.cover_budget_hit
            && !explorer.capped.get(),
        m_limited: explorer.m_limited.get(),
        found: explorer.found,
    }
}

/// Whether the in-order merge is certain to stop before unit `i`.
fn merge_stops_before(results: &[Option<UnitResult>], i: usize, max_nodes: u64) -> bool {
    let mut prefix_known = true;
    let mut used = 0u64;
    for res in &results[..i] {
        match res {
            Some(res) if res.found.is_some() => return true,
            Some(res) if prefix_known => {
                used += res.nodes;
                if used > max_nodes {
                    return true;
                }
            }
            Some(_) => {}
            None => prefix_known = false,
        }
    }
    false
}

fn run_phase(cfg: &PhaseConfig<'_>, budget: &SearchBudget) -> PhaseOutcome {
    let splitter = PhaseExplorer::new(cfg);
    let (units, expanded) = split(cfg.mg, Partial::anchored(cfg.mg, 0), SPLIT_DEPTH, &splitter);
    let max_nodes = budget.max_components;
    let results: Mutex<Vec<Option<UnitResult>>> =
        Mutex::new(std::iter::repeat_with(|| None).take(units.len()).collect());
    let next = AtomicUsize::new(0);
    let work = || loop {
        let i = next.fetch_add(1, Ordering::SeqCst);
        if i >= units.len() {
            break;
        }
        if Instant::now() >= cfg.deadline
            || merge_stops_before(&results.lock().unwrap(), i, max_nodes)
        {
            continue;
        }
        let res = run_unit(cfg, units[i], max_nodes);
        results.lock().unwrap()[i] = Some(res);
    };
    if budget.workers <= 1 {
        work();
    } else {
        std::thread::scope(|s| {
            for _ in 0..budget.workers {
                s.spawn(work);
            }
        });
    }

    let mut out = PhaseOutcome {
        found: None,
        complete: !splitter.capped.get(),
        m_limited: splitter.m_limited.get(),
        components: expanded,
        covers: 0,
    };
    for res in results.into_inner().unwrap() {
        let Some(res) = res else {
            // Skipped only once the deadline passed.
            out.complete = false;
            break;
        };
        out.components += res.nodes;
        out.covers += res.covers;
        out.m_limited |= res.m_limited;
        out.complete &= res.complete;
        if res.found.is_some() {
            out.found = res.found;
            break;
        }
        if out.components - expanded > max_nodes {
            out.complete = false;
            break;
        }
    }
    out
}
