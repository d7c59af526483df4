use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use starcut::bounds::{known_value, threshold_table, Known};
use starcut::oracles::{
    check_common_neighbors, check_star_bounds, check_structure_cut, min_star_cut, Certificate,
    LemmaReport, OracleError, SearchBudget, SolveValue, COMMON_NEIGHBORS_MAX_DIM,
    STAR_BOUNDS_MAX_DIM, STAR_BOUNDS_MAX_K,
};
use starcut::stars::{
    build_fqn_cut, build_qn_cut, family_intersections, ConstructionError, CutFamily, WitnessFile,
};
use starcut::{Family, Graph, Mode, Vertex};

use crate::range::IntRange;
use crate::{EXIT_FAILURE, EXIT_INCONCLUSIVE, EXIT_OK, EXIT_USAGE};

#[derive(Debug, Default)]
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
    pub error: Option<String>,
    pub artifacts: Vec<PathBuf>,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            ..Outcome::default()
        }
    }

    fn fail(code: u8, msg: impl ToString) -> Self {
        Outcome {
            code,
            error: Some(msg.to_string()),
            ..Outcome::default()
        }
    }
}

fn usage(msg: impl ToString) -> Outcome {
    Outcome::fail(EXIT_USAGE, msg)
}

fn bits_list(g: &Graph, vs: &[Vertex]) -> String {
    vs.iter().map(|&v| g.bits(v)).collect::<Vec<_>>().join(",")
}

fn write_stars(out: &mut String, f: &CutFamily) {
    let g = f.graph();
    for (i, s) in f.members().iter().enumerate() {
        let _ = writeln!(
            out,
            "star\t{}\t{}\t{}",
            i + 1,
            g.bits(s.center),
            bits_list(g, &s.leaves)
        );
    }
}

fn build(family: Family, n: u32, r: usize) -> Result<CutFamily, ConstructionError> {
    match family {
        Family::Hypercube => build_qn_cut(n, r),
        Family::Folded => build_fqn_cut(n, r),
    }
}

fn write_file(path: &Path, text: &str) -> Result<(), Outcome> {
    std::fs::write(path, text).map_err(|e| {
        Outcome::fail(
            EXIT_FAILURE,
            format!("cannot write {}: {e}", path.display()),
        )
    })
}

pub fn tables(max_r: u64) -> Outcome {
    match threshold_table(max_r) {
        Ok(t) => Outcome::ok(t),
        Err(e) => usage(e),
    }
}

pub fn construct(family: Family, n: u32, r: usize, out: Option<&Path>) -> Outcome {
    let g = match Graph::new(family, n) {
        Ok(g) => g,
        Err(e) => return usage(e),
    };
    let f = match build(family, n, r) {
        Ok(f) => f,
        Err(ConstructionError::NoCutKnown { n, r }) => {
            return usage(format!("no structure cut exists for Q_{n} with r = {r}"))
        }
        Err(e @ ConstructionError::Unsupported { .. }) => return usage(e),
        Err(e) => return Outcome::fail(EXIT_FAILURE, e),
    };

    let text = WitnessFile::from_family(&f, r).to_json();
    let mut artifacts = Vec::new();
    let reread = match out {
        Some(path) => {
            if let Err(o) = write_file(path, &text) {
                return o;
            }
            artifacts.push(path.to_path_buf());
            match std::fs::read_to_string(path) {
                Ok(t) => t,
                Err(e) => return Outcome::fail(EXIT_FAILURE, format!("cannot read back: {e}")),
            }
        }
        None => text.clone(),
    };
    let back = match WitnessFile::from_json(&reread).and_then(|w| w.to_family()) {
        Ok(b) => b,
        Err(e) => return Outcome::fail(EXIT_FAILURE, format!("witness does not read back: {e}")),
    };
    let report = match family_intersections(&back) {
        Ok(rep) => rep,
        Err(e) => return Outcome::fail(EXIT_FAILURE, e),
    };

    let mut s = String::new();
    let _ = writeln!(s, "graph\t{g}");
    let _ = writeln!(s, "r\t{r}");
    let _ = writeln!(s, "stars\t{}", back.len());
    let verdict = check_structure_cut(&g, &back, Mode::Structure, r);
    let _ = writeln!(
        s,
        "verified\t{}",
        if verdict.is_ok() { "yes" } else { "no" }
    );
    if report.is_empty() {
        let _ = writeln!(s, "intersections\tnone");
    } else {
        let _ = writeln!(s, "intersections\t{}", report.pairs.len());
        for p in &report.pairs {
            let shared: Vec<Vertex> = p.shared.iter().collect();
            let _ = writeln!(
                s,
                "pair\t{}\t{}\t{}",
                p.first,
                p.second,
                bits_list(&g, &shared)
            );
        }
    }
    write_stars(&mut s, &back);

    let mut outcome = Outcome::ok(s);
    outcome.artifacts = artifacts;
    if let Err(e) = verdict {
        outcome.code = EXIT_FAILURE;
        outcome.error = Some(format!("constructed family failed verification: {e}"));
    }
    outcome
}

pub fn check_witness(path: &Path, mode: Mode) -> Outcome {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => return usage(format!("cannot read {}: {e}", path.display())),
    };
    let parsed = WitnessFile::from_json(&text).and_then(|w| {
        let f = w.to_family()?;
        Ok((w, f))
    });
    let (w, f) = match parsed {
        Ok(p) => p,
        Err(e) => return Outcome::fail(EXIT_FAILURE, e),
    };
    let g = *f.graph();
    let identical = w.to_json() == text;
    let verdict = check_structure_cut(&g, &f, mode, w.r);

    let mut s = String::new();
    let _ = writeln!(s, "graph\t{g}");
    let _ = writeln!(s, "r\t{}", w.r);
    let _ = writeln!(s, "mode\t{mode}");
    let _ = writeln!(s, "stars\t{}", f.len());
    let _ = writeln!(
        s,
        "verified\t{}",
        if verdict.is_ok() { "yes" } else { "no" }
    );
    let _ = writeln!(
        s,
        "reserialized\t{}",
        if identical { "identical" } else { "different" }
    );
    let mut outcome = Outcome::ok(s);
    if let Err(e) = verdict {
        outcome.code = EXIT_FAILURE;
        outcome.error = Some(format!("witness rejected: {e}"));
    } else if !identical {
        outcome.code = EXIT_FAILURE;
        outcome.error = Some("witness does not re-serialize to the same bytes".into());
    }
    outcome
}

fn value_text(v: SolveValue) -> String {
    match v {
        SolveValue::Exact { count } => format!("Exact({count})"),
        SolveValue::NoCutExists => "NoCutExists".into(),
        SolveValue::Inconclusive {
            best_upper: Some(u),
        } => format!("Inconclusive(upper bound {u})"),
        SolveValue::Inconclusive { best_upper: None } => "Inconclusive(no upper bound)".into(),
    }
}

fn solver_error(e: OracleError) -> Outcome {
    match e {
        OracleError::Unverified(_) => Outcome::fail(EXIT_FAILURE, e),
        _ => usage(e),
    }
}

pub fn solve(
    family: Family,
    n: u32,
    r: usize,
    mode: Mode,
    budget: SearchBudget,
    cert: Option<&Path>,
) -> Outcome {
    let g = match Graph::new(family, n) {
        Ok(g) => g,
        Err(e) => return usage(e),
    };
    let res = match min_star_cut(&g, r, mode, &budget) {
        Ok(res) => res,
        Err(e) => return solver_error(e),
    };
    let known = known_value(family, n, r as u64, mode);
    let (known_text, agrees) = match (known.value, res.value) {
        (Known::Unknown, _) => ("open".to_string(), None),
        (_, SolveValue::Inconclusive { .. }) => {
            (format!("{:?} ({})", known.value, known.source), None)
        }
        (Known::Exact(k), v) => (
            format!("{k} ({})", known.source),
            Some(v == SolveValue::Exact { count: k as usize }),
        ),
        (Known::NoCut, v) => (
            format!("no cut ({})", known.source),
            Some(v == SolveValue::NoCutExists),
        ),
    };

    let mut s = String::new();
    let _ = writeln!(s, "graph\t{g}");
    let _ = writeln!(s, "r\t{r}");
    let _ = writeln!(s, "mode\t{mode}");
    let _ = writeln!(s, "value\t{}", value_text(res.value));
    let _ = writeln!(s, "known\t{known_text}");
    let agreement = match agrees {
        None => "n/a",
        Some(true) => "yes",
        Some(false) => "MISMATCH",
    };
    let _ = writeln!(s, "agreement\t{agreement}");
    let _ = writeln!(s, "components\t{}", res.stats.components);
    let _ = writeln!(s, "covers\t{}", res.stats.covers);
    if let Some(w) = &res.witness {
        write_stars(&mut s, w);
    }

    let mut outcome = Outcome::ok(s);
    if let Some(path) = cert {
        let text = Certificate::from_result(&g, r, mode, &res).to_json();
        if let Err(o) = write_file(path, &text) {
            return o;
        }
        outcome.artifacts.push(path.to_path_buf());
    }
    if agrees == Some(false) {
        outcome.code = EXIT_FAILURE;
        outcome.error = Some(format!(
            "solver result disagrees with the published value {known_text}"
        ));
    } else if matches!(res.value, SolveValue::Inconclusive { .. }) {
        outcome.code = EXIT_INCONCLUSIVE;
    }
    outcome
}

fn lemma_row(s: &mut String, rep: &LemmaReport, r: Option<usize>, kmax: Option<usize>) {
    let dash = |x: Option<usize>| x.map_or("-".to_string(), |v| v.to_string());
    let observed: Vec<String> = rep
        .max_observed
        .iter()
        .map(|(k, m)| format!("{k}:{m}"))
        .collect();
    let _ = writeln!(
        s,
        "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
        rep.lemma_id,
        rep.graph,
        dash(r),
        dash(kmax),
        rep.status(),
        rep.instances_checked,
        rep.violations.len(),
        observed.join(",")
    );
}

pub fn lemmas(
    common: bool,
    stars: bool,
    family: Family,
    dims: IntRange,
    r: Option<IntRange>,
    kmax: usize,
) -> Outcome {
    // Validate every job before running any of them.
    let mut graphs = Vec::new();
    for n in dims.iter() {
        let g = match u32::try_from(n)
            .map_err(|_| n.to_string())
            .and_then(|n| Graph::new(family, n).map_err(|e| e.to_string()))
        {
            Ok(g) => g,
            Err(e) => return usage(e),
        };
        if common && g.n() > COMMON_NEIGHBORS_MAX_DIM {
            return usage(format!(
                "common-neighbors supports n <= {COMMON_NEIGHBORS_MAX_DIM}"
            ));
        }
        if stars && g.n() > STAR_BOUNDS_MAX_DIM {
            return usage(format!("star-bounds supports n <= {STAR_BOUNDS_MAX_DIM}"));
        }
        graphs.push(g);
    }
    if stars && !(1..=STAR_BOUNDS_MAX_K).contains(&kmax) {
        return usage(format!("--kmax must lie in 1..={STAR_BOUNDS_MAX_K}"));
    }
    let mut star_jobs = Vec::new();
    if stars {
        for g in &graphs {
            let degree = g.degree() as u64;
            let rs = r.unwrap_or(IntRange { lo: 2, hi: degree });
            if rs.lo < 2 || rs.hi > degree {
                return usage(format!("--r {rs} must lie in 2..={degree} for {g}"));
            }
            star_jobs.extend(rs.iter().map(|r| (*g, r as usize)));
        }
    }

    let mut s =
        String::from("lemma\tgraph\tr\tkmax\tstatus\tinstances\tviolations\tmax_observed\n");
    let mut reports = Vec::new();
    if common {
        for g in &graphs {
            match check_common_neighbors(g) {
                Ok(rep) => {
                    lemma_row(&mut s, &rep, None, None);
                    reports.push(rep);
                }
                Err(e) => return usage(e),
            }
        }
    }
    for (g, r) in star_jobs {
        match check_star_bounds(&g, r, kmax) {
            Ok(rep) => {
                lemma_row(&mut s, &rep, Some(r), Some(kmax));
                reports.push(rep);
            }
            Err(e) => return usage(e),
        }
    }

    if reports.iter().any(|rep| !rep.violations.is_empty()) {
        s.push_str("\nlemma\tgraph\tsubject\trelated\tvalue\tclass\n");
        for rep in &reports {
            for v in &rep.violations {
                let _ = writeln!(
                    s,
                    "{}\t{}\t{}\t{}\t{}\t{}",
                    rep.lemma_id,
                    rep.graph,
                    bits_list(&rep.graph, &v.subject),
                    bits_list(&rep.graph, &v.related),
                    v.value,
                    if v.expected { "expected" } else { "unexpected" }
                );
            }
        }
    }

    let mut outcome = Outcome::ok(s);
    if !reports.iter().all(LemmaReport::passed) {
        outcome.code = EXIT_FAILURE;
        outcome.error = Some("unexpected lemma violations".into());
    }
    outcome
}

fn conjectured(family: Family, n: u32) -> usize {
    match family {
        Family::Hypercube => n.div_ceil(2) as usize,
        Family::Folded => (n + 1).div_ceil(2) as usize,
    }
}

fn in_conjecture(family: Family, n: u32, r: usize) -> bool {
    let max_r = match family {
        Family::Hypercube => n as usize,
        Family::Folded => n as usize + 1,
    };
    n >= 3 && (2..=max_r).contains(&r)
}

/// Size of the standard construction when it verifies.
fn verified_construction(g: &Graph, r: usize, mode: Mode) -> Option<usize> {
    let f = build(g.family, g.n(), r).ok()?;
    check_structure_cut(g, &f, mode, r).ok()?;
    Some(f.len())
}

pub fn conjecture(
    family: Family,
    dims: IntRange,
    rs: IntRange,
    modes: &[Mode],
    budget: SearchBudget,
    witness_dir: Option<&Path>,
) -> Outcome {
    let mut graphs = Vec::new();
    for n in dims.iter() {
        match u32::try_from(n)
            .map_err(|_| n.to_string())
            .and_then(|n| Graph::new(family, n).map_err(|e| e.to_string()))
        {
            Ok(g) => graphs.push(g),
            Err(e) => return usage(e),
        }
    }
    if let Some(dir) = witness_dir {
        if let Err(e) = std::fs::create_dir_all(dir) {
            return usage(format!("cannot create {}: {e}", dir.display()));
        }
    }

    let mut s = String::from("graph\tr\tmode\tconjectured\tstatus\tdetail\n");
    let mut open = false;
    let mut artifacts = Vec::new();
    for g in &graphs {
        for r in rs.iter().map(|r| r as usize) {
            for &mode in modes {
                let n = g.n();
                let target = conjectured(family, n);
                let (status, detail) = if !in_conjecture(family, n, r) {
                    ("SKIPPED", "outside the conjectured range".to_string())
                } else {
                    let known = known_value(family, n, r as u64, mode);
                    match known.value {
                        Known::Exact(v) if v as usize == target => {
                            ("CONFIRMED", format!("known: {}", known.source))
                        }
                        Known::Exact(v) => {
                            ("REFUTED", format!("known value {v}: {}", known.source))
                        }
                        Known::NoCut => ("REFUTED", format!("known: {}", known.source)),
                        Known::Unknown => match min_star_cut(g, r, mode, &budget) {
                            Ok(res) => {
                                if let (Some(dir), Some(w)) = (witness_dir, &res.witness) {
                                    let path = dir.join(format!("{family}{n}-r{r}-{mode}.json"));
                                    if let Err(o) =
                                        write_file(&path, &WitnessFile::from_family(w, r).to_json())
                                    {
                                        return o;
                                    }
                                    artifacts.push(path);
                                }
                                match res.value {
                                    SolveValue::Exact { count } if count == target => {
                                        ("CONFIRMED", format!("solved: Exact({count})"))
                                    }
                                    SolveValue::Exact { count } => {
                                        let w =
                                            res.witness.as_ref().expect("exact carries witness");
                                        let centers: Vec<Vertex> =
                                            w.members().iter().map(|m| m.center).collect();
                                        (
                                            "REFUTED",
                                            format!(
                                                "solved: Exact({count}), centers {}",
                                                bits_list(g, &centers)
                                            ),
                                        )
                                    }
                                    SolveValue::NoCutExists => {
                                        ("REFUTED", "solved: NoCutExists".to_string())
                                    }
                                    SolveValue::Inconclusive { best_upper } => {
                                        open = true;
                                        let detail = match best_upper {
                                            Some(u) => {
                                                format!("upper bound {u} (verified construction)")
                                            }
                                            None => "no upper bound".to_string(),
                                        };
                                        ("OPEN", detail)
                                    }
                                }
                            }
                            Err(OracleError::Graph(_)) => {
                                // Beyond the exact solver; report the construction.
                                open = true;
                                let detail = match verified_construction(g, r, mode) {
                                    Some(u) => format!("upper bound {u} (verified construction)"),
                                    None => "no upper bound".to_string(),
                                };
                                ("OPEN", detail)
                            }
                            Err(e) => return solver_error(e),
                        },
                    }
                };
                let _ = writeln!(s, "{g}\t{r}\t{mode}\t{target}\t{status}\t{detail}");
            }
        }
    }

    let mut outcome = Outcome::ok(s);
    outcome.artifacts = artifacts;
    outcome.code = if open { EXIT_INCONCLUSIVE } else { EXIT_OK };
    outcome
}
