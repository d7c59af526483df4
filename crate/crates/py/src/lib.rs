//! Python bindings. Vertices cross the boundary as bit strings, position 1
//! leftmost; errors surface as `ValueError`.

use std::time::Duration;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use starcut::bounds::{self, Known};
use starcut::oracles::{self, LemmaCase, SearchBudget, SolveValue};
use starcut::stars::{self, WitnessFile};
use starcut::{Family, Mode, Vertex};

fn err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse<T: std::str::FromStr>(s: &str) -> PyResult<T>
where
    T::Err: std::fmt::Display,
{
    s.parse().map_err(err)
}

/// `Q_n` or `FQ_n`.
#[pyclass(frozen, from_py_object, name = "Graph")]
#[derive(Clone, Copy)]
struct PyGraph(starcut::Graph);

#[pymethods]
impl PyGraph {
    #[new]
    fn new(family: &str, n: u32) -> PyResult<Self> {
        Ok(PyGraph(
            starcut::Graph::new(parse(family)?, n).map_err(err)?,
        ))
    }

    #[getter]
    fn family(&self) -> String {
        self.0.family.to_string()
    }

    #[getter]
    fn n(&self) -> u32 {
        self.0.n()
    }

    #[getter]
    fn vertex_count(&self) -> usize {
        self.0.vertex_count()
    }

    #[getter]
    fn degree(&self) -> usize {
        self.0.degree()
    }

    fn neighbors(&self, v: &str) -> PyResult<Vec<String>> {
        let v = self.0.parse_vertex(v).map_err(err)?;
        Ok(self.0.neighbor_iter(v).map(|w| self.0.bits(w)).collect())
    }

    fn adjacent(&self, a: &str, b: &str) -> PyResult<bool> {
        let a = self.0.parse_vertex(a).map_err(err)?;
        let b = self.0.parse_vertex(b).map_err(err)?;
        Ok(self.0.adjacent(a, b))
    }

    fn odd_girth(&self) -> Option<usize> {
        starcut::graphs::odd_girth(&self.0)
    }

    fn min_vertex_cut(&self) -> PyResult<usize> {
        starcut::graphs::min_vertex_cut(&self.0).map_err(err)
    }

    /// Minimum `|N(C)|` over connected `C` of size `k`, with a minimizer.
    fn min_neighborhood(&self, k: usize) -> PyResult<(usize, Vec<String>)> {
        let (value, set) = oracles::min_neighborhood(&self.0, k).map_err(err)?;
        Ok((value, set.to_bit_strings()))
    }

    fn brute_kappa_g(&self, extra: usize) -> PyResult<Option<usize>> {
        oracles::brute_kappa_g(&self.0, extra).map_err(err)
    }

    fn __repr__(&self) -> String {
        format!("Graph('{}', {})", self.0.family, self.0.n())
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }
}

/// A family of stars with its nominal `r`.
#[pyclass(frozen, name = "StarCut")]
struct PyStarCut {
    family: stars::CutFamily,
    r: usize,
}

impl PyStarCut {
    fn bits(&self, vs: &[Vertex]) -> Vec<String> {
        vs.iter().map(|&v| self.family.graph().bits(v)).collect()
    }
}

#[pymethods]
impl PyStarCut {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let w = WitnessFile::from_json(text).map_err(err)?;
        Ok(PyStarCut {
            family: w.to_family().map_err(err)?,
            r: w.r,
        })
    }

    #[getter]
    fn graph(&self) -> PyGraph {
        PyGraph(*self.family.graph())
    }

    #[getter]
    fn r(&self) -> usize {
        self.r
    }

    fn __len__(&self) -> usize {
        self.family.len()
    }

    /// `(center, leaves)` per member.
    fn stars(&self) -> Vec<(String, Vec<String>)> {
        self.family
            .members()
            .iter()
            .map(|s| (self.family.graph().bits(s.center), self.bits(&s.leaves)))
            .collect()
    }

    #[pyo3(signature = (mode = "structure"))]
    fn verify(&self, mode: &str) -> PyResult<bool> {
        let g = self.family.graph();
        Ok(oracles::is_structure_cut(
            g,
            &self.family,
            parse(mode)?,
            self.r,
        ))
    }

    /// `(first, second, shared)` for every intersecting pair, 1-based.
    fn intersections(&self) -> PyResult<Vec<(usize, usize, Vec<String>)>> {
        let report = stars::family_intersections(&self.family).map_err(err)?;
        Ok(report
            .pairs
            .iter()
            .map(|p| (p.first, p.second, p.shared.to_bit_strings()))
            .collect())
    }

    fn to_json(&self) -> String {
        WitnessFile::from_family(&self.family, self.r).to_json()
    }
}

#[pyclass(frozen, name = "SolveResult")]
struct PySolveResult {
    value: SolveValue,
    witness: Option<stars::CutFamily>,
    r: usize,
    #[pyo3(get)]
    components: u64,
    #[pyo3(get)]
    covers: u64,
}

#[pymethods]
impl PySolveResult {
    /// `"exact"`, `"no-cut-exists"` or `"inconclusive"`.
    #[getter]
    fn kind(&self) -> &'static str {
        match self.value {
            SolveValue::Exact { .. } => "exact",
            SolveValue::NoCutExists => "no-cut-exists",
            SolveValue::Inconclusive { .. } => "inconclusive",
        }
    }

    #[getter]
    fn count(&self) -> Option<usize> {
        match self.value {
            SolveValue::Exact { count } => Some(count),
            _ => None,
        }
    }

    #[getter]
    fn best_upper(&self) -> Option<usize> {
        match self.value {
            SolveValue::Inconclusive { best_upper } => best_upper,
            _ => None,
        }
    }

    #[getter]
    fn witness(&self) -> Option<PyStarCut> {
        self.witness
            .clone()
            .map(|family| PyStarCut { family, r: self.r })
    }

    fn __repr__(&self) -> String {
        format!("SolveResult({:?})", self.value)
    }
}

#[pyclass(frozen, name = "LemmaReport")]
struct PyLemmaReport(oracles::LemmaReport);

fn case_tuple(g: &starcut::Graph, c: &LemmaCase) -> (Vec<String>, Vec<String>, usize, bool) {
    let bits = |vs: &[Vertex]| vs.iter().map(|&v| g.bits(v)).collect();
    (bits(&c.subject), bits(&c.related), c.value, c.expected)
}

#[pymethods]
impl PyLemmaReport {
    #[getter]
    fn lemma_id(&self) -> String {
        self.0.lemma_id.to_string()
    }

    #[getter]
    fn graph(&self) -> PyGraph {
        PyGraph(self.0.graph)
    }

    /// `"pass"`, `"pass-with-exception"` or `"fail"`.
    #[getter]
    fn status(&self) -> String {
        self.0.status().to_string()
    }

    #[getter]
    fn instances_checked(&self) -> u64 {
        self.0.instances_checked
    }

    /// `(subject, related, value, expected)` per counterexample.
    #[getter]
    fn violations(&self) -> Vec<(Vec<String>, Vec<String>, usize, bool)> {
        self.0
            .violations
            .iter()
            .map(|c| case_tuple(&self.0.graph, c))
            .collect()
    }

    #[getter]
    fn extremal_witnesses(&self) -> Vec<(Vec<String>, Vec<String>, usize, bool)> {
        self.0
            .extremal_witnesses
            .iter()
            .map(|c| case_tuple(&self.0.graph, c))
            .collect()
    }

    #[getter]
    fn max_observed(&self) -> Vec<(usize, usize)> {
        self.0.max_observed.clone()
    }

    fn passed(&self) -> bool {
        self.0.passed()
    }
}

/// `f(r)` as `"p/q"` or an integer string.
#[pyfunction]
fn f_value(r: u64) -> PyResult<String> {
    bounds::f_value(r).map(|v| v.to_string()).map_err(err)
}

#[pyfunction]
fn g_value(r: u64) -> PyResult<String> {
    bounds::g_value(r).map(|v| v.to_string()).map_err(err)
}

#[pyfunction]
fn min_guaranteed_dim(family: &str, r: u64) -> PyResult<u64> {
    bounds::min_guaranteed_dim(parse(family)?, r).map_err(err)
}

#[pyfunction]
fn threshold_table(max_r: u64) -> PyResult<String> {
    bounds::threshold_table(max_r).map_err(err)
}

#[pyfunction]
fn kappa_g_formula(family: &str, n: u32, g: u64) -> PyResult<u64> {
    bounds::kappa_g_formula(parse(family)?, n, g).map_err(err)
}

#[pyfunction]
fn neighborhood_bound_formula(family: &str, n: u32, g: u64) -> PyResult<i64> {
    bounds::neighborhood_bound_formula(parse(family)?, n, g).map_err(err)
}

/// `(kind, value, source)` with kind `"exact"`, `"no-cut"` or `"unknown"`.
#[pyfunction]
#[pyo3(signature = (family, n, r, mode = "structure"))]
fn known_value(
    family: &str,
    n: u32,
    r: u64,
    mode: &str,
) -> PyResult<(String, Option<u64>, String)> {
    let kv = bounds::known_value(parse(family)?, n, r, parse(mode)?);
    let (kind, value) = match kv.value {
        Known::Exact(v) => ("exact", Some(v)),
        Known::NoCut => ("no-cut", None),
        Known::Unknown => ("unknown", None),
    };
    Ok((kind.to_string(), value, kv.source.to_string()))
}

/// The standard cut of `Q_n` or `FQ_n` by `K_{1,r}` stars.
#[pyfunction]
fn construct(family: &str, n: u32, r: usize) -> PyResult<PyStarCut> {
    let built = match parse::<Family>(family)? {
        Family::Hypercube => stars::build_qn_cut(n, r),
        Family::Folded => stars::build_fqn_cut(n, r),
    };
    Ok(PyStarCut {
        family: built.map_err(err)?,
        r,
    })
}

#[pyfunction]
#[pyo3(signature = (graph, r, mode = "structure", max_components = SearchBudget::DEFAULT_COMPONENTS, seconds = 60, workers = 1))]
fn min_star_cut(
    py: Python<'_>,
    graph: PyGraph,
    r: usize,
    mode: &str,
    max_components: u64,
    seconds: u64,
    workers: usize,
) -> PyResult<PySolveResult> {
    let mode: Mode = parse(mode)?;
    let budget = SearchBudget {
        max_components,
        wall_limit: Duration::from_secs(seconds),
        workers,
        ..SearchBudget::default()
    };
    let res = py
        .detach(|| oracles::min_star_cut(&graph.0, r, mode, &budget))
        .map_err(err)?;
    Ok(PySolveResult {
        value: res.value,
        witness: res.witness,
        r,
        components: res.stats.components,
        covers: res.stats.covers,
    })
}

#[pyfunction]
fn check_common_neighbors(py: Python<'_>, graph: PyGraph) -> PyResult<PyLemmaReport> {
    py.detach(|| oracles::check_common_neighbors(&graph.0))
        .map(PyLemmaReport)
        .map_err(err)
}

#[pyfunction]
fn check_star_bounds(
    py: Python<'_>,
    graph: PyGraph,
    r: usize,
    kmax: usize,
) -> PyResult<PyLemmaReport> {
    py.detach(|| oracles::check_star_bounds(&graph.0, r, kmax))
        .map(PyLemmaReport)
        .map_err(err)
}

#[pymodule]
fn starcut_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<PyStarCut>()?;
    m.add_class::<PySolveResult>()?;
    m.add_class::<PyLemmaReport>()?;
    m.add_function(wrap_pyfunction!(f_value, m)?)?;
    m.add_function(wrap_pyfunction!(g_value, m)?)?;
    m.add_function(wrap_pyfunction!(min_guaranteed_dim, m)?)?;
    m.add_function(wrap_pyfunction!(threshold_table, m)?)?;
    m.add_function(wrap_pyfunction!(kappa_g_formula, m)?)?;
    m.add_function(wrap_pyfunction!(neighborhood_bound_formula, m)?)?;
    m.add_function(wrap_pyfunction!(known_value, m)?)?;
    m.add_function(wrap_pyfunction!(construct, m)?)?;
    m.add_function(wrap_pyfunction!(min_star_cut, m)?)?;
    m.add_function(wrap_pyfunction!(check_common_neighbors, m)?)?;
    m.add_function(wrap_pyfunction!(check_star_bounds, m)?)?;
    Ok(())
}
