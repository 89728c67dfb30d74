//! Python bindings for the minrank solver.
//!
//! Exposes the `Graph` type plus the main operations — `minimum_rank`,
//! `find_witness`, `rank`, minor enumeration, and the tree/zero-forcing
//! helpers — as the `minrank_py` extension module.  All arithmetic stays
//! exact: matrix entries cross the boundary as `fractions.Fraction`.

// The pyo3 0.22 attribute macros expand fallible signatures into
// `err.into()` calls on values that are already `PyErr`.
#![allow(clippy::useless_conversion)]

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList, PyModule};

use minrank::graph;
use minrank::graph::Graph;
use minrank::linalg::{parse_matrix, RationalMatrix};
use minrank::minors;
use minrank::poly::MonomialOrder;
use minrank::solver::{self, LevelVerdict, SolveOptions, SolveReport, SolveStatus, Strategy};

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_order(name: &str) -> PyResult<MonomialOrder> {
    match name {
        "grevlex" => Ok(MonomialOrder::GrevLex),
        "lex" => Ok(MonomialOrder::Lex),
        other => Err(value_error(format!(
            "unknown monomial order `{other}` (expected `grevlex` or `lex`)"
        ))),
    }
}

fn parse_strategy(name: &str) -> PyResult<Strategy> {
    match name {
        "linear" => Ok(Strategy::Linear),
        "binary-search" | "binary" => Ok(Strategy::BinarySearch),
        other => Err(value_error(format!(
            "unknown strategy `{other}` (expected `linear` or `binary-search`)"
        ))),
    }
}

/// An undirected simple graph with vertices `0..n`.
#[pyclass(name = "Graph", frozen)]
#[derive(Clone)]
struct PyGraph {
    inner: Graph,
}

#[pymethods]
impl PyGraph {
    /// Graph(n, edges): build from a vertex count and an edge list.
    #[new]
    #[pyo3(signature = (n, edges=Vec::new()))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(PyGraph {
            inner: Graph::new(n, &edges).map_err(value_error)?,
        })
    }

    /// Parse a graph6 string (orders 0..=62).
    #[staticmethod]
    fn from_graph6(text: &str) -> PyResult<Self> {
        Ok(PyGraph {
            inner: graph::parse_graph6(text).map_err(value_error)?,
        })
    }

    /// Parse the plain edge-list text format (`u v` per line, optional
    /// `n=<count>` header, `#` comments).
    #[staticmethod]
    fn from_edge_list(text: &str) -> PyResult<Self> {
        Ok(PyGraph {
            inner: graph::parse_edge_list(text).map_err(value_error)?,
        })
    }

    /// The path on n vertices.
    #[staticmethod]
    fn path(n: usize) -> Self {
        PyGraph { inner: Graph::path(n) }
    }

    /// The complete graph on n vertices.
    #[staticmethod]
    fn complete(n: usize) -> Self {
        PyGraph { inner: Graph::complete(n) }
    }

    /// The cycle on n >= 3 vertices.
    #[staticmethod]
    fn cycle(n: usize) -> PyResult<Self> {
        if n < 3 {
            return Err(value_error("cycle needs at least 3 vertices"));
        }
        Ok(PyGraph { inner: Graph::cycle(n) })
    }

    /// The edgeless graph on n vertices.
    #[staticmethod]
    fn edgeless(n: usize) -> Self {
        PyGraph { inner: Graph::edgeless(n) }
    }

    /// Number of vertices.
    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    /// Number of edges.
    #[getter]
    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    /// Edges sorted ascending, each as (i, j) with i < j; the position of
    /// an edge is its edge index in the symbolic matrix.
    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().to_vec()
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        self.inner.has_edge(u, v)
    }

    fn degree(&self, v: usize) -> PyResult<usize> {
        if v >= self.inner.n() {
            return Err(value_error(format!(
                "vertex {v} out of range for n={}",
                self.inner.n()
            )));
        }
        Ok(self.inner.degree(v))
    }

    /// Encode as a graph6 string.
    fn to_graph6(&self) -> PyResult<String> {
        graph::to_graph6(&self.inner).map_err(value_error)
    }

    /// Zero forcing number Z(G).
    fn zero_forcing_number(&self) -> usize {
        graph::zero_forcing_number(&self.inner)
    }

    /// Connected components as (subgraph, original_vertices) pairs.
    fn components(&self) -> Vec<(PyGraph, Vec<usize>)> {
        graph::connected_components(&self.inner)
            .into_iter()
            .map(|c| (PyGraph { inner: c.graph }, c.vertices))
            .collect()
    }

    fn __repr__(&self) -> String {
        format!(
            "Graph(n={}, edges={:?})",
            self.inner.n(),
            self.inner.edges()
        )
    }

    fn __richcmp__(&self, other: &PyGraph, op: pyo3::basic::CompareOp) -> PyResult<bool> {
        match op {
            pyo3::basic::CompareOp::Eq => Ok(self.inner == other.inner),
            pyo3::basic::CompareOp::Ne => Ok(self.inner != other.inner),
            _ => Err(value_error("graphs are not ordered")),
        }
    }
}

/// Converts an exact rational matrix into rows of `fractions.Fraction`.
fn matrix_to_py(py: Python<'_>, m: &RationalMatrix) -> PyResult<PyObject> {
    let fraction = py.import_bound("fractions")?.getattr("Fraction")?;
    let rows = PyList::empty_bound(py);
    for i in 0..m.rows() {
        let row = PyList::empty_bound(py);
        for j in 0..m.cols() {
            row.append(fraction.call1((m.get(i, j).to_string(),))?)?;
        }
        rows.append(row)?;
    }
    Ok(rows.into())
}

fn status_name(status: SolveStatus) -> &'static str {
    match status {
        SolveStatus::Exact => "EXACT",
        SolveStatus::Undecided => "UNDECIDED",
        SolveStatus::LowerBoundOnly => "LOWER_BOUND_ONLY",
    }
}

fn report_to_dict(py: Python<'_>, report: &SolveReport) -> PyResult<PyObject> {
    let d = PyDict::new_bound(py);
    d.set_item("n", report.n)?;
    d.set_item("status", status_name(report.status))?;
    d.set_item("mr", report.mr_complex)?;
    d.set_item("mr_lower", report.mr_lower)?;
    d.set_item("mr_upper", report.mr_upper)?;
    d.set_item("mr_certified_real", report.certified_real)?;
    d.set_item("max_nullity", report.max_nullity)?;
    d.set_item("max_multiplicity", report.max_multiplicity)?;
    d.set_item("zero_forcing", report.zero_forcing)?;
    d.set_item("lower_bound", report.lower_bound_used)?;
    match &report.witness {
        Some(w) => d.set_item("witness", matrix_to_py(py, w)?)?,
        None => d.set_item("witness", py.None())?,
    }
    let iterations = PyList::empty_bound(py);
    for rec in &report.iterations {
        let it = PyDict::new_bound(py);
        it.set_item("k", rec.k)?;
        it.set_item("minors_total", rec.minors_total)?;
        it.set_item("minors_distinct", rec.minors_distinct)?;
        let verdict = match &rec.verdict {
            LevelVerdict::SkippedByBound => "SKIPPED_BY_BOUND",
            LevelVerdict::Trivial => "TRIVIAL",
            LevelVerdict::Solvable => "SOLVABLE",
            LevelVerdict::Undecided(_) => "UNDECIDED",
        };
        it.set_item("verdict", verdict)?;
        it.set_item("elapsed_ms", rec.elapsed.as_secs_f64() * 1e3)?;
        iterations.append(it)?;
    }
    d.set_item("iterations", iterations)?;
    let components = PyList::empty_bound(py);
    for sub in &report.components {
        components.append(report_to_dict(py, sub)?)?;
    }
    d.set_item("components", components)?;
    Ok(d.into())
}

#[allow(clippy::too_many_arguments)]
fn build_options(
    seed: u64,
    bound: i64,
    attempts: u64,
    use_bounds: bool,
    witness: bool,
    decompose: bool,
    threads: usize,
    order: &str,
    strategy: &str,
) -> PyResult<SolveOptions> {
    if bound < 1 {
        return Err(value_error("bound must be at least 1"));
    }
    Ok(SolveOptions {
        order: parse_order(order)?,
        strategy: parse_strategy(strategy)?,
        use_bounds,
        witness_search: witness,
        witness_coeff_bound: bound,
        witness_attempts: attempts,
        random_seed: seed,
        decompose_components: decompose,
        threads: threads.max(1),
        ..SolveOptions::default()
    })
}

/// Decide the minimum rank of a graph exactly.  Returns a report dict with
/// `mr`, `status`, bounds, the certified witness (rows of Fraction), and
/// per-level iteration records.
#[pyfunction]
#[pyo3(signature = (graph, *, seed=0, bound=4, attempts=100_000, use_bounds=true,
                    witness=true, decompose=true, threads=1, order="grevlex",
                    strategy="linear"))]
#[allow(clippy::too_many_arguments)]
fn minimum_rank(
    py: Python<'_>,
    graph: &PyGraph,
    seed: u64,
    bound: i64,
    attempts: u64,
    use_bounds: bool,
    witness: bool,
    decompose: bool,
    threads: usize,
    order: &str,
    strategy: &str,
) -> PyResult<PyObject> {
    let opts = build_options(
        seed, bound, attempts, use_bounds, witness, decompose, threads, order, strategy,
    )?;
    let report = py.allow_threads(|| solver::minimum_rank(&graph.inner, &opts));
    report_to_dict(py, &report)
}

/// Search for a rational matrix with the graph's pattern and rank at most
/// `rank`.  Returns rows of Fraction, or None if the sampling budget is
/// exhausted.
#[pyfunction]
#[pyo3(signature = (graph, rank, *, seed=0, bound=4, attempts=100_000, threads=1))]
fn find_witness(
    py: Python<'_>,
    graph: &PyGraph,
    rank: usize,
    seed: u64,
    bound: i64,
    attempts: u64,
    threads: usize,
) -> PyResult<PyObject> {
    let opts = build_options(
        seed, bound, attempts, true, true, true, threads, "grevlex", "linear",
    )?;
    let found = py.allow_threads(|| solver::find_witness(&graph.inner, rank, &opts));
    match found {
        Some(m) => matrix_to_py(py, &m),
        None => Ok(py.None()),
    }
}

/// Exact rank of a rational matrix.  Accepts the text format (rows of
/// whitespace-separated integers or `p/q` fractions) or a sequence of rows
/// whose entries are int, str, or `fractions.Fraction`.
#[pyfunction]
fn rank(matrix: &Bound<'_, PyAny>) -> PyResult<usize> {
    let text = if let Ok(s) = matrix.extract::<String>() {
        s
    } else {
        let mut lines = Vec::new();
        for row in matrix.iter()? {
            let row = row?;
            let mut cells = Vec::new();
            for cell in row.iter()? {
                cells.push(cell?.str()?.to_string());
            }
            lines.push(cells.join(" "));
        }
        lines.join("\n")
    };
    let m = parse_matrix(&text).map_err(value_error)?;
    Ok(m.rank())
}

/// Closed-form minimum rank of a tree: n - P(T) with P the path cover
/// number.  Raises ValueError when the graph is not a tree.
#[pyfunction]
fn tree_minimum_rank(graph: &PyGraph) -> PyResult<usize> {
    graph::tree_minimum_rank(&graph.inner).map_err(value_error)
}

/// Minimum number of vertex-disjoint induced paths covering a tree.
#[pyfunction]
fn path_cover_number(graph: &PyGraph) -> PyResult<usize> {
    if graph::tree_minimum_rank(&graph.inner).is_err() {
        return Err(value_error("path cover number is defined here for trees"));
    }
    Ok(graph::path_cover_number(&graph.inner))
}

/// Zero forcing number Z(G); mr(G) >= n - Z(G).
#[pyfunction]
fn zero_forcing_number(graph: &PyGraph) -> usize {
    graph::zero_forcing_number(&graph.inner)
}

/// The symbolic pattern matrix as strings: `x<i>` on the diagonal, `y<e>`
/// for edge e, `0` for non-adjacent pairs.
#[pyfunction]
fn symbolic_matrix(graph: &PyGraph) -> Vec<Vec<String>> {
    let m = minors::SymbolicMatrix::new(&graph.inner, MonomialOrder::GrevLex);
    (0..graph.inner.n())
        .map(|i| {
            (0..graph.inner.n())
                .map(|j| match m.entry(i, j) {
                    Some(v) => format!("{v}"),
                    None => "0".to_string(),
                })
                .collect()
        })
        .collect()
}

/// Enumerate the k-minors of the symbolic pattern matrix.  Returns a dict
/// with the total ordered count and the distinct nonzero minors as strings.
#[pyfunction]
#[pyo3(signature = (graph, k, *, order="grevlex"))]
fn enumerate_minors(
    py: Python<'_>,
    graph: &PyGraph,
    k: usize,
    order: &str,
) -> PyResult<PyObject> {
    let ord = parse_order(order)?;
    let level = py.allow_threads(|| minors::enumerate_minors(&graph.inner, k, ord));
    let d = PyDict::new_bound(py);
    d.set_item("k", level.k)?;
    d.set_item("total", level.all_count)?;
    d.set_item(
        "distinct",
        level
            .distinct
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>(),
    )?;
    Ok(d.into())
}

#[pymodule]
fn minrank_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(minimum_rank, m)?)?;
    m.add_function(wrap_pyfunction!(find_witness, m)?)?;
    m.add_function(wrap_pyfunction!(rank, m)?)?;
    m.add_function(wrap_pyfunction!(tree_minimum_rank, m)?)?;
    m.add_function(wrap_pyfunction!(path_cover_number, m)?)?;
    m.add_function(wrap_pyfunction!(zero_forcing_number, m)?)?;
    m.add_function(wrap_pyfunction!(symbolic_matrix, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_minors, m)?)?;
    Ok(())
}
