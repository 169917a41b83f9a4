//! Python bindings: the Eulerian digraph type with its polynomial
//! pipelines, the link state models over bipartite plane graph files, and
//! the coefficient-sequence predicates.

use num_bigint::BigInt;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;
use treepoly::alexander;
use treepoly::bijection::{lemma_checks, verify_weight_relation};
use treepoly::files::{parse_bipartite, parse_digraph, serialize_digraph};
use treepoly::graphs;
use treepoly::links;
use treepoly::poly::IntPoly;
use treepoly::scanner;
use treepoly::trees;
use treepoly::verify::verify_identities;

fn err(e: treepoly::Error) -> PyErr {
    match e {
        treepoly::Error::Input(_) | treepoly::Error::Embedding(_) => {
            PyValueError::new_err(e.to_string())
        }
        _ => PyRuntimeError::new_err(e.to_string()),
    }
}

fn coeffs(p: &IntPoly) -> Vec<BigInt> {
    p.coeffs().to_vec()
}

#[pyclass(name = "EulerianDigraph", frozen)]
struct PyEulerianDigraph {
    inner: graphs::EulerianDigraph,
}

#[pymethods]
impl PyEulerianDigraph {
    #[new]
    fn new(vertex_count: usize, arcs: Vec<(usize, usize)>) -> PyResult<Self> {
        let g = graphs::Digraph::new(vertex_count, &arcs).map_err(err)?;
        Ok(PyEulerianDigraph {
            inner: graphs::EulerianDigraph::new(g).map_err(err)?,
        })
    }

    /// Parse the `v`/`e` text format.
    #[staticmethod]
    fn from_text(text: &str) -> PyResult<Self> {
        let parsed = parse_digraph(text).map_err(err)?;
        Ok(PyEulerianDigraph {
            inner: graphs::EulerianDigraph::new(parsed.graph).map_err(err)?,
        })
    }

    #[getter]
    fn vertex_count(&self) -> usize {
        self.inner.graph().vertex_count()
    }

    #[getter]
    fn edge_count(&self) -> usize {
        self.inner.graph().edge_count()
    }

    /// Edges as (id, init, fin) triples.
    fn edges(&self) -> Vec<(usize, usize, usize)> {
        self.inner
            .graph()
            .edges()
            .iter()
            .map(|e| (e.id, e.init, e.fin))
            .collect()
    }

    /// The polynomial coefficients c_0..c_{n-1}, cross-checked across all
    /// three pipelines.
    fn pd(&self) -> PyResult<Vec<BigInt>> {
        Ok(coeffs(&alexander::pd(&self.inner).map_err(err)?))
    }

    /// Determinant route only (`det(L̄ + t·L̄ᵀ)`).
    fn pd_determinant(&self) -> Vec<BigInt> {
        coeffs(&alexander::pd_determinant(&self.inner))
    }

    /// Direct k-spanning-tree census at the given root.
    #[pyo3(signature = (root = 0))]
    fn ck_vector(&self, root: usize) -> PyResult<Vec<BigInt>> {
        trees::ck_vector(&self.inner, root).map_err(err)
    }

    /// The contraction inclusion-exclusion evaluation at the given root.
    #[pyo3(signature = (root = 0))]
    fn ck_inclusion_exclusion(&self, root: usize) -> PyResult<Vec<BigInt>> {
        trees::ck_inclusion_exclusion_vector(&self.inner, root).map_err(err)
    }

    /// The root-polytope volume expansion Σ Vol·(t−1)^(n−1−|E'|).
    #[pyo3(signature = (root = 0))]
    fn volume_expansion(&self, root: usize) -> PyResult<Vec<BigInt>> {
        Ok(coeffs(
            &treepoly::rootpolytope::theorem_volume_expansion(&self.inner, root).map_err(err)?,
        ))
    }

    /// Number of Eulerian tours beginning with the given edge.
    fn count_eulerian_tours(&self, edge: usize) -> PyResult<BigInt> {
        trees::count_eulerian_tours(&self.inner, edge).map_err(err)
    }

    /// Spanning trees as sorted edge-id lists.
    fn spanning_trees(&self) -> PyResult<Vec<Vec<usize>>> {
        trees::spanning_trees(self.inner.graph()).map_err(err)
    }

    #[pyo3(signature = (root = 0))]
    fn arborescences(&self, root: usize) -> PyResult<Vec<Vec<usize>>> {
        trees::arborescences(self.inner.graph(), root).map_err(err)
    }

    fn transpose(&self) -> Self {
        PyEulerianDigraph {
            inner: self.inner.transpose(),
        }
    }

    /// The identity suite as (name, passed, detail) triples.
    fn verify(&self) -> PyResult<Vec<(String, bool, String)>> {
        let report = verify_identities(&self.inner).map_err(err)?;
        Ok(report
            .checks
            .into_iter()
            .map(|c| (c.name.to_string(), c.passed, c.detail))
            .collect())
    }

    fn to_text(&self) -> String {
        serialize_digraph(self.inner.graph(), None)
    }

    fn __repr__(&self) -> String {
        format!(
            "EulerianDigraph(vertices={}, edges={})",
            self.inner.graph().vertex_count(),
            self.inner.graph().edge_count()
        )
    }
}

/// Summary of both state models over a bipartite plane graph file.
#[pyfunction]
fn states_summary<'py>(py: Python<'py>, text: &str) -> PyResult<Bound<'py, PyDict>> {
    let parsed = parse_bipartite(text).map_err(err)?;
    let models = links::build_models(&parsed.graph).map_err(err)?;
    let l = &models.diagram;
    let dual = graphs::EulerianDigraph::new(l.dual.graph().clone()).map_err(err)?;
    let pd_poly = alexander::pd(&dual).map_err(err)?.canonical();
    let kauffman = links::kauffman_polynomial(l).map_err(err)?;
    let crowell = links::crowell_polynomial(&models.crowell, l.v0).map_err(err)?;
    let states = links::kauffman_states(l).map_err(err)?;
    let out = PyDict::new(py);
    out.set_item("crossings", l.crossing_count())?;
    out.set_item("regions", l.medial.regions.len())?;
    out.set_item("states", states.len())?;
    out.set_item("gold_regions", models.gold_blue.m1())?;
    out.set_item("blue_regions", models.gold_blue.m2())?;
    out.set_item("kauffman", coeffs(&kauffman))?;
    out.set_item("crowell", coeffs(&crowell))?;
    out.set_item("dual_pd", coeffs(&pd_poly))?;
    out.set_item("equal", kauffman == pd_poly && crowell == pd_poly)?;
    Ok(out)
}

/// The tree/arborescence bijection with the weight relation and lemma
/// checks; raises on any violation.
#[pyfunction]
fn bijection_table<'py>(py: Python<'py>, text: &str) -> PyResult<Bound<'py, PyDict>> {
    let parsed = parse_bipartite(text).map_err(err)?;
    let models = links::build_models(&parsed.graph).map_err(err)?;
    let report =
        verify_weight_relation(&models.diagram, &models.crowell, &models.gold_blue).map_err(err)?;
    let lemmas = lemma_checks(&models.diagram, &models.crowell, &models.gold_blue).map_err(err)?;
    let rows: Vec<Bound<'py, PyDict>> = report
        .rows
        .iter()
        .map(|r| {
            let row = PyDict::new(py);
            row.set_item("tree", r.tree.clone())?;
            row.set_item("k", r.k)?;
            row.set_item("kauffman_degree", r.kauffman_degree)?;
            row.set_item("arborescence", r.arborescence.clone())?;
            row.set_item("crowell_degree", r.crowell_degree)?;
            Ok(row)
        })
        .collect::<PyResult<_>>()?;
    let out = PyDict::new(py);
    out.set_item("m2", report.m2)?;
    out.set_item("rows", rows)?;
    out.set_item("bijective", report.bijective)?;
    out.set_item("weight_relation_ok", report.rows.iter().all(|r| r.weight_ok))?;
    out.set_item("lemmas_ok", lemmas.all_ok())?;
    Ok(out)
}

#[pyfunction]
#[pyo3(signature = (n, m, seed = 0))]
fn random_eulerian(n: usize, m: usize, seed: u64) -> PyResult<PyEulerianDigraph> {
    Ok(PyEulerianDigraph {
        inner: scanner::random_eulerian_digraph(n, m, seed).map_err(err)?,
    })
}

#[pyfunction]
fn is_palindromic(coeffs: Vec<BigInt>) -> bool {
    IntPoly::from_coeffs(coeffs).is_palindromic()
}

#[pyfunction]
fn is_log_concave_no_internal_zeros(coeffs: Vec<BigInt>) -> PyResult<bool> {
    IntPoly::from_coeffs(coeffs)
        .is_log_concave_no_internal_zeros()
        .map_err(err)
}

#[pyfunction]
fn is_trapezoidal(coeffs: Vec<BigInt>) -> PyResult<bool> {
    IntPoly::from_coeffs(coeffs).is_trapezoidal().map_err(err)
}

#[pyfunction]
fn is_ultra_log_concave(coeffs: Vec<BigInt>) -> PyResult<bool> {
    IntPoly::from_coeffs(coeffs)
        .is_ultra_log_concave()
        .map_err(err)
}

#[pymodule]
fn treepoly_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyEulerianDigraph>()?;
    m.add_function(wrap_pyfunction!(states_summary, m)?)?;
    m.add_function(wrap_pyfunction!(bijection_table, m)?)?;
    m.add_function(wrap_pyfunction!(random_eulerian, m)?)?;
    m.add_function(wrap_pyfunction!(is_palindromic, m)?)?;
    m.add_function(wrap_pyfunction!(is_log_concave_no_internal_zeros, m)?)?;
    m.add_function(wrap_pyfunction!(is_trapezoidal, m)?)?;
    m.add_function(wrap_pyfunction!(is_ultra_log_concave, m)?)?;
    Ok(())
}
