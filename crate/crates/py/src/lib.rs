//! Python bindings. Counts are returned as Python integers of arbitrary
//! size; graphs cross the boundary as `Graph` objects, and isomorphism
//! classes as graph6 strings.

use num_bigint::BigUint;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use orientcount::audit::{summarize, AuditConfig};
use orientcount::enumerate::SweepOptions;
use orientcount::extension::ExtConfig;
use orientcount::VertexSet;

fn value_error(e: orientcount::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn sweep(prune: bool) -> SweepOptions {
    SweepOptions { prune, workers: None }
}

#[pyclass(name = "Graph", module = "orientcount_py", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyGraph {
    inner: orientcount::Graph,
}

#[pymethods]
impl PyGraph {
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        let inner = orientcount::Graph::from_edges(n, edges).map_err(value_error)?;
        Ok(PyGraph { inner })
    }

    #[staticmethod]
    fn from_graph6(text: &str) -> PyResult<Self> {
        let inner = orientcount::parse_graph6(text.trim()).map_err(|e| PyValueError::new_err(e.to_string()))?;
        Ok(PyGraph { inner })
    }

    #[staticmethod]
    fn complete(r: usize) -> PyResult<Self> {
        Ok(PyGraph { inner: orientcount::Graph::complete(r).map_err(value_error)? })
    }

    #[staticmethod]
    fn complete_multipartite(parts: Vec<usize>) -> PyResult<Self> {
        Ok(PyGraph { inner: orientcount::Graph::complete_multipartite(&parts).map_err(value_error)? })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().to_vec()
    }

    fn graph6(&self) -> String {
        orientcount::emit_graph6(&self.inner)
    }

    fn clique_number(&self) -> usize {
        self.inner.clique_number()
    }

    fn __repr__(&self) -> String {
        format!("Graph.from_graph6({:?})", self.graph6())
    }

    fn __eq__(&self, other: &PyGraph) -> bool {
        self.inner == other.inner
    }
}

/// Number of orientations with no cyclic triangle.
#[pyfunction]
fn count_orientations(py: Python<'_>, g: &PyGraph) -> BigUint {
    py.detach(|| orientcount::count_orientations(&g.inner)).0
}

/// The same count by testing every orientation (at most 30 edges).
#[pyfunction]
fn oracle_count(py: Python<'_>, g: &PyGraph) -> PyResult<BigUint> {
    py.detach(|| orientcount::oracle_count(&g.inner)).map(|c| c.0).map_err(value_error)
}

/// Closed form for the count of K_{1,l,l}.
#[pyfunction]
fn k1ll_count(ell: u64) -> PyResult<BigUint> {
    orientcount::closed_forms::k1ll_count(ell).map(|c| c.0).map_err(value_error)
}

/// `(ext, witness_arcs)` for disjoint vertex lists `a` and `b`.
#[pyfunction]
fn ext(py: Python<'_>, g: &PyGraph, a: Vec<usize>, b: Vec<usize>) -> PyResult<(BigUint, Vec<(usize, usize)>)> {
    let cfg = ExtConfig::new(g.inner.clone(), VertexSet::from_vertices(a), VertexSet::from_vertices(b))
        .map_err(value_error)?;
    let r = py.detach(|| orientcount::extension::ext(&cfg)).map_err(value_error)?;
    Ok((r.value.0.clone(), r.witness_arcs()))
}

/// Canonical graph6 string of the isomorphism class.
#[pyfunction]
fn canonical_form(g: &PyGraph) -> PyResult<String> {
    Ok(orientcount::canon::canonical_form(&g.inner).map_err(value_error)?.graph6())
}

/// Canonical graph6 strings of every class on `n` vertices.
#[pyfunction]
fn generate_all(py: Python<'_>, n: usize) -> PyResult<Vec<String>> {
    let forms = py.detach(|| orientcount::enumerate::class_forms(n)).map_err(value_error)?;
    Ok(forms.iter().map(|f| f.graph6()).collect())
}

/// `(max_count, maximizers)` over all graphs on `n` vertices.
#[pyfunction]
#[pyo3(signature = (n, prune = true))]
fn find_maximizers(py: Python<'_>, n: usize, prune: bool) -> PyResult<(BigUint, Vec<String>)> {
    let r = py
        .detach(|| orientcount::enumerate::find_maximizers(n, sweep(prune)))
        .map_err(value_error)?;
    Ok((r.max_count.0, r.maximizers.iter().map(|f| f.graph6()).collect()))
}

/// `(passed, summary)` for the maximum on `n` vertices.
#[pyfunction]
#[pyo3(signature = (n, prune = true))]
fn verify_theorem(py: Python<'_>, n: usize, prune: bool) -> PyResult<(bool, String)> {
    let r = py
        .detach(|| orientcount::enumerate::verify_theorem(n, sweep(prune)))
        .map_err(value_error)?;
    Ok((r.pass, r.summary()))
}

/// `(id, scope, instances, failed)` per ledger family.
#[pyfunction]
#[pyo3(signature = (max_n = 200))]
fn audit_summary(py: Python<'_>, max_n: u64) -> PyResult<Vec<(String, String, usize, usize)>> {
    let cfg = AuditConfig { max_n, ..AuditConfig::default() };
    let rs = py.detach(|| orientcount::audit::audit_all(&cfg)).map_err(value_error)?;
    Ok(summarize(&rs)
        .into_iter()
        .map(|s| {
            let scope = match s.scope {
                orientcount::audit::Scope::Claimed => "claimed",
                orientcount::audit::Scope::Reference => "reference",
            };
            (s.id.to_string(), scope.to_string(), s.instances, s.failed)
        })
        .collect())
}

/// `(claim_id, passed, attained, bound)` per extension-bound claim.
#[pyfunction]
fn certify_summary(py: Python<'_>) -> PyResult<Vec<(String, bool, BigUint, BigUint)>> {
    let certs = py.detach(orientcount::certify::certify_section2).map_err(value_error)?;
    Ok(certs
        .into_iter()
        .map(|c| (c.claim_id, c.verdict.passed(), c.attained.0, c.bound.0))
        .collect())
}

/// `(passed, qualifying_classes, max_count)` for the 7-vertex lemma.
#[pyfunction]
fn lemma_claim(py: Python<'_>) -> PyResult<(bool, usize, BigUint)> {
    let r = py.detach(orientcount::audit::verify_lemma_claim).map_err(value_error)?;
    Ok((r.pass, r.qualifying, r.max_count.0))
}

#[pymodule]
fn orientcount_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(count_orientations, m)?)?;
    m.add_function(wrap_pyfunction!(oracle_count, m)?)?;
    m.add_function(wrap_pyfunction!(k1ll_count, m)?)?;
    m.add_function(wrap_pyfunction!(ext, m)?)?;
    m.add_function(wrap_pyfunction!(canonical_form, m)?)?;
    m.add_function(wrap_pyfunction!(generate_all, m)?)?;
    m.add_function(wrap_pyfunction!(find_maximizers, m)?)?;
    m.add_function(wrap_pyfunction!(verify_theorem, m)?)?;
    m.add_function(wrap_pyfunction!(audit_summary, m)?)?;
    m.add_function(wrap_pyfunction!(certify_summary, m)?)?;
    m.add_function(wrap_pyfunction!(lemma_claim, m)?)?;
    Ok(())
}
