//! Python bindings: graphs, family generators, SRG parameters, induced
//! pattern search and the constructive witnesses.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use srg_paths::catalog::{constructive_witness as construct, instance};
use srg_paths::families::{expected_params as closed_form, FamilyKind};
use srg_paths::formats::{parse_graph6, write_graph6};
use srg_paths::{PatternName, SrgParams};

type Params = (usize, usize, usize, usize);

fn err(e: srg_paths::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn pattern(name: &str) -> PyResult<PatternName> {
    name.parse().map_err(PyValueError::new_err)
}

fn tuple(p: SrgParams) -> Params {
    (p.n, p.k, p.lambda, p.mu)
}

#[pyclass(name = "Graph", eq, frozen, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyGraph {
    inner: srg_paths::Graph,
}

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (n, edges = Vec::new()))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(PyGraph { inner: srg_paths::Graph::from_edges(n, edges).map_err(err)? })
    }

    #[staticmethod]
    fn from_graph6(text: &str) -> PyResult<Self> {
        Ok(PyGraph { inner: parse_graph6(text).map_err(err)? })
    }

    fn to_graph6(&self) -> String {
        write_graph6(&self.inner)
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().collect()
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.inner.n() && v < self.inner.n() && self.inner.has_edge(u, v)
    }

    fn degree(&self, v: usize) -> PyResult<usize> {
        if v >= self.inner.n() {
            return Err(PyValueError::new_err(format!("vertex {v} out of range")));
        }
        Ok(self.inner.degree(v))
    }

    fn label(&self, v: usize) -> PyResult<String> {
        if v >= self.inner.n() {
            return Err(PyValueError::new_err(format!("vertex {v} out of range")));
        }
        Ok(self.inner.label(v))
    }

    fn complement(&self) -> Self {
        PyGraph { inner: self.inner.complement() }
    }

    fn induced_subgraph(&self, vertices: Vec<usize>) -> PyResult<Self> {
        Ok(PyGraph { inner: self.inner.induced_subgraph(&vertices).map_err(err)? })
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    fn girth(&self) -> Option<usize> {
        self.inner.girth()
    }

    /// `(n, k, lambda, mu)`, or None when the graph is not strongly regular.
    fn srg_params(&self) -> Option<Params> {
        srg_paths::srg_params(&self.inner).map(tuple)
    }

    fn is_primitive(&self) -> PyResult<bool> {
        srg_paths::is_primitive(&self.inner).map_err(err)
    }

    fn is_cograph(&self) -> bool {
        srg_paths::is_cograph(&self.inner)
    }

    /// Lexicographically least induced copy of the pattern, in pattern order.
    fn find_induced(&self, name: &str) -> PyResult<Option<Vec<usize>>> {
        Ok(srg_paths::find_induced(&self.inner, &srg_paths::Pattern::new(pattern(name)?)).witness)
    }

    /// Constructive induced P4 as `(vertices, branch)`.
    fn p4_witness(&self) -> PyResult<(Vec<usize>, String)> {
        let w = srg_paths::witness::p4_witness(&self.inner).map_err(err)?;
        Ok((w.vertices, w.branch.to_string()))
    }

    fn __len__(&self) -> usize {
        self.inner.n()
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, edges={})", self.inner.n(), self.inner.edge_count())
    }
}

/// Builds a family instance from a spec such as `johnson2:6` or `sts-bose:15`.
#[pyfunction]
fn family(spec: &str) -> PyResult<PyGraph> {
    Ok(PyGraph { inner: instance(spec).map_err(err)?.graph })
}

/// Closed-form parameters for a family kind and its order arguments.
#[pyfunction]
fn expected_params(kind: &str, args: Vec<usize>) -> PyResult<Params> {
    let kind: FamilyKind = kind.parse().map_err(PyValueError::new_err)?;
    closed_form(kind, &args).map(tuple).map_err(err)
}

#[pyfunction]
fn complement_params(params: Params) -> PyResult<Params> {
    let (n, k, l, m) = params;
    let p = SrgParams::new(n as i64, k as i64, l as i64, m as i64).map_err(err)?;
    p.complement().map(tuple).map_err(err)
}

/// Constructive witness for a pattern in a family instance, as vertex
/// labels in pattern order plus the construction branch.
#[pyfunction]
fn constructive_witness(spec: &str, name: &str) -> PyResult<(Vec<String>, String)> {
    let inst = instance(spec).map_err(err)?;
    let w = construct(&inst, pattern(name)?).map_err(err)?;
    Ok((w.labels(&inst.graph), w.branch.to_string()))
}

/// Runs the claim suite and returns its CSV report.
#[pyfunction]
#[pyo3(signature = (only = None))]
fn verify_claims(only: Option<String>) -> (bool, String) {
    let opts = srg_paths::claims::ClaimOptions { only, ..Default::default() };
    let claims = srg_paths::claims::run_claims(&opts);
    (srg_paths::claims::all_pass(&claims), srg_paths::claims::claims_csv(&claims))
}

#[pymodule]
fn srg_paths_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(family, m)?)?;
    m.add_function(wrap_pyfunction!(expected_params, m)?)?;
    m.add_function(wrap_pyfunction!(complement_params, m)?)?;
    m.add_function(wrap_pyfunction!(constructive_witness, m)?)?;
    m.add_function(wrap_pyfunction!(verify_claims, m)?)?;
    Ok(())
}
