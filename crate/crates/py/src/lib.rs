//! Python bindings: graphs, book layouts, the two-page pipeline, the exact
//! oracle, and the built-in graph families.

use std::collections::BTreeMap;

use pyo3::create_exception;
use pyo3::exceptions::PyException;
use pyo3::prelude::*;

use bookem::augment::{lemma1_augment, separating_triangles, stellate};
use bookem::hamiltonian::CyclicOrder;
use bookem::io::{emit_layout_json, emit_svg, LayoutReport, ReportProvenance};
use bookem::layout::{
    assign_pages, homeomorphic_two_page, pagenumber_oracle, two_page_embed_with_stats,
    verify_layout, BookLayout, Violation,
};
use bookem::planar::{is_outerplanar, planar_embed};
use bookem::{generators, Error};

create_exception!(bookem_py, BookemError, PyException, "Raised by bookem operations.");

fn err(e: Error) -> PyErr {
    BookemError::new_err(e.to_string())
}

/// A finite simple undirected graph on vertices `0..n`.
#[pyclass(name = "Graph", frozen, from_py_object)]
#[derive(Clone)]
struct PyGraph {
    inner: bookem::Graph,
}

#[pymethods]
impl PyGraph {
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(Self { inner: bookem::Graph::new(n, &edges).map_err(err)? })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.vertex_count()
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.edge_count()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edge_vec()
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        if v >= self.inner.vertex_count() {
            return Err(BookemError::new_err(format!("vertex {v} out of range")));
        }
        Ok(self.inner.neighbors(v).to_vec())
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.inner.vertex_count() && v < self.inner.vertex_count() && self.inner.has_edge(u, v)
    }

    fn is_planar(&self) -> bool {
        planar_embed(&self.inner).is_some()
    }

    fn is_outerplanar(&self) -> bool {
        is_outerplanar(&self.inner)
    }

    /// Exact book thickness by brute force; refuses graphs above `max_n`.
    #[pyo3(signature = (max_n = 9))]
    fn pagenumber(&self, max_n: usize) -> PyResult<usize> {
        pagenumber_oracle(&self.inner, max_n).map_err(err)
    }

    fn separating_triangles(&self) -> Vec<(usize, usize, usize)> {
        separating_triangles(&self.inner)
    }

    /// Two-page book embedding; fails when the graph is not planar or some
    /// block has a separating triangle.
    fn two_page_embed(&self) -> PyResult<PyBookLayout> {
        let (layout, stats) = two_page_embed_with_stats(&self.inner).map_err(err)?;
        Ok(PyBookLayout { layout, provenance: (&stats).into() })
    }

    /// Subdivide every edge once and embed the result in two pages. Returns
    /// (subdivided graph, layout, spine crossing count).
    fn homeomorphic_two_page(&self) -> PyResult<(PyGraph, PyBookLayout, usize)> {
        let h = homeomorphic_two_page(&self.inner).map_err(err)?;
        Ok((
            PyGraph { inner: h.subdivided },
            PyBookLayout { layout: h.layout, provenance: ReportProvenance::default() },
            h.spine_crossings,
        ))
    }

    /// Augment this nicely planar block to a triangulation. Returns the
    /// augmented graph and the ids of the added vertices.
    fn augment_to_triangulation(&self) -> PyResult<(PyGraph, Vec<usize>)> {
        let rs = planar_embed(&self.inner).ok_or(Error::NotPlanar).map_err(err)?;
        let (g1, rs1, t1) = lemma1_augment(&self.inner, &rs).map_err(err)?;
        let (g2, _, t2) = stellate(&g1, &rs1).map_err(err)?;
        let trace = t1.chain(&t2).map_err(err)?;
        let added = trace.added_vertices.iter().map(|a| a.id).collect();
        Ok((PyGraph { inner: g2 }, added))
    }

    /// Page assignment under a caller-supplied cyclic vertex order, or None
    /// when `k` pages do not suffice for that order.
    fn assign_pages(&self, order: Vec<usize>, k: usize) -> PyResult<Option<PyBookLayout>> {
        if k < 1 {
            return Err(BookemError::new_err("page budget must be at least 1"));
        }
        let n = self.inner.vertex_count();
        let mut seen = vec![false; n];
        if order.len() != n || order.iter().any(|&v| v >= n || std::mem::replace(&mut seen[v], true))
        {
            return Err(BookemError::new_err("order must be a permutation of the vertices"));
        }
        let o = CyclicOrder::new(&order);
        Ok(assign_pages(&self.inner, &o, k)
            .map(|layout| PyBookLayout { layout, provenance: ReportProvenance::default() }))
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={})", self.inner.vertex_count(), self.inner.edge_count())
    }
}

/// A book embedding: cyclic spine order plus a page for every edge.
#[pyclass(name = "BookLayout", frozen)]
struct PyBookLayout {
    layout: BookLayout,
    provenance: ReportProvenance,
}

#[pymethods]
impl PyBookLayout {
    #[getter]
    fn spine(&self) -> Vec<usize> {
        self.layout.spine.as_slice().to_vec()
    }

    #[getter]
    fn page_count(&self) -> usize {
        self.layout.page_count
    }

    fn pages(&self) -> BTreeMap<(usize, usize), usize> {
        self.layout.pages.clone()
    }

    /// Same-page crossing pairs on `g`; an empty list means the layout is a
    /// valid book embedding of `g`.
    fn verify(&self, g: &PyGraph) -> PyResult<Vec<Violation>> {
        verify_layout(&g.inner, &self.layout).map_err(err)
    }

    fn to_json(&self, g: &PyGraph) -> PyResult<String> {
        let report = LayoutReport::new(&g.inner, &self.layout, self.provenance.clone());
        Ok(emit_layout_json(&report))
    }

    fn to_svg(&self, g: &PyGraph) -> PyResult<String> {
        emit_svg(&g.inner, &self.layout).map_err(err)
    }

    fn __repr__(&self) -> String {
        format!(
            "BookLayout(pages={}, spine_len={})",
            self.layout.page_count,
            self.layout.spine.len()
        )
    }
}

#[pyfunction]
fn parse_edge_list(text: &str) -> PyResult<PyGraph> {
    Ok(PyGraph { inner: bookem::io::parse_edge_list(text).map_err(err)? })
}

#[pyfunction]
fn x_tree(depth: u32) -> PyGraph {
    PyGraph { inner: generators::x_tree(depth) }
}

#[pyfunction]
fn extended_x_tree(depth: u32) -> PyGraph {
    PyGraph { inner: generators::extended_x_tree(depth) }
}

#[pyfunction]
fn grid(rows: usize, cols: usize) -> PyResult<PyGraph> {
    if rows < 1 || cols < 1 {
        return Err(BookemError::new_err("grid needs rows >= 1 and cols >= 1"));
    }
    Ok(PyGraph { inner: generators::grid(rows, cols) })
}

#[pyfunction]
#[pyo3(signature = (g, per_edge = 1))]
fn subdivide(g: &PyGraph, per_edge: usize) -> (PyGraph, BTreeMap<(usize, usize), Vec<usize>>) {
    let (sub, map) = generators::subdivide(&g.inner, per_edge);
    (PyGraph { inner: sub }, map)
}

#[pymodule]
fn bookem_py(py: Python<'_>, m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<PyBookLayout>()?;
    m.add_function(wrap_pyfunction!(parse_edge_list, m)?)?;
    m.add_function(wrap_pyfunction!(x_tree, m)?)?;
    m.add_function(wrap_pyfunction!(extended_x_tree, m)?)?;
    m.add_function(wrap_pyfunction!(grid, m)?)?;
    m.add_function(wrap_pyfunction!(subdivide, m)?)?;
    m.add("BookemError", py.get_type::<BookemError>())?;
    Ok(())
}
