use std::sync::Arc;

use pyo3::exceptions::{PyIndexError, PyValueError};
use pyo3::prelude::*;

use isingvec::classify::{self, Classification as CoreClassification};
use isingvec::griess::{ElementJson, GriessAlgebra as CoreAlgebra, GriessElement};
use isingvec::ising;
use isingvec::lattice::{self, IntegralLattice, Sublattice};
use isingvec::linalg::Rational;
use isingvec::Error;

fn err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// An even positive-definite lattice given by its Gram matrix.
#[pyclass(name = "Lattice", module = "isingvec", frozen)]
struct PyLattice {
    inner: IntegralLattice,
}

#[pymethods]
impl PyLattice {
    #[new]
    #[pyo3(signature = (gram, name = "lattice"))]
    fn new(gram: Vec<Vec<i64>>, name: &str) -> PyResult<Self> {
        Ok(PyLattice { inner: IntegralLattice::validate(gram, name).map_err(err)? })
    }

    #[staticmethod]
    fn preset(name: &str) -> PyResult<Self> {
        Ok(PyLattice { inner: lattice::preset(name).map_err(err)? })
    }

    #[staticmethod]
    fn preset_names() -> Vec<&'static str> {
        lattice::preset_names().to_vec()
    }

    #[getter]
    fn name(&self) -> &str {
        self.inner.name()
    }

    #[getter]
    fn gram(&self) -> Vec<Vec<i64>> {
        self.inner.gram().to_vec()
    }

    #[getter]
    fn rank(&self) -> usize {
        self.inner.rank()
    }

    fn inner(&self, x: Vec<i64>, y: Vec<i64>) -> PyResult<i64> {
        self.inner.inner(&x, &y).map_err(err)
    }

    fn shell(&self, norm: i64) -> PyResult<Vec<Vec<i64>>> {
        if norm < 2 || norm % 2 != 0 {
            return Err(PyValueError::new_err("norm must be an even integer >= 2"));
        }
        Ok(self.inner.shell(norm).into_iter().map(|v| v.0).collect())
    }

    fn is_rootless(&self) -> bool {
        self.inner.is_rootless()
    }

    fn is_sqrt2_even(&self) -> bool {
        self.inner.is_sqrt2_even()
    }

    /// Bases (rows in lattice coordinates) of all sublattices isometric to √2E8.
    fn find_sqrt2e8(&self, py: Python<'_>) -> Vec<Vec<Vec<i64>>> {
        let l = self.inner.clone();
        py.detach(move || lattice::find_sqrt2e8(&l)).into_iter().map(|s| s.generators().to_vec()).collect()
    }

    fn count_formula(&self, py: Python<'_>) -> PyResult<usize> {
        let l = self.inner.clone();
        py.detach(move || classify::count_formula(&l)).map_err(err)
    }

    fn __repr__(&self) -> String {
        format!("Lattice(name={:?}, rank={})", self.inner.name(), self.inner.rank())
    }
}

/// An element of the Griess algebra, tied to the algebra that built it.
#[pyclass(name = "Element", module = "isingvec", frozen)]
struct PyElement {
    algebra: Arc<CoreAlgebra>,
    inner: GriessElement,
}

#[pymethods]
impl PyElement {
    fn to_json(&self) -> String {
        serde_json::to_string(&self.inner.to_json(self.algebra.basis())).expect("serializable element")
    }

    /// Representatives of the classes `{±α}` with nonzero coefficient.
    fn support(&self) -> Vec<Vec<i64>> {
        let reps = self.algebra.basis().x_index();
        ising::support_l4(&self.inner).into_iter().map(|c| reps[c].0.clone()).collect()
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    fn __add__(&self, other: &PyElement) -> PyElement {
        PyElement { algebra: self.algebra.clone(), inner: self.inner.add(&other.inner) }
    }

    fn __eq__(&self, other: &PyElement) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("Element({})", self.to_json())
    }
}

/// The Griess algebra of `V_L^+` for a rootless lattice.
#[pyclass(name = "GriessAlgebra", module = "isingvec", frozen)]
struct PyAlgebra {
    inner: Arc<CoreAlgebra>,
    sublattices: Vec<Sublattice>,
}

impl PyAlgebra {
    fn wrap(&self, e: GriessElement) -> PyElement {
        PyElement { algebra: self.inner.clone(), inner: e }
    }
}

#[pymethods]
impl PyAlgebra {
    #[new]
    fn new(lattice: &PyLattice) -> PyResult<Self> {
        let inner = CoreAlgebra::new(&lattice.inner).map_err(err)?;
        let sublattices = lattice::find_sqrt2e8(&lattice.inner);
        Ok(PyAlgebra { inner: Arc::new(inner), sublattices })
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    #[getter]
    fn e8_sublattice_count(&self) -> usize {
        self.sublattices.len()
    }

    /// `(1/16) α(-1)² 1 ± (1/4) x_α`.
    fn omega_pm(&self, alpha: Vec<i64>, sign: i8) -> PyResult<PyElement> {
        if sign != 1 && sign != -1 {
            return Err(PyValueError::new_err("sign must be +1 or -1"));
        }
        Ok(self.wrap(ising::omega_pm(self.inner.basis(), &alpha, sign).map_err(err)?))
    }

    /// `ω(E, φ)` for the `index`-th √2E8 sublattice and an 8-bit character.
    fn omega_e8(&self, index: usize, phi: u8) -> PyResult<PyElement> {
        let e = self.sublattices.get(index).ok_or_else(|| PyIndexError::new_err("no such sqrt2E8 sublattice"))?;
        Ok(self.wrap(ising::omega_e8(&self.inner, e, phi).map_err(err)?))
    }

    fn element_from_json(&self, text: &str) -> PyResult<PyElement> {
        let j: ElementJson = serde_json::from_str(text).map_err(|e| PyValueError::new_err(e.to_string()))?;
        Ok(self.wrap(GriessElement::from_json(self.inner.basis(), &j).map_err(err)?))
    }

    fn mul(&self, a: &PyElement, b: &PyElement) -> PyElement {
        self.wrap(self.inner.mul(&a.inner, &b.inner))
    }

    /// The invariant form as an exact fraction string.
    fn form(&self, a: &PyElement, b: &PyElement) -> String {
        self.inner.form(&a.inner, &b.inner).to_string()
    }

    fn scale(&self, e: &PyElement, factor: &str) -> PyResult<PyElement> {
        let s: Rational = factor.parse().map_err(|e: isingvec::linalg::ParseRationalError| PyValueError::new_err(e.to_string()))?;
        Ok(self.wrap(e.inner.scale(&s)))
    }

    /// `(passed, failure message or None)`.
    fn is_ising(&self, e: &PyElement) -> (bool, Option<String>) {
        let c = ising::is_ising(&self.inner, &e.inner);
        (c.passed(), c.failure.map(|f| f.to_string()))
    }

    /// Multiplicities of the eigenvalues keyed `"2"`, `"0"`, `"1/2"`, `"1/16"`.
    fn eigen_dims(&self, e: &PyElement) -> PyResult<Vec<(&'static str, usize)>> {
        let d = ising::spectral_data(&self.inner, &e.inner).map_err(err)?.eigen_dims;
        Ok(vec![("2", d.two), ("0", d.zero), ("1/2", d.half), ("1/16", d.sixteenth)])
    }

    /// Nonzero entries `(row, col, "num/den")` of `τ_e`.
    fn tau(&self, e: &PyElement) -> PyResult<Vec<(usize, usize, String)>> {
        let tau = ising::spectral_data(&self.inner, &e.inner).map_err(err)?.tau;
        let mut out: Vec<_> = tau.entries().map(|(i, j, v)| (i, j, v.to_string())).collect();
        out.sort();
        Ok(out)
    }
}

/// Complete classification of a lattice's Ising vectors.
#[pyclass(name = "Classification", module = "isingvec", frozen)]
struct PyClassification {
    inner: CoreClassification,
}

#[pymethods]
impl PyClassification {
    #[getter]
    fn ising_total(&self) -> usize {
        self.inner.ising_total()
    }

    #[getter]
    fn l4_count(&self) -> usize {
        self.inner.l4_count
    }

    #[getter]
    fn e8_sublattice_count(&self) -> usize {
        self.inner.sublattices.len()
    }

    /// Names of checks with at least one failure.
    fn violations(&self) -> Vec<String> {
        self.inner.violations()
    }

    fn report_json(&self) -> String {
        serde_json::to_string(&self.inner.report()).expect("serializable report")
    }

    fn report_tsv(&self) -> String {
        self.inner.report().to_tsv()
    }

    fn __len__(&self) -> usize {
        self.inner.ising_total()
    }
}

#[pyfunction]
fn enumerate_ising(py: Python<'_>, lattice: &PyLattice) -> PyResult<PyClassification> {
    let l = lattice.inner.clone();
    let inner = py.detach(move || classify::enumerate_ising(&l)).map_err(err)?;
    Ok(PyClassification { inner })
}

#[pyfunction]
fn count_formula(py: Python<'_>, lattice: &PyLattice) -> PyResult<usize> {
    lattice.count_formula(py)
}

#[pymodule]
#[pyo3(name = "isingvec")]
fn isingvec_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyLattice>()?;
    m.add_class::<PyAlgebra>()?;
    m.add_class::<PyElement>()?;
    m.add_class::<PyClassification>()?;
    m.add_function(wrap_pyfunction!(enumerate_ising, m)?)?;
    m.add_function(wrap_pyfunction!(count_formula, m)?)?;
    Ok(())
}
