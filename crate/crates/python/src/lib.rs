use std::path::Path;

use helicity_core::algebra::coeff::to_f64;
use helicity_core::algebra::json::{from_json_str, to_json};
use helicity_core::algebra::{Multivector, Signature};
use helicity_core::checks::{run_suite, DEFAULT_SEED};
use helicity_core::decomposition::{self, decompose_report, Side};
use helicity_core::field::{run_field_task, wave_study, FieldGrid, FieldTask, Helicity};
use helicity_core::matrix::{self, BasisTag, Matrix, MatrixRep};
use helicity_core::symbolic;
use num_complex::Complex64;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn err(e: helicity_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_side(s: &str) -> PyResult<Side> {
    match s {
        "+" | "plus" => Ok(Side::Plus),
        "-" | "minus" => Ok(Side::Minus),
        other => Err(PyValueError::new_err(format!(
            "side must be '+' or '-', got {other:?}"
        ))),
    }
}

fn signature(p: usize, q: usize, complex: bool) -> PyResult<Signature> {
    Signature::new(p, q, complex).map_err(err)
}

/// Exact multivector with Gaussian-rational coefficients.
#[pyclass(
    name = "Multivector",
    module = "helicity_algebra",
    frozen,
    eq,
    skip_from_py_object
)]
#[derive(Clone, PartialEq)]
struct PyMultivector {
    inner: Multivector,
}

impl From<Multivector> for PyMultivector {
    fn from(inner: Multivector) -> Self {
        Self { inner }
    }
}

#[pymethods]
impl PyMultivector {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        from_json_str(text).map(Self::from).map_err(err)
    }

    #[staticmethod]
    #[pyo3(signature = (p, q = 0, complex = true))]
    fn one(p: usize, q: usize, complex: bool) -> PyResult<Self> {
        Ok(Multivector::one(signature(p, q, complex)?).into())
    }

    #[staticmethod]
    #[pyo3(signature = (i, p, q = 0, complex = true))]
    fn generator(i: usize, p: usize, q: usize, complex: bool) -> PyResult<Self> {
        Multivector::generator(signature(p, q, complex)?, i)
            .map(Self::from)
            .map_err(err)
    }

    #[staticmethod]
    #[pyo3(signature = (p, q = 0, complex = true))]
    fn volume(p: usize, q: usize, complex: bool) -> PyResult<Self> {
        Ok(Multivector::volume_element(signature(p, q, complex)?).into())
    }

    fn to_json(&self) -> String {
        to_json(&self.inner).to_string()
    }

    /// `(p, q, complex)`.
    #[getter]
    fn signature(&self) -> (u8, u8, bool) {
        let s = self.inner.signature();
        (s.p, s.q, s.complexified)
    }

    /// Coefficient of the blade with the given generator indices.
    fn coefficient(&self, blade: Vec<usize>) -> PyResult<Complex64> {
        self.inner
            .coefficient_of(&blade)
            .map(|c| to_f64(&c))
            .map_err(err)
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    fn grade(&self, k: usize) -> Self {
        self.inner.grade_project(k).into()
    }

    fn reversion(&self) -> Self {
        self.inner.reversion().into()
    }

    fn grade_involution(&self) -> Self {
        self.inner.grade_involution().into()
    }

    fn clifford_conjugate(&self) -> Self {
        self.inner.clifford_conjugate().into()
    }

    fn pseudo_conjugate(&self) -> Self {
        self.inner.pseudo_conjugate().into()
    }

    fn __mul__(&self, other: &Self) -> PyResult<Self> {
        self.inner
            .geometric_product(&other.inner)
            .map(Self::from)
            .map_err(err)
    }

    fn __add__(&self, other: &Self) -> PyResult<Self> {
        self.inner
            .try_add(&other.inner)
            .map(Self::from)
            .map_err(err)
    }

    fn __sub__(&self, other: &Self) -> PyResult<Self> {
        self.inner
            .try_sub(&other.inner)
            .map(Self::from)
            .map_err(err)
    }

    fn __neg__(&self) -> Self {
        self.inner.negated().into()
    }

    fn __repr__(&self) -> String {
        format!("Multivector({})", self.inner)
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }
}

/// `(λ₊, λ₋)` of `C_n` for odd `n`.
#[pyfunction]
fn central_idempotents(n: usize) -> PyResult<(PyMultivector, PyMultivector)> {
    let pair = decomposition::central_idempotents(n).map_err(err)?;
    Ok((pair.lambda_plus.into(), pair.lambda_minus.into()))
}

/// JSON report of the idempotents, their laws and conjugation behaviour.
#[pyfunction]
fn decompose(n: usize) -> PyResult<String> {
    decompose_report(n).map(|v| v.to_string()).map_err(err)
}

#[pyfunction]
fn project(x: &PyMultivector, side: &str) -> PyResult<PyMultivector> {
    decomposition::project(&x.inner, parse_side(side)?)
        .map(Into::into)
        .map_err(err)
}

#[pyfunction]
fn quotient_map(x: &PyMultivector, side: &str) -> PyResult<PyMultivector> {
    decomposition::quotient_map(&x.inner, parse_side(side)?)
        .map(Into::into)
        .map_err(err)
}

#[pyfunction]
fn lift(y: &PyMultivector, n: usize, side: &str) -> PyResult<PyMultivector> {
    decomposition::lift(&y.inner, n, parse_side(side)?)
        .map(Into::into)
        .map_err(err)
}

fn parse_basis(name: &str) -> PyResult<BasisTag> {
    match name {
        "pauli" => Ok(BasisTag::Pauli),
        "gamma" => Ok(BasisTag::Gamma),
        other => Err(PyValueError::new_err(format!(
            "basis must be pauli or gamma, got {other:?}"
        ))),
    }
}

fn complex_rows(m: &Matrix) -> Vec<Vec<Complex64>> {
    m.row_vecs()
        .iter()
        .map(|r| r.iter().map(to_f64).collect())
        .collect()
}

/// Matrix image as nested lists of Python complex numbers.
#[pyfunction]
#[pyo3(signature = (x, basis = "gamma"))]
fn rep(x: &PyMultivector, basis: &str) -> PyResult<Vec<Vec<Complex64>>> {
    let m = match parse_basis(basis)? {
        BasisTag::Pauli => matrix::pauli_rep(&x.inner),
        BasisTag::Gamma => matrix::gamma_rep(&x.inner),
    }
    .map_err(err)?;
    Ok(complex_rows(&m))
}

/// Matrix image as exact JSON.
#[pyfunction]
#[pyo3(signature = (x, basis = "gamma"))]
fn rep_json(x: &PyMultivector, basis: &str) -> PyResult<String> {
    MatrixRep::of(&x.inner, parse_basis(basis)?)
        .map(|r| r.to_json().to_string())
        .map_err(err)
}

/// The eight Weyl spinors of the Dirac–Hestenes field with components `φ₁..φ₄`.
#[pyfunction]
fn weyl_split(phi: [Complex64; 4]) -> Vec<[Complex64; 2]> {
    matrix::psi_formulas(&phi).to_vec()
}

#[pyfunction]
#[pyo3(signature = (target, format = "text"))]
fn derive(target: &str, format: &str) -> PyResult<String> {
    let d = symbolic::derive(target).map_err(err)?;
    match format {
        "text" => Ok(d.render_text()),
        "json" => Ok(d.to_json().to_string()),
        other => Err(PyValueError::new_err(format!(
            "format must be text or json, got {other:?}"
        ))),
    }
}

/// JSON pass/fail report of an invariant suite.
#[pyfunction]
#[pyo3(signature = (suite = "all", seed = DEFAULT_SEED))]
fn check(py: Python<'_>, suite: &str, seed: u64) -> PyResult<String> {
    py.detach(|| run_suite(suite, seed))
        .map(|r| r.to_json().to_string())
        .map_err(err)
}

/// JSON residual summary of a grid file for the `em` or `maxwell` task.
#[pyfunction]
fn field(py: Python<'_>, input: &str, task: &str) -> PyResult<String> {
    let task = FieldTask::parse(task).map_err(err)?;
    py.detach(|| {
        let grid = FieldGrid::read(Path::new(input))?;
        run_field_task(&grid, task)
    })
    .map(|(summary, _)| summary.to_string())
    .map_err(err)
}

/// JSON refinement table for a circular plane wave.
#[pyfunction]
#[pyo3(signature = (k, helicity, h = 0.25, refine = 3))]
fn wave(py: Python<'_>, k: [f64; 3], helicity: &str, h: f64, refine: usize) -> PyResult<String> {
    let helicity = Helicity::parse(helicity).map_err(err)?;
    py.detach(|| wave_study(k, helicity, h, refine))
        .map(|s| s.to_json().to_string())
        .map_err(err)
}

#[pymodule]
fn helicity_algebra(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyMultivector>()?;
    m.add_function(wrap_pyfunction!(central_idempotents, m)?)?;
    m.add_function(wrap_pyfunction!(decompose, m)?)?;
    m.add_function(wrap_pyfunction!(project, m)?)?;
    m.add_function(wrap_pyfunction!(quotient_map, m)?)?;
    m.add_function(wrap_pyfunction!(lift, m)?)?;
    m.add_function(wrap_pyfunction!(rep, m)?)?;
    m.add_function(wrap_pyfunction!(rep_json, m)?)?;
    m.add_function(wrap_pyfunction!(weyl_split, m)?)?;
    m.add_function(wrap_pyfunction!(derive, m)?)?;
    m.add_function(wrap_pyfunction!(check, m)?)?;
    m.add_function(wrap_pyfunction!(field, m)?)?;
    m.add_function(wrap_pyfunction!(wave, m)?)?;
    Ok(())
}
