use pyo3::exceptions::{PyKeyError, PyOverflowError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyString;
use serde::Serialize;

use seaweed::{formulas, kirillov, reduction, render, search, Composition, Error};

fn to_py(e: Error) -> PyErr {
    match e {
        Error::UnknownCheck(name) => PyKeyError::new_err(name),
        Error::Overflow(_) => PyOverflowError::new_err(e.to_string()),
        other => PyValueError::new_err(other.to_string()),
    }
}

/// Accepts `"2,4,3"` or `[2, 4, 3]`.
fn composition(obj: &Bound<'_, PyAny>) -> PyResult<Composition> {
    if let Ok(s) = obj.cast::<PyString>() {
        return s.to_str()?.parse().map_err(to_py);
    }
    let parts: Vec<u64> = obj.extract()?;
    Composition::normalize(&parts).map_err(to_py)
}

fn pair(
    a: &Bound<'_, PyAny>,
    b: Option<&Bound<'_, PyAny>>,
) -> PyResult<(Composition, Composition)> {
    let a = composition(a)?;
    let b = match b {
        Some(b) => composition(b)?,
        None => Composition::single(a.n()).map_err(to_py)?,
    };
    Ok((a, b))
}

/// Converts through JSON so Python sees plain dicts and lists.
fn to_object<T: Serialize>(py: Python<'_>, value: &T) -> PyResult<Py<PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| PyValueError::new_err(e.to_string()))?;
    Ok(py.import("json")?.call_method1("loads", (text,))?.unbind())
}

#[pyfunction]
#[pyo3(signature = (a, b=None))]
fn index(a: &Bound<'_, PyAny>, b: Option<&Bound<'_, PyAny>>) -> PyResult<u64> {
    let (a, b) = pair(a, b)?;
    Ok(reduction::index_of_seaweed(&a, &b).map_err(to_py)?.index)
}

#[pyfunction]
#[pyo3(signature = (a, b=None))]
fn index_sl(a: &Bound<'_, PyAny>, b: Option<&Bound<'_, PyAny>>) -> PyResult<u64> {
    let (a, b) = pair(a, b)?;
    reduction::index_sl(&a, &b).map_err(to_py)
}

/// Full report from both engines as a dict.
#[pyfunction]
#[pyo3(signature = (a, b=None))]
fn index_report(
    py: Python<'_>,
    a: &Bound<'_, PyAny>,
    b: Option<&Bound<'_, PyAny>>,
) -> PyResult<Py<PyAny>> {
    let (a, b) = pair(a, b)?;
    to_object(py, &reduction::index_of_seaweed(&a, &b).map_err(to_py)?)
}

/// Reduction trace of `p(c)` as a dict with `steps` and `index`.
#[pyfunction]
#[pyo3(signature = (c, shortcut=false))]
fn reduce(py: Python<'_>, c: &Bound<'_, PyAny>, shortcut: bool) -> PyResult<Py<PyAny>> {
    let c = composition(c)?;
    let strategy = if shortcut {
        reduction::Strategy::Shortcut
    } else {
        reduction::Strategy::Strict
    };
    to_object(py, &reduction::index_via_reduction_with(&c, strategy))
}

#[pyfunction]
#[pyo3(signature = (a, b=None, trials=5, seed=0))]
fn index_via_form(
    a: &Bound<'_, PyAny>,
    b: Option<&Bound<'_, PyAny>>,
    trials: u32,
    seed: u64,
) -> PyResult<u64> {
    let (a, b) = pair(a, b)?;
    kirillov::index_via_form(&a, &b, trials, seed).map_err(to_py)
}

#[pyclass(name = "Meander", frozen)]
struct PyMeander {
    inner: seaweed::Meander,
}

#[pymethods]
impl PyMeander {
    #[new]
    #[pyo3(signature = (a, b=None))]
    fn new(a: &Bound<'_, PyAny>, b: Option<&Bound<'_, PyAny>>) -> PyResult<Self> {
        let (a, b) = pair(a, b)?;
        Ok(Self {
            inner: seaweed::Meander::new(&a, &b).map_err(to_py)?,
        })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    fn index(&self) -> u64 {
        self.inner.index()
    }

    /// `(cycles, segments)`.
    fn counts(&self) -> (u64, u64) {
        self.inner.cycle_segment_counts()
    }

    fn lower(&self) -> Vec<(usize, usize)> {
        self.inner.lower().iter().map(|a| (a.u, a.v)).collect()
    }

    fn upper(&self) -> Vec<(usize, usize)> {
        self.inner.upper().iter().map(|a| (a.u, a.v)).collect()
    }

    fn components(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        to_object(py, &self.inner.components())
    }

    fn maximal_cycles(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        to_object(py, &self.inner.report().maximal_cycles)
    }

    fn signature(&self) -> Vec<u64> {
        self.inner.equivalence_signature()
    }

    fn ascii(&self) -> PyResult<String> {
        render::render_ascii(&self.inner).map_err(to_py)
    }

    #[pyo3(signature = (highlight=None))]
    fn svg(&self, highlight: Option<usize>) -> PyResult<String> {
        render::render_svg(&self.inner, highlight).map_err(to_py)
    }

    fn to_json(&self) -> PyResult<String> {
        render::render_json(&self.inner).map_err(to_py)
    }

    fn __repr__(&self) -> String {
        format!("Meander({}|{})", self.inner.a(), self.inner.b())
    }
}

#[pyfunction]
fn index_two(a1: u64, a2: u64) -> u64 {
    formulas::index_two(a1, a2)
}

#[pyfunction]
fn index_three(a1: u64, a2: u64, a3: u64) -> u64 {
    formulas::index_three(a1, a2, a3)
}

#[pyfunction]
fn index_aaab(a: u64, b: u64) -> u64 {
    formulas::index_aaab(a, b)
}

/// `(value, case number)` or `None` when no case applies.
#[pyfunction]
fn index_four(a: u64, b: u64, c: u64, d: u64) -> Option<(u64, u8)> {
    formulas::index_four(a, b, c, d).map(|(v, case)| (v, case.number()))
}

#[pyfunction]
fn index_run(a: u64, m: u64, b: u64) -> u64 {
    formulas::index_run(a, m, b)
}

#[pyfunction]
fn is_frobenius_run(a: u64, m: u64, b: u64) -> bool {
    formulas::is_frobenius_run(a, m, b)
}

#[pyfunction]
fn index_geometric(a: u64, k: u32) -> PyResult<u64> {
    formulas::index_geometric(a, k).map_err(to_py)
}

#[pyfunction]
fn compositions(n: u64) -> PyResult<Vec<Vec<u64>>> {
    if n > 24 {
        return Err(PyValueError::new_err("n must be at most 24"));
    }
    Ok(search::enumerate_compositions(n)
        .map(|c| c.parts().to_vec())
        .collect())
}

#[pyfunction]
#[pyo3(signature = (n, sl=true))]
fn frobenius_seaweeds(n: u64, sl: bool) -> PyResult<Vec<(String, String)>> {
    Ok(search::find_frobenius_seaweeds(n, sl)
        .map_err(to_py)?
        .into_iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect())
}

#[pyfunction]
fn check_names() -> Vec<&'static str> {
    search::checks().iter().map(|c| c.name).collect()
}

/// Report dict with `name`, `parameter_space`, `instances`, `failures`.
#[pyfunction]
#[pyo3(signature = (name, bound=None))]
fn check_identity(py: Python<'_>, name: &str, bound: Option<u64>) -> PyResult<Py<PyAny>> {
    let check = search::find_check(name).map_err(to_py)?;
    let report = py.detach(|| check.run(bound.unwrap_or(check.default_bound)));
    to_object(py, &report)
}

#[pymodule]
pub fn seaweed_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyMeander>()?;
    m.add_function(wrap_pyfunction!(index, m)?)?;
    m.add_function(wrap_pyfunction!(index_sl, m)?)?;
    m.add_function(wrap_pyfunction!(index_report, m)?)?;
    m.add_function(wrap_pyfunction!(reduce, m)?)?;
    m.add_function(wrap_pyfunction!(index_via_form, m)?)?;
    m.add_function(wrap_pyfunction!(index_two, m)?)?;
    m.add_function(wrap_pyfunction!(index_three, m)?)?;
    m.add_function(wrap_pyfunction!(index_aaab, m)?)?;
    m.add_function(wrap_pyfunction!(index_four, m)?)?;
    m.add_function(wrap_pyfunction!(index_run, m)?)?;
    m.add_function(wrap_pyfunction!(is_frobenius_run, m)?)?;
    m.add_function(wrap_pyfunction!(index_geometric, m)?)?;
    m.add_function(wrap_pyfunction!(compositions, m)?)?;
    m.add_function(wrap_pyfunction!(frobenius_seaweeds, m)?)?;
    m.add_function(wrap_pyfunction!(check_names, m)?)?;
    m.add_function(wrap_pyfunction!(check_identity, m)?)?;
    Ok(())
}
