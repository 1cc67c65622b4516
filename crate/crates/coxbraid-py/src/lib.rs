//! Python bindings: the element, dgn, classify and verify reports as Python objects.

use std::sync::Arc;

use coxbraid::braid::{normal_form, BraidWord};
use coxbraid::cli::report::{classify as classify_report, dgn_report, element_report, parse_parabolic};
use coxbraid::cli::suites::{run_suite, SuiteOptions, SUITES};
use coxbraid::cli::{parse_twist, CLASSIFY_RANK_CAP};
use coxbraid::coxeter::GroupElement;
use coxbraid::rootsystem::RootSystem;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use serde::Serialize;

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn root_system(ty: &str) -> PyResult<Arc<RootSystem>> {
    RootSystem::from_str(ty).map_err(value_error)
}

/// Serializes through JSON so Python sees the same structure as the CLI's `--format json`.
fn to_python<'py, T: Serialize>(py: Python<'py>, value: &T) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(value_error)?;
    py.import("json")?.call_method1("loads", (text,))
}

/// Inversion data, convexity, eigenvalues and dominance of one element, e.g. `element("B3", "3 1 2 1")`.
#[pyfunction]
#[pyo3(signature = (ty, word = ""))]
fn element<'py>(py: Python<'py>, ty: &str, word: &str) -> PyResult<Bound<'py, PyAny>> {
    let rs = root_system(ty)?;
    let w = GroupElement::parse(&rs, word).map_err(value_error)?;
    to_python(py, &element_report(&rs, &w))
}

/// Deligne–Garside normal form of the power `braid^power`; factors are separated by `|`.
#[pyfunction]
#[pyo3(signature = (ty, braid, power = 1, left = false))]
fn dgn<'py>(py: Python<'py>, ty: &str, braid: &str, power: usize, left: bool) -> PyResult<Bound<'py, PyAny>> {
    let rs = root_system(ty)?;
    let b = BraidWord::parse(&rs, braid).map_err(value_error)?;
    to_python(py, &dgn_report(&rs, &b, power, left))
}

/// Factor words of the right-greedy normal form, leftmost first.
#[pyfunction]
fn normal_form_words(ty: &str, braid: &str) -> PyResult<(usize, Vec<String>)> {
    let rs = root_system(ty)?;
    let b = BraidWord::parse(&rs, braid).map_err(value_error)?;
    let nf = normal_form(&rs, &b);
    Ok((nf.twist, nf.factors.iter().map(|x| x.word_string(&rs)).collect()))
}

/// One report per conjugacy class (or W_J-orbit when `parabolic` is given) of a coset.
#[pyfunction]
#[pyo3(signature = (ty, twist = "0", parabolic = None))]
fn classify<'py>(py: Python<'py>, ty: &str, twist: &str, parabolic: Option<&str>) -> PyResult<Bound<'py, PyAny>> {
    let rs = root_system(ty)?;
    if rs.rank() > CLASSIFY_RANK_CAP {
        return Err(value_error(format!("rank {} is above the classify cap {CLASSIFY_RANK_CAP}", rs.rank())));
    }
    let t = parse_twist(&rs, twist).map_err(value_error)?;
    let j = match parabolic {
        Some(p) => parse_parabolic(rs.rank(), p).map_err(value_error)?,
        None => rs.full_index(),
    };
    let reports = classify_report(&rs, t, j, usize::MAX).map_err(value_error)?;
    to_python(py, &reports)
}

/// Runs a verification suite; `types` defaults to every small type within `max_rank`.
#[pyfunction]
#[pyo3(signature = (suite, types = None, max_rank = None))]
fn verify<'py>(py: Python<'py>, suite: &str, types: Option<Vec<String>>, max_rank: Option<usize>) -> PyResult<Bound<'py, PyAny>> {
    let report = py.detach(|| run_suite(suite, &SuiteOptions { types, max_rank })).map_err(value_error)?;
    to_python(py, &report)
}

/// Length of an element given by a word.
#[pyfunction]
fn length(ty: &str, word: &str) -> PyResult<usize> {
    let rs = root_system(ty)?;
    Ok(GroupElement::parse(&rs, word).map_err(value_error)?.length())
}

/// Canonical (lexicographically smallest) reduced word of an element.
#[pyfunction]
fn reduced_word(ty: &str, word: &str) -> PyResult<String> {
    let rs = root_system(ty)?;
    Ok(GroupElement::parse(&rs, word).map_err(value_error)?.word_string(&rs))
}

#[pymodule]
fn coxbraid_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(element, m)?)?;
    m.add_function(wrap_pyfunction!(dgn, m)?)?;
    m.add_function(wrap_pyfunction!(normal_form_words, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(length, m)?)?;
    m.add_function(wrap_pyfunction!(reduced_word, m)?)?;
    m.add("SUITES", SUITES.to_vec())?;
    Ok(())
}
