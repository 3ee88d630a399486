//! Python bindings. Braids are passed as `(text, strands)`; structured
//! results come back as JSON text with the same layout as the CLI.

use num_bigint::BigInt;
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use platlink::cover::h1_order as core_h1_order;
use platlink::diagram::{export as core_export, ExportFormat};
use platlink::dynamics::{entropy as core_entropy, estimate_entropy, EntropyOptions};
use platlink::family::generate_family;
use platlink::fishnet::{fishnet_parse, jm_distance as core_jm_distance};
use platlink::plat::summarize;
use platlink::report::analyze;
use platlink::{canonical_projection, knot_powers as core_knot_powers, parse_braid, permutation_order, BraidWord, Error};

create_exception!(platlink_py, PlatlinkError, PyValueError);

fn py_err(e: Error) -> PyErr {
    PlatlinkError::new_err(format!("{}: {}", e.code(), e))
}

fn plat(braid: &str, strands: usize) -> PyResult<BraidWord> {
    parse_braid(braid, strands).map_err(py_err)
}

/// Final positions of the punctures, 1-based.
#[pyfunction]
pub fn permutation(braid: &str, strands: usize) -> PyResult<Vec<usize>> {
    let w = BraidWord::parse(braid, strands).map_err(py_err)?;
    Ok(canonical_projection(&w).images().to_vec())
}

#[pyfunction]
pub fn order(braid: &str, strands: usize) -> PyResult<u64> {
    let w = BraidWord::parse(braid, strands).map_err(py_err)?;
    Ok(permutation_order(&canonical_projection(&w)))
}

/// `(components, bridges per component)` of the plat closure.
#[pyfunction]
pub fn components(braid: &str, strands: usize) -> PyResult<(usize, Vec<usize>)> {
    let s = summarize(&plat(braid, strands)?);
    Ok((s.components, s.bridges_per_component))
}

#[pyfunction]
pub fn knot_powers(braid: &str, strands: usize, max_power: u64) -> PyResult<Vec<u64>> {
    Ok(core_knot_powers(&plat(braid, strands)?, max_power))
}

/// Topological entropy; raises when the estimate does not settle.
#[pyfunction]
#[pyo3(signature = (braid, strands, tol = 1e-4, max_iter = 10_000))]
pub fn entropy(braid: &str, strands: usize, tol: f64, max_iter: usize) -> PyResult<f64> {
    let w = BraidWord::parse(braid, strands).map_err(py_err)?;
    if strands < 3 {
        return Ok(estimate_entropy(&w, &EntropyOptions { tol, max_iter }).value);
    }
    core_entropy(&w, tol, max_iter).map_err(py_err)
}

#[pyfunction]
pub fn jm_distance(braid: &str, strands: usize) -> PyResult<u64> {
    let g = fishnet_parse(&plat(braid, strands)?).map_err(py_err)?;
    core_jm_distance(&g).map_err(py_err)
}

/// Order of the first homology of the double branched cover, 0 if infinite.
#[pyfunction]
pub fn h1_order(braid: &str, strands: usize) -> PyResult<BigInt> {
    core_h1_order(&plat(braid, strands)?).map_err(py_err)
}

/// Diagram text in `pd`, `gauss` or `svg` format.
#[pyfunction]
pub fn export(braid: &str, strands: usize, format: &str) -> PyResult<String> {
    let f: ExportFormat = format.parse().map_err(py_err)?;
    core_export(&plat(braid, strands)?, f).map_err(py_err)
}

#[pyfunction]
#[pyo3(signature = (braid, strands, max_power = 25, assume_generic = false))]
pub fn family_json(braid: &str, strands: usize, max_power: u64, assume_generic: bool) -> PyResult<String> {
    let r = generate_family(&plat(braid, strands)?, max_power, assume_generic).map_err(py_err)?;
    Ok(serde_json::to_string(&r).expect("reports serialise"))
}

#[pyfunction]
pub fn report_json(braid: &str, strands: usize) -> PyResult<String> {
    let r = analyze(&plat(braid, strands)?).map_err(py_err)?;
    Ok(serde_json::to_string(&r).expect("reports serialise"))
}

#[pymodule]
fn platlink_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("PlatlinkError", m.py().get_type::<PlatlinkError>())?;
    m.add_function(wrap_pyfunction!(permutation, m)?)?;
    m.add_function(wrap_pyfunction!(order, m)?)?;
    m.add_function(wrap_pyfunction!(components, m)?)?;
    m.add_function(wrap_pyfunction!(knot_powers, m)?)?;
    m.add_function(wrap_pyfunction!(entropy, m)?)?;
    m.add_function(wrap_pyfunction!(jm_distance, m)?)?;
    m.add_function(wrap_pyfunction!(h1_order, m)?)?;
    m.add_function(wrap_pyfunction!(export, m)?)?;
    m.add_function(wrap_pyfunction!(family_json, m)?)?;
    m.add_function(wrap_pyfunction!(report_json, m)?)?;
    Ok(())
}
