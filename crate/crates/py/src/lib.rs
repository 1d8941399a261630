//! Python bindings: weights and characters cross the boundary as symbol
//! strings and lists of `(weight, multiplicity)` pairs.

use g3tilt::blocks;
use g3tilt::characters::VermaSum;
use g3tilt::osp::{table_osp32, Osp32, OspWeight};
use g3tilt::system::G3;
use g3tilt::tables::{tilting_character, TableValue};
use g3tilt::translation::derive_tilting;
use g3tilt::weights::casimir_scalar;
use g3tilt::Weight;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

type Terms = Vec<(String, i64)>;
type BlockTuple = (String, Option<String>, Option<String>, String, String);

fn weight(s: &str) -> PyResult<Weight> {
    s.parse().map_err(|e: g3tilt::Error| PyValueError::new_err(e.to_string()))
}

fn osp_weight(s: &str) -> PyResult<OspWeight> {
    s.parse().map_err(|e: g3tilt::Error| PyValueError::new_err(e.to_string()))
}

fn terms<W: Ord + Copy + std::fmt::Display>(ch: &VermaSum<W>) -> Terms {
    let mut v: Terms = ch.iter().map(|(w, c)| (w.to_string(), c)).collect();
    v.reverse();
    v
}

fn check_system(system: &str) -> PyResult<bool> {
    match system {
        "g3" => Ok(true),
        "osp32" => Ok(false),
        _ => Err(PyValueError::new_err(format!("unknown system {system:?}"))),
    }
}

/// Block descriptor as `(family, case, ell, canonical_rep, equivalence_label)`.
#[pyfunction]
fn classify(w: &str) -> PyResult<BlockTuple> {
    let id = blocks::classify(&weight(w)?);
    Ok((
        id.family.tag().to_string(),
        id.family.case(),
        id.family.ell().map(|r| r.to_string()),
        id.canonical_rep.to_string(),
        id.equivalence_label,
    ))
}

#[pyfunction]
fn linked(a: &str, b: &str) -> PyResult<bool> {
    Ok(blocks::linked(&weight(a)?, &weight(b)?))
}

#[pyfunction]
fn casimir(w: &str) -> PyResult<String> {
    Ok(casimir_scalar(&weight(w)?).to_string())
}

#[pyfunction]
#[pyo3(signature = (w, kmin = -2, kmax = 2))]
fn block_members(w: &str, kmin: i64, kmax: i64) -> PyResult<Vec<String>> {
    let ms = blocks::block_members(&weight(w)?, kmin..=kmax).map_err(|e| PyValueError::new_err(e.to_string()))?;
    Ok(ms.iter().map(|m| m.to_string()).collect())
}

/// Closed-form tilting character; raises `RuntimeError` with the label when
/// the block is tabulated elsewhere.
#[pyfunction]
#[pyo3(signature = (w, system = "g3"))]
fn tilting(w: &str, system: &str) -> PyResult<Terms> {
    if !check_system(system)? {
        return Ok(terms(&table_osp32(&osp_weight(w)?)));
    }
    match tilting_character(&weight(w)?) {
        TableValue::Character { terms: t, .. } => Ok(terms(&t)),
        TableValue::Label { label } => Err(PyRuntimeError::new_err(label)),
    }
}

/// Character derived by translation, with the path taken.
#[pyfunction]
#[pyo3(signature = (w, system = "g3"))]
fn derive(w: &str, system: &str) -> PyResult<(Terms, String)> {
    let err = |e: g3tilt::Error| PyRuntimeError::new_err(e.to_string());
    if check_system(system)? {
        let d = derive_tilting::<G3>(&weight(w)?).map_err(err)?;
        Ok((terms(&d.character), d.path.to_string()))
    } else {
        let d = derive_tilting::<Osp32>(&osp_weight(w)?).map_err(err)?;
        Ok((terms(&d.character), d.path.to_string()))
    }
}

#[pymodule]
pub fn g3tilt_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(linked, m)?)?;
    m.add_function(wrap_pyfunction!(casimir, m)?)?;
    m.add_function(wrap_pyfunction!(block_members, m)?)?;
    m.add_function(wrap_pyfunction!(tilting, m)?)?;
    m.add_function(wrap_pyfunction!(derive, m)?)?;
    Ok(())
}
