//! Python bindings. Inputs and outputs cross the boundary as JSON strings
//! in the same schemas the command-line tool uses, so the module stays a
//! thin shim over the library.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use facschur::basis;
use facschur::lr::{enumerate_lr_tableaux, lr_coefficient, lr_expand};
use facschur::{Error, MultiShape, Partition};

fn parse_json(s: &str) -> Result<serde_json::Value, Error> {
    serde_json::from_str(s).map_err(|e| Error::BadJson(e.to_string()))
}

fn parse_shape(s: &str) -> Result<MultiShape, Error> {
    let v = parse_json(s)?;
    let arr = v
        .as_array()
        .ok_or_else(|| Error::BadJson("shape: expected a list of partitions".to_string()))?;
    let diagrams = arr
        .iter()
        .map(Partition::from_json)
        .collect::<Result<Vec<_>, _>>()?;
    Ok(MultiShape::new(diagrams))
}

fn parse_partition(s: &str) -> Result<Partition, Error> {
    Partition::from_json(&parse_json(s)?)
}

/// The full expansion table as a JSON string.
pub fn expand_json(shape: &str, n: usize) -> Result<String, Error> {
    Ok(lr_expand(&parse_shape(shape)?, n)?.to_json().to_string())
}

/// One coefficient as a polynomial JSON string.
pub fn coeff_json(shape: &str, mu: &str, n: usize) -> Result<String, Error> {
    let mu = parse_partition(mu)?;
    Ok(lr_coefficient(&parse_shape(shape)?, &mu, n)?.to_json().to_string())
}

/// One coefficient rendered as plain text, e.g. "y1_1 + y2_1".
pub fn coeff_text(shape: &str, mu: &str, n: usize) -> Result<String, Error> {
    let mu = parse_partition(mu)?;
    Ok(lr_coefficient(&parse_shape(shape)?, &mu, n)?.to_string())
}

/// The fillings behind one coefficient, each as a JSON string.
pub fn lr_tableaux_json(shape: &str, mu: &str, n: usize) -> Result<Vec<String>, Error> {
    let mu = parse_partition(mu)?;
    let list = enumerate_lr_tableaux(&parse_shape(shape)?, &mu, n)?;
    Ok(list.iter().map(|t| t.to_json().to_string()).collect())
}

/// Rectangle complement of a partition inside n rows and m columns.
pub fn complement_json(lambda: &str, n: usize, m: u32) -> Result<String, Error> {
    let lambda = parse_partition(lambda)?;
    Ok(basis::complement(&lambda, n, m)?.to_json().to_string())
}

fn value_error(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

#[pyfunction]
#[pyo3(name = "expand")]
fn py_expand(shape: &str, n: usize) -> PyResult<String> {
    expand_json(shape, n).map_err(value_error)
}

#[pyfunction]
#[pyo3(name = "coeff")]
fn py_coeff(shape: &str, mu: &str, n: usize) -> PyResult<String> {
    coeff_json(shape, mu, n).map_err(value_error)
}

#[pyfunction]
#[pyo3(name = "coeff_text")]
fn py_coeff_text(shape: &str, mu: &str, n: usize) -> PyResult<String> {
    coeff_text(shape, mu, n).map_err(value_error)
}

#[pyfunction]
#[pyo3(name = "lr_tableaux")]
fn py_lr_tableaux(shape: &str, mu: &str, n: usize) -> PyResult<Vec<String>> {
    lr_tableaux_json(shape, mu, n).map_err(value_error)
}

#[pyfunction]
#[pyo3(name = "complement")]
fn py_complement(lambda: &str, n: usize, m: u32) -> PyResult<String> {
    complement_json(lambda, n, m).map_err(value_error)
}

#[pymodule]
fn facschur_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(py_expand, m)?)?;
    m.add_function(wrap_pyfunction!(py_coeff, m)?)?;
    m.add_function(wrap_pyfunction!(py_coeff_text, m)?)?;
    m.add_function(wrap_pyfunction!(py_lr_tableaux, m)?)?;
    m.add_function(wrap_pyfunction!(py_complement, m)?)?;
    Ok(())
}
