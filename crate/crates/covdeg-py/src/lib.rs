//! Python bindings: thin wrappers over the covdeg library with names kept
//! identical to the Rust API. All domain errors surface as ValueError.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use covdeg::{Block, Universe};

fn err(e: covdeg::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn names(u: &Universe, b: Block) -> Vec<String> {
    u.block_names(b)
}

fn rows(f: &covdeg::SetFamily) -> Vec<Vec<String>> {
    f.block_name_lists()
}

/// A covering of a finite universe.
#[pyclass(frozen)]
struct Covering {
    inner: covdeg::Covering,
}

#[pymethods]
impl Covering {
    /// Build from blocks of element names; the universe defaults to the
    /// names in order of first appearance.
    #[new]
    #[pyo3(signature = (blocks, universe=None))]
    fn new(blocks: Vec<Vec<String>>, universe: Option<Vec<String>>) -> PyResult<Self> {
        let u = match universe {
            Some(list) => Universe::new(list).map_err(err)?,
            None => covdeg::infer_universe(&blocks).map_err(err)?,
        };
        let mut masks = Vec::with_capacity(blocks.len());
        for row in &blocks {
            masks.push(
                u.block_from_names(row.iter().map(String::as_str))
                    .map_err(err)?,
            );
        }
        Ok(Covering {
            inner: covdeg::Covering::new(u, masks).map_err(err)?,
        })
    }

    /// Parse the text or JSON file format.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(Covering {
            inner: covdeg::parse_covering(text).map_err(err)?,
        })
    }

    fn universe(&self) -> Vec<String> {
        self.inner.universe().elements().to_vec()
    }

    fn blocks(&self) -> Vec<Vec<String>> {
        rows(self.inner.as_family())
    }

    fn render(&self) -> String {
        covdeg::render_covering(&self.inner)
    }

    fn render_json(&self) -> String {
        covdeg::render_covering_json(&self.inner)
    }

    fn neighborhood(&self, x: &str) -> PyResult<Vec<String>> {
        let b = covdeg::neighborhood(&self.inner, x).map_err(err)?;
        Ok(names(self.inner.universe(), b))
    }

    /// (element, neighborhood) pairs in universe order.
    fn neighborhoods(&self) -> Vec<(String, Vec<String>)> {
        let map = covdeg::neighborhoods(&self.inner);
        let u = self.inner.universe();
        map.blocks()
            .iter()
            .enumerate()
            .map(|(i, &b)| (u.name(i).to_owned(), names(u, b)))
            .collect()
    }

    fn cov(&self) -> Covering {
        Covering {
            inner: covdeg::cov(&self.inner),
        }
    }

    /// The induced relation as ordered pairs of element names.
    fn relation(&self) -> Vec<(String, String)> {
        covdeg::relation(&self.inner).pair_names()
    }

    fn repeat_degree(&self, subset: Vec<String>) -> PyResult<u64> {
        let b = self
            .inner
            .universe()
            .block_from_names(subset.iter().map(String::as_str))
            .map_err(err)?;
        covdeg::repeat_degree(&self.inner, b).map_err(err)
    }

    fn p_set(&self, x: &str) -> PyResult<Vec<String>> {
        let b = covdeg::p_set(&self.inner, x).map_err(err)?;
        Ok(names(self.inner.universe(), b))
    }

    fn gamma(&self, x: &str) -> PyResult<Option<Vec<String>>> {
        let g = covdeg::gamma(&self.inner, x).map_err(err)?;
        Ok(g.map(|b| names(self.inner.universe(), b)))
    }

    fn reduct(&self) -> ReductReport {
        let report = covdeg::reduct(&self.inner);
        ReductReport {
            removed: report
                .removed
                .iter()
                .map(|&b| names(self.inner.universe(), b))
                .collect(),
            cov_equals_reduct: report.cov_equals_reduct,
            gamma_witness: report.gamma_witness,
            reduct: report.reduct,
        }
    }

    /// Verdict plus a witness element when the answer is no.
    fn cov_is_reduct(&self) -> (bool, Option<String>) {
        covdeg::cov_is_reduct(&self.inner)
    }

    /// One verdict for all three equivalences (relation, cov, P sets).
    fn same(&self, other: &Covering) -> PyResult<bool> {
        covdeg::same_relation(&self.inner, &other.inner).map_err(err)
    }

    /// Equality as families, tolerant of element order differences.
    fn equals(&self, other: &Covering) -> PyResult<bool> {
        covdeg::canonical_equal(&self.inner, &other.inner).map_err(err)
    }

    #[pyo3(signature = (window=None))]
    fn degree_table(&self, window: Option<Vec<usize>>) -> PyResult<DegreeTable> {
        let n = self.inner.universe().len();
        let window = window.unwrap_or_else(|| (0..=n).collect());
        Ok(DegreeTable {
            inner: covdeg::degree_table(&self.inner, &window).map_err(err)?,
        })
    }

    fn __repr__(&self) -> String {
        format!("{:?}", self.inner)
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }
}

/// Repeat degrees of every subset whose size falls in a window.
#[pyclass(frozen)]
struct DegreeTable {
    inner: covdeg::DegreeTable,
}

#[pymethods]
impl DegreeTable {
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(DegreeTable {
            inner: covdeg::parse_degree_table(text).map_err(err)?,
        })
    }

    fn universe(&self) -> Vec<String> {
        self.inner.universe().elements().to_vec()
    }

    fn window(&self) -> Vec<usize> {
        self.inner.window().to_vec()
    }

    fn entries(&self) -> Vec<(Vec<String>, u64)> {
        self.inner
            .entries()
            .iter()
            .map(|&(b, v)| (names(self.inner.universe(), b), v))
            .collect()
    }

    fn get(&self, subset: Vec<String>) -> PyResult<Option<u64>> {
        let b = self
            .inner
            .universe()
            .block_from_names(subset.iter().map(String::as_str))
            .map_err(err)?;
        Ok(self.inner.get(b))
    }

    fn render(&self) -> String {
        covdeg::render_degree_table(&self.inner)
    }

    fn equals(&self, other: &DegreeTable) -> PyResult<bool> {
        covdeg::tables_equal(&self.inner, &other.inner).map_err(err)
    }

    fn __repr__(&self) -> String {
        format!(
            "DegreeTable(n={}, window={:?}, entries={})",
            self.inner.universe().len(),
            self.inner.window(),
            self.inner.entries().len()
        )
    }

    fn __len__(&self) -> usize {
        self.inner.entries().len()
    }
}

/// Outcome of removing every reducible block.
#[pyclass(frozen)]
struct ReductReport {
    reduct: covdeg::Covering,
    removed: Vec<Vec<String>>,
    cov_equals_reduct: bool,
    gamma_witness: Option<String>,
}

#[pymethods]
impl ReductReport {
    #[getter]
    fn reduct(&self) -> Covering {
        Covering {
            inner: self.reduct.clone(),
        }
    }

    #[getter]
    fn removed(&self) -> Vec<Vec<String>> {
        self.removed.clone()
    }

    #[getter]
    fn cov_equals_reduct(&self) -> bool {
        self.cov_equals_reduct
    }

    #[getter]
    fn gamma_witness(&self) -> Option<String> {
        self.gamma_witness.clone()
    }

    fn __repr__(&self) -> String {
        format!(
            "ReductReport(reduct={:?}, removed={}, cov_equals_reduct={})",
            self.reduct,
            self.removed.len(),
            self.cov_equals_reduct
        )
    }
}

/// Rebuild the covering a full-window degree table came from.
#[pyfunction]
fn reconstruct_covering(table: &DegreeTable) -> PyResult<Covering> {
    Ok(Covering {
        inner: covdeg::reconstruct_covering(&table.inner).map_err(err)?,
    })
}

/// Recover a covering from its singleton and pair degrees alone.
#[pyfunction]
fn cov_from_pair_degrees(table: &DegreeTable) -> PyResult<Covering> {
    Ok(Covering {
        inner: covdeg::cov_from_pair_degrees(&table.inner).map_err(err)?,
    })
}

/// The unique pair of distinct coverings sharing every degree below the
/// top size, as (even, odd).
#[pyfunction]
#[pyo3(signature = (n, names=None))]
fn parity_pair(n: usize, names: Option<Vec<String>>) -> PyResult<(Covering, Covering)> {
    let u = match names {
        Some(list) => {
            if list.len() != n {
                return Err(PyValueError::new_err(format!(
                    "expected {n} names, got {}",
                    list.len()
                )));
            }
            Universe::new(list).map_err(err)?
        }
        None => Universe::indexed(n).map_err(err)?,
    };
    let pair = covdeg::parity_pair(u).map_err(err)?;
    Ok((Covering { inner: pair.even }, Covering { inner: pair.odd }))
}

/// Superset sums of a full-lattice function given as 2^n values.
#[pyfunction]
fn zeta_transform(values: Vec<f64>) -> PyResult<Vec<f64>> {
    let mut values = values;
    if !values.len().is_power_of_two() {
        return Err(PyValueError::new_err(format!(
            "expected 2^n values, got {}",
            values.len()
        )));
    }
    covdeg::inversion::zeta_in_place(&mut values);
    Ok(values)
}

/// Inverse of `zeta_transform`.
#[pyfunction]
fn mobius_transform(values: Vec<f64>) -> PyResult<Vec<f64>> {
    let mut values = values;
    if !values.len().is_power_of_two() {
        return Err(PyValueError::new_err(format!(
            "expected 2^n values, got {}",
            values.len()
        )));
    }
    covdeg::inversion::mobius_in_place(&mut values);
    Ok(values)
}

#[pymodule]
fn covdeg_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Covering>()?;
    m.add_class::<DegreeTable>()?;
    m.add_class::<ReductReport>()?;
    m.add_function(wrap_pyfunction!(reconstruct_covering, m)?)?;
    m.add_function(wrap_pyfunction!(cov_from_pair_degrees, m)?)?;
    m.add_function(wrap_pyfunction!(parity_pair, m)?)?;
    m.add_function(wrap_pyfunction!(zeta_transform, m)?)?;
    m.add_function(wrap_pyfunction!(mobius_transform, m)?)?;
    Ok(())
}
