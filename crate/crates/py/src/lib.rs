//! Python extension module over setfam-core. Families come across as a
//! small immutable class; bounds return exact ints (floats only where the
//! underlying bound is real-valued); verification oracles return plain
//! dicts mirroring the JSON report schema.

use num_bigint::BigUint;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList, PyModule};

use setfam_core::oracles::{
    verify_cross, verify_ekr, verify_lemma7, CrossParams, EnumBudget, VerificationReport,
};
use setfam_core::{bounds, constructions, Family, Params};

fn err(e: setfam_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn params(n: u32, k: u32) -> PyResult<Params> {
    Params::new(n, k).map_err(err)
}

/// serde_json::Value -> native Python object, recursively.
fn json_to_py(py: Python<'_>, value: &serde_json::Value) -> PyResult<PyObject> {
    Ok(match value {
        serde_json::Value::Null => py.None(),
        serde_json::Value::Bool(b) => b.into_py(py),
        serde_json::Value::Number(num) => {
            if let Some(i) = num.as_i64() {
                i.into_py(py)
            } else if let Some(u) = num.as_u64() {
                u.into_py(py)
            } else {
                num.as_f64().unwrap_or(f64::NAN).into_py(py)
            }
        }
        serde_json::Value::String(s) => s.into_py(py),
        serde_json::Value::Array(items) => {
            let list = PyList::empty_bound(py);
            for item in items {
                list.append(json_to_py(py, item)?)?;
            }
            list.into_py(py)
        }
        serde_json::Value::Object(map) => {
            let dict = PyDict::new_bound(py);
            for (key, item) in map {
                dict.set_item(key, json_to_py(py, item)?)?;
            }
            dict.into_py(py)
        }
    })
}

fn report_to_py(py: Python<'_>, report: &VerificationReport) -> PyResult<PyObject> {
    let value = serde_json::to_value(report)
        .map_err(|e| PyValueError::new_err(format!("report serialization: {e}")))?;
    json_to_py(py, &value)
}

/// A k-uniform family over {1..n}, immutable once built.
#[pyclass(name = "Family", frozen)]
struct PyFamily {
    inner: Family,
}

impl PyFamily {
    fn wrap(inner: Family) -> Self {
        PyFamily { inner }
    }
}

#[pymethods]
impl PyFamily {
    #[new]
    fn new(n: u32, k: u32, sets: Vec<Vec<u32>>) -> PyResult<Self> {
        let p = params(n, k)?;
        Ok(PyFamily::wrap(setfam_core::make_family(p, &sets).map_err(err)?))
    }

    #[getter]
    fn n(&self) -> u32 {
        self.inner.params().n()
    }

    #[getter]
    fn k(&self) -> u32 {
        self.inner.params().k()
    }

    fn size(&self) -> usize {
        self.inner.size()
    }

    fn sets(&self) -> Vec<Vec<u32>> {
        self.inner.to_element_lists()
    }

    fn is_intersecting(&self) -> bool {
        setfam_core::is_intersecting(&self.inner)
    }

    /// (diversity, least-covered element); ties go to the smallest element.
    fn diversity(&self) -> (u64, u32) {
        setfam_core::diversity(&self.inner)
    }

    fn covering_number(&self) -> PyResult<u32> {
        setfam_core::covering_number(&self.inner).map_err(err)
    }

    fn common_intersection(&self) -> PyResult<Vec<u32>> {
        let word = setfam_core::common_intersection(&self.inner).map_err(err)?;
        Ok(setfam_core::elements_of(word))
    }

    fn link(&self, i: u32) -> PyResult<PyFamily> {
        setfam_core::link(&self.inner, i).map(PyFamily::wrap).map_err(err)
    }

    fn delete(&self, i: u32) -> PyResult<PyFamily> {
        setfam_core::delete(&self.inner, i).map(PyFamily::wrap).map_err(err)
    }

    fn relabel(&self, perm: Vec<u32>) -> PyResult<PyFamily> {
        setfam_core::relabel(&self.inner, &perm).map(PyFamily::wrap).map_err(err)
    }

    fn shadow(&self) -> PyResult<PyFamily> {
        setfam_core::shadow(&self.inner).map(PyFamily::wrap).map_err(err)
    }

    fn shift(&self, i: u32, j: u32) -> PyResult<PyFamily> {
        setfam_core::shift_family(&self.inner, i, j).map(PyFamily::wrap).map_err(err)
    }

    fn shift_closure(&self, pairs: Vec<(u32, u32)>) -> PyResult<PyFamily> {
        setfam_core::shift_closure(&self.inner, &pairs).map(PyFamily::wrap).map_err(err)
    }

    fn quotient(&self, s: Vec<u32>, j: u32) -> PyResult<PyFamily> {
        let word = setfam_core::word_from_elements(self.inner.params().n(), &s).map_err(err)?;
        setfam_core::quotient(&self.inner, word, j).map(PyFamily::wrap).map_err(err)
    }

    fn maximal_extension(&self) -> PyResult<PyFamily> {
        setfam_core::maximal_extension(self.inner.params(), &self.inner)
            .map(PyFamily::wrap)
            .map_err(err)
    }

    fn max_cross_partner(&self, r: u32) -> PyResult<PyFamily> {
        setfam_core::max_cross_partner(&self.inner, r).map(PyFamily::wrap).map_err(err)
    }

    fn is_cross_intersecting_with(&self, other: &PyFamily) -> PyResult<bool> {
        setfam_core::is_cross_intersecting(&self.inner, &other.inner).map_err(err)
    }

    fn __len__(&self) -> usize {
        self.inner.size()
    }

    fn __eq__(&self, other: &PyFamily) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!(
            "Family(n={}, k={}, size={})",
            self.inner.params().n(),
            self.inner.params().k(),
            self.inner.size()
        )
    }
}

#[pyfunction]
#[pyo3(signature = (n, k, center = 1))]
fn star(n: u32, k: u32, center: u32) -> PyResult<PyFamily> {
    constructions::full_star(params(n, k)?, center).map(PyFamily::wrap).map_err(err)
}

#[pyfunction]
fn full_family(n: u32, k: u32) -> PyResult<PyFamily> {
    Ok(PyFamily::wrap(setfam_core::full_family(params(n, k)?)))
}

#[pyfunction]
fn h_u(n: u32, k: u32, u: u32) -> PyResult<PyFamily> {
    constructions::h_u(params(n, k)?, u).map(PyFamily::wrap).map_err(err)
}

#[pyfunction]
fn j_i(n: u32, k: u32, i: u32) -> PyResult<PyFamily> {
    constructions::j_i(params(n, k)?, i).map(PyFamily::wrap).map_err(err)
}

#[pyfunction]
fn e_l(n: u32, k: u32, l: u32) -> PyResult<PyFamily> {
    constructions::e_l(params(n, k)?, l).map(PyFamily::wrap).map_err(err)
}

#[pyfunction]
fn t2s(m: u32, s: u32) -> PyResult<PyFamily> {
    constructions::t2s(m, s).map(PyFamily::wrap).map_err(err)
}

#[pyfunction]
fn f2s(m: u32, k: u32, s: u32) -> PyResult<PyFamily> {
    constructions::f2s(m, k, s).map(PyFamily::wrap).map_err(err)
}

#[pyfunction]
fn hm_bound(n: u32, k: u32) -> PyResult<BigUint> {
    bounds::hm_bound(n, k).map_err(err)
}

#[pyfunction]
fn hk_bound(n: u32, k: u32) -> PyResult<BigUint> {
    bounds::hk_bound(n, k).map_err(err)
}

#[pyfunction]
fn kz_bound(py: Python<'_>, n: u32, k: u32, u: f64) -> PyResult<PyObject> {
    let bound = bounds::kz_bound(n, k, u).map_err(err)?;
    Ok(match bound.exact() {
        Some(exact) => exact.clone().into_py(py),
        None => bound.as_f64().into_py(py),
    })
}

#[pyfunction]
fn size_h_u(n: u32, k: u32, u: u32) -> PyResult<BigUint> {
    bounds::size_h_u(n, k, u).map_err(err)
}

#[pyfunction]
fn size_j_i(n: u32, k: u32, i: u32) -> PyResult<BigUint> {
    bounds::size_j_i(n, k, i).map_err(err)
}

#[pyfunction]
fn size_e_l(n: u32, k: u32, l: u32) -> PyResult<BigUint> {
    bounds::size_e_l(n, k, l).map_err(err)
}

#[pyfunction]
fn f2s_size(m: u32, k: u32, s: u32) -> PyResult<BigUint> {
    bounds::f2s_size(m, k, s).map_err(err)
}

#[pyfunction]
fn f_of_z(m: u32, k: u32, s: u32, z: u32) -> PyResult<BigUint> {
    bounds::f_of_z(m, k, s, z).map_err(err)
}

#[pyfunction]
fn binom(n: i64, r: i64) -> PyResult<BigUint> {
    bounds::binom_exact(n, r).map_err(err)
}

#[pyfunction]
fn kk_shadow_lb(size: BigUint, r: i64) -> PyResult<f64> {
    Ok(bounds::kk_shadow_lb(&size, r).map_err(err)?.value)
}

#[pyfunction]
fn are_isomorphic(f: &PyFamily, g: &PyFamily) -> Option<Vec<u32>> {
    setfam_core::are_isomorphic(&f.inner, &g.inner)
}

fn budget(max_nodes: Option<u64>, max_millis: Option<u64>, seed: u64) -> EnumBudget {
    EnumBudget {
        max_families: None,
        max_nodes,
        max_millis,
        seed,
    }
}

#[pyfunction]
#[pyo3(signature = (n, k, max_nodes = None, max_millis = None))]
fn check_star_maximum(
    py: Python<'_>,
    n: u32,
    k: u32,
    max_nodes: Option<u64>,
    max_millis: Option<u64>,
) -> PyResult<PyObject> {
    let report = verify_ekr(params(n, k)?, &budget(max_nodes, max_millis, 0)).map_err(err)?;
    report_to_py(py, &report)
}

#[pyfunction]
fn check_pair_cover_maximum(py: Python<'_>, m: u32, s: u32, k: u32) -> PyResult<PyObject> {
    let report = verify_lemma7(m, s, k).map_err(err)?;
    report_to_py(py, &report)
}

#[pyfunction]
#[pyo3(signature = (n, a, b, samples = 10_000, seed = 0))]
fn check_cross_bound(
    py: Python<'_>,
    n: u32,
    a: u32,
    b: u32,
    samples: u64,
    seed: u64,
) -> PyResult<PyObject> {
    let report = verify_cross(CrossParams { n, a, b }, samples, seed).map_err(err)?;
    report_to_py(py, &report)
}

#[pymodule]
fn setfam(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyFamily>()?;
    m.add_function(wrap_pyfunction!(star, m)?)?;
    m.add_function(wrap_pyfunction!(full_family, m)?)?;
    m.add_function(wrap_pyfunction!(h_u, m)?)?;
    m.add_function(wrap_pyfunction!(j_i, m)?)?;
    m.add_function(wrap_pyfunction!(e_l, m)?)?;
    m.add_function(wrap_pyfunction!(t2s, m)?)?;
    m.add_function(wrap_pyfunction!(f2s, m)?)?;
    m.add_function(wrap_pyfunction!(hm_bound, m)?)?;
    m.add_function(wrap_pyfunction!(hk_bound, m)?)?;
    m.add_function(wrap_pyfunction!(kz_bound, m)?)?;
    m.add_function(wrap_pyfunction!(size_h_u, m)?)?;
    m.add_function(wrap_pyfunction!(size_j_i, m)?)?;
    m.add_function(wrap_pyfunction!(size_e_l, m)?)?;
    m.add_function(wrap_pyfunction!(f2s_size, m)?)?;
    m.add_function(wrap_pyfunction!(f_of_z, m)?)?;
    m.add_function(wrap_pyfunction!(binom, m)?)?;
    m.add_function(wrap_pyfunction!(kk_shadow_lb, m)?)?;
    m.add_function(wrap_pyfunction!(are_isomorphic, m)?)?;
    m.add_function(wrap_pyfunction!(check_star_maximum, m)?)?;
    m.add_function(wrap_pyfunction!(check_pair_cover_maximum, m)?)?;
    m.add_function(wrap_pyfunction!(check_cross_bound, m)?)?;
    Ok(())
}
