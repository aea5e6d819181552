//! Python bindings: polynomials, Jacobi-Trudi and Giambelli matrices, immanants,
//! SNP checks, characters, E-polynomials and the verification scans.

use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyTuple};
use serde::Serialize;

use immsnp::characters::CharacterTable;
use immsnp::combinatorics::{self as comb, Partition, SkewShape};
use immsnp::matrices::{self, PolynomialMatrix};
use immsnp::networks::{self, enumerate_path_families, giambelli_network, greene_network};
use immsnp::newton;
use immsnp::poly::SparsePolynomial;
use immsnp::scan::{self, ScanConfig, ScanFamily};
use immsnp::stembridge::{self, EMethod};
use immsnp::symmetric;

fn err(e: immsnp::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn partition(parts: Vec<usize>) -> PyResult<Partition> {
    Partition::new(parts.into_iter().filter(|&p| p > 0).collect()).map_err(err)
}

fn shape(outer: Vec<usize>, inner: Option<Vec<usize>>) -> PyResult<SkewShape> {
    SkewShape::new(partition(outer)?, partition(inner.unwrap_or_default())?).map_err(err)
}

fn to_py<'py>(py: Python<'py>, value: &impl Serialize) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| PyValueError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (text,))
}

fn key<'py>(py: Python<'py>, p: &Partition) -> PyResult<Bound<'py, PyTuple>> {
    PyTuple::new(py, p.parts())
}

/// Exact multivariate polynomial with integer coefficients.
#[pyclass(name = "Polynomial", module = "immsnp", frozen, from_py_object)]
#[derive(Clone)]
pub struct Polynomial {
    inner: SparsePolynomial,
}

#[pymethods]
impl Polynomial {
    /// Build from ``[(exponents, coefficient), ...]``.
    #[new]
    fn new(nvars: usize, terms: Vec<(Vec<u32>, BigInt)>) -> PyResult<Self> {
        Ok(Polynomial {
            inner: SparsePolynomial::from_terms(nvars, terms).map_err(err)?,
        })
    }

    /// Schur polynomial s_λ in ``nvars`` variables.
    #[staticmethod]
    fn schur(parts: Vec<usize>, nvars: usize) -> PyResult<Self> {
        Ok(Polynomial {
            inner: symmetric::schur_poly(&partition(parts)?, nvars),
        })
    }

    #[getter]
    fn nvars(&self) -> usize {
        self.inner.nvars()
    }

    fn degree(&self) -> Option<usize> {
        self.inner.degree()
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    /// Terms as ``(exponents, coefficient)`` in descending graded reverse lex order.
    fn terms(&self) -> Vec<(Vec<u32>, BigInt)> {
        let mut terms: Vec<_> = self
            .inner
            .terms()
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect();
        terms.sort_by(|a, b| immsnp::poly::grevlex(&b.0, &a.0));
        terms.into_iter().map(|(e, c)| (e.0, c)).collect()
    }

    fn coefficient(&self, exponents: Vec<u32>) -> BigInt {
        self.inner.coefficient(&exponents)
    }

    fn to_json(&self) -> String {
        self.inner.to_json()
    }

    /// Coefficients in the Schur basis, keyed by partition tuples.
    fn schur_expand<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let out = PyDict::new(py);
        for (lambda, c) in symmetric::schur_expand(&self.inner).map_err(err)? {
            out.set_item(key(py, &lambda)?, c)?;
        }
        Ok(out)
    }

    /// Saturated Newton polytope report as a dict.
    fn snp_check<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &newton::snp_check(&self.inner).map_err(err)?)
    }

    fn __add__(&self, other: &Polynomial) -> PyResult<Polynomial> {
        Ok(Polynomial {
            inner: self.inner.add(&other.inner).map_err(err)?,
        })
    }

    fn __mul__(&self, other: &Polynomial) -> PyResult<Polynomial> {
        Ok(Polynomial {
            inner: self.inner.mul(&other.inner).map_err(err)?,
        })
    }

    fn __eq__(&self, other: &Polynomial) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("Polynomial({})", self.inner)
    }
}

/// Square matrix of polynomials.
#[pyclass(name = "Matrix", module = "immsnp", frozen)]
pub struct Matrix {
    inner: PolynomialMatrix,
}

#[pymethods]
impl Matrix {
    #[new]
    fn new(nvars: usize, rows: Vec<Vec<Polynomial>>) -> PyResult<Self> {
        let rows = rows
            .into_iter()
            .map(|r| r.into_iter().map(|p| p.inner).collect())
            .collect();
        Ok(Matrix {
            inner: PolynomialMatrix::new(nvars, rows).map_err(err)?,
        })
    }

    /// Jacobi-Trudi matrix H(λ, μ) = [h_{λ_i - μ_j - i + j}].
    #[staticmethod]
    #[pyo3(signature = (outer, nvars, inner=None))]
    fn jacobi_trudi(outer: Vec<usize>, nvars: usize, inner: Option<Vec<usize>>) -> PyResult<Self> {
        Ok(Matrix {
            inner: matrices::jt_matrix(&shape(outer, inner)?, nvars),
        })
    }

    /// Giambelli matrix [s_{(α_i | β_j)}].
    #[staticmethod]
    fn giambelli(parts: Vec<usize>, nvars: usize) -> PyResult<Self> {
        Ok(Matrix {
            inner: matrices::giambelli_matrix(&partition(parts)?, nvars).map_err(err)?,
        })
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    fn entry(&self, i: usize, j: usize) -> PyResult<Polynomial> {
        if i >= self.inner.order() || j >= self.inner.order() {
            return Err(PyValueError::new_err("index out of range"));
        }
        Ok(Polynomial {
            inner: self.inner.entry(i, j).clone(),
        })
    }

    fn immanant(&self, nu: Vec<usize>) -> PyResult<Polynomial> {
        Ok(Polynomial {
            inner: matrices::immanant(&self.inner, &partition(nu)?).map_err(err)?,
        })
    }

    /// Every immanant, keyed by partition tuples.
    fn all_immanants<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let out = PyDict::new(py);
        for (nu, f) in self.inner.all_immanants() {
            out.set_item(key(py, &nu)?, Polynomial { inner: f })?;
        }
        Ok(out)
    }

    fn determinant(&self) -> Polynomial {
        Polynomial {
            inner: self.inner.determinant(),
        }
    }

    fn permanent(&self) -> Polynomial {
        Polynomial {
            inner: self.inner.permanent(),
        }
    }
}

#[pyfunction]
fn partitions_of(n: usize) -> Vec<Vec<usize>> {
    comb::partitions_of(n)
        .into_iter()
        .map(|p| p.parts().to_vec())
        .collect()
}

#[pyfunction]
fn conjugate(parts: Vec<usize>) -> PyResult<Vec<usize>> {
    Ok(comb::conjugate(&partition(parts)?).parts().to_vec())
}

/// μ ⊴ λ in dominance order.
#[pyfunction]
fn dominance_leq(mu: Vec<usize>, lam: Vec<usize>) -> PyResult<bool> {
    comb::dominance_leq(&partition(mu)?, &partition(lam)?).map_err(err)
}

/// Irreducible character χ^ν at cycle type ρ.
#[pyfunction]
fn character(nu: Vec<usize>, rho: Vec<usize>) -> PyResult<i64> {
    let nu = partition(nu)?;
    CharacterTable::shared(nu.size())
        .value(&nu, &partition(rho)?)
        .map_err(err)
}

/// Full character table of S_n as ``{(ν, ρ): value}``.
#[pyfunction]
fn character_table<'py>(py: Python<'py>, n: usize) -> PyResult<Bound<'py, PyDict>> {
    let out = PyDict::new(py);
    for e in CharacterTable::shared(n).entries() {
        out.set_item((key(py, &e.nu)?, key(py, &e.rho)?), e.value)?;
    }
    Ok(out)
}

/// Permutahedron containment P_μ ⊆ P_λ decided by exact linear programming.
#[pyfunction]
fn rado_containment(mu: Vec<usize>, lam: Vec<usize>, nvars: usize) -> PyResult<bool> {
    newton::rado_containment(&partition(mu)?, &partition(lam)?, nvars).map_err(err)
}

/// E^θ_{λ/μ}(y); ``method`` is "definition" or "border-formula".
#[pyfunction]
#[pyo3(signature = (outer, theta, yvars, inner=None, method="definition"))]
fn e_polynomial(
    outer: Vec<usize>,
    theta: Vec<usize>,
    yvars: usize,
    inner: Option<Vec<usize>>,
    method: &str,
) -> PyResult<Polynomial> {
    let method = match method {
        "definition" => EMethod::Definition,
        "border-formula" => EMethod::BorderFormula,
        other => return Err(PyValueError::new_err(format!("unknown method {other:?}"))),
    };
    let table = stembridge::e_polynomial(&shape(outer, inner)?, &partition(theta)?, yvars, method)
        .map_err(err)?;
    Ok(Polynomial { inner: table.value })
}

/// Leading term (exponents, coefficient) of every Giambelli immanant of λ.
#[pyfunction]
fn leading_coefficients<'py>(
    py: Python<'py>,
    lam: Vec<usize>,
    nvars: usize,
) -> PyResult<Bound<'py, PyDict>> {
    let out = PyDict::new(py);
    for (nu, (exp, c)) in networks::leading_coefficients(&partition(lam)?, nvars).map_err(err)? {
        out.set_item(key(py, &nu)?, (exp.0, c))?;
    }
    Ok(out)
}

/// Path families of the Jacobi-Trudi ("jt") or Giambelli network.
#[pyfunction]
#[pyo3(signature = (family, outer, nvars, inner=None, max_families=100_000))]
fn path_families<'py>(
    py: Python<'py>,
    family: &str,
    outer: Vec<usize>,
    nvars: usize,
    inner: Option<Vec<usize>>,
    max_families: usize,
) -> PyResult<Bound<'py, PyAny>> {
    let net = match family {
        "jt" => greene_network(&shape(outer, inner)?, nvars),
        "giambelli" => giambelli_network(&partition(outer)?, nvars).map_err(err)?,
        other => return Err(PyValueError::new_err(format!("unknown family {other:?}"))),
    };
    to_py(
        py,
        &enumerate_path_families(&net, max_families).map_err(err)?,
    )
}

/// Run a scan ("jt", "giambelli" or "e-poly") and return the JSON report as a dict.
#[pyfunction]
#[pyo3(signature = (family, max_size, max_rows=3, vars=vec![2, 3], jobs=0, max_cases=None))]
fn run_scan<'py>(
    py: Python<'py>,
    family: &str,
    max_size: usize,
    max_rows: usize,
    vars: Vec<usize>,
    jobs: usize,
    max_cases: Option<usize>,
) -> PyResult<Bound<'py, PyAny>> {
    let family = match family {
        "jt" => ScanFamily::Jt,
        "giambelli" => ScanFamily::Giambelli,
        "e-poly" => ScanFamily::EPoly,
        other => return Err(PyValueError::new_err(format!("unknown family {other:?}"))),
    };
    let mut config = ScanConfig::new(family, max_size, max_rows, vars);
    config.parallelism = jobs;
    config.max_cases = max_cases;
    let report = py.detach(|| scan::run_scan(&config)).map_err(err)?;
    to_py(py, &report)
}

#[pymodule]
#[pyo3(name = "immsnp")]
pub fn immsnp_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Polynomial>()?;
    m.add_class::<Matrix>()?;
    m.add_function(wrap_pyfunction!(partitions_of, m)?)?;
    m.add_function(wrap_pyfunction!(conjugate, m)?)?;
    m.add_function(wrap_pyfunction!(dominance_leq, m)?)?;
    m.add_function(wrap_pyfunction!(character, m)?)?;
    m.add_function(wrap_pyfunction!(character_table, m)?)?;
    m.add_function(wrap_pyfunction!(rado_containment, m)?)?;
    m.add_function(wrap_pyfunction!(e_polynomial, m)?)?;
    m.add_function(wrap_pyfunction!(leading_coefficients, m)?)?;
    m.add_function(wrap_pyfunction!(path_families, m)?)?;
    m.add_function(wrap_pyfunction!(run_scan, m)?)?;
    Ok(())
}
