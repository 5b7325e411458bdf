//! Python bindings: monomials, algebra elements and `Z[sqrt(-5)]` as
//! classes, plus the parser, the predicate verbs, witnesses and fuzzing.

use divlab_core::algebra::{antimatter_factor, claim_check, mcd_verify, McdVerdict};
use divlab_core::domain::DomainId;
use divlab_core::fuzz::{run_property, Property};
use divlab_core::parse::{parse_alg, parse_expr as core_parse, parse_expvec, print_expr};
use divlab_core::witness::{run_witness as core_run_witness, DEFAULT_SEED};
use divlab_core::{cli, AlgElem, ExpVec, QuadInt};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyAny;

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn json_to_py<'py>(py: Python<'py>, text: &str) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.call_method1("loads", (text,))
}

fn domain(tag: &str) -> PyResult<DomainId> {
    tag.parse().map_err(value_error)
}

/// An exponent vector, i.e. a monomial of `F2[P]`.
#[pyclass(name = "ExpVec", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyExpVec(ExpVec);

#[pymethods]
impl PyExpVec {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        parse_expvec(text).map(PyExpVec).map_err(value_error)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("ExpVec('{}')", self.0)
    }

    fn __add__(&self, other: &Self) -> Self {
        PyExpVec(&self.0 + &other.0)
    }

    fn in_qr(&self) -> bool {
        self.0.in_qr()
    }

    fn divides(&self, other: &Self) -> bool {
        self.0.divides(&other.0)
    }

    fn min(&self, other: &Self) -> Self {
        PyExpVec(self.0.componentwise_min(&other.0))
    }

    /// `"maximal"`, `"not-common-divisor"` or the larger common divisor.
    fn mcd_verify(&self, a: &Self, b: &Self) -> PyResult<String> {
        Ok(match mcd_verify(&self.0, &a.0, &b.0).map_err(value_error)? {
            McdVerdict::Maximal => "maximal".into(),
            McdVerdict::NotCommonDivisor => "not-common-divisor".into(),
            McdVerdict::NotMaximal { larger } => larger.to_string(),
        })
    }
}

/// An element of `F2[P]`: a finite sum of monomials.
#[pyclass(name = "AlgElem", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyAlgElem(AlgElem);

#[pymethods]
impl PyAlgElem {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        parse_alg(text).map(PyAlgElem).map_err(value_error)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("AlgElem('{}')", self.0)
    }

    fn __add__(&self, other: &Self) -> Self {
        PyAlgElem(&self.0 + &other.0)
    }

    fn __mul__(&self, other: &Self) -> Self {
        PyAlgElem(&self.0 * &other.0)
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn in_r(&self) -> bool {
        self.0.in_r()
    }

    fn sqrt(&self) -> Self {
        PyAlgElem(self.0.sqrt())
    }

    fn square(&self) -> Self {
        PyAlgElem(self.0.square())
    }

    /// `self / divisor`; raises `ValueError` when the division is not exact.
    fn exact_div(&self, divisor: &Self) -> PyResult<Self> {
        self.0.exact_div(&divisor.0).map(PyAlgElem).map_err(value_error)
    }

    fn antimatter_factor(&self) -> PyResult<(Self, Self)> {
        let (g, h) = antimatter_factor(&self.0).map_err(value_error)?;
        Ok((PyAlgElem(g), PyAlgElem(h)))
    }

    /// `"not-applicable"` or `"holds"`; raises on a violation.
    fn claim_check(&self, other: &Self) -> PyResult<&'static str> {
        use divlab_core::algebra::ClaimVerdict;
        Ok(match claim_check(&self.0, &other.0).map_err(value_error)? {
            ClaimVerdict::NotApplicable => "not-applicable",
            ClaimVerdict::Holds { .. } => "holds",
        })
    }
}

/// `a + b sqrt(-5)`.
#[pyclass(name = "QuadInt", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyQuadInt(QuadInt);

#[pymethods]
impl PyQuadInt {
    #[new]
    fn new(a: i64, b: i64) -> Self {
        PyQuadInt(QuadInt::new(a, b))
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("QuadInt('{}')", self.0)
    }

    fn __mul__(&self, other: &Self) -> Self {
        PyQuadInt(&self.0 * &other.0)
    }

    fn norm(&self) -> String {
        self.0.norm().to_string()
    }

    fn is_unit(&self) -> bool {
        self.0.is_unit()
    }

    fn divides(&self, other: &Self) -> bool {
        self.0.divides(&other.0)
    }

    /// Divisors up to sign, by increasing norm.
    fn divisors(&self) -> Vec<Self> {
        self.0.divisors().into_iter().map(PyQuadInt).collect()
    }
}

/// Canonical form of `text` as an element of the domain `r0|r|z|z5|dk`.
#[pyfunction]
fn parse_expr(text: &str, domain_tag: &str) -> PyResult<String> {
    let e = core_parse(text, domain(domain_tag)?).map_err(value_error)?;
    Ok(print_expr(&e))
}

/// Runs a named witness and returns its report as a dict.
#[pyfunction]
#[pyo3(signature = (name, n=None, seed=DEFAULT_SEED))]
fn run_witness<'py>(py: Python<'py>, name: &str, n: Option<u64>, seed: u64) -> PyResult<Bound<'py, PyAny>> {
    let report = core_run_witness(name, n, seed).map_err(value_error)?;
    json_to_py(py, &report.to_json())
}

/// Runs one predicate verb (`primitive`, `gauss`, `aq`, `prime-like`,
/// `primal`) and returns `(exit_code, verdict_dict)`.
#[pyfunction]
fn check<'py>(py: Python<'py>, verb: &str, domain_tag: &str, args: Vec<String>) -> PyResult<(i32, Bound<'py, PyAny>)> {
    let mut argv = vec!["divlab".to_string(), verb.to_string(), "--domain".into(), domain_tag.to_string()];
    argv.extend(args);
    let out = cli::run(argv);
    if out.code == cli::EXIT_USAGE {
        return Err(PyValueError::new_err(out.stderr));
    }
    Ok((out.code, json_to_py(py, &out.stdout)?))
}

/// Runs a seeded property check and returns its summary as a dict.
#[pyfunction]
fn fuzz<'py>(py: Python<'py>, property: &str, trials: u32, seed: u64) -> PyResult<Bound<'py, PyAny>> {
    let p: Property = property.parse().map_err(PyValueError::new_err)?;
    let summary = run_property(p, trials, seed);
    json_to_py(py, &serde_json::to_string(&summary).map_err(value_error)?)
}

#[pymodule]
fn divlab(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyExpVec>()?;
    m.add_class::<PyAlgElem>()?;
    m.add_class::<PyQuadInt>()?;
    m.add_function(wrap_pyfunction!(parse_expr, m)?)?;
    m.add_function(wrap_pyfunction!(run_witness, m)?)?;
    m.add_function(wrap_pyfunction!(check, m)?)?;
    m.add_function(wrap_pyfunction!(fuzz, m)?)?;
    Ok(())
}
