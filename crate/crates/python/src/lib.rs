//! Python module `dainf`: structure families, representations, and cooperad expansions.
//!
//! Reports come back as the same dictionaries the command-line tool prints with `--format json`.

use num_bigint::BigInt;
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use serde_json::{json, Value};

use dainf_core::bar::compare_with_bar;
use dainf_core::catalog::{build, ExampleId, DEFAULT_ARITY_BOUND};
use dainf_core::cooperad::{
    coassociativity_defect, decompose, format_decomposition, CooperadGenerator, GeneratorKind,
};
use dainf_core::document::StructureDocument;
use dainf_core::report::word_report_to_json;
use dainf_core::representation::{check_rep, rep_family_from_action, rep_report_to_json};
use dainf_core::structure::{check_bidga, check_derived_ainfinity};
use dainf_core::Error;

create_exception!(
    dainf,
    TruncationError,
    PyValueError,
    "The requested window needs maps beyond the known bounds."
);

fn to_py(e: Error) -> PyErr {
    match e {
        Error::TruncationInsufficient { .. } => TruncationError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn to_python<'py>(py: Python<'py>, v: &Value) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(v).expect("values serialize");
    py.import("json")?.call_method1("loads", (text,))
}

/// A derived A-infinity structure known on a finite range of indices.
#[pyclass(frozen, module = "dainf")]
struct StructureFamily {
    inner: dainf_core::structure::StructureFamily,
}

#[pymethods]
impl StructureFamily {
    /// A catalog example by id; see `example_ids()`.
    #[staticmethod]
    #[pyo3(signature = (id, arity_bound = DEFAULT_ARITY_BOUND))]
    fn example(id: &str, arity_bound: usize) -> PyResult<Self> {
        let id: ExampleId = id.parse().map_err(to_py)?;
        Ok(StructureFamily {
            inner: build(id, arity_bound).map_err(to_py)?,
        })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        match StructureDocument::parse(text).map_err(to_py)? {
            StructureDocument::Structure(inner) => Ok(StructureFamily { inner }),
            StructureDocument::Representation(_) => {
                Err(PyValueError::new_err("expected a structure document"))
            }
        }
    }

    fn to_json(&self) -> String {
        StructureDocument::Structure(self.inner.clone()).to_pretty_string()
    }

    #[getter]
    fn convention(&self) -> &'static str {
        self.inner.convention().name()
    }

    /// `(max_horizontal, max_arity)`.
    #[getter]
    fn bounds(&self) -> (usize, usize) {
        let b = self.inner.bounds();
        (b.max_horizontal, b.max_arity)
    }

    fn basis(&self) -> Vec<(String, (i64, i64))> {
        self.inner
            .basis()
            .iter()
            .map(|(n, d)| (n.to_string(), (d.horizontal, d.vertical)))
            .collect()
    }

    /// Indices `(i, j)` of the nonzero maps.
    fn support(&self) -> Vec<(usize, usize)> {
        self.inner.support()
    }

    /// `m_ij` on a word of basis names, as `[(coefficient, [names])]`.
    fn apply(&self, i: usize, j: usize, word: Vec<String>) -> PyResult<Vec<(BigInt, Vec<String>)>> {
        let basis = self.inner.basis();
        let w = basis.parse_word(&word).map_err(to_py)?;
        if w.arity() != j {
            return Err(to_py(Error::ArityMismatch {
                expected: j,
                found: w.arity(),
            }));
        }
        let value = self
            .inner
            .map(i, j)
            .map(|m| m.apply_word(&w))
            .unwrap_or_default();
        Ok(value
            .iter()
            .map(|(o, c)| (c.clone(), basis.word_names(o)))
            .collect())
    }

    /// The same family in the other convention.
    fn converted(&self) -> Self {
        StructureFamily {
            inner: dainf_core::structure::convert_convention(&self.inner),
        }
    }

    /// Relation report over `u ≤ u_max`, `v ≤ v_max`; defaults to the bounds.
    #[pyo3(signature = (u_max = None, v_max = None))]
    fn check<'py>(
        &self,
        py: Python<'py>,
        u_max: Option<usize>,
        v_max: Option<usize>,
    ) -> PyResult<Bound<'py, PyAny>> {
        let b = self.inner.bounds();
        let (u, v) = (
            u_max.unwrap_or(b.max_horizontal),
            v_max.unwrap_or(b.max_arity),
        );
        let reports = check_derived_ainfinity(&self.inner, u, v).map_err(to_py)?;
        let basis = self.inner.basis();
        let doc = json!({
            "u_max": u,
            "v_max": v,
            "passed": reports.iter().all(|r| r.passed()),
            "reports": reports.iter().map(|r| word_report_to_json(r, basis)).collect::<Vec<_>>(),
        });
        to_python(py, &doc)
    }

    fn check_bidga<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        let report = check_bidga(&self.inner).map_err(to_py)?;
        let basis = self.inner.basis();
        let doc = json!({
            "passed": report.passed(),
            "reports": report.relations.iter().map(|r| word_report_to_json(r, basis)).collect::<Vec<_>>(),
        });
        to_python(py, &doc)
    }

    /// Relations against the twisted-complex condition on the bar family, per window.
    fn bar_check<'py>(
        &self,
        py: Python<'py>,
        u_max: usize,
        v_max: usize,
    ) -> PyResult<Bound<'py, PyAny>> {
        let r = compare_with_bar(&self.inner, u_max, v_max).map_err(to_py)?;
        let doc = json!({ "agree": r.agree(), "passed": r.passed(), "windows": r.windows });
        to_python(py, &doc)
    }

    fn __repr__(&self) -> String {
        let b = self.inner.bounds();
        format!(
            "StructureFamily(rank={}, convention={}, bounds=({}, {}), maps={})",
            self.inner.basis().len(),
            self.inner.convention(),
            b.max_horizontal,
            b.max_arity,
            self.inner.support().len()
        )
    }
}

/// A two-sided representation of a structure family.
#[pyclass(frozen, module = "dainf")]
struct RepFamily {
    inner: dainf_core::representation::RepFamily,
}

#[pymethods]
impl RepFamily {
    /// The family acting on itself.
    #[staticmethod]
    fn regular(algebra: &StructureFamily) -> Self {
        RepFamily {
            inner: dainf_core::representation::RepFamily::regular(&algebra.inner),
        }
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        match StructureDocument::parse(text).map_err(to_py)? {
            StructureDocument::Representation(inner) => Ok(RepFamily { inner }),
            StructureDocument::Structure(_) => {
                Err(PyValueError::new_err("expected a representation document"))
            }
        }
    }

    fn to_json(&self) -> String {
        StructureDocument::Representation(self.inner.clone()).to_pretty_string()
    }

    /// Twisted-complex and coderivation reports on words of total length `≤ max_length`.
    fn check<'py>(
        &self,
        py: Python<'py>,
        u_max: usize,
        max_length: usize,
    ) -> PyResult<Bound<'py, PyAny>> {
        let report =
            check_rep(&rep_family_from_action(&self.inner), u_max, max_length).map_err(to_py)?;
        let mut doc =
            rep_report_to_json(&report, self.inner.algebra().basis(), self.inner.module());
        doc["passed"] = json!(report.passed());
        to_python(py, &doc)
    }
}

fn generator(kind: &str, u: usize, v: usize) -> PyResult<CooperadGenerator> {
    let kind: GeneratorKind = kind.parse().map_err(to_py)?;
    CooperadGenerator::new(kind, u, v).map_err(to_py)
}

/// One term as `(sign, (i, j), [(p_k, q_k), ...])`.
type TermTuple = (i64, (usize, usize), Vec<(usize, usize)>);

/// `Δ` of a generator as a list of term tuples; `kind` is `mu`, `mu_tilde` or `alpha`.
#[pyfunction]
fn cooperad_delta(kind: &str, u: usize, v: usize) -> PyResult<Vec<TermTuple>> {
    let g = generator(kind, u, v)?;
    Ok(decompose(g)
        .into_iter()
        .map(|t| {
            (
                t.coefficient.to_i64(),
                (t.outer.u, t.outer.v),
                t.inners.iter().map(|c| (c.u, c.v)).collect(),
            )
        })
        .collect())
}

/// The expansion as printed by the command-line tool.
#[pyfunction]
fn cooperad_text(kind: &str, u: usize, v: usize) -> PyResult<String> {
    let g = generator(kind, u, v)?;
    Ok(format_decomposition(g, &decompose(g)))
}

#[pyfunction]
fn cooperad_is_coassociative(kind: &str, u: usize, v: usize) -> PyResult<bool> {
    Ok(coassociativity_defect(generator(kind, u, v)?).is_zero())
}

#[pyfunction]
fn example_ids() -> Vec<&'static str> {
    ExampleId::ALL.iter().map(|id| id.name()).collect()
}

#[pymodule]
fn dainf(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<StructureFamily>()?;
    m.add_class::<RepFamily>()?;
    m.add_function(wrap_pyfunction!(cooperad_delta, m)?)?;
    m.add_function(wrap_pyfunction!(cooperad_text, m)?)?;
    m.add_function(wrap_pyfunction!(cooperad_is_coassociative, m)?)?;
    m.add_function(wrap_pyfunction!(example_ids, m)?)?;
    m.add("TruncationError", m.py().get_type::<TruncationError>())?;
    Ok(())
}
