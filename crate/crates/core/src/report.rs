//! Relation reports and their JSON rendering.

use serde_json::{json, Map, Value};

use crate::exact::{BigradedBasis, LinComb, Scalar, TensorWord};

/// At most this many failing inputs are kept per report.
pub const MAX_RECORDED_FAILURES: usize = 100;

/// Result of checking one relation window over every input in it.
///
/// `residuals` holds the first [`MAX_RECORDED_FAILURES`] nonzero residuals in input order;
/// `failure_count` counts all of them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationReport<I: Ord = TensorWord, O: Ord = TensorWord> {
    pub label: String,
    pub u: usize,
    pub v: usize,
    pub inputs_checked: usize,
    pub failure_count: usize,
    pub residuals: Vec<(I, LinComb<O>)>,
}

impl<I: Ord, O: Ord + Clone> RelationReport<I, O> {
    /// Builds a report from `(input, residual)` pairs in input order; zero residuals are skipped.
    pub fn collect(
        label: impl Into<String>,
        u: usize,
        v: usize,
        results: impl IntoIterator<Item = (I, LinComb<O>)>,
    ) -> Self {
        let mut report = RelationReport {
            label: label.into(),
            u,
            v,
            inputs_checked: 0,
            failure_count: 0,
            residuals: Vec::new(),
        };
        for (input, residual) in results {
            report.inputs_checked += 1;
            if residual.is_zero() {
                continue;
            }
            report.failure_count += 1;
            if report.residuals.len() < MAX_RECORDED_FAILURES {
                report.residuals.push((input, residual));
            }
        }
        report
    }

    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }

    pub fn residual(&self, input: &I) -> Option<&LinComb<O>> {
        self.residuals
            .iter()
            .find(|(i, _)| i == input)
            .map(|(_, r)| r)
    }
}

/// True when every report passed.
pub fn all_passed<I: Ord, O: Ord + Clone>(reports: &[RelationReport<I, O>]) -> bool {
    reports.iter().all(RelationReport::passed)
}

/// JSON integer when it fits in 53 bits, decimal string otherwise.
pub fn scalar_to_json(c: &Scalar) -> Value {
    const SAFE: i64 = (1 << 53) - 1;
    match i64::try_from(c) {
        Ok(n) if (-SAFE..=SAFE).contains(&n) => json!(n),
        _ => Value::String(c.to_string()),
    }
}

/// `[{"coeff": c, "word": [names]}]` in key order.
pub fn lincomb_to_json(x: &LinComb<TensorWord>, basis: &BigradedBasis) -> Value {
    Value::Array(
        x.iter()
            .map(|(w, c)| json!({"coeff": scalar_to_json(c), "word": basis.word_names(w)}))
            .collect(),
    )
}

/// Renders keys of any type through `render`.
pub fn report_to_json<I: Ord, O: Ord + Clone>(
    report: &RelationReport<I, O>,
    render_input: impl Fn(&I) -> Value,
    render_output: impl Fn(&O) -> Value,
) -> Value {
    let residuals: Vec<Value> = report
        .residuals
        .iter()
        .map(|(input, residual)| {
            let terms: Vec<Value> = residual
                .iter()
                .map(|(k, c)| json!({"coeff": scalar_to_json(c), "word": render_output(k)}))
                .collect();
            json!({"input": render_input(input), "residual": terms})
        })
        .collect();
    let mut obj = Map::new();
    obj.insert("label".into(), json!(report.label));
    obj.insert("u".into(), json!(report.u));
    obj.insert("v".into(), json!(report.v));
    obj.insert("passed".into(), json!(report.passed()));
    obj.insert("inputs_checked".into(), json!(report.inputs_checked));
    obj.insert("failure_count".into(), json!(report.failure_count));
    obj.insert("residuals".into(), Value::Array(residuals));
    Value::Object(obj)
}

/// Report over plain tensor words of one basis.
pub fn word_report_to_json(report: &RelationReport, basis: &BigradedBasis) -> Value {
    report_to_json(
        report,
        |w| json!(basis.word_names(w)),
        |w| json!(basis.word_names(w)),
    )
}

/// `c₁·k₁ + c₂·k₂ - …`, with unit coefficients omitted and `0` for the zero combination.
pub fn format_terms<K: Ord + Clone>(x: &LinComb<K>, render: impl Fn(&K) -> String) -> String {
    if x.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (key, c)) in x.iter().enumerate() {
        let neg = c.sign() == num_bigint::Sign::Minus;
        let mag = if neg { -c } else { c.clone() };
        match (k, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        if mag != Scalar::from(1) {
            out.push_str(&format!("{mag}·"));
        }
        out.push_str(&render(key));
    }
    out
}

/// A combination of words of one basis, factors joined by `⊗`.
pub fn format_lincomb(x: &LinComb<TensorWord>, basis: &BigradedBasis) -> String {
    format_terms(x, |w| basis.format_word(w))
}

/// `PASS label (n inputs)` or `FAIL label: f of n inputs` followed by one `  input ↦ residual` line per recorded failure.
pub fn report_to_text<I: Ord, O: Ord + Clone>(
    report: &RelationReport<I, O>,
    render_input: impl Fn(&I) -> String,
    render_output: impl Fn(&O) -> String,
) -> String {
    if report.passed() {
        return format!("PASS {} ({} inputs)\n", report.label, report.inputs_checked);
    }
    let mut out = format!(
        "FAIL {}: {} of {} inputs\n",
        report.label, report.failure_count, report.inputs_checked
    );
    for (input, residual) in &report.residuals {
        out.push_str(&format!(
            "  {} ↦ {}\n",
            render_input(input),
            format_terms(residual, &render_output)
        ));
    }
    if report.failure_count > report.residuals.len() {
        out.push_str(&format!(
            "  … {} more\n",
            report.failure_count - report.residuals.len()
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn only_the_first_hundred_failures_are_kept() {
        let results = (0..250u32).map(|i| (i, LinComb::term(i, Scalar::from(1))));
        let r: RelationReport<u32, u32> = RelationReport::collect("x", 0, 1, results);
        assert_eq!(r.failure_count, 250);
        assert_eq!(r.residuals.len(), MAX_RECORDED_FAILURES);
        assert!(!r.passed());
    }

    #[test]
    fn large_integers_become_strings() {
        assert_eq!(scalar_to_json(&Scalar::from(-7)), json!(-7));
        let big = Scalar::from(1u64 << 60);
        assert_eq!(scalar_to_json(&big), json!("1152921504606846976"));
        assert_eq!(
            scalar_to_json(&Scalar::from((1i64 << 53) - 1)),
            json!(9007199254740991i64)
        );
        assert_eq!(
            scalar_to_json(&Scalar::from(1i64 << 53)),
            json!("9007199254740992")
        );
    }
}
