use serde_json::{json, Value};

use super::bimodule::BimoduleWord;
use super::check::{CoactionTerm, RepReport};
use crate::exact::BigradedBasis;
use crate::report::{report_to_json, report_to_text};

/// `a⊗[m]⊗b`: the module factor in brackets.
pub fn format_bimodule_word(
    w: &BimoduleWord,
    algebra: &BigradedBasis,
    module: &BigradedBasis,
) -> String {
    let mut parts: Vec<&str> = w.left.iter().map(|&a| algebra.name(a)).collect();
    let m = format!("[{}]", module.name(w.module));
    parts.push(&m);
    parts.extend(w.right.iter().map(|&a| algebra.name(a)));
    parts.join("⊗")
}

pub fn bimodule_word_to_json(
    w: &BimoduleWord,
    algebra: &BigradedBasis,
    module: &BigradedBasis,
) -> Value {
    json!({
        "left": algebra.word_names(&w.left),
        "module": module.name(w.module),
        "right": algebra.word_names(&w.right),
    })
}

fn format_term(t: &CoactionTerm, algebra: &BigradedBasis, module: &BigradedBasis) -> String {
    match t {
        CoactionTerm::Left(a, m) => format!(
            "{} | {}",
            algebra.format_word(a),
            format_bimodule_word(m, algebra, module)
        ),
        CoactionTerm::Right(m, b) => format!(
            "{} | {}",
            format_bimodule_word(m, algebra, module),
            algebra.format_word(b)
        ),
    }
}

/// `{"twisted": [...], "coderivation": [...]}` with residual inputs as bimodule words.
pub fn rep_report_to_json(
    report: &RepReport,
    algebra: &BigradedBasis,
    module: &BigradedBasis,
) -> Value {
    let word = |w: &BimoduleWord| bimodule_word_to_json(w, algebra, module);
    let term = |t: &CoactionTerm| match t {
        CoactionTerm::Left(a, m) => {
            json!({ "side": "left", "algebra": algebra.word_names(a), "bimodule": word(m) })
        }
        CoactionTerm::Right(m, b) => {
            json!({ "side": "right", "algebra": algebra.word_names(b), "bimodule": word(m) })
        }
    };
    json!({
        "twisted": report.twisted.iter().map(|r| report_to_json(r, word, word)).collect::<Vec<_>>(),
        "coderivation": report.coderivation.iter().map(|r| report_to_json(r, word, term)).collect::<Vec<_>>(),
    })
}

pub fn rep_report_to_text(
    report: &RepReport,
    algebra: &BigradedBasis,
    module: &BigradedBasis,
) -> String {
    let word = |w: &BimoduleWord| format_bimodule_word(w, algebra, module);
    let mut s = String::new();
    for r in &report.twisted {
        s.push_str(&report_to_text(r, word, word));
    }
    for r in &report.coderivation {
        s.push_str(&report_to_text(r, word, |t| {
            format_term(t, algebra, module)
        }));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Bidegree;

    #[test]
    fn bracketed_module_factor() {
        let a = BigradedBasis::new([("a", Bidegree::ZERO), ("b", Bidegree::ZERO)]).unwrap();
        let m = BigradedBasis::new([("m", Bidegree::ZERO)]).unwrap();
        let w = BimoduleWord::new(vec![0], 0, vec![1, 0]);
        assert_eq!(format_bimodule_word(&w, &a, &m), "a⊗[m]⊗b⊗a");
        assert_eq!(
            bimodule_word_to_json(&w, &a, &m),
            json!({"left": ["a"], "module": "m", "right": ["b", "a"]})
        );
    }
}
