use rayon::prelude::*;

use super::{Convention, StructureFamily};
use crate::exact::{Bidegree, LinComb, Sign, TensorWord};
use crate::report::RelationReport;
use crate::{Error, Result};

/// One signed composite `m_{outer} ∘ (1^{⊗left} ⊗ m_{inner} ⊗ 1^{⊗right})`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CompositeTerm {
    pub outer: (usize, usize),
    pub inner: (usize, usize),
    pub left: usize,
    pub right: usize,
    pub sign: Sign,
}

/// Which form of the defining relation to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RelationForm {
    /// `Σ (−1)^{rq+t+pj} m_ij(1^r ⊗ m_pq ⊗ 1^t) = 0`.
    Sagave,
    /// `Σ m̃_ij ⋆ m̃_pq = 0`.
    Star,
}

impl RelationForm {
    /// The form that matches a family's convention tag.
    pub fn for_convention(c: Convention) -> RelationForm {
        match c {
            Convention::Sagave => RelationForm::Sagave,
            Convention::Tilde => RelationForm::Star,
        }
    }
}

/// Index set of the `(u, v)` relation with sign `(−1)^{rq+t+pj}`.
pub fn expand_relation(u: usize, v: usize) -> Vec<CompositeTerm> {
    let mut terms = Vec::new();
    for i in 0..=u {
        let p = u - i;
        for j in 1..=v {
            let q = v + 1 - j;
            for r in 0..j {
                let t = j - 1 - r;
                let e = r * q + t + p * j;
                terms.push(CompositeTerm {
                    outer: (i, j),
                    inner: (p, q),
                    left: r,
                    right: t,
                    sign: Sign::from_parity(e as i64),
                });
            }
        }
    }
    terms
}

/// `m̃_ij ⋆ m̃_pq = Σ_{k=1}^{j} (−1)^{i+j+(q−1)(k+j)+p(j−1)} m̃_ij ∘_k m̃_pq`.
pub fn star_product_terms(outer: (usize, usize), inner: (usize, usize)) -> Vec<CompositeTerm> {
    let (i, j) = outer;
    let (p, q) = inner;
    (1..=j)
        .map(|k| {
            let e = i + j + (q - 1) * (k + j) + p * (j - 1);
            CompositeTerm {
                outer,
                inner,
                left: k - 1,
                right: j - k,
                sign: Sign::from_parity(e as i64),
            }
        })
        .collect()
}

/// `Σ_{u=i+p, v=j+q−1} m̃_ij ⋆ m̃_pq`.
pub fn expand_star_relation(u: usize, v: usize) -> Vec<CompositeTerm> {
    let mut terms = Vec::new();
    for i in 0..=u {
        for j in 1..=v {
            terms.extend(star_product_terms((i, j), (u - i, v + 1 - j)));
        }
    }
    terms
}

impl StructureFamily {
    /// `m̃_ij ⋆ m̃_pq`; only defined for tilde-tagged families.
    pub fn star_product(
        &self,
        outer: (usize, usize),
        inner: (usize, usize),
    ) -> Result<Vec<CompositeTerm>> {
        if self.convention() != Convention::Tilde {
            return Err(Error::ConventionMismatch("tilde"));
        }
        Ok(star_product_terms(outer, inner))
    }
}

/// Evaluates a signed sum of composites on one word, with Koszul signs for the inner map.
pub fn evaluate_terms(
    a: &StructureFamily,
    terms: &[CompositeTerm],
    word: &[u32],
) -> LinComb<TensorWord> {
    let basis = a.basis();
    let mut out = LinComb::zero();
    for term in terms {
        let (Some(outer), Some(inner)) = (
            a.map(term.outer.0, term.outer.1),
            a.map(term.inner.0, term.inner.1),
        ) else {
            continue;
        };
        if term.left + term.inner.1 + term.right != word.len() {
            continue;
        }
        let passed: Bidegree = basis.word_bidegree(&word[..term.left]);
        let mid = inner.apply_block(word, term.left, passed);
        for (w, c) in &mid {
            let value = outer.apply_block(w, 0, Bidegree::ZERO);
            out.add_scaled_signed(&value, c, term.sign);
        }
    }
    out.reduced(a.ring())
}

fn check_window(
    a: &StructureFamily,
    u: usize,
    v: usize,
    terms: &[CompositeTerm],
) -> RelationReport {
    let live: Vec<CompositeTerm> = terms
        .iter()
        .copied()
        .filter(|t| a.map(t.outer.0, t.outer.1).is_some() && a.map(t.inner.0, t.inner.1).is_some())
        .collect();
    let words: Vec<TensorWord> = a.basis().words(v).collect();
    let results: Vec<(TensorWord, LinComb<TensorWord>)> = if live.is_empty() {
        words.into_iter().map(|w| (w, LinComb::zero())).collect()
    } else {
        words
            .into_par_iter()
            .map(|w| {
                let r = evaluate_terms(a, &live, &w);
                (w, r)
            })
            .collect()
    };
    RelationReport::collect(format!("relation({u},{v})"), u, v, results)
}

/// Checks every window `u ≤ u_max`, `1 ≤ v ≤ v_max` in the given relation form.
///
/// Fails with a truncation error if the window needs maps beyond the family's bounds.
pub fn check_relations(
    a: &StructureFamily,
    form: RelationForm,
    u_max: usize,
    v_max: usize,
) -> Result<Vec<RelationReport>> {
    let b = a.bounds();
    if u_max > b.max_horizontal || v_max > b.max_arity {
        return Err(Error::TruncationInsufficient {
            u: u_max,
            v: v_max,
            max_horizontal: b.max_horizontal,
            max_arity: b.max_arity,
        });
    }
    let mut reports = Vec::new();
    for u in 0..=u_max {
        for v in 1..=v_max {
            let terms = match form {
                RelationForm::Sagave => expand_relation(u, v),
                RelationForm::Star => expand_star_relation(u, v),
            };
            reports.push(check_window(a, u, v, &terms));
        }
    }
    Ok(reports)
}

/// Checks the derived A∞ relations in the form matching the family's convention tag.
pub fn check_derived_ainfinity(
    a: &StructureFamily,
    u_max: usize,
    v_max: usize,
) -> Result<Vec<RelationReport>> {
    check_relations(
        a,
        RelationForm::for_convention(a.convention()),
        u_max,
        v_max,
    )
}
