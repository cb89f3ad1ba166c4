use rayon::prelude::*;

use super::bimodule::{
    bicomodule_coactions, bimodule_words, BimoduleElement, BimoduleKey, BimoduleWord, Coactions,
};
use super::family::RepCoderivationFamily;
use crate::bar::{
    coderivation_from_family, key_bidegree, tensor_left, tensor_right, CofreeKey, TotalCoderivation,
};
use crate::exact::{Bidegree, LinComb, Sign, TensorWord};
use crate::report::{all_passed, RelationReport};
use crate::{Error, Result};

/// A term of a coaction residual: an algebra word split off on the left or on the right.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CoactionTerm {
    Left(TensorWord, BimoduleWord),
    Right(BimoduleWord, TensorWord),
}

/// Outcome of [`check_rep`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepReport {
    /// `Σ_{i+p=u} (−1)^i g_i g_p = 0`, per `(u, length)`.
    pub twisted: Vec<RelationReport<BimoduleWord, BimoduleWord>>,
    /// Each `g_n` is a coderivation of the bicomodule over `δ^n`, per `(n, length)`.
    pub coderivation: Vec<RelationReport<BimoduleWord, CoactionTerm>>,
}

impl RepReport {
    pub fn passed(&self) -> bool {
        all_passed(&self.twisted) && all_passed(&self.coderivation)
    }
}

/// Checks both conditions on every bimodule word of total length `≤ max_arity`.
pub fn check_rep(g: &RepCoderivationFamily, u_max: usize, max_arity: usize) -> Result<RepReport> {
    let alg = g.algebra();
    if u_max > alg.max_n() || max_arity > alg.max_arity() {
        return Err(Error::TruncationInsufficient {
            u: u_max,
            v: max_arity,
            max_horizontal: alg.max_n(),
            max_arity: alg.max_arity(),
        });
    }
    let ring = alg.ring();
    let mut twisted = Vec::new();
    let mut coderivation = Vec::new();
    for len in 1..=max_arity {
        let words = bimodule_words(alg.basis(), g.module(), len);
        for u in 0..=u_max {
            let results: Vec<_> = words
                .par_iter()
                .map(|w| {
                    let mut r = LinComb::zero();
                    for i in 0..=u {
                        let inner = g.apply(u - i, w);
                        r.add_all_signed(&g.apply_lincomb(i, &inner), Sign::from_parity(i as i64));
                    }
                    (w.clone(), r.reduced(ring))
                })
                .collect();
            twisted.push(RelationReport::collect(
                format!("rep_twisted({u},{len})"),
                u,
                len,
                results,
            ));
        }
        for n in 0..=u_max {
            let results: Vec<_> = words
                .par_iter()
                .map(|w| (w.clone(), coaction_defect(g, n, w).reduced(ring)))
                .collect();
            coderivation.push(RelationReport::collect(
                format!("rep_coderivation({n},{len})"),
                n,
                len,
                results,
            ));
        }
    }
    Ok(RepReport {
        twisted,
        coderivation,
    })
}

fn x_free(w: &BimoduleWord) -> BimoduleElement {
    LinComb::basis(BimoduleKey::new(0, w.clone()))
}

/// `Δ^L g_n − (δ^n⊗1 + 1⊗g_n)Δ^L` and `Δ^R g_n − (g_n⊗1 + 1⊗δ^n)Δ^R` on one word, without `x`.
fn coaction_defect(g: &RepCoderivationFamily, n: usize, w: &BimoduleWord) -> LinComb<CoactionTerm> {
    let bases = g.bases();
    let alg = g.algebra();
    let degree = Bidegree::differential(n);
    let image = g.apply(n, w).map_keys(|w| BimoduleKey::new(0, w.clone()));
    let lhs = bicomodule_coactions(&image, bases);
    let pairs = bicomodule_coactions(&x_free(w), bases);

    let mut out: LinComb<CoactionTerm> = LinComb::zero();
    for ((a, m), c) in &lhs.left {
        out.add_term(
            CoactionTerm::Left(a.word.clone(), m.word.clone()),
            c.clone(),
        );
    }
    for ((m, b), c) in &lhs.right {
        out.add_term(
            CoactionTerm::Right(m.word.clone(), b.word.clone()),
            c.clone(),
        );
    }
    for ((a, m), c) in &pairs.left {
        for (a2, c2) in &alg.apply(n, &a.word) {
            out.add_signed(
                CoactionTerm::Left(a2.clone(), m.word.clone()),
                &(c * c2),
                Sign::Minus,
            );
        }
        let sign = -degree.koszul(bases.algebra.word_bidegree(&a.word));
        for (m2, c2) in &g.apply(n, &m.word) {
            out.add_signed(
                CoactionTerm::Left(a.word.clone(), m2.clone()),
                &(c * c2),
                sign,
            );
        }
    }
    for ((m, b), c) in &pairs.right {
        for (m2, c2) in &g.apply(n, &m.word) {
            out.add_signed(
                CoactionTerm::Right(m2.clone(), b.word.clone()),
                &(c * c2),
                Sign::Minus,
            );
        }
        let sign = -degree.koszul(bases.word_bidegree(&m.word));
        for (b2, c2) in &alg.apply(n, &b.word) {
            out.add_signed(
                CoactionTerm::Right(m.word.clone(), b2.clone()),
                &(c * c2),
                sign,
            );
        }
    }
    out
}

/// The coderivation `g` of `k[x] ⊗ T̄c(sA) ⊗ sM ⊗ T̄c(sA)` determined by a family `{g_n}`.
#[derive(Clone, Copy, Debug)]
pub struct TotalRepCoderivation<'a> {
    family: &'a RepCoderivationFamily,
    algebra: TotalCoderivation<'a>,
}

pub fn rep_coderivation_from_family(g: &RepCoderivationFamily) -> TotalRepCoderivation<'_> {
    TotalRepCoderivation {
        family: g,
        algebra: coderivation_from_family(g.algebra()),
    }
}

impl TotalRepCoderivation<'_> {
    /// Coefficient of `x^i` in `g(x^n ⊗ w)`: `Σ_k (−1)^{i(j+k+1) + (n−i)j} g_{n−i}(w)|_k`.
    pub fn component(&self, n: u32, i: u32, word: &BimoduleWord) -> LinComb<BimoduleWord> {
        if i > n {
            return LinComb::zero();
        }
        let j = word.len() as i64;
        let mut out = LinComb::zero();
        for (w, c) in &self.family.apply((n - i) as usize, word) {
            let k = w.len() as i64;
            let e = i as i64 * (j + k + 1) + (n - i) as i64 * j;
            out.add_signed(w.clone(), c, Sign::from_parity(e));
        }
        out
    }

    pub fn apply(&self, el: &BimoduleElement) -> BimoduleElement {
        let mut out = LinComb::zero();
        for (key, c) in el {
            for i in 0..=key.xpow {
                for (w, c2) in &self.component(key.xpow, i, &key.word) {
                    out.add_term(BimoduleKey::new(i, w.clone()), c * c2);
                }
            }
        }
        out
    }

    /// `(−1)^{nj} π₀ g(x^n ⊗ w)`, which recovers `g_n(w)`.
    pub fn reconstruct(&self, n: u32, word: &BimoduleWord) -> LinComb<BimoduleWord> {
        let sign = Sign::from_parity(n as i64 * word.len() as i64);
        self.component(n, 0, word).signed(sign)
    }

    /// Residuals of `Δ^L g − (d⊗1 + 1⊗g)Δ^L` and `Δ^R g − (g⊗1 + 1⊗d)Δ^R` on one element.
    pub fn coderivation_defect(&self, el: &BimoduleElement) -> Coactions {
        let bases = self.family.bases();
        let total = Bidegree::new(0, 1);
        let lhs = bicomodule_coactions(&self.apply(el), bases);
        let pairs = bicomodule_coactions(el, bases);
        let basis = bases.algebra;
        let d = |x: &CofreeKey| self.algebra.apply(&LinComb::basis(x.clone()));
        let g = |y: &BimoduleKey| self.apply(&LinComb::basis(y.clone()));
        let left = lhs.left
            - tensor_left(&pairs.left, d)
            - tensor_right(&pairs.left, total, |x| key_bidegree(x, basis), g);
        let right = lhs.right
            - tensor_left(&pairs.right, g)
            - tensor_right(&pairs.right, total, |x| bases.key_bidegree(x), d);
        Coactions { left, right }
    }
}
