use std::collections::BTreeMap;

use rayon::prelude::*;

use super::cofree::{cofree_comultiplication, deconcatenate, CoalgebraElement, CofreeKey};
use crate::exact::{
    desuspension_sign, Bidegree, BigradedBasis, GradedMap, LinComb, Ring, Sign, TensorWord,
};
use crate::report::RelationReport;
use crate::structure::StructureFamily;
use crate::{Error, Result};

/// Coderivations `δ^n` of `T̄c(C)` of bidegree `(−n, 1−n)`, each given by corestrictions `C^{⊗j} → C`.
///
/// Components are known for `n ≤ max_n` and inputs of arity `≤ max_arity`; missing corestrictions are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoderivationFamily {
    basis: BigradedBasis,
    ring: Ring,
    max_n: usize,
    max_arity: usize,
    components: BTreeMap<(usize, usize), GradedMap>,
}

impl CoderivationFamily {
    pub fn new(basis: BigradedBasis, ring: Ring, max_n: usize, max_arity: usize) -> Self {
        CoderivationFamily {
            basis,
            ring,
            max_n,
            max_arity,
            components: BTreeMap::new(),
        }
    }

    pub fn basis(&self) -> &BigradedBasis {
        &self.basis
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn max_n(&self) -> usize {
        self.max_n
    }

    pub fn max_arity(&self) -> usize {
        self.max_arity
    }

    pub fn corestriction(&self, n: usize, j: usize) -> Option<&GradedMap> {
        self.components.get(&(n, j))
    }

    pub fn corestrictions(&self) -> impl Iterator<Item = ((usize, usize), &GradedMap)> {
        self.components.iter().map(|(&k, m)| (k, m))
    }

    pub fn set_corestriction(&mut self, n: usize, j: usize, map: GradedMap) -> Result<()> {
        if n > self.max_n || j > self.max_arity {
            return Err(Error::OutOfBounds {
                i: n,
                j,
                max_horizontal: self.max_n,
                max_arity: self.max_arity,
            });
        }
        let expected = Bidegree::differential(n);
        if map.bidegree() != expected {
            return Err(Error::BidegreeMismatch {
                expected,
                found: map.bidegree(),
            });
        }
        if map.source_arity() != j || map.target_arity() != 1 {
            return Err(Error::ArityMismatch {
                expected: j,
                found: map.source_arity(),
            });
        }
        map.check_homogeneous(&self.basis, &self.basis)?;
        if map.is_zero() {
            self.components.remove(&(n, j));
        } else {
            self.components.insert((n, j), map);
        }
        Ok(())
    }

    /// `δ^n(c_1..c_m) = Σ_{blocks} (−1)^{|δ^n|·|c_1..c_r|} c_1..c_r ⊗ b_{nj}(c_{r+1}..c_{r+j}) ⊗ …`.
    pub fn apply(&self, n: usize, word: &[u32]) -> LinComb<TensorWord> {
        let mut out = LinComb::zero();
        let len = word.len();
        for j in 1..=len {
            let Some(b) = self.components.get(&(n, j)) else {
                continue;
            };
            let mut passed = Bidegree::ZERO;
            for r in 0..=len - j {
                out += &b.apply_block(word, r, passed);
                passed += self.basis.bidegree(word[r]);
            }
        }
        out
    }

    pub fn apply_lincomb(&self, n: usize, x: &LinComb<TensorWord>) -> LinComb<TensorWord> {
        x.flat_map(|w| self.apply(n, w))
    }

    /// Residuals of `Δδ^n − (δ^n⊗1 + 1⊗δ^n)Δ` on every word of arity `≤ max_arity`.
    pub fn check_coderivation(
        &self,
        n: usize,
        max_arity: usize,
    ) -> RelationReport<TensorWord, (TensorWord, TensorWord)> {
        let degree = Bidegree::differential(n);
        let deconcat = |x: &LinComb<TensorWord>| -> LinComb<(TensorWord, TensorWord)> {
            x.flat_map(|w| deconcatenate(w).map(|p| (p, 1.into())).collect())
        };
        let results = (1..=max_arity).flat_map(|l| self.basis.words(l)).map(|w| {
            let x = LinComb::basis(w.clone());
            let lhs = deconcat(&self.apply(n, &w));
            let pairs = deconcat(&x);
            let mut rhs = LinComb::zero();
            for ((a, b), c) in &pairs {
                for (a2, c2) in &self.apply(n, a) {
                    rhs.add_term((a2.clone(), b.clone()), c * c2);
                }
                let sign = degree.koszul(self.basis.word_bidegree(a));
                for (b2, c2) in &self.apply(n, b) {
                    rhs.add_signed((a.clone(), b2.clone()), &(c * c2), sign);
                }
            }
            (w, (lhs - rhs).reduced(&self.ring))
        });
        RelationReport::collect(format!("coderivation({n})"), n, max_arity, results)
    }
}

/// Corestriction `s ∘ m_nj ∘ (s^{−1})^{⊗j}` of each structure map, in the Sagave convention.
pub fn bar_family_from_structure(a: &StructureFamily) -> CoderivationFamily {
    let a = a.to_sagave();
    let suspended = a.basis().shifted(Bidegree::new(0, -1));
    let bounds = a.bounds();
    let mut family = CoderivationFamily::new(
        suspended.clone(),
        a.ring().clone(),
        bounds.max_horizontal,
        bounds.max_arity,
    );
    for ((n, j), m) in a.maps() {
        let mut b = GradedMap::new(j, Bidegree::differential(n)).expect("positive arity");
        for (input, output) in m.entries() {
            let sign = desuspension_sign(input.iter().map(|&c| suspended.bidegree(c)));
            b.insert(input.clone(), output.signed(sign))
                .expect("same shape");
        }
        family.components.insert((n, j), b);
    }
    family
}

/// One row of the frozen table of desuspension signs used by [`bar_family_from_structure`].
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct SignTableEntry {
    pub n: usize,
    pub j: usize,
    pub input: Vec<String>,
    pub sign: i64,
}

/// The desuspension sign for every stored entry of a structure family.
pub fn corestriction_sign_table(a: &StructureFamily) -> Vec<SignTableEntry> {
    let suspended = a.basis().shifted(Bidegree::new(0, -1));
    a.maps()
        .flat_map(|((n, j), m)| {
            let suspended = &suspended;
            m.entries().map(move |(input, _)| SignTableEntry {
                n,
                j,
                input: suspended.word_names(input),
                sign: desuspension_sign(input.iter().map(|&c| suspended.bidegree(c))).to_i64(),
            })
        })
        .collect()
}

/// Residuals of `Σ_{i+p=u} (−1)^i δ^i δ^p` on every word, per `(u, arity)` window.
pub fn check_family_twisted(
    f: &CoderivationFamily,
    u_max: usize,
    arity_max: usize,
) -> Result<Vec<RelationReport>> {
    if u_max > f.max_n || arity_max > f.max_arity {
        return Err(Error::TruncationInsufficient {
            u: u_max,
            v: arity_max,
            max_horizontal: f.max_n,
            max_arity: f.max_arity,
        });
    }
    let mut reports = Vec::new();
    for u in 0..=u_max {
        for v in 1..=arity_max {
            let words: Vec<TensorWord> = f.basis.words(v).collect();
            let results: Vec<_> = words
                .into_par_iter()
                .map(|w| {
                    let mut r = LinComb::zero();
                    for i in 0..=u {
                        let inner = f.apply(u - i, &w);
                        r.add_all_signed(&f.apply_lincomb(i, &inner), Sign::from_parity(i as i64));
                    }
                    (w, r.reduced(&f.ring))
                })
                .collect();
            reports.push(RelationReport::collect(
                format!("twisted({u},{v})"),
                u,
                v,
                results,
            ));
        }
    }
    Ok(reports)
}

/// The coderivation `d` of `k[x] ⊗ T̄c(C)` determined by a family `{δ^n}`.
#[derive(Clone, Copy, Debug)]
pub struct TotalCoderivation<'a> {
    family: &'a CoderivationFamily,
}

/// Builds the total coderivation; components are computed on demand.
pub fn coderivation_from_family(f: &CoderivationFamily) -> TotalCoderivation<'_> {
    TotalCoderivation { family: f }
}

impl TotalCoderivation<'_> {
    /// Coefficient of `x^i` in `d(x^n ⊗ a)`: `Σ_k (−1)^{i(j+k+1) + (n−i)j} δ^{n−i}(a)|_k`.
    pub fn component(&self, n: u32, i: u32, word: &[u32]) -> LinComb<TensorWord> {
        if i > n {
            return LinComb::zero();
        }
        let j = word.len() as i64;
        let mut out = LinComb::zero();
        for (w, c) in &self.family.apply((n - i) as usize, word) {
            let k = w.arity() as i64;
            let e = i as i64 * (j + k + 1) + (n - i) as i64 * j;
            out.add_signed(w.clone(), c, Sign::from_parity(e));
        }
        out
    }

    pub fn apply(&self, el: &CoalgebraElement) -> CoalgebraElement {
        let mut out = LinComb::zero();
        for (key, c) in el {
            for i in 0..=key.xpow {
                for (w, c2) in &self.component(key.xpow, i, &key.word) {
                    out.add_term(CofreeKey::new(i, w.clone()), c * c2);
                }
            }
        }
        out
    }

    /// `(−1)^{nj} π₀ d(x^n ⊗ a)`, which recovers `δ^n(a)`.
    pub fn reconstruct(&self, n: u32, word: &[u32]) -> LinComb<TensorWord> {
        let sign = Sign::from_parity(n as i64 * word.len() as i64);
        self.component(n, 0, word).signed(sign)
    }

    /// Residuals of `Δd − (d⊗1 + 1⊗d)Δ` on one element.
    pub fn coderivation_defect(&self, el: &CoalgebraElement) -> LinComb<(CofreeKey, CofreeKey)> {
        let basis = &self.family.basis;
        let lhs = cofree_comultiplication(&self.apply(el), basis);
        let pairs = cofree_comultiplication(el, basis);
        let d_left = super::cofree::tensor_left(&pairs, |x| self.apply(&LinComb::basis(x.clone())));
        let d_right = super::cofree::tensor_right(
            &pairs,
            Bidegree::new(0, 1),
            |x| super::cofree::key_bidegree(x, basis),
            |y| self.apply(&LinComb::basis(y.clone())),
        );
        lhs - d_left - d_right
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bar::cofree::cofree_f;
    use crate::catalog::{build, ExampleId};
    use crate::report::all_passed;
    use crate::structure::{check_derived_ainfinity, Bounds, Convention};

    fn elements(basis: &BigradedBasis, max_x: u32, max_arity: usize) -> Vec<CofreeKey> {
        let mut out = Vec::new();
        for n in 0..=max_x {
            for l in 1..=max_arity {
                out.extend(basis.words(l).map(|w| CofreeKey::new(n, w)));
            }
        }
        out
    }

    #[test]
    fn zero_family_gives_zero() {
        let b = BigradedBasis::new([("a", Bidegree::ZERO)]).unwrap();
        let f = CoderivationFamily::new(b.clone(), Ring::Integers, 2, 3);
        let d = coderivation_from_family(&f);
        for k in elements(&b, 2, 3) {
            assert!(d.apply(&LinComb::basis(k)).is_zero());
        }
        assert!(all_passed(&check_family_twisted(&f, 2, 3).unwrap()));
    }

    #[test]
    fn single_differential_acts_diagonally() {
        // Only δ^0: d(x^n ⊗ a) has only the x^n component, equal to (−1)^{n(j+k+1)} δ^0(a).
        let b =
            BigradedBasis::new([("a", Bidegree::new(0, 0)), ("b", Bidegree::new(0, 1))]).unwrap();
        let mut f = CoderivationFamily::new(b.clone(), Ring::Integers, 0, 1);
        let mut d0 = GradedMap::new(1, Bidegree::differential(0)).unwrap();
        d0.set_by_names(&b, &["a"], "b", 1).unwrap();
        f.set_corestriction(0, 1, d0).unwrap();
        let d = coderivation_from_family(&f);
        for k in elements(&b, 3, 3) {
            let out = d.apply(&LinComb::basis(k.clone()));
            assert!(out.keys().all(|o| o.xpow == k.xpow));
            let j = k.word.arity() as i64;
            let expected = f
                .apply(0, &k.word)
                .signed(Sign::from_parity(k.xpow as i64 * (2 * j + 1)));
            assert_eq!(d.component(k.xpow, k.xpow, &k.word), expected);
        }
    }

    #[test]
    fn only_differential_squares_to_zero_iff_its_square_does() {
        let b = BigradedBasis::new([
            ("a", Bidegree::new(0, 0)),
            ("b", Bidegree::new(0, 1)),
            ("c", Bidegree::new(0, 2)),
        ])
        .unwrap();
        let bounds = Bounds {
            max_horizontal: 0,
            max_arity: 1,
        };
        let mut a = StructureFamily::new(b, Ring::Integers, bounds, Convention::Sagave);
        a.set_by_names(0, 1, &["a"], "b", 1).unwrap();
        let f = bar_family_from_structure(&a);
        assert!(all_passed(&check_family_twisted(&f, 0, 1).unwrap()));
        a.set_by_names(0, 1, &["b"], "c", 1).unwrap();
        let f = bar_family_from_structure(&a);
        assert!(!all_passed(&check_family_twisted(&f, 0, 1).unwrap()));
    }

    #[test]
    fn rank3_bar_family_is_twisted() {
        let a = build(ExampleId::Rank3Derived, 5).unwrap();
        let f = bar_family_from_structure(&a);
        assert!(all_passed(&check_family_twisted(&f, 2, 5).unwrap()));
        for n in 0..=2 {
            let r = f.check_coderivation(n, 4);
            assert!(r.passed(), "{r:?}");
        }
    }

    #[test]
    fn total_coderivation_properties_on_rank3() {
        let a = build(ExampleId::Rank3Derived, 6).unwrap();
        let f = bar_family_from_structure(&a);
        let d = coderivation_from_family(&f);
        for k in elements(f.basis(), 3, 4) {
            let el = LinComb::basis(k.clone());
            // d f = −f d.
            assert_eq!(d.apply(&cofree_f(&el)), -cofree_f(&d.apply(&el)), "{k:?}");
            assert!(d.coderivation_defect(&el).is_zero(), "{k:?}");
            assert!(d.apply(&d.apply(&el)).is_zero(), "{k:?}");
            assert_eq!(
                d.reconstruct(k.xpow, &k.word),
                f.apply(k.xpow as usize, &k.word)
            );
        }
    }

    #[test]
    fn modified_example_does_not_square_to_zero() {
        let a = build(ExampleId::Rank3ModifiedM01, 6).unwrap();
        assert!(!all_passed(&check_derived_ainfinity(&a, 1, 3).unwrap()));
        let f = bar_family_from_structure(&a);
        let d = coderivation_from_family(&f);
        let nonzero = elements(f.basis(), 1, 3)
            .into_iter()
            .any(|k| !d.apply(&d.apply(&LinComb::basis(k))).is_zero());
        assert!(nonzero);
    }
}
