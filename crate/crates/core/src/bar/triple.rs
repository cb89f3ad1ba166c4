use std::collections::HashMap;

use super::cofree::{cofree_comultiplication, cofree_f, key_bidegree, CofreeKey};
use crate::exact::{Bidegree, BigradedBasis, GradedMap, LinComb, Ring, Sign, TensorWord};
use crate::report::RelationReport;
use crate::{Error, Result};

/// A coalgebra `(C, Δ, f)` on a finite basis: `Δ` of bidegree `(0,0)`, `f` of bidegree `(1,1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoalgebraTriple {
    basis: BigradedBasis,
    ring: Ring,
    delta: GradedMap,
    f: GradedMap,
}

/// Residuals of the triple axioms on every basis element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleReport {
    pub coassociativity: RelationReport,
    pub f_left: RelationReport,
    pub f_right: RelationReport,
}

impl TripleReport {
    pub fn passed(&self) -> bool {
        self.coassociativity.passed() && self.f_left.passed() && self.f_right.passed()
    }
}

pub const F_BIDEGREE: Bidegree = Bidegree::new(1, 1);

impl CoalgebraTriple {
    pub fn new(basis: BigradedBasis, ring: Ring, delta: GradedMap, f: GradedMap) -> Result<Self> {
        let shapes = [(&delta, 2, Bidegree::ZERO), (&f, 1, F_BIDEGREE)];
        for (map, target, degree) in shapes {
            if map.source_arity() != 1 || map.target_arity() != target {
                return Err(Error::ArityMismatch {
                    expected: target,
                    found: map.target_arity(),
                });
            }
            if map.bidegree() != degree {
                return Err(Error::BidegreeMismatch {
                    expected: degree,
                    found: map.bidegree(),
                });
            }
            map.check_homogeneous(&basis, &basis)?;
        }
        Ok(CoalgebraTriple {
            basis,
            ring,
            delta,
            f,
        })
    }

    /// The finite subcoalgebra of `k[x] ⊗ T̄c(C)` spanned by `x^n ⊗ a` with `n ≤ max_xpow`, arity `≤ max_arity`.
    ///
    /// Basis elements are named `x^n[a⊗b]` and ordered by x-power, then arity, then word.
    pub fn truncated_cofree(
        cogenerators: &BigradedBasis,
        max_xpow: u32,
        max_arity: usize,
    ) -> Result<Self> {
        let mut keys = Vec::new();
        for n in 0..=max_xpow {
            for l in 1..=max_arity {
                keys.extend(cogenerators.words(l).map(|w| CofreeKey::new(n, w)));
            }
        }
        let basis = BigradedBasis::new(keys.iter().map(|k| {
            (
                format!("x^{}[{}]", k.xpow, cogenerators.format_word(&k.word)),
                key_bidegree(k, cogenerators),
            )
        }))?;
        let positions: HashMap<&CofreeKey, u32> = keys
            .iter()
            .enumerate()
            .map(|(n, k)| (k, n as u32))
            .collect();
        let index = |k: &CofreeKey| positions[k];
        let mut delta = GradedMap::with_target_arity(1, 2, Bidegree::ZERO)?;
        let mut f = GradedMap::new(1, F_BIDEGREE)?;
        for key in &keys {
            let el = LinComb::basis(key.clone());
            let d = cofree_comultiplication(&el, cogenerators)
                .map_keys(|(l, r)| TensorWord::from_vec(vec![index(l), index(r)]));
            delta.insert(TensorWord::single(index(key)), d)?;
            let fx = cofree_f(&el).map_keys(|k| TensorWord::single(index(k)));
            f.insert(TensorWord::single(index(key)), fx)?;
        }
        CoalgebraTriple::new(basis, Ring::Integers, delta, f)
    }

    pub fn basis(&self) -> &BigradedBasis {
        &self.basis
    }

    pub fn delta(&self) -> &GradedMap {
        &self.delta
    }

    pub fn f(&self) -> &GradedMap {
        &self.f
    }

    /// Applies `map` at every listed 1-based position of every word, summing.
    fn at(&self, map: &GradedMap, x: &LinComb<TensorWord>, position: usize) -> LinComb<TensorWord> {
        map.apply_at_lincomb(x, position, &self.basis)
            .expect("positions within word length")
    }

    /// `Δ^{(n)}`: `Δ^{(0)} = id`, `Δ^{(n)} = (Δ ⊗ 1^{⊗(n−1)}) Δ^{(n−1)}`.
    pub fn iterated_delta(&self, x: &LinComb<TensorWord>, n: usize) -> LinComb<TensorWord> {
        (0..n).fold(x.clone(), |acc, _| self.at(&self.delta, &acc, 1))
    }

    /// `f^i` on the factor at `position`.
    fn f_power_at(
        &self,
        x: &LinComb<TensorWord>,
        i: usize,
        position: usize,
    ) -> LinComb<TensorWord> {
        (0..i).fold(x.clone(), |acc, _| self.at(&self.f, &acc, position))
    }

    /// Checks `(Δ⊗1)Δ = (1⊗Δ)Δ` and `(f⊗1)Δ = (1⊗f)Δ = Δf` on every basis element.
    pub fn check(&self) -> TripleReport {
        let elements: Vec<_> = self.basis.words(1).collect();
        let run = |label: &str,
                   lhs: &dyn Fn(&LinComb<TensorWord>) -> LinComb<TensorWord>,
                   rhs: &dyn Fn(&LinComb<TensorWord>) -> LinComb<TensorWord>| {
            let results = elements.iter().map(|e| {
                let x = LinComb::basis(e.clone());
                (e.clone(), (lhs(&x) - rhs(&x)).reduced(&self.ring))
            });
            RelationReport::collect(label, 0, 1, results)
        };
        let d = |x: &LinComb<TensorWord>| self.at(&self.delta, x, 1);
        TripleReport {
            coassociativity: run(
                "coassociativity",
                &|x| self.at(&self.delta, &d(x), 1),
                &|x| self.at(&self.delta, &d(x), 2),
            ),
            f_left: run("f_left", &|x| self.at(&self.f, &d(x), 1), &|x| {
                d(&self.at(&self.f, x, 1))
            }),
            f_right: run("f_right", &|x| self.at(&self.f, &d(x), 2), &|x| {
                d(&self.at(&self.f, x, 1))
            }),
        }
    }

    /// `(−1)^{i(j+1)} (f^{⊗i} ⊗ 1^{⊗(j−i)}) Δ^{(j−1)}` for `i ≤ j`; `f^i` on the first factor otherwise.
    pub fn coaction_by_factors(
        &self,
        x: &LinComb<TensorWord>,
        i: usize,
        j: usize,
    ) -> LinComb<TensorWord> {
        let mut y = self.iterated_delta(x, j - 1);
        if i <= j {
            for position in 1..=i {
                y = self.f_power_at(&y, 1, position);
            }
        } else {
            y = self.f_power_at(&y, i, 1);
        }
        y.signed(Sign::from_parity((i * (j + 1)) as i64))
    }
}

/// `ρ_{i,j} = (−1)^{i(j+1)} Δ^{(j−1)} f^i` as a map from basis elements to words of arity `j`.
pub fn coaction_from_triple(t: &CoalgebraTriple, i: usize, j: usize) -> Result<GradedMap> {
    if j == 0 {
        return Err(Error::ZeroArity);
    }
    let n = i as i64;
    let mut rho = GradedMap::with_target_arity(1, j, F_BIDEGREE.scale(n))?;
    let sign = Sign::from_parity(n * (j as i64 + 1));
    for e in t.basis.words(1) {
        let x = LinComb::basis(e.clone());
        let value = t
            .iterated_delta(&t.f_power_at(&x, i, 1), j - 1)
            .signed(sign);
        rho.insert(e, value)?;
    }
    Ok(rho)
}
