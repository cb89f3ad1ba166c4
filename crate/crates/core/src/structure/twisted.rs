use std::collections::BTreeMap;

use super::StructureFamily;
use crate::exact::{Bidegree, BigradedBasis, GradedMap, LinComb, Ring, Sign, TensorWord};
use crate::report::RelationReport;
use crate::{Error, Result};

/// A bigraded module with maps `d_i` of bidegree `(−i, 1−i)`, known for `i ≤ bound`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistedComplex {
    basis: BigradedBasis,
    ring: Ring,
    differentials: BTreeMap<usize, GradedMap>,
    bound: usize,
}

impl TwistedComplex {
    pub fn new(basis: BigradedBasis, ring: Ring, bound: usize) -> Self {
        TwistedComplex {
            basis,
            ring,
            differentials: BTreeMap::new(),
            bound,
        }
    }

    pub fn basis(&self) -> &BigradedBasis {
        &self.basis
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn differential(&self, i: usize) -> Option<&GradedMap> {
        self.differentials.get(&i)
    }

    pub fn set_differential(&mut self, i: usize, d: GradedMap) -> Result<()> {
        if i > self.bound {
            return Err(Error::OutOfBounds {
                i,
                j: 1,
                max_horizontal: self.bound,
                max_arity: 1,
            });
        }
        let expected = Bidegree::differential(i);
        if d.bidegree() != expected {
            return Err(Error::BidegreeMismatch {
                expected,
                found: d.bidegree(),
            });
        }
        if d.source_arity() != 1 || d.target_arity() != 1 {
            return Err(Error::ArityMismatch {
                expected: 1,
                found: d.source_arity(),
            });
        }
        d.check_homogeneous(&self.basis, &self.basis)?;
        if d.is_zero() {
            self.differentials.remove(&i);
        } else {
            self.differentials.insert(i, d);
        }
        Ok(())
    }

    fn apply(&self, i: usize, x: &LinComb<TensorWord>) -> LinComb<TensorWord> {
        match self.differentials.get(&i) {
            Some(d) => x.flat_map(|w| d.apply_word(w)),
            None => LinComb::zero(),
        }
    }
}

impl StructureFamily {
    /// The maps `m_i1` as a twisted complex. Arity-one maps agree in both conventions.
    pub fn underlying_twisted_complex(&self) -> TwistedComplex {
        let mut t = TwistedComplex::new(
            self.basis().clone(),
            self.ring().clone(),
            self.bounds().max_horizontal,
        );
        for ((i, j), m) in self.maps() {
            if j == 1 {
                t.differentials.insert(i, m.clone());
            }
        }
        t
    }
}

fn truncation(u_max: usize, bound: usize) -> Error {
    Error::TruncationInsufficient {
        u: u_max,
        v: 1,
        max_horizontal: bound,
        max_arity: 1,
    }
}

/// Residuals of `Σ_{i+p=u} (−1)^i d_i d_p` on every basis element, for `u ≤ u_max`.
pub fn check_twisted_complex(t: &TwistedComplex, u_max: usize) -> Result<Vec<RelationReport>> {
    if u_max > t.bound {
        return Err(truncation(u_max, t.bound));
    }
    Ok((0..=u_max)
        .map(|u| {
            let results = t.basis.words(1).map(|x| {
                let mut r = LinComb::zero();
                for i in 0..=u {
                    let inner = t.apply(u - i, &LinComb::basis(x.clone()));
                    r.add_scaled_signed(
                        &t.apply(i, &inner),
                        &1.into(),
                        Sign::from_parity(i as i64),
                    );
                }
                (x, r.reduced(&t.ring))
            });
            RelationReport::collect(format!("twisted_complex({u})"), u, 1, results)
        })
        .collect())
}

/// Components `f_i` of bidegree `(−i, −i)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TwistedMap {
    components: BTreeMap<usize, GradedMap>,
}

impl TwistedMap {
    pub fn new() -> Self {
        Self::default()
    }

    /// `f_0 = id`, all other components zero.
    pub fn identity(basis: &BigradedBasis) -> Self {
        let mut f = Self::new();
        f.components.insert(0, GradedMap::identity(basis));
        f
    }

    pub fn component(&self, i: usize) -> Option<&GradedMap> {
        self.components.get(&i)
    }

    pub fn components(&self) -> impl Iterator<Item = (usize, &GradedMap)> {
        self.components.iter().map(|(&i, m)| (i, m))
    }

    pub fn set_component(&mut self, i: usize, f: GradedMap) -> Result<()> {
        let n = i as i64;
        let expected = Bidegree::new(-n, -n);
        if f.bidegree() != expected {
            return Err(Error::BidegreeMismatch {
                expected,
                found: f.bidegree(),
            });
        }
        if f.source_arity() != 1 || f.target_arity() != 1 {
            return Err(Error::ArityMismatch {
                expected: 1,
                found: f.source_arity(),
            });
        }
        if f.is_zero() {
            self.components.remove(&i);
        } else {
            self.components.insert(i, f);
        }
        Ok(())
    }

    fn apply(&self, i: usize, x: &LinComb<TensorWord>) -> LinComb<TensorWord> {
        match self.components.get(&i) {
            Some(f) => x.flat_map(|w| f.apply_word(w)),
            None => LinComb::zero(),
        }
    }
}

/// `(gf)_u = Σ_{i+p=u} g_i f_p`.
pub fn compose_twisted_maps(g: &TwistedMap, f: &TwistedMap) -> TwistedMap {
    let mut out = TwistedMap::new();
    for (&i, gi) in &g.components {
        for (&p, fp) in &f.components {
            let term = gi.compose(fp).expect("arity-one components");
            let sum = match out.components.remove(&(i + p)) {
                Some(acc) => acc.add_signed(&term, Sign::Plus).expect("same bidegree"),
                None => term,
            };
            if !sum.is_zero() {
                out.components.insert(i + p, sum);
            }
        }
    }
    out
}

/// Residuals of `Σ_{i+p=u} (−1)^i f_i d^C_p − Σ_{i+p=u} d^D_i f_p` on every basis element of `C`.
pub fn check_twisted_map(
    f: &TwistedMap,
    c: &TwistedComplex,
    d: &TwistedComplex,
    u_max: usize,
) -> Result<Vec<RelationReport>> {
    let bound = c.bound.min(d.bound);
    if u_max > bound {
        return Err(truncation(u_max, bound));
    }
    for (_, fi) in f.components() {
        fi.check_homogeneous(&c.basis, &d.basis)?;
    }
    Ok((0..=u_max)
        .map(|u| {
            let results = c.basis.words(1).map(|x| {
                let x_lc = LinComb::basis(x.clone());
                let mut r = LinComb::zero();
                for i in 0..=u {
                    let p = u - i;
                    let left = f.apply(i, &c.apply(p, &x_lc));
                    r.add_all_signed(&left, Sign::from_parity(i as i64));
                    let right = d.apply(i, &f.apply(p, &x_lc));
                    r.add_all_signed(&right, Sign::Minus);
                }
                (x, r.reduced(&c.ring))
            });
            RelationReport::collect(format!("twisted_map({u})"), u, 1, results)
        })
        .collect())
}
