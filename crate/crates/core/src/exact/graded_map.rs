use std::collections::BTreeMap;

use super::{Bidegree, BigradedBasis, LinComb, Scalar, Sign, TensorWord};
use crate::{Error, Result};

/// A sparse multilinear map of fixed bidegree, stored by its values on basis words.
///
/// Missing entries are zero. Outputs are words of `target_arity` (1 for structure maps).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedMap {
    source_arity: usize,
    target_arity: usize,
    bidegree: Bidegree,
    entries: BTreeMap<TensorWord, LinComb<TensorWord>>,
}

impl GradedMap {
    /// A zero map with arity-1 outputs.
    pub fn new(source_arity: usize, bidegree: Bidegree) -> Result<Self> {
        Self::with_target_arity(source_arity, 1, bidegree)
    }

    pub fn with_target_arity(
        source_arity: usize,
        target_arity: usize,
        bidegree: Bidegree,
    ) -> Result<Self> {
        if source_arity == 0 || target_arity == 0 {
            return Err(Error::ZeroArity);
        }
        Ok(GradedMap {
            source_arity,
            target_arity,
            bidegree,
            entries: BTreeMap::new(),
        })
    }

    /// Identity on the given basis.
    pub fn identity(basis: &BigradedBasis) -> Self {
        let mut id = GradedMap::new(1, Bidegree::ZERO).expect("arity 1");
        for i in 0..basis.len() as u32 {
            id.entries
                .insert(TensorWord::single(i), LinComb::basis(TensorWord::single(i)));
        }
        id
    }

    pub fn source_arity(&self) -> usize {
        self.source_arity
    }

    pub fn target_arity(&self) -> usize {
        self.target_arity
    }

    pub fn bidegree(&self) -> Bidegree {
        self.bidegree
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&TensorWord, &LinComb<TensorWord>)> {
        self.entries.iter()
    }

    pub fn get(&self, input: &[u32]) -> Option<&LinComb<TensorWord>> {
        self.entries.get(input)
    }

    /// Sets the value on `input`, replacing any previous value.
    pub fn insert(&mut self, input: TensorWord, output: LinComb<TensorWord>) -> Result<()> {
        self.check_shape(&input, &output)?;
        if output.is_zero() {
            self.entries.remove(input.as_slice());
        } else {
            self.entries.insert(input, output);
        }
        Ok(())
    }

    /// Adds `output` to the value on `input`.
    pub fn add_entry(&mut self, input: TensorWord, output: &LinComb<TensorWord>) -> Result<()> {
        self.check_shape(&input, output)?;
        let slot = self.entries.entry(input.clone()).or_default();
        *slot += output;
        if slot.is_zero() {
            self.entries.remove(input.as_slice());
        }
        Ok(())
    }

    fn check_shape(&self, input: &TensorWord, output: &LinComb<TensorWord>) -> Result<()> {
        if input.arity() != self.source_arity {
            return Err(Error::ArityMismatch {
                expected: self.source_arity,
                found: input.arity(),
            });
        }
        if let Some(bad) = output.keys().find(|w| w.arity() != self.target_arity) {
            return Err(Error::ArityMismatch {
                expected: self.target_arity,
                found: bad.arity(),
            });
        }
        Ok(())
    }

    /// Every output term has bidegree `input + self.bidegree`.
    pub fn check_homogeneous(&self, source: &BigradedBasis, target: &BigradedBasis) -> Result<()> {
        for (input, output) in self.entries() {
            for &i in input.iter() {
                source.check_index(i)?;
            }
            let expected = source.word_bidegree(input) + self.bidegree;
            for word in output.keys() {
                for &i in word.iter() {
                    target.check_index(i)?;
                }
                let found = target.word_bidegree(word);
                if found != expected {
                    return Err(Error::NonHomogeneous { expected, found });
                }
            }
        }
        Ok(())
    }

    /// Multiplies every entry by `sign`.
    pub fn signed(&self, sign: Sign) -> GradedMap {
        GradedMap {
            entries: self
                .entries
                .iter()
                .map(|(k, v)| (k.clone(), v.signed(sign)))
                .collect(),
            ..self.clone()
        }
    }

    /// Value on the whole word, which must have the source arity.
    pub fn apply_word(&self, word: &[u32]) -> LinComb<TensorWord> {
        self.get(word).cloned().unwrap_or_default()
    }

    /// `(1^{⊗r} ⊗ f ⊗ 1^{⊗t})(word)` with `r = start`, given the bidegree of the `r` passed factors.
    ///
    /// Blocks that run past the end of the word evaluate to zero.
    pub fn apply_block(&self, word: &[u32], start: usize, passed: Bidegree) -> LinComb<TensorWord> {
        let end = start + self.source_arity;
        let Some(value) = word.get(start..end).and_then(|blk| self.get(blk)) else {
            return LinComb::zero();
        };
        let sign = self.bidegree.koszul(passed);
        let mut out = LinComb::zero();
        for (w, c) in value {
            let mut factors = Vec::with_capacity(word.len() - self.source_arity + w.arity());
            factors.extend_from_slice(&word[..start]);
            factors.extend_from_slice(w);
            factors.extend_from_slice(&word[end..]);
            out.add_signed(TensorWord::from_vec(factors), c, sign);
        }
        out
    }

    /// Applies the map at 1-based `position` with the Koszul sign for passing the earlier factors.
    pub fn apply_at(
        &self,
        word: &TensorWord,
        position: usize,
        basis: &BigradedBasis,
    ) -> Result<LinComb<TensorWord>> {
        if position == 0 || position + self.source_arity > word.arity() + 1 {
            return Err(Error::MalformedComposite {
                arity: self.source_arity,
                position,
                len: word.arity(),
            });
        }
        for &i in word.iter() {
            basis.check_index(i)?;
        }
        let start = position - 1;
        Ok(self.apply_block(word, start, basis.word_bidegree(&word[..start])))
    }

    /// Linear extension of [`GradedMap::apply_at`].
    pub fn apply_at_lincomb(
        &self,
        x: &LinComb<TensorWord>,
        position: usize,
        basis: &BigradedBasis,
    ) -> Result<LinComb<TensorWord>> {
        let mut out = LinComb::zero();
        for (w, c) in x {
            out.add_scaled(&self.apply_at(w, position, basis)?, c);
        }
        Ok(out)
    }

    /// `self ∘ inner`, where `self` consumes whole output words of `inner`.
    pub fn compose(&self, inner: &GradedMap) -> Result<GradedMap> {
        if self.source_arity != inner.target_arity {
            return Err(Error::ArityMismatch {
                expected: inner.target_arity,
                found: self.source_arity,
            });
        }
        let mut out = GradedMap::with_target_arity(
            inner.source_arity,
            self.target_arity,
            self.bidegree + inner.bidegree,
        )?;
        for (input, mid) in inner.entries() {
            let value = mid.flat_map(|w| self.apply_word(w));
            out.insert(input.clone(), value)?;
        }
        Ok(out)
    }

    /// `self + sign · other`; both must share arities and bidegree.
    pub fn add_signed(&self, other: &GradedMap, sign: Sign) -> Result<GradedMap> {
        if self.bidegree != other.bidegree {
            return Err(Error::BidegreeMismatch {
                expected: self.bidegree,
                found: other.bidegree,
            });
        }
        let mut out = self.clone();
        for (input, value) in other.entries() {
            out.add_entry(input.clone(), &value.signed(sign))?;
        }
        Ok(out)
    }
}

/// Differential of the morphism complex: `d_target ∘ f − (−1)^j f ∘ d_source` for `|f| = (l, j)`.
pub fn mor_differential(
    f: &GradedMap,
    d_source: &GradedMap,
    d_target: &GradedMap,
    source: &BigradedBasis,
    target: &BigradedBasis,
) -> Result<GradedMap> {
    let vertical = Bidegree::new(0, 1);
    for d in [d_source, d_target] {
        if d.bidegree() != vertical {
            return Err(Error::BidegreeMismatch {
                expected: vertical,
                found: d.bidegree(),
            });
        }
        if d.source_arity() != 1 || d.target_arity() != 1 {
            return Err(Error::ArityMismatch {
                expected: 1,
                found: d.source_arity(),
            });
        }
    }
    if f.source_arity() != 1 || f.target_arity() != 1 {
        return Err(Error::ArityMismatch {
            expected: 1,
            found: f.source_arity(),
        });
    }
    f.check_homogeneous(source, target)?;
    let first = d_target.compose(f)?;
    let second = f.compose(d_source)?;
    let sign = -Sign::from_parity(f.bidegree().vertical);
    let mut out = GradedMap::new(1, f.bidegree() + vertical)?;
    for (input, value) in first.entries() {
        out.add_entry(input.clone(), value)?;
    }
    for (input, value) in second.entries() {
        out.add_entry(input.clone(), &value.signed(sign))?;
    }
    Ok(out)
}

/// `Σ coeff · word` from `(coeff, names)` pairs.
#[cfg(test)]
pub(crate) fn lincomb_of(
    basis: &BigradedBasis,
    terms: &[(i64, &[&str])],
) -> Result<LinComb<TensorWord>> {
    let mut out = LinComb::zero();
    for (c, names) in terms {
        out.add_term(basis.parse_word(names)?, Scalar::from(*c));
    }
    Ok(out)
}

impl GradedMap {
    /// Sets `input ↦ output` with coefficient one, by names.
    pub fn set_by_names(
        &mut self,
        basis: &BigradedBasis,
        input: &[&str],
        output: &str,
        coeff: i64,
    ) -> Result<()> {
        let value = LinComb::term(basis.parse_word(&[output])?, Scalar::from(coeff));
        self.insert(basis.parse_word(input)?, value)
    }

    #[cfg(test)]
    pub(crate) fn unit_value(word: TensorWord) -> LinComb<TensorWord> {
        LinComb::term(word, Scalar::from(1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn uvw() -> BigradedBasis {
        BigradedBasis::new([
            ("u", Bidegree::new(0, 0)),
            ("v", Bidegree::new(-1, 0)),
            ("w", Bidegree::new(0, 1)),
        ])
        .unwrap()
    }

    #[test]
    fn degree_zero_map_substitutes_the_slot() {
        let b = uvw();
        let mut f = GradedMap::new(1, Bidegree::ZERO).unwrap();
        f.set_by_names(&b, &["w"], "w", 3).unwrap();
        let x = b.parse_word(&["v", "w", "u"]).unwrap();
        let got = f.apply_at(&x, 2, &b).unwrap();
        assert_eq!(got, lincomb_of(&b, &[(3, &["v", "w", "u"])]).unwrap());
    }

    #[test]
    fn horizontal_map_sends_u_to_v() {
        let b = uvw();
        let mut m11 = GradedMap::new(1, Bidegree::structure(1, 1)).unwrap();
        m11.set_by_names(&b, &["u"], "v", 1).unwrap();
        let x = b.parse_word(&["u", "w"]).unwrap();
        let got = m11.apply_at(&x, 1, &b).unwrap();
        assert_eq!(got, lincomb_of(&b, &[(1, &["v", "w"])]).unwrap());
    }

    #[test]
    fn odd_map_past_odd_factor_is_negated() {
        // Direct expansion on two factors: (1⊗f)(a⊗b) = (−1)^{|f||a|} a⊗f(b).
        let b =
            BigradedBasis::new([("a", Bidegree::new(0, 1)), ("b", Bidegree::new(0, 0))]).unwrap();
        let mut f = GradedMap::new(1, Bidegree::new(0, 1)).unwrap();
        f.set_by_names(&b, &["b"], "a", 1).unwrap();
        let x = b.parse_word(&["a", "b"]).unwrap();
        let got = f.apply_at(&x, 2, &b).unwrap();
        assert_eq!(got, lincomb_of(&b, &[(-1, &["a", "a"])]).unwrap());
    }

    #[test]
    fn malformed_composite_is_an_error() {
        let b = uvw();
        let f = GradedMap::new(2, Bidegree::ZERO).unwrap();
        let x = b.parse_word(&["u", "w"]).unwrap();
        assert!(f.apply_at(&x, 2, &b).is_err());
        assert!(f.apply_at(&x, 0, &b).is_err());
        assert!(f.apply_at(&x, 1, &b).is_ok());
    }

    #[test]
    fn non_homogeneous_entries_are_detected() {
        let b = uvw();
        let mut f = GradedMap::new(1, Bidegree::ZERO).unwrap();
        f.set_by_names(&b, &["u"], "w", 1).unwrap();
        assert!(f.check_homogeneous(&b, &b).is_err());
    }

    #[test]
    fn mor_differential_of_a_chain_map_vanishes() {
        // Two-term complex a → b (d(a) = b), and its identity chain map.
        let c =
            BigradedBasis::new([("a", Bidegree::new(0, 0)), ("b", Bidegree::new(0, 1))]).unwrap();
        let mut d = GradedMap::new(1, Bidegree::new(0, 1)).unwrap();
        d.set_by_names(&c, &["a"], "b", 1).unwrap();
        let id = GradedMap::identity(&c);
        assert!(mor_differential(&id, &d, &d, &c, &c).unwrap().is_zero());
        let zero = GradedMap::new(1, Bidegree::ZERO).unwrap();
        assert!(mor_differential(&zero, &d, &d, &c, &c).unwrap().is_zero());
        let dz = GradedMap::new(1, Bidegree::new(0, 1)).unwrap();
        assert!(mor_differential(&id, &dz, &dz, &c, &c).unwrap().is_zero());
        // A map that is not a chain map: the projection onto a.
        let mut p = GradedMap::new(1, Bidegree::ZERO).unwrap();
        p.set_by_names(&c, &["a"], "a", 1).unwrap();
        let dp = mor_differential(&p, &d, &d, &c, &c).unwrap();
        assert_eq!(dp.apply_word(&[0]), lincomb_of(&c, &[(1, &["b"])]).unwrap());
    }

    /// Basis `e_{a,b}` of bidegree `(a,b)`; f raises `b`, g raises both. `|f|·|g|` is odd.
    fn coherence_setup() -> (BigradedBasis, GradedMap, GradedMap) {
        const N: i64 = 4;
        let b =
            BigradedBasis::new((0..N * N).map(|k| (format!("e{k}"), Bidegree::new(k / N, k % N))))
                .unwrap();
        let idx = |h: i64, v: i64| (h * N + v) as u32;
        let mut f = GradedMap::new(1, Bidegree::new(0, 1)).unwrap();
        let mut g = GradedMap::new(1, Bidegree::new(1, 1)).unwrap();
        for h in 0..N {
            for v in 0..N {
                if v + 1 < N {
                    f.insert(
                        TensorWord::single(idx(h, v)),
                        GradedMap::unit_value(TensorWord::single(idx(h, v + 1))),
                    )
                    .unwrap();
                }
                if v + 1 < N && h + 1 < N {
                    g.insert(
                        TensorWord::single(idx(h, v)),
                        GradedMap::unit_value(TensorWord::single(idx(h + 1, v + 1))),
                    )
                    .unwrap();
                }
            }
        }
        f.check_homogeneous(&b, &b).unwrap();
        g.check_homogeneous(&b, &b).unwrap();
        (b, f, g)
    }

    proptest! {
        #[test]
        fn disjoint_applications_commute_up_to_koszul_sign(
            word in prop::collection::vec(0u32..16, 2..5),
            a in 0usize..4,
            c in 0usize..4,
        ) {
            let (b, f, g) = coherence_setup();
            let n = word.len();
            let (p, q) = (a % n, c % n);
            prop_assume!(p < q);
            let w = TensorWord::new(word).unwrap();
            let fg = g.apply_at_lincomb(&f.apply_at(&w, p + 1, &b).unwrap(), q + 1, &b).unwrap();
            let gf = f.apply_at_lincomb(&g.apply_at(&w, q + 1, &b).unwrap(), p + 1, &b).unwrap();
            let sign = f.bidegree().koszul(g.bidegree());
            prop_assert_eq!(fg, gf.signed(sign));
        }
    }
}
