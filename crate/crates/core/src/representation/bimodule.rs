use crate::bar::{
    cofree_comultiplication, key_bidegree, split_sign, tensor_left, tensor_right, CofreeKey,
    X_BIDEGREE,
};
use crate::exact::{Bidegree, BigradedBasis, LinComb, Sign, TensorWord};

/// `a_1..a_p ⊗ m ⊗ b_1..b_q`: algebra indices around one module index. Either side may be empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BimoduleWord {
    pub left: Vec<u32>,
    pub module: u32,
    pub right: Vec<u32>,
}

/// One factor of a [`BimoduleWord`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Factor {
    Algebra(u32),
    Module(u32),
}

impl BimoduleWord {
    pub fn new(left: Vec<u32>, module: u32, right: Vec<u32>) -> Self {
        BimoduleWord {
            left,
            module,
            right,
        }
    }

    /// Total number of factors.
    pub fn len(&self) -> usize {
        self.left.len() + 1 + self.right.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// 0-based index of the module factor.
    pub fn module_position(&self) -> usize {
        self.left.len()
    }

    /// All indices in order; the module index sits at [`BimoduleWord::module_position`].
    pub fn flatten(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.len());
        out.extend_from_slice(&self.left);
        out.push(self.module);
        out.extend_from_slice(&self.right);
        out
    }

    /// Inverse of [`BimoduleWord::flatten`].
    pub fn from_flat(flat: &[u32], module_position: usize) -> Self {
        BimoduleWord {
            left: flat[..module_position].to_vec(),
            module: flat[module_position],
            right: flat[module_position + 1..].to_vec(),
        }
    }

    pub fn factors(&self) -> impl Iterator<Item = Factor> + '_ {
        self.left
            .iter()
            .map(|&a| Factor::Algebra(a))
            .chain(std::iter::once(Factor::Module(self.module)))
            .chain(self.right.iter().map(|&b| Factor::Algebra(b)))
    }
}

/// Every bimodule word of total length `len`, module position first, then lexicographic.
pub fn bimodule_words(
    algebra: &BigradedBasis,
    module: &BigradedBasis,
    len: usize,
) -> Vec<BimoduleWord> {
    let side = |k: usize| -> Vec<Vec<u32>> {
        if k == 0 {
            vec![Vec::new()]
        } else {
            algebra.words(k).map(TensorWord::into_vec).collect()
        }
    };
    let mut out = Vec::new();
    for p in 0..len {
        let rights = side(len - 1 - p);
        for l in side(p) {
            for m in 0..module.len() as u32 {
                for r in &rights {
                    out.push(BimoduleWord::new(l.clone(), m, r.clone()));
                }
            }
        }
    }
    out
}

/// Basis element `x^xpow ⊗ word`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BimoduleKey {
    pub xpow: u32,
    pub word: BimoduleWord,
}

impl BimoduleKey {
    pub fn new(xpow: u32, word: BimoduleWord) -> Self {
        BimoduleKey { xpow, word }
    }
}

pub type BimoduleElement = LinComb<BimoduleKey>;

/// The cogenerator bases `sA` and `sM`, used for degrees.
#[derive(Clone, Copy, Debug)]
pub struct MixedBases<'a> {
    pub algebra: &'a BigradedBasis,
    pub module: &'a BigradedBasis,
}

impl MixedBases<'_> {
    pub fn factor_bidegree(&self, f: Factor) -> Bidegree {
        match f {
            Factor::Algebra(a) => self.algebra.bidegree(a),
            Factor::Module(m) => self.module.bidegree(m),
        }
    }

    pub fn word_bidegree(&self, w: &BimoduleWord) -> Bidegree {
        w.factors().map(|f| self.factor_bidegree(f)).sum()
    }

    pub fn key_bidegree(&self, k: &BimoduleKey) -> Bidegree {
        X_BIDEGREE.scale(k.xpow as i64) + self.word_bidegree(&k.word)
    }

    /// Bidegrees of the factors of a flattened word with the module at `module_position`.
    pub fn flat_bidegrees(&self, flat: &[u32], module_position: usize) -> Vec<Bidegree> {
        flat.iter()
            .enumerate()
            .map(|(k, &x)| {
                if k == module_position {
                    self.module.bidegree(x)
                } else {
                    self.algebra.bidegree(x)
                }
            })
            .collect()
    }
}

/// Left and right coactions of one element.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Coactions {
    pub left: LinComb<(CofreeKey, BimoduleKey)>,
    pub right: LinComb<(BimoduleKey, CofreeKey)>,
}

impl Coactions {
    pub fn is_zero(&self) -> bool {
        self.left.is_zero() && self.right.is_zero()
    }
}

/// `Δ^L` splits off a nonempty algebra prefix, `Δ^R` a nonempty algebra suffix, with the cofree sign.
pub fn bicomodule_coactions(el: &BimoduleElement, bases: MixedBases<'_>) -> Coactions {
    let mut out = Coactions::default();
    for (key, c) in el {
        let i = key.xpow;
        let p = key.word.module_position();
        let flat = key.word.flatten();
        let degrees = bases.flat_bidegrees(&flat, p);
        let n = flat.len();
        let mut prefix = Bidegree::ZERO;
        for k in 1..n {
            prefix += degrees[k - 1];
            for r in 0..=i {
                let sign = split_sign(i, n, k, r, prefix);
                if k <= p {
                    let left = CofreeKey::new(r, TensorWord::from_vec(flat[..k].to_vec()));
                    let right = BimoduleKey::new(i - r, BimoduleWord::from_flat(&flat[k..], p - k));
                    out.left.add_signed((left, right), c, sign);
                } else {
                    let left = BimoduleKey::new(r, BimoduleWord::from_flat(&flat[..k], p));
                    let right = CofreeKey::new(i - r, TensorWord::from_vec(flat[k..].to_vec()));
                    out.right.add_signed((left, right), c, sign);
                }
            }
        }
    }
    out
}

/// `f(x^i ⊗ w) = (−1)^{n+1} x^{i−1} ⊗ w` with `n` the total length of `w`; zero when `i = 0`.
pub fn bimodule_f(el: &BimoduleElement) -> BimoduleElement {
    let mut out = LinComb::zero();
    for (key, c) in el {
        if key.xpow == 0 {
            continue;
        }
        let sign = Sign::from_parity(key.word.len() as i64 + 1);
        out.add_signed(BimoduleKey::new(key.xpow - 1, key.word.clone()), c, sign);
    }
    out
}

/// Every key with x-power ≤ `max_xpow` and total length in `1..=max_len`.
pub fn bimodule_keys(bases: MixedBases<'_>, max_xpow: u32, max_len: usize) -> Vec<BimoduleKey> {
    (1..=max_len)
        .flat_map(|len| bimodule_words(bases.algebra, bases.module, len))
        .flat_map(|w| (0..=max_xpow).map(move |x| BimoduleKey::new(x, w.clone())))
        .collect()
}

/// Which coaction identity failed on a key.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoactionIdentity {
    /// `(Δ⊗1)Δ^L = (1⊗Δ^L)Δ^L`.
    Left,
    /// `(Δ^R⊗1)Δ^R = (1⊗Δ)Δ^R`.
    Right,
    /// `(Δ^L⊗1)Δ^R = (1⊗Δ^R)Δ^L`.
    Mixed,
}

/// Keys on which one of the three coassociativity identities fails; empty when all hold.
pub fn coaction_coassociativity_failures(
    bases: MixedBases<'_>,
    max_xpow: u32,
    max_len: usize,
) -> Vec<(BimoduleKey, CoactionIdentity)> {
    let a = bases.algebra;
    let coact = |k: &BimoduleKey| bicomodule_coactions(&LinComb::basis(k.clone()), bases);
    let cof = |k: &CofreeKey| cofree_comultiplication(&LinComb::basis(k.clone()), a);
    let zero = Bidegree::ZERO;
    let mut failures = Vec::new();
    for key in bimodule_keys(bases, max_xpow, max_len) {
        let c = coact(&key);
        let l1 =
            tensor_left(&c.left, cof).map_keys(|((x, y), z)| (x.clone(), y.clone(), z.clone()));
        let l2 = tensor_right(&c.left, zero, |x| key_bidegree(x, a), |y| coact(y).left)
            .map_keys(|(x, (y, z))| (x.clone(), y.clone(), z.clone()));
        if l1 != l2 {
            failures.push((key.clone(), CoactionIdentity::Left));
        }
        let r1 = tensor_left(&c.right, |x| coact(x).right)
            .map_keys(|((x, y), z)| (x.clone(), y.clone(), z.clone()));
        let r2 = tensor_right(&c.right, zero, |x| bases.key_bidegree(x), cof)
            .map_keys(|(x, (y, z))| (x.clone(), y.clone(), z.clone()));
        if r1 != r2 {
            failures.push((key.clone(), CoactionIdentity::Right));
        }
        let m1 = tensor_left(&c.right, |x| coact(x).left)
            .map_keys(|((x, y), z)| (x.clone(), y.clone(), z.clone()));
        let m2 = tensor_right(&c.left, zero, |x| key_bidegree(x, a), |y| coact(y).right)
            .map_keys(|(x, (y, z))| (x.clone(), y.clone(), z.clone()));
        if m1 != m2 {
            failures.push((key, CoactionIdentity::Mixed));
        }
    }
    failures
}
