use crate::exact::{Bidegree, BigradedBasis, LinComb, Sign, TensorWord};

/// Bidegree of the polynomial generator `x`.
pub const X_BIDEGREE: Bidegree = Bidegree::new(-1, -1);

/// Basis element `x^xpow ⊗ word` of `k[x] ⊗ T̄c(C)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CofreeKey {
    pub xpow: u32,
    pub word: TensorWord,
}

impl CofreeKey {
    pub fn new(xpow: u32, word: TensorWord) -> Self {
        CofreeKey { xpow, word }
    }
}

pub type CoalgebraElement = LinComb<CofreeKey>;

pub fn key_bidegree(key: &CofreeKey, basis: &BigradedBasis) -> Bidegree {
    X_BIDEGREE.scale(key.xpow as i64) + basis.word_bidegree(&key.word)
}

/// `(−1)^{rn + ik + s·(h+v)(c_1..c_k)}` for the split of `x^i ⊗ c_1..c_n` into `x^r ⊗ c_1..c_k` and `x^s ⊗ c_{k+1}..c_n`.
///
/// `prefix` is the bidegree of `c_1..c_k` in `C`.
pub fn split_sign(i: u32, n: usize, k: usize, r: u32, prefix: Bidegree) -> Sign {
    let s = (i - r) as i64;
    let e = r as i64 * n as i64 + i as i64 * k as i64 + Bidegree::new(s, s).pairing(prefix);
    Sign::from_parity(e)
}

/// Reduced deconcatenation of one word, without signs: all splits into two nonempty words.
pub fn deconcatenate(word: &[u32]) -> impl Iterator<Item = (TensorWord, TensorWord)> + '_ {
    (1..word.len()).map(move |k| {
        (
            TensorWord::from_vec(word[..k].to_vec()),
            TensorWord::from_vec(word[k..].to_vec()),
        )
    })
}

/// `Δ(x^i ⊗ c_1..c_n) = Σ_{k=1}^{n−1} Σ_{r+s=i} ± (x^r ⊗ c_1..c_k) ⊗ (x^s ⊗ c_{k+1}..c_n)`.
pub fn cofree_comultiplication(
    el: &CoalgebraElement,
    basis: &BigradedBasis,
) -> LinComb<(CofreeKey, CofreeKey)> {
    let mut out = LinComb::zero();
    for (key, c) in el {
        let n = key.word.arity();
        let mut prefix = Bidegree::ZERO;
        for k in 1..n {
            prefix += basis.bidegree(key.word[k - 1]);
            let left = TensorWord::from_vec(key.word[..k].to_vec());
            let right = TensorWord::from_vec(key.word[k..].to_vec());
            for r in 0..=key.xpow {
                let sign = split_sign(key.xpow, n, k, r, prefix);
                let pair = (
                    CofreeKey::new(r, left.clone()),
                    CofreeKey::new(key.xpow - r, right.clone()),
                );
                out.add_signed(pair, c, sign);
            }
        }
    }
    out
}

/// `f(x^n ⊗ a) = (−1)^{j+1} x^{n−1} ⊗ a` for `a` of arity `j`; zero when `n = 0`.
pub fn cofree_f(el: &CoalgebraElement) -> CoalgebraElement {
    let mut out = LinComb::zero();
    for (key, c) in el {
        if key.xpow == 0 {
            continue;
        }
        let sign = Sign::from_parity(key.word.arity() as i64 + 1);
        out.add_signed(CofreeKey::new(key.xpow - 1, key.word.clone()), c, sign);
    }
    out
}

/// Projection onto `x^0 ⊗ T̄c(C)`.
pub fn project_zero(el: &CoalgebraElement) -> LinComb<TensorWord> {
    el.iter()
        .filter(|(k, _)| k.xpow == 0)
        .map(|(k, c)| (k.word.clone(), c.clone()))
        .collect()
}

/// `(g ⊗ 1)` on a sum of pairs.
pub fn tensor_left<A, B, A2>(
    pairs: &LinComb<(A, B)>,
    g: impl Fn(&A) -> LinComb<A2>,
) -> LinComb<(A2, B)>
where
    A: Ord + Clone,
    B: Ord + Clone,
    A2: Ord + Clone,
{
    let mut out = LinComb::zero();
    for ((a, b), c) in pairs {
        for (a2, c2) in &g(a) {
            out.add_term((a2.clone(), b.clone()), c * c2);
        }
    }
    out
}

/// `(1 ⊗ g)` on a sum of pairs, with the sign `(−1)^{|g|·|left|}`.
pub fn tensor_right<A, B, B2>(
    pairs: &LinComb<(A, B)>,
    g_degree: Bidegree,
    left_degree: impl Fn(&A) -> Bidegree,
    g: impl Fn(&B) -> LinComb<B2>,
) -> LinComb<(A, B2)>
where
    A: Ord + Clone,
    B: Ord + Clone,
    B2: Ord + Clone,
{
    let mut out = LinComb::zero();
    for ((a, b), c) in pairs {
        let sign = g_degree.koszul(left_degree(a));
        for (b2, c2) in &g(b) {
            out.add_signed((a.clone(), b2.clone()), &(c * c2), sign);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Scalar;
    use proptest::prelude::*;

    /// Rank 2 with mixed bidegrees.
    fn basis() -> BigradedBasis {
        BigradedBasis::new([("a", Bidegree::new(0, -1)), ("b", Bidegree::new(-1, 1))]).unwrap()
    }

    fn key(xpow: u32, word: &[u32]) -> CofreeKey {
        CofreeKey::new(xpow, TensorWord::new(word.to_vec()).unwrap())
    }

    fn elements(max_x: u32, max_arity: usize, b: &BigradedBasis) -> Vec<CofreeKey> {
        let mut out = Vec::new();
        for n in 0..=max_x {
            for l in 1..=max_arity {
                out.extend(b.words(l).map(|w| CofreeKey::new(n, w)));
            }
        }
        out
    }

    type Triple = (CofreeKey, CofreeKey, CofreeKey);

    fn delta_left(pairs: &LinComb<(CofreeKey, CofreeKey)>, b: &BigradedBasis) -> LinComb<Triple> {
        tensor_left(pairs, |x| {
            cofree_comultiplication(&LinComb::basis(x.clone()), b)
        })
        .map_keys(|((x, y), z)| (x.clone(), y.clone(), z.clone()))
    }

    fn delta_right(pairs: &LinComb<(CofreeKey, CofreeKey)>, b: &BigradedBasis) -> LinComb<Triple> {
        tensor_right(
            pairs,
            Bidegree::ZERO,
            |x| key_bidegree(x, b),
            |y| cofree_comultiplication(&LinComb::basis(y.clone()), b),
        )
        .map_keys(|(x, (y, z))| (x.clone(), y.clone(), z.clone()))
    }

    #[test]
    fn arity_one_has_zero_coproduct() {
        let b = basis();
        assert!(cofree_comultiplication(&LinComb::basis(key(3, &[0])), &b).is_zero());
    }

    #[test]
    fn x_free_part_is_plain_deconcatenation() {
        let b = basis();
        for w in b.words(4) {
            let d = cofree_comultiplication(&LinComb::basis(CofreeKey::new(0, w.clone())), &b);
            let expected: LinComb<_> = deconcatenate(&w)
                .map(|(l, r)| {
                    (
                        (CofreeKey::new(0, l), CofreeKey::new(0, r)),
                        Scalar::from(1),
                    )
                })
                .collect();
            let projected: LinComb<_> = d
                .iter()
                .filter(|((l, r), _)| l.xpow == 0 && r.xpow == 0)
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect();
            assert_eq!(projected, expected);
        }
    }

    #[test]
    fn one_x_on_two_degree_zero_factors() {
        // i = 1, n = 2, k = 1: r = 0 gives (−1)^{1 + 0} and r = 1 gives (−1)^{2 + 1}.
        let b = BigradedBasis::new([("e", Bidegree::ZERO)]).unwrap();
        let d = cofree_comultiplication(&LinComb::basis(key(1, &[0, 0])), &b);
        assert_eq!(d.coeff(&(key(0, &[0]), key(1, &[0]))), Scalar::from(-1));
        assert_eq!(d.coeff(&(key(1, &[0]), key(0, &[0]))), Scalar::from(-1));
        assert_eq!(d.len(), 2);
    }

    #[test]
    fn f_examples() {
        assert!(cofree_f(&LinComb::basis(key(0, &[0, 1]))).is_zero());
        assert_eq!(
            cofree_f(&LinComb::basis(key(2, &[1]))),
            LinComb::basis(key(1, &[1]))
        );
        assert_eq!(
            cofree_f(&LinComb::basis(key(1, &[1, 0]))),
            -LinComb::basis(key(0, &[1, 0]))
        );
    }

    #[test]
    fn coassociative_on_mixed_bidegrees() {
        let b = basis();
        for k in elements(3, 4, &b) {
            let d = cofree_comultiplication(&LinComb::basis(k.clone()), &b);
            assert_eq!(delta_left(&d, &b), delta_right(&d, &b), "at {k:?}");
        }
    }

    #[test]
    fn f_is_compatible_with_the_coproduct() {
        let b = basis();
        for k in elements(3, 4, &b) {
            let el = LinComb::basis(k.clone());
            let d = cofree_comultiplication(&el, &b);
            let df = cofree_comultiplication(&cofree_f(&el), &b);
            let f_left = tensor_left(&d, |x| cofree_f(&LinComb::basis(x.clone())));
            let f_right = tensor_right(
                &d,
                Bidegree::new(1, 1),
                |x| key_bidegree(x, &b),
                |y| cofree_f(&LinComb::basis(y.clone())),
            );
            assert_eq!(f_left, df, "left at {k:?}");
            assert_eq!(f_right, df, "right at {k:?}");
        }
    }

    #[test]
    fn projection_commutes_with_the_coproduct() {
        let b = basis();
        for k in elements(2, 4, &b) {
            let el = LinComb::basis(k);
            let zero_part: CoalgebraElement =
                project_zero(&el).map_keys(|w| CofreeKey::new(0, w.clone()));
            let lhs = cofree_comultiplication(&zero_part, &b);
            let rhs: LinComb<_> = cofree_comultiplication(&el, &b)
                .iter()
                .filter(|((l, r), _)| l.xpow == 0 && r.xpow == 0)
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn vertical_only_reading_breaks_f_compatibility() {
        // With s·v in place of s·(h+v), (f⊗1)Δ = Δf = (1⊗f)Δ fails somewhere on this basis.
        let b = basis();
        let vertical = |i: u32, n: usize, k: usize, r: u32, prefix: Bidegree| {
            let s = (i - r) as i64;
            Sign::from_parity(r as i64 * n as i64 + i as i64 * k as i64 + s * prefix.vertical)
        };
        let delta = |x: &CofreeKey| {
            let mut out: LinComb<(CofreeKey, CofreeKey)> = LinComb::zero();
            let n = x.word.arity();
            for k in 1..n {
                let prefix = b.word_bidegree(&x.word[..k]);
                for r in 0..=x.xpow {
                    let pair = (key(r, &x.word[..k]), key(x.xpow - r, &x.word[k..]));
                    out.add_signed(pair, &Scalar::from(1), vertical(x.xpow, n, k, r, prefix));
                }
            }
            out
        };
        let broken = elements(2, 3, &b).into_iter().any(|k| {
            let el = LinComb::basis(k.clone());
            let f_left = tensor_left(&delta(&k), |x| cofree_f(&LinComb::basis(x.clone())));
            let f_right = tensor_right(
                &delta(&k),
                Bidegree::new(1, 1),
                |x| key_bidegree(x, &b),
                |y| cofree_f(&LinComb::basis(y.clone())),
            );
            let df = cofree_f(&el).flat_map(|y| delta(y));
            f_left != df || f_right != df
        });
        assert!(broken);
    }

    proptest! {
        #[test]
        fn coassociative_on_random_bases(
            degs in prop::collection::vec((-2i64..3, -2i64..3), 2),
            xpow in 0u32..4,
            word in prop::collection::vec(0u32..2, 1..5),
        ) {
            let b = BigradedBasis::new(degs.iter().enumerate().map(|(k, &(h, v))| (format!("c{k}"), Bidegree::new(h, v)))).unwrap();
            let d = cofree_comultiplication(&LinComb::basis(CofreeKey::new(xpow, TensorWord::new(word).unwrap())), &b);
            prop_assert_eq!(delta_left(&d, &b), delta_right(&d, &b));
        }
    }
}
