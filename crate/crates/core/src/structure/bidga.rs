use super::StructureFamily;
use crate::exact::{Bidegree, LinComb, Sign, TensorWord};
use crate::report::{all_passed, RelationReport};
use crate::{Error, Result};

/// Residuals of each bidga axiom over all basis words of the relevant arity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BidgaReport {
    pub relations: Vec<RelationReport>,
}

impl BidgaReport {
    pub fn passed(&self) -> bool {
        all_passed(&self.relations)
    }
}

/// A signed composite `outer ∘_position inner` on maps named by `(i, j)`; `None` for the identity.
type Step = ((usize, usize), usize);

/// Evaluates `Σ sign · (steps applied right to left)` on one word.
fn evaluate(
    a: &StructureFamily,
    terms: &[(Sign, &[Step])],
    word: &TensorWord,
) -> LinComb<TensorWord> {
    let basis = a.basis();
    let mut out = LinComb::zero();
    for (sign, steps) in terms {
        let mut x = LinComb::basis(word.clone());
        for &((i, j), position) in steps.iter().rev() {
            let Some(m) = a.map(i, j) else {
                x = LinComb::zero();
                break;
            };
            let mut y = LinComb::zero();
            for (w, c) in &x {
                let passed: Bidegree = basis.word_bidegree(&w[..position - 1]);
                y.add_scaled(&m.apply_block(w, position - 1, passed), c);
            }
            x = y;
        }
        out.add_all_signed(&x, *sign);
    }
    out.reduced(a.ring())
}

fn relation(
    a: &StructureFamily,
    label: &str,
    u: usize,
    arity: usize,
    terms: &[(Sign, &[Step])],
) -> RelationReport {
    let results = a.basis().words(arity).map(|w| {
        let r = evaluate(a, terms, &w);
        (w, r)
    });
    RelationReport::collect(label, u, arity, results)
}

/// Checks the bidga axioms on a family supported on `(0,2)`, `(1,1)` and optionally `(0,1)`.
///
/// The axioms are linear in `m_02` or quadratic in one map, so they read the same in both conventions.
pub fn check_bidga(a: &StructureFamily) -> Result<BidgaReport> {
    if let Some(&(i, j)) = a
        .support()
        .iter()
        .find(|&&k| !matches!(k, (0, 1) | (0, 2) | (1, 1)))
    {
        return Err(Error::NotBidgaCandidate(i, j));
    }
    const M02: (usize, usize) = (0, 2);
    const M11: (usize, usize) = (1, 1);
    const M01: (usize, usize) = (0, 1);
    use Sign::{Minus, Plus};
    let mut relations = vec![
        relation(
            a,
            "associativity",
            0,
            3,
            &[
                (Plus, &[(M02, 1), (M02, 1)]),
                (Minus, &[(M02, 1), (M02, 2)]),
            ],
        ),
        relation(a, "m11_square", 2, 1, &[(Plus, &[(M11, 1), (M11, 1)])]),
        relation(
            a,
            "m11_derivation",
            1,
            2,
            &[
                (Plus, &[(M11, 1), (M02, 1)]),
                (Minus, &[(M02, 1), (M11, 1)]),
                (Minus, &[(M02, 1), (M11, 2)]),
            ],
        ),
    ];
    if a.map(0, 1).is_some() {
        relations.push(relation(
            a,
            "m01_square",
            0,
            1,
            &[(Plus, &[(M01, 1), (M01, 1)])],
        ));
        relations.push(relation(
            a,
            "m01_derivation",
            0,
            2,
            &[
                (Plus, &[(M01, 1), (M02, 1)]),
                (Minus, &[(M02, 1), (M01, 1)]),
                (Minus, &[(M02, 1), (M01, 2)]),
            ],
        ));
        relations.push(relation(
            a,
            "m01_m11_commute",
            1,
            1,
            &[
                (Plus, &[(M11, 1), (M01, 1)]),
                (Minus, &[(M01, 1), (M11, 1)]),
            ],
        ));
    }
    Ok(BidgaReport { relations })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{BigradedBasis, Ring};
    use crate::structure::{Bounds, Convention};

    fn empty() -> StructureFamily {
        let b = BigradedBasis::new([
            ("e", Bidegree::ZERO),
            ("x", Bidegree::new(0, 1)),
            ("y", Bidegree::new(-1, 0)),
        ])
        .unwrap();
        StructureFamily::new(
            b,
            Ring::Integers,
            Bounds {
                max_horizontal: 2,
                max_arity: 3,
            },
            Convention::Sagave,
        )
    }

    #[test]
    fn zero_multiplication_passes() {
        assert!(check_bidga(&empty()).unwrap().passed());
    }

    #[test]
    fn dual_numbers_with_a_unit_pass() {
        // e unit, x² = 0, m11(e) = y, y = m11 applied to e with y·anything = 0 except the unit.
        let mut a = empty();
        for (l, r, o) in [
            ("e", "e", "e"),
            ("e", "x", "x"),
            ("x", "e", "x"),
            ("e", "y", "y"),
            ("y", "e", "y"),
        ] {
            a.set_by_names(0, 2, &[l, r], o, 1).unwrap();
        }
        let r = check_bidga(&a).unwrap();
        assert!(r.passed(), "{r:?}");
        // m11(e) = y breaks the derivation rule on e⊗e: m11(ee) = y but m11(e)e + e m11(e) = 2y.
        a.set_by_names(1, 1, &["e"], "y", 1).unwrap();
        let r = check_bidga(&a).unwrap();
        assert!(!r.passed());
        assert_eq!(
            r.relations.iter().find(|r| !r.passed()).unwrap().label,
            "m11_derivation"
        );
    }

    #[test]
    fn higher_maps_are_rejected() {
        let mut a = empty();
        a.set_by_names(0, 3, &["x", "x", "e"], "x", 1).unwrap();
        assert_eq!(check_bidga(&a), Err(Error::NotBidgaCandidate(0, 3)));
    }
}
