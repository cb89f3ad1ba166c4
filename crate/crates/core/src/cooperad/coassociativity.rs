use std::collections::HashMap;

use rayon::prelude::*;

use super::decomposition::decompose;
use super::generator::{CooperadGenerator, GeneratorKind};
use crate::exact::{Bidegree, LinComb, Scalar, Sign};
use crate::report::RelationReport;

/// `c; (d_1; e_1..) ⊗ … ⊗ (d_j; e_..)`: a generator over a level of generators, each over its own inputs.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwoLevelTree {
    pub top: CooperadGenerator,
    pub branches: Vec<(CooperadGenerator, Vec<CooperadGenerator>)>,
}

/// `(1∘Δ)Δ(g) − (Δ∘1)Δ(g)`.
///
/// The second expansion is reordered from `c′; d′_1..d′_m; e_1..e_n` into `c′; d′_1, E_1, d′_2, E_2, …`
/// with the Koszul sign of that shuffle.
pub fn coassociativity_defect(g: CooperadGenerator) -> LinComb<TwoLevelTree> {
    defect(g, true)
}

fn defect(g: CooperadGenerator, reorder_sign: bool) -> LinComb<TwoLevelTree> {
    let mut cache: HashMap<CooperadGenerator, Vec<_>> = HashMap::new();
    let mut delta = |c: CooperadGenerator| cache.entry(c).or_insert_with(|| decompose(c)).clone();
    let mut out = LinComb::zero();
    for t in delta(g) {
        let expansions: Vec<_> = t.inners.iter().map(|&d| delta(d)).collect();
        let mut choice = vec![0usize; expansions.len()];
        'choices: loop {
            let mut sign = t.coefficient;
            let branches = choice
                .iter()
                .zip(&expansions)
                .map(|(&c, e)| {
                    sign = sign * e[c].coefficient;
                    (e[c].outer, e[c].inners.clone())
                })
                .collect();
            out.add_signed(
                TwoLevelTree {
                    top: t.outer,
                    branches,
                },
                &Scalar::from(1),
                sign,
            );
            for k in (0..choice.len()).rev() {
                choice[k] += 1;
                if choice[k] < expansions[k].len() {
                    continue 'choices;
                }
                choice[k] = 0;
            }
            break;
        }
        for top in delta(t.outer) {
            let mut rest = t.inners.as_slice();
            let mut branches = Vec::with_capacity(top.inners.len());
            for &d in &top.inners {
                let (group, tail) = rest.split_at(d.v);
                branches.push((d, group.to_vec()));
                rest = tail;
            }
            let mut sign = t.coefficient * top.coefficient;
            if reorder_sign {
                sign = sign * shuffle_sign(&branches);
            }
            out.add_signed(
                TwoLevelTree {
                    top: top.outer,
                    branches,
                },
                &Scalar::from(1),
                -sign,
            );
        }
    }
    out
}

/// Koszul sign of moving every middle generator past the leaf groups of the earlier branches.
fn shuffle_sign(branches: &[(CooperadGenerator, Vec<CooperadGenerator>)]) -> Sign {
    let mut e = 0;
    let mut leaves = Bidegree::ZERO;
    for (d, group) in branches {
        e += d.bidegree().pairing(leaves);
        leaves += group
            .iter()
            .map(CooperadGenerator::bidegree)
            .sum::<Bidegree>();
    }
    Sign::from_parity(e)
}

/// Checks every generator of `kind` with `u ≤ u_max` and `1 ≤ v ≤ v_max`.
pub fn check_coassociativity(
    kind: GeneratorKind,
    u_max: usize,
    v_max: usize,
) -> RelationReport<CooperadGenerator, TwoLevelTree> {
    let gens: Vec<_> = (0..=u_max)
        .flat_map(|u| (1..=v_max).map(move |v| CooperadGenerator { kind, u, v }))
        .collect();
    let results: Vec<_> = gens
        .into_par_iter()
        .map(|g| (g, coassociativity_defect(g)))
        .collect();
    RelationReport::collect(format!("coassociativity({kind})"), u_max, v_max, results)
}
