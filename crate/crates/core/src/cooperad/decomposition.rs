use std::cmp::Reverse;

use serde_json::{json, Value};

use super::generator::{CooperadGenerator, GeneratorKind};
use super::signs::{alpha_exponent, x_prime, x_sign};
use crate::exact::{Bidegree, Sign};

/// One term `± c′; c″_1 ⊗ … ⊗ c″_j` of a comultiplication.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DecompositionTerm {
    pub outer: CooperadGenerator,
    pub inners: Vec<CooperadGenerator>,
    pub coefficient: Sign,
}

impl DecompositionTerm {
    /// Sum of the bidegrees of all generators in the term.
    pub fn bidegree(&self) -> Bidegree {
        self.outer.bidegree()
            + self
                .inners
                .iter()
                .map(CooperadGenerator::bidegree)
                .sum::<Bidegree>()
    }

    fn order_key(&self) -> impl Ord {
        (
            Reverse(self.outer.u),
            Reverse(self.outer.v),
            Reverse(self.inners.iter().map(|g| g.u).collect::<Vec<_>>()),
            Reverse(self.inners.iter().map(|g| g.v).collect::<Vec<_>>()),
        )
    }
}

/// All `(x_1..x_parts)` with each `x_k ≥ min` and `Σ x_k = total`, in lexicographic order.
pub fn compositions(total: usize, parts: usize, min: usize) -> Vec<Vec<usize>> {
    fn go(
        total: usize,
        parts: usize,
        min: usize,
        prefix: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if parts == 0 {
            if total == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        let reserve = min * (parts - 1);
        if total < reserve + min {
            return;
        }
        for x in min..=total - reserve {
            prefix.push(x);
            go(total - x, parts - 1, min, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(total, parts, min, &mut Vec::with_capacity(parts), &mut out);
    out
}

/// `Δ(g)` with the sign rule of its kind, sorted by outer index, outer arity, then inner indices, all descending.
pub fn decompose(g: CooperadGenerator) -> Vec<DecompositionTerm> {
    let (u, v) = (g.u, g.v);
    let mut out = Vec::new();
    for j in 1..=v {
        for q in compositions(v, j, 1) {
            for i in 0..=u {
                for p in compositions(u - i, j, 0) {
                    let e = match g.kind {
                        GeneratorKind::Mu => x_sign(&p, &q),
                        GeneratorKind::MuTilde => x_prime(&p, &q),
                        GeneratorKind::Alpha => alpha_exponent(i, v, &p, &q),
                    };
                    out.push(DecompositionTerm {
                        outer: CooperadGenerator {
                            kind: g.kind,
                            u: i,
                            v: j,
                        },
                        inners: p
                            .iter()
                            .zip(&q)
                            .map(|(&pk, &qk)| CooperadGenerator {
                                kind: g.kind,
                                u: pk,
                                v: qk,
                            })
                            .collect(),
                        coefficient: Sign::from_parity(e),
                    });
                }
            }
        }
    }
    out.sort_by_cached_key(DecompositionTerm::order_key);
    out
}

/// `Δ(μ_uv)`; empty when `v = 0`.
pub fn delta_mu(u: usize, v: usize) -> Vec<DecompositionTerm> {
    decompose(CooperadGenerator {
        kind: GeneratorKind::Mu,
        u,
        v,
    })
}

/// `Δ(μ̃_uv)`; empty when `v = 0`.
pub fn delta_mu_tilde(u: usize, v: usize) -> Vec<DecompositionTerm> {
    decompose(CooperadGenerator {
        kind: GeneratorKind::MuTilde,
        u,
        v,
    })
}

/// `Δ(α_uv)`; empty when `v = 0`.
pub fn delta_alpha(u: usize, v: usize) -> Vec<DecompositionTerm> {
    decompose(CooperadGenerator {
        kind: GeneratorKind::Alpha,
        u,
        v,
    })
}

/// One term per line: `Δ(α[1,2]) =` then `  + α[1,2] ; α[0,1] ⊗ α[0,1]`, ….
pub fn format_decomposition(g: CooperadGenerator, terms: &[DecompositionTerm]) -> String {
    let mut s = format!("Δ({g}) =\n");
    for t in terms {
        let sign = if t.coefficient.is_minus() { '-' } else { '+' };
        let inners: Vec<String> = t.inners.iter().map(ToString::to_string).collect();
        s.push_str(&format!("  {sign} {} ; {}\n", t.outer, inners.join(" ⊗ ")));
    }
    s
}

pub fn decomposition_to_json(g: CooperadGenerator, terms: &[DecompositionTerm]) -> Value {
    let pair = |g: &CooperadGenerator| json!([g.u, g.v]);
    json!({
        "generator": { "kind": g.kind.name(), "u": g.u, "v": g.v },
        "term_count": terms.len(),
        "terms": terms.iter().map(|t| json!({
            "coefficient": t.coefficient.to_i64(),
            "outer": pair(&t.outer),
            "inners": t.inners.iter().map(pair).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
    })
}
