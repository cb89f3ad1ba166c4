//! A self-contained checker for classical A∞-algebras with a single grading.
//!
//! Kept independent of the bigraded relation engine so the two can cross-check each other.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{Convention, StructureFamily};
use crate::{Error, Result};

/// Sign rule for the classical relations `Σ ± m_j ∘_k m_q = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassicalSigns {
    /// `(−1)^{rq+t}` for `m_j(1^r ⊗ m_q ⊗ 1^t)`.
    GetzlerJones,
    /// `(−1)^{vq + k(q−1)}` for `m_j ∘_k m_q`, `v = j+q−1`.
    Stasheff,
}

type Word = Vec<u32>;

/// Operations `m_n` on a graded basis, as plain nested maps.
#[derive(Clone, Debug)]
pub struct ClassicalAInfinity {
    degrees: Vec<i64>,
    ops: BTreeMap<usize, BTreeMap<Word, BTreeMap<u32, BigInt>>>,
    signs: ClassicalSigns,
}

/// A failing input: arity, word and residual coefficients.
pub type ClassicalFailure = (usize, Word, BTreeMap<u32, BigInt>);

impl ClassicalAInfinity {
    /// Reads the `m_0j` of a family concentrated in horizontal degree 0, grading by vertical degree.
    ///
    /// Sagave-tagged families use Getzler–Jones signs and tilde-tagged ones Stasheff signs.
    pub fn from_family(a: &StructureFamily) -> Result<Self> {
        if let Some(&(i, j)) = a.support().iter().find(|&&(i, _)| i != 0) {
            return Err(Error::NotClassical(i, j));
        }
        let degrees = a.basis().iter().map(|(_, d)| d.vertical).collect();
        let mut ops: BTreeMap<usize, BTreeMap<Word, BTreeMap<u32, BigInt>>> = BTreeMap::new();
        for ((_, j), m) in a.maps() {
            let op = ops.entry(j).or_default();
            for (input, output) in m.entries() {
                let value = output.iter().map(|(w, c)| (w[0], c.clone())).collect();
                op.insert(input.to_vec(), value);
            }
        }
        let signs = match a.convention() {
            Convention::Sagave => ClassicalSigns::GetzlerJones,
            Convention::Tilde => ClassicalSigns::Stasheff,
        };
        Ok(ClassicalAInfinity {
            degrees,
            ops,
            signs,
        })
    }

    pub fn signs(&self) -> ClassicalSigns {
        self.signs
    }

    fn op_degree(n: usize) -> i64 {
        2 - n as i64
    }

    fn sign(&self, j: usize, q: usize, r: usize) -> bool {
        let t = j - 1 - r;
        let v = j + q - 1;
        let k = r + 1;
        let e = match self.signs {
            ClassicalSigns::GetzlerJones => r * q + t,
            ClassicalSigns::Stasheff => v * q + k * (q - 1),
        };
        e % 2 == 1
    }

    /// Residual of the arity-`v` relation on one word.
    pub fn residual(&self, word: &[u32]) -> BTreeMap<u32, BigInt> {
        let v = word.len();
        let mut out: BTreeMap<u32, BigInt> = BTreeMap::new();
        for j in 1..=v {
            let q = v + 1 - j;
            let (Some(outer), Some(inner)) = (self.ops.get(&j), self.ops.get(&q)) else {
                continue;
            };
            for r in 0..j {
                let Some(mid) = inner.get(&word[r..r + q]) else {
                    continue;
                };
                let passed: i64 = word[..r].iter().map(|&x| self.degrees[x as usize]).sum();
                let koszul = (Self::op_degree(q) * passed).rem_euclid(2) == 1;
                let negative = koszul ^ self.sign(j, q, r);
                for (&y, c) in mid {
                    let mut w2: Word = word[..r].to_vec();
                    w2.push(y);
                    w2.extend_from_slice(&word[r + q..]);
                    if let Some(value) = outer.get(&w2) {
                        for (&z, c2) in value {
                            let term = c * c2;
                            let slot = out.entry(z).or_default();
                            if negative {
                                *slot -= term;
                            } else {
                                *slot += term;
                            }
                        }
                    }
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    /// All failing words of arity `1..=v_max`.
    pub fn check(&self, v_max: usize) -> Vec<ClassicalFailure> {
        let rank = self.degrees.len();
        let mut failures = Vec::new();
        for v in 1..=v_max {
            let count = rank.checked_pow(v as u32).unwrap_or(usize::MAX);
            for mut n in 0..count {
                let mut word = vec![0u32; v];
                for slot in word.iter_mut().rev() {
                    *slot = (n % rank) as u32;
                    n /= rank;
                }
                let r = self.residual(&word);
                if !r.is_empty() {
                    failures.push((v, word, r));
                }
            }
        }
        failures
    }
}
