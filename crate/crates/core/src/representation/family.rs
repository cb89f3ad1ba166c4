use std::collections::BTreeMap;

use super::bimodule::{BimoduleWord, MixedBases};
use crate::bar::{bar_family_from_structure, CoderivationFamily};
use crate::exact::{
    desuspension_sign, Bidegree, BigradedBasis, GradedMap, LinComb, Scalar, TensorWord,
};
use crate::structure::{Convention, StructureFamily};
use crate::{Error, Result};

/// Action maps `A^{⊗(slot−1)} ⊗ M ⊗ A^{⊗(j−slot)} → M` of bidegree `(−i, 2−i−j)` over a structure family.
///
/// Inputs are words of mixed indices: position `slot` indexes the module basis, the rest the algebra basis.
/// Actions follow the convention of the algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepFamily {
    algebra: StructureFamily,
    module: BigradedBasis,
    actions: BTreeMap<(usize, usize, usize), GradedMap>,
}

impl RepFamily {
    pub fn new(algebra: StructureFamily, module: BigradedBasis) -> Self {
        RepFamily {
            algebra,
            module,
            actions: BTreeMap::new(),
        }
    }

    /// `A` acting on itself: every slot uses the structure maps.
    pub fn regular(algebra: &StructureFamily) -> Self {
        let mut rep = RepFamily::new(algebra.clone(), algebra.basis().clone());
        for ((i, j), m) in algebra.maps() {
            for slot in 1..=j {
                rep.actions.insert((i, j, slot), m.clone());
            }
        }
        rep
    }

    pub fn algebra(&self) -> &StructureFamily {
        &self.algebra
    }

    pub fn module(&self) -> &BigradedBasis {
        &self.module
    }

    pub fn convention(&self) -> Convention {
        self.algebra.convention()
    }

    pub fn action(&self, i: usize, j: usize, slot: usize) -> Option<&GradedMap> {
        self.actions.get(&(i, j, slot))
    }

    pub fn actions(&self) -> impl Iterator<Item = ((usize, usize, usize), &GradedMap)> {
        self.actions.iter().map(|(&k, m)| (k, m))
    }

    /// Installs one action map after checking slot, bounds, bidegree, arity and homogeneity.
    pub fn set_action(&mut self, i: usize, j: usize, slot: usize, map: GradedMap) -> Result<()> {
        if slot == 0 || slot > j {
            return Err(Error::SlotOutOfRange { slot, arity: j });
        }
        let bounds = self.algebra.bounds();
        if j == 0 || i > bounds.max_horizontal || j > bounds.max_arity {
            return Err(Error::OutOfBounds {
                i,
                j,
                max_horizontal: bounds.max_horizontal,
                max_arity: bounds.max_arity,
            });
        }
        let expected = Bidegree::structure(i, j);
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
        check_mixed_homogeneous(&map, slot - 1, self.algebra.basis(), &self.module)?;
        let ring = self.algebra.ring().clone();
        let mut reduced = GradedMap::new(j, expected)?;
        for (input, output) in map.entries() {
            reduced.insert(input.clone(), output.reduced(&ring))?;
        }
        if reduced.is_zero() {
            self.actions.remove(&(i, j, slot));
        } else {
            self.actions.insert((i, j, slot), reduced);
        }
        Ok(())
    }

    /// Sets one action value by names; `input[slot − 1]` names a module element.
    pub fn set_action_by_names(
        &mut self,
        i: usize,
        j: usize,
        slot: usize,
        input: &[&str],
        output: &str,
        coeff: i64,
    ) -> Result<()> {
        let word = self.parse_mixed(input, slot)?;
        let out = LinComb::term(
            TensorWord::single(self.module.index_of(output)?),
            Scalar::from(coeff),
        );
        let mut map = match self.actions.get(&(i, j, slot)) {
            Some(m) => m.clone(),
            None => GradedMap::new(j, Bidegree::structure(i, j))?,
        };
        map.insert(word, out)?;
        self.set_action(i, j, slot, map)
    }

    /// Parses a mixed word whose 1-based position `slot` is a module name.
    pub fn parse_mixed<S: AsRef<str>>(&self, names: &[S], slot: usize) -> Result<TensorWord> {
        if slot == 0 || slot > names.len() {
            return Err(Error::SlotOutOfRange {
                slot,
                arity: names.len(),
            });
        }
        let indices = names
            .iter()
            .enumerate()
            .map(|(k, n)| {
                if k + 1 == slot {
                    self.module.index_of(n.as_ref())
                } else {
                    self.algebra.basis().index_of(n.as_ref())
                }
            })
            .collect::<Result<Vec<_>>>()?;
        TensorWord::new(indices)
    }

    /// Names of a mixed word whose 1-based position `slot` is a module index.
    pub fn mixed_names(&self, word: &[u32], slot: usize) -> Vec<String> {
        word.iter()
            .enumerate()
            .map(|(k, &x)| {
                if k + 1 == slot {
                    self.module.name(x).to_string()
                } else {
                    self.algebra.basis().name(x).to_string()
                }
            })
            .collect()
    }

    /// The same representation in the Sagave convention; actions rescale like the structure maps.
    pub fn to_sagave(&self) -> RepFamily {
        match self.convention() {
            Convention::Sagave => self.clone(),
            Convention::Tilde => self.converted(),
        }
    }

    /// Flips the convention of the algebra and rescales each action by `(−1)^{j(j−1)/2}`.
    pub fn converted(&self) -> RepFamily {
        let ring = self.algebra.ring();
        RepFamily {
            algebra: crate::structure::convert_convention(&self.algebra),
            module: self.module.clone(),
            actions: self
                .actions
                .iter()
                .map(|(&(i, j, slot), m)| {
                    let mut r = GradedMap::new(j, m.bidegree()).expect("positive arity");
                    for (input, output) in m.entries() {
                        r.insert(
                            input.clone(),
                            output.signed(Convention::rescaling(j)).reduced(ring),
                        )
                        .expect("same shape");
                    }
                    ((i, j, slot), r)
                })
                .collect(),
        }
    }
}

fn check_mixed_homogeneous(
    map: &GradedMap,
    position: usize,
    algebra: &BigradedBasis,
    module: &BigradedBasis,
) -> Result<()> {
    let bases = MixedBases { algebra, module };
    for (input, output) in map.entries() {
        for (k, &x) in input.iter().enumerate() {
            if k == position {
                module.check_index(x)?;
            } else {
                algebra.check_index(x)?;
            }
        }
        let expected = bases
            .flat_bidegrees(input, position)
            .into_iter()
            .sum::<Bidegree>()
            + map.bidegree();
        for w in output.keys() {
            module.check_index(w[0])?;
            let found = module.bidegree(w[0]);
            if found != expected {
                return Err(Error::NonHomogeneous { expected, found });
            }
        }
    }
    Ok(())
}

/// Coderivations `g_n` of the bicomodule over the bar coderivations `δ^n` of the algebra.
///
/// Blocks avoiding the module factor use the algebra corestrictions; blocks containing it use the
/// module corestriction for that slot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepCoderivationFamily {
    algebra: CoderivationFamily,
    module: BigradedBasis,
    components: BTreeMap<(usize, usize, usize), GradedMap>,
}

impl RepCoderivationFamily {
    /// Suspended algebra and module bases.
    pub fn bases(&self) -> MixedBases<'_> {
        MixedBases {
            algebra: self.algebra.basis(),
            module: &self.module,
        }
    }

    pub fn algebra(&self) -> &CoderivationFamily {
        &self.algebra
    }

    pub fn module(&self) -> &BigradedBasis {
        &self.module
    }

    pub fn corestriction(&self, n: usize, j: usize, slot: usize) -> Option<&GradedMap> {
        self.components.get(&(n, j, slot))
    }

    /// Replaces one module corestriction; used to build perturbed families.
    pub fn set_corestriction(
        &mut self,
        n: usize,
        j: usize,
        slot: usize,
        map: GradedMap,
    ) -> Result<()> {
        if slot == 0 || slot > j {
            return Err(Error::SlotOutOfRange { slot, arity: j });
        }
        if map.bidegree() != Bidegree::differential(n) {
            return Err(Error::BidegreeMismatch {
                expected: Bidegree::differential(n),
                found: map.bidegree(),
            });
        }
        check_mixed_homogeneous(&map, slot - 1, self.algebra.basis(), &self.module)?;
        if map.is_zero() {
            self.components.remove(&(n, j, slot));
        } else {
            self.components.insert((n, j, slot), map);
        }
        Ok(())
    }

    /// `g_n(w)`: the sum over all blocks of the flattened word, with the Koszul sign for the passed prefix.
    #[allow(clippy::needless_range_loop)] // `r` is a block start, not just an index into `degrees`
    pub fn apply(&self, n: usize, word: &BimoduleWord) -> LinComb<BimoduleWord> {
        let flat = word.flatten();
        let p = word.module_position();
        let degrees = self.bases().flat_bidegrees(&flat, p);
        let len = flat.len();
        let mut out = LinComb::zero();
        for j in 1..=len {
            let mut passed = Bidegree::ZERO;
            for r in 0..=len - j {
                let (map, new_p) = if r <= p && p < r + j {
                    (self.components.get(&(n, j, p - r + 1)), r)
                } else if r + j <= p {
                    (self.algebra.corestriction(n, j), p + 1 - j)
                } else {
                    (self.algebra.corestriction(n, j), p)
                };
                if let Some(map) = map {
                    for (w, c) in &map.apply_block(&flat, r, passed) {
                        out.add_term(BimoduleWord::from_flat(w, new_p), c.clone());
                    }
                }
                passed += degrees[r];
            }
        }
        out
    }

    pub fn apply_lincomb(&self, n: usize, x: &LinComb<BimoduleWord>) -> LinComb<BimoduleWord> {
        x.flat_map(|w| self.apply(n, w))
    }
}

/// Corestrictions `s ∘ μ ∘ (s^{−1})^{⊗j}` of the actions, in the Sagave convention, over the bar family of the algebra.
pub fn rep_family_from_action(rep: &RepFamily) -> RepCoderivationFamily {
    let rep = rep.to_sagave();
    let algebra = bar_family_from_structure(&rep.algebra);
    let module = rep.module.shifted(Bidegree::new(0, -1));
    let mut components = BTreeMap::new();
    {
        let bases = MixedBases {
            algebra: algebra.basis(),
            module: &module,
        };
        for (&(n, j, slot), m) in &rep.actions {
            let mut g = GradedMap::new(j, Bidegree::differential(n)).expect("positive arity");
            for (input, output) in m.entries() {
                let sign = desuspension_sign(bases.flat_bidegrees(input, slot - 1));
                g.insert(input.clone(), output.signed(sign))
                    .expect("same shape");
            }
            components.insert((n, j, slot), g);
        }
    }
    RepCoderivationFamily {
        algebra,
        module,
        components,
    }
}
