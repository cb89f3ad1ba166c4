use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::exact::{Bidegree, BigradedBasis, GradedMap, LinComb, Ring, Scalar, Sign, TensorWord};
use crate::{Error, Result};

/// Which generators the stored maps are.
///
/// `Tilde` maps are `m̃_ij = (−1)^{j(j−1)/2} m_ij`; their relations are the ⋆-product form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Convention {
    Sagave,
    Tilde,
}

impl Convention {
    pub fn name(self) -> &'static str {
        match self {
            Convention::Sagave => "sagave",
            Convention::Tilde => "tilde",
        }
    }

    pub fn flipped(self) -> Convention {
        match self {
            Convention::Sagave => Convention::Tilde,
            Convention::Tilde => Convention::Sagave,
        }
    }

    /// `(−1)^{j(j−1)/2}`: the factor relating `m_ij` and `m̃_ij`.
    pub fn rescaling(j: usize) -> Sign {
        let j = j as i64;
        Sign::from_parity(j * (j - 1) / 2)
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Convention {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sagave" => Ok(Convention::Sagave),
            "tilde" => Ok(Convention::Tilde),
            other => Err(Error::InvalidArgument(format!(
                "unknown convention `{other}`"
            ))),
        }
    }
}

/// Range of indices on which a family is known exactly.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Bounds {
    pub max_horizontal: usize,
    pub max_arity: usize,
}

/// A sparse family of structure maps `m_ij : A^{⊗j} → A` of bidegree `(−i, 2−i−j)`.
///
/// Maps are total on the declared bounds and zero wherever no entry is stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureFamily {
    basis: BigradedBasis,
    ring: Ring,
    bounds: Bounds,
    convention: Convention,
    maps: BTreeMap<(usize, usize), GradedMap>,
}

impl StructureFamily {
    /// The zero family.
    pub fn new(basis: BigradedBasis, ring: Ring, bounds: Bounds, convention: Convention) -> Self {
        StructureFamily {
            basis,
            ring,
            bounds,
            convention,
            maps: BTreeMap::new(),
        }
    }

    pub fn basis(&self) -> &BigradedBasis {
        &self.basis
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn bounds(&self) -> Bounds {
        self.bounds
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    pub fn map(&self, i: usize, j: usize) -> Option<&GradedMap> {
        self.maps.get(&(i, j))
    }

    /// Nonzero maps in `(i, j)` order.
    pub fn maps(&self) -> impl Iterator<Item = ((usize, usize), &GradedMap)> {
        self.maps.iter().map(|(&k, m)| (k, m))
    }

    /// Indices `(i, j)` of the nonzero maps.
    pub fn support(&self) -> Vec<(usize, usize)> {
        self.maps.keys().copied().collect()
    }

    fn check_index(&self, i: usize, j: usize) -> Result<()> {
        if j == 0 {
            return Err(Error::ZeroArity);
        }
        if i > self.bounds.max_horizontal || j > self.bounds.max_arity {
            return Err(Error::OutOfBounds {
                i,
                j,
                max_horizontal: self.bounds.max_horizontal,
                max_arity: self.bounds.max_arity,
            });
        }
        Ok(())
    }

    /// Installs `m_ij`, checking bidegree, arity, bounds and homogeneity.
    pub fn insert_map(&mut self, i: usize, j: usize, map: GradedMap) -> Result<()> {
        self.check_index(i, j)?;
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
        map.check_homogeneous(&self.basis, &self.basis)?;
        let mut reduced = GradedMap::new(j, expected)?;
        for (input, output) in map.entries() {
            reduced.insert(input.clone(), output.reduced(&self.ring))?;
        }
        if reduced.is_zero() {
            self.maps.remove(&(i, j));
        } else {
            self.maps.insert((i, j), reduced);
        }
        Ok(())
    }

    /// Sets `m_ij(input) = output`, with the same checks as [`StructureFamily::insert_map`].
    pub fn set_entry(
        &mut self,
        i: usize,
        j: usize,
        input: TensorWord,
        output: LinComb<TensorWord>,
    ) -> Result<()> {
        self.check_index(i, j)?;
        let mut map = match self.maps.get(&(i, j)) {
            Some(m) => m.clone(),
            None => GradedMap::new(j, Bidegree::structure(i, j))?,
        };
        map.insert(input, output)?;
        self.insert_map(i, j, map)
    }

    /// `m_ij(input) = coeff · output`, by basis names.
    pub fn set_by_names(
        &mut self,
        i: usize,
        j: usize,
        input: &[&str],
        output: &str,
        coeff: i64,
    ) -> Result<()> {
        let input = self.basis.parse_word(input)?;
        let output = LinComb::term(self.basis.parse_word(&[output])?, Scalar::from(coeff));
        self.set_entry(i, j, input, output)
    }

    /// Stores an entry with no bidegree or homogeneity check. Used to build invalid fixtures.
    #[cfg(test)]
    pub(crate) fn insert_unchecked(
        &mut self,
        i: usize,
        j: usize,
        input: TensorWord,
        output: LinComb<TensorWord>,
    ) {
        let map = self
            .maps
            .entry((i, j))
            .or_insert_with(|| GradedMap::new(j, Bidegree::structure(i, j)).unwrap());
        map.insert(input, output).unwrap();
    }

    /// The family with only the maps for which `keep(i, j)` holds.
    pub fn restricted(&self, keep: impl Fn(usize, usize) -> bool) -> StructureFamily {
        StructureFamily {
            maps: self
                .maps
                .iter()
                .filter(|(&(i, j), _)| keep(i, j))
                .map(|(&k, m)| (k, m.clone()))
                .collect(),
            ..self.clone()
        }
    }

    /// Same maps under new bounds; fails if a stored map falls outside them.
    pub fn with_bounds(&self, bounds: Bounds) -> Result<StructureFamily> {
        let out = StructureFamily {
            bounds,
            ..self.clone()
        };
        for &(i, j) in self.maps.keys() {
            out.check_index(i, j)?;
        }
        Ok(out)
    }

    /// The family expressed in the Sagave convention.
    pub fn to_sagave(&self) -> StructureFamily {
        match self.convention {
            Convention::Sagave => self.clone(),
            Convention::Tilde => convert_convention(self),
        }
    }

    /// The family expressed in the tilde convention.
    pub fn to_tilde(&self) -> StructureFamily {
        match self.convention {
            Convention::Tilde => self.clone(),
            Convention::Sagave => convert_convention(self),
        }
    }
}

/// Flips the convention tag and rescales each `m_ij` by `(−1)^{j(j−1)/2}`.
pub fn convert_convention(a: &StructureFamily) -> StructureFamily {
    let maps = a
        .maps
        .iter()
        .map(|(&(i, j), m)| {
            let rescaled = m.signed(Convention::rescaling(j));
            let reduced = match a.ring {
                Ring::Integers => rescaled,
                _ => {
                    let mut r = GradedMap::new(j, m.bidegree()).expect("positive arity");
                    for (input, output) in rescaled.entries() {
                        r.insert(input.clone(), output.reduced(&a.ring))
                            .expect("same shape");
                    }
                    r
                }
            };
            ((i, j), reduced)
        })
        .collect();
    StructureFamily {
        maps,
        convention: a.convention.flipped(),
        ..a.clone()
    }
}
