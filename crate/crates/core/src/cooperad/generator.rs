use std::fmt;
use std::str::FromStr;

use crate::exact::Bidegree;
use crate::{Error, Result};

/// Which family of generators, and so which sign rule.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GeneratorKind {
    Mu,
    MuTilde,
    Alpha,
}

impl GeneratorKind {
    pub const ALL: [GeneratorKind; 3] = [
        GeneratorKind::Mu,
        GeneratorKind::MuTilde,
        GeneratorKind::Alpha,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GeneratorKind::Mu => "mu",
            GeneratorKind::MuTilde => "mu_tilde",
            GeneratorKind::Alpha => "alpha",
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            GeneratorKind::Mu => "μ",
            GeneratorKind::MuTilde => "μ̃",
            GeneratorKind::Alpha => "α",
        }
    }
}

impl fmt::Display for GeneratorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GeneratorKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        GeneratorKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown generator kind `{s}`")))
    }
}

/// A generator of horizontal index `u ≥ 0` and arity `v ≥ 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CooperadGenerator {
    pub kind: GeneratorKind,
    pub u: usize,
    pub v: usize,
}

impl CooperadGenerator {
    pub fn new(kind: GeneratorKind, u: usize, v: usize) -> Result<Self> {
        if v == 0 {
            return Err(Error::ZeroArity);
        }
        Ok(CooperadGenerator { kind, u, v })
    }

    /// `(−u, 1−u−v)` for `μ` and `μ̃`, `(−u, −u)` for `α`.
    pub fn bidegree(&self) -> Bidegree {
        let u = self.u as i64;
        match self.kind {
            GeneratorKind::Mu | GeneratorKind::MuTilde => Bidegree::new(-u, 1 - u - self.v as i64),
            GeneratorKind::Alpha => Bidegree::new(-u, -u),
        }
    }
}

impl fmt::Display for CooperadGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{},{}]", self.kind.symbol(), self.u, self.v)
    }
}
