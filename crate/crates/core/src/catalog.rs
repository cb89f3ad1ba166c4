//! Named example structures.
//!
//! All of them are written in the tilde convention: their relations are the ⋆-product form.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::exact::{Bidegree, BigradedBasis, GradedMap, LinComb, Ring, Scalar, Sign, TensorWord};
use crate::structure::{Bounds, Convention, StructureFamily};
use crate::{Error, Result};

pub const DEFAULT_ARITY_BOUND: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExampleId {
    AlloccaLada,
    AlloccaLadaMinimal,
    Rank3Derived,
    Rank3ModifiedM01,
    Rank3TruncatedBidga,
    Rank3TruncatedBidgaM01,
}

impl ExampleId {
    pub const ALL: [ExampleId; 6] = [
        ExampleId::AlloccaLada,
        ExampleId::AlloccaLadaMinimal,
        ExampleId::Rank3Derived,
        ExampleId::Rank3ModifiedM01,
        ExampleId::Rank3TruncatedBidga,
        ExampleId::Rank3TruncatedBidgaM01,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ExampleId::AlloccaLada => "allocca_lada",
            ExampleId::AlloccaLadaMinimal => "allocca_lada_minimal",
            ExampleId::Rank3Derived => "rank3_derived",
            ExampleId::Rank3ModifiedM01 => "rank3_modified_m01",
            ExampleId::Rank3TruncatedBidga => "rank3_truncated_bidga",
            ExampleId::Rank3TruncatedBidgaM01 => "rank3_truncated_bidga_m01",
        }
    }
}

impl fmt::Display for ExampleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ExampleId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ExampleId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown example `{s}`")))
    }
}

/// `s_n = (−1)^{(n+1)(n+2)/2}`.
pub fn sn(n: i64) -> Sign {
    Sign::from_parity((n + 1) * (n + 2) / 2)
}

/// `x (0,0)`, `y (0,1)`.
pub fn allocca_lada_basis() -> BigradedBasis {
    BigradedBasis::new([("x", Bidegree::new(0, 0)), ("y", Bidegree::new(0, 1))])
        .expect("valid basis")
}

/// `u (0,0)`, `v (−1,0)`, `w (0,1)`.
pub fn rank3_basis() -> BigradedBasis {
    BigradedBasis::new([
        ("u", Bidegree::new(0, 0)),
        ("v", Bidegree::new(-1, 0)),
        ("w", Bidegree::new(0, 1)),
    ])
    .expect("valid basis")
}

/// Builds the example with every map populated on words of arity `≤ arity_bound`.
pub fn build(id: ExampleId, arity_bound: usize) -> Result<StructureFamily> {
    if arity_bound < 2 {
        return Err(Error::InvalidArgument(format!(
            "arity bound must be at least 2, got {arity_bound}"
        )));
    }
    let bounds = Bounds {
        max_horizontal: arity_bound,
        max_arity: arity_bound,
    };
    match id {
        ExampleId::AlloccaLada => allocca_lada(bounds, true),
        ExampleId::AlloccaLadaMinimal => allocca_lada(bounds, false),
        ExampleId::Rank3Derived => rank3(bounds, false),
        ExampleId::Rank3ModifiedM01 => rank3(bounds, true),
        ExampleId::Rank3TruncatedBidga => Ok(truncate(&rank3(bounds, false)?)),
        ExampleId::Rank3TruncatedBidgaM01 => Ok(truncate(&rank3(bounds, true)?)),
    }
}

fn truncate(a: &StructureFamily) -> StructureFamily {
    a.restricted(|i, j| i + j < 3)
}

fn power(letter: &'static str, n: usize) -> impl Iterator<Item = &'static str> {
    std::iter::repeat_n(letter, n)
}

fn allocca_lada(bounds: Bounds, with_differential: bool) -> Result<StructureFamily> {
    let mut a = StructureFamily::new(
        allocca_lada_basis(),
        Ring::Integers,
        bounds,
        Convention::Tilde,
    );
    if with_differential {
        a.set_by_names(0, 1, &["x"], "y", 1)?;
    }
    for n in 2..=bounds.max_arity {
        let s = sn(n as i64);
        for k in 0..=n - 2 {
            let word: Vec<_> = ["x"]
                .into_iter()
                .chain(power("y", k))
                .chain(["x"])
                .chain(power("y", n - 2 - k))
                .collect();
            a.set_by_names(0, n, &word, "x", (Sign::from_parity(k as i64) * s).to_i64())?;
        }
        let word: Vec<_> = ["x"].into_iter().chain(power("y", n - 1)).collect();
        a.set_by_names(0, n, &word, "y", sn(n as i64 + 1).to_i64())?;
    }
    Ok(a)
}

fn rank3(bounds: Bounds, with_differential: bool) -> Result<StructureFamily> {
    let mut a = StructureFamily::new(rank3_basis(), Ring::Integers, bounds, Convention::Tilde);
    if with_differential {
        a.set_by_names(0, 1, &["u"], "w", 1)?;
    }
    for n in 2..=bounds.max_arity {
        let s = sn(n as i64);
        for k in 0..=n - 2 {
            let word: Vec<_> = ["u"]
                .into_iter()
                .chain(power("w", k))
                .chain(["u"])
                .chain(power("w", n - 2 - k))
                .collect();
            a.set_by_names(0, n, &word, "u", (Sign::from_parity(k as i64) * s).to_i64())?;
        }
        let word: Vec<_> = ["u"].into_iter().chain(power("w", n - 1)).collect();
        a.set_by_names(0, n, &word, "w", sn(n as i64 + 1).to_i64())?;
        let word: Vec<_> = ["u"]
            .into_iter()
            .chain(power("w", n - 2))
            .chain(["v"])
            .collect();
        a.set_by_names(
            0,
            n,
            &word,
            "v",
            (Sign::from_parity(n as i64 - 2) * s).to_i64(),
        )?;
    }
    for n in 1..=bounds.max_arity {
        let word: Vec<_> = ["u"].into_iter().chain(power("w", n - 1)).collect();
        a.set_by_names(1, n, &word, "v", sn(n as i64 + 1).to_i64())?;
    }
    Ok(a)
}

/// Whether `m_ij` may be nonzero on `word` over the rank-3 basis (indices `u = 0`, `v = 1`, `w = 2`).
///
/// `m_0n` needs two distinguished letters from `{uu, uw, wu, uv, vu}` with all others `w`;
/// for `n = 1` the single letter must be `u`. `m_1n` needs exactly one `u` and all others `w`.
/// Nothing else is allowed.
pub fn allowed_shape(i: usize, word: &[u32]) -> bool {
    const U: u32 = 0;
    const V: u32 = 1;
    const W: u32 = 2;
    let count = |x: u32| word.iter().filter(|&&y| y == x).count();
    let (us, vs, ws) = (count(U), count(V), count(W));
    match i {
        0 if word.len() == 1 => us == 1,
        0 => matches!((us, vs), (2, 0) | (1, 0) | (1, 1)) && us + vs + ws == word.len(),
        1 => us == 1 && ws == word.len() - 1,
        _ => false,
    }
}

/// Entries that violate [`allowed_shape`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SupportReport {
    pub entries_checked: usize,
    pub violations: Vec<((usize, usize), TensorWord)>,
}

impl SupportReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks every nonzero entry of a family over the rank-3 basis against [`allowed_shape`].
pub fn bidegree_support_check(a: &StructureFamily) -> Result<SupportReport> {
    if a.basis() != &rank3_basis() {
        return Err(Error::InvalidArgument(
            "support check needs the rank-3 basis u, v, w".into(),
        ));
    }
    let mut report = SupportReport::default();
    for ((i, j), m) in a.maps() {
        for (input, _) in m.entries() {
            report.entries_checked += 1;
            if !allowed_shape(i, input) {
                report.violations.push(((i, j), input.clone()));
            }
        }
    }
    Ok(report)
}

/// Every `(i, j, input, output)` at which a homogeneous `m_ij` may be nonzero within `bounds`.
///
/// Ordered by `(i, j)`, then input word, then output index.
pub fn admissible_entries(
    basis: &BigradedBasis,
    bounds: Bounds,
) -> Vec<(usize, usize, TensorWord, u32)> {
    let mut out = Vec::new();
    for i in 0..=bounds.max_horizontal {
        for j in 1..=bounds.max_arity {
            for input in basis.words(j) {
                let target = basis.word_bidegree(&input) + Bidegree::structure(i, j);
                for o in (0..basis.len() as u32).filter(|&o| basis.bidegree(o) == target) {
                    out.push((i, j, input.clone(), o));
                }
            }
        }
    }
    out
}

/// A family whose coefficient at each entry of [`admissible_entries`] is drawn from `coefficient`, in that order.
pub fn family_from_coefficients(
    basis: BigradedBasis,
    ring: Ring,
    bounds: Bounds,
    convention: Convention,
    mut coefficient: impl FnMut() -> i64,
) -> Result<StructureFamily> {
    let mut maps: BTreeMap<(usize, usize), GradedMap> = BTreeMap::new();
    for (i, j, input, o) in admissible_entries(&basis, bounds) {
        let c = coefficient();
        if c == 0 {
            continue;
        }
        let map = maps.entry((i, j)).or_insert_with(|| {
            GradedMap::new(j, Bidegree::structure(i, j)).expect("positive arity")
        });
        map.add_entry(
            input,
            &LinComb::term(TensorWord::single(o), Scalar::from(c)),
        )?;
    }
    let mut family = StructureFamily::new(basis, ring, bounds, convention);
    for ((i, j), m) in maps {
        family.insert_map(i, j, m)?;
    }
    Ok(family)
}
