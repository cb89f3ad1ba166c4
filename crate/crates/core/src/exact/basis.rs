use std::collections::HashMap;

use super::{Bidegree, TensorWord};
use crate::{Error, Result};

/// A finite ordered basis of named elements, each carrying a bidegree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BigradedBasis {
    names: Vec<String>,
    bidegrees: Vec<Bidegree>,
    index: HashMap<String, u32>,
}

impl BigradedBasis {
    pub fn new<S: Into<String>>(entries: impl IntoIterator<Item = (S, Bidegree)>) -> Result<Self> {
        let mut basis = BigradedBasis {
            names: Vec::new(),
            bidegrees: Vec::new(),
            index: HashMap::new(),
        };
        for (name, degree) in entries {
            let name = name.into();
            if name.is_empty() {
                return Err(Error::EmptyName);
            }
            if basis.index.contains_key(&name) {
                return Err(Error::DuplicateName(name));
            }
            basis.index.insert(name.clone(), basis.names.len() as u32);
            basis.names.push(name);
            basis.bidegrees.push(degree);
        }
        Ok(basis)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: u32) -> &str {
        &self.names[i as usize]
    }

    pub fn bidegree(&self, i: u32) -> Bidegree {
        self.bidegrees[i as usize]
    }

    pub fn index_of(&self, name: &str) -> Result<u32> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownName(name.to_string()))
    }

    pub fn check_index(&self, i: u32) -> Result<()> {
        if (i as usize) < self.len() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange(i))
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, Bidegree)> + '_ {
        self.names
            .iter()
            .map(String::as_str)
            .zip(self.bidegrees.iter().copied())
    }

    /// Sum of the factor bidegrees.
    pub fn word_bidegree(&self, word: &[u32]) -> Bidegree {
        word.iter().map(|&i| self.bidegree(i)).sum()
    }

    pub fn factor_bidegrees(&self, word: &[u32]) -> Vec<Bidegree> {
        word.iter().map(|&i| self.bidegree(i)).collect()
    }

    pub fn parse_word<S: AsRef<str>>(&self, names: &[S]) -> Result<TensorWord> {
        let factors = names
            .iter()
            .map(|n| self.index_of(n.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        TensorWord::new(factors)
    }

    pub fn word_names(&self, word: &[u32]) -> Vec<String> {
        word.iter().map(|&i| self.name(i).to_string()).collect()
    }

    /// `a⊗b⊗c` rendering.
    pub fn format_word(&self, word: &[u32]) -> String {
        self.word_names(word).join("⊗")
    }

    /// All words of the given arity in lexicographic index order.
    pub fn words(&self, arity: usize) -> impl Iterator<Item = TensorWord> + '_ {
        let rank = self.len() as u32;
        let total = if rank == 0 || arity == 0 {
            0
        } else {
            (rank as usize)
                .checked_pow(arity as u32)
                .unwrap_or(usize::MAX)
        };
        (0..total).map(move |mut n| {
            let mut factors = vec![0u32; arity];
            for slot in factors.iter_mut().rev() {
                *slot = (n % rank as usize) as u32;
                n /= rank as usize;
            }
            TensorWord::from_vec(factors)
        })
    }

    /// Same names and order, every bidegree shifted by `shift`.
    pub fn shifted(&self, shift: Bidegree) -> BigradedBasis {
        BigradedBasis {
            names: self.names.clone(),
            bidegrees: self.bidegrees.iter().map(|&d| d + shift).collect(),
            index: self.index.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn uvw() -> BigradedBasis {
        BigradedBasis::new([
            ("u", Bidegree::new(0, 0)),
            ("v", Bidegree::new(-1, 0)),
            ("w", Bidegree::new(0, 1)),
        ])
        .unwrap()
    }

    #[test]
    fn duplicate_names_are_rejected() {
        let err = BigradedBasis::new([("a", Bidegree::ZERO), ("a", Bidegree::ZERO)]);
        assert_eq!(err, Err(Error::DuplicateName("a".into())));
    }

    #[test]
    fn words_enumerate_lexicographically() {
        let b = uvw();
        let w: Vec<_> = b.words(2).collect();
        assert_eq!(w.len(), 9);
        assert_eq!(w[0].as_slice(), &[0, 0]);
        assert_eq!(w[1].as_slice(), &[0, 1]);
        assert_eq!(w[8].as_slice(), &[2, 2]);
        assert!(w.windows(2).all(|p| p[0] < p[1]));
    }

    #[test]
    fn word_bidegree_adds_factors() {
        let b = uvw();
        let w = b.parse_word(&["u", "v", "w", "w"]).unwrap();
        assert_eq!(b.word_bidegree(&w), Bidegree::new(-1, 2));
        assert_eq!(b.format_word(&w), "u⊗v⊗w⊗w");
    }

    #[test]
    fn unknown_names_are_reported() {
        assert_eq!(
            uvw().parse_word(&["q"]),
            Err(Error::UnknownName("q".into()))
        );
    }
}
