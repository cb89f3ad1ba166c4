use std::borrow::Borrow;
use std::ops::Deref;

use crate::{Error, Result};

/// A nonempty ordered list of basis indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TensorWord(Vec<u32>);

impl TensorWord {
    /// Fails on the empty word.
    pub fn new(factors: Vec<u32>) -> Result<Self> {
        if factors.is_empty() {
            Err(Error::ZeroArity)
        } else {
            Ok(TensorWord(factors))
        }
    }

    pub fn single(index: u32) -> Self {
        TensorWord(vec![index])
    }

    /// Caller guarantees `factors` is nonempty.
    pub(crate) fn from_vec(factors: Vec<u32>) -> Self {
        debug_assert!(!factors.is_empty());
        TensorWord(factors)
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.0
    }

    /// Replaces `len` factors starting at `start` with `replacement`.
    pub fn splice(&self, start: usize, len: usize, replacement: &[u32]) -> TensorWord {
        let mut out = Vec::with_capacity(self.0.len() - len + replacement.len());
        out.extend_from_slice(&self.0[..start]);
        out.extend_from_slice(replacement);
        out.extend_from_slice(&self.0[start + len..]);
        TensorWord::from_vec(out)
    }

    /// Concatenation of two words.
    pub fn concat(&self, other: &TensorWord) -> TensorWord {
        let mut out = self.0.clone();
        out.extend_from_slice(&other.0);
        TensorWord(out)
    }
}

impl Deref for TensorWord {
    type Target = [u32];
    fn deref(&self) -> &[u32] {
        &self.0
    }
}

impl Borrow<[u32]> for TensorWord {
    fn borrow(&self) -> &[u32] {
        &self.0
    }
}

impl TryFrom<Vec<u32>> for TensorWord {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        TensorWord::new(v)
    }
}
