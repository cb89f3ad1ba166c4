use thiserror::Error;

use crate::exact::Bidegree;

/// Errors raised by the library. Every failure mode of a checker or a loader maps to one variant.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("arity 0 is not allowed")]
    ZeroArity,
    #[error("duplicate basis name `{0}`")]
    DuplicateName(String),
    #[error("empty basis name")]
    EmptyName,
    #[error("unknown basis name `{0}`")]
    UnknownName(String),
    #[error("basis index {0} out of range")]
    IndexOutOfRange(u32),
    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("malformed composite: map of arity {arity} at position {position} on a word of length {len}")]
    MalformedComposite {
        arity: usize,
        position: usize,
        len: usize,
    },
    #[error("non-homogeneous entry: expected output bidegree {expected}, found {found}")]
    NonHomogeneous { expected: Bidegree, found: Bidegree },
    #[error("map ({i},{j}) exceeds the declared bounds (max_horizontal {max_horizontal}, max_arity {max_arity})")]
    OutOfBounds {
        i: usize,
        j: usize,
        max_horizontal: usize,
        max_arity: usize,
    },
    #[error("insufficient truncation: window needs ({u},{v}) but the family is only known up to ({max_horizontal},{max_arity})")]
    TruncationInsufficient {
        u: usize,
        v: usize,
        max_horizontal: usize,
        max_arity: usize,
    },
    #[error("bidegree mismatch: expected {expected}, found {found}")]
    BidegreeMismatch { expected: Bidegree, found: Bidegree },
    #[error("convention mismatch: operation requires the {0} convention")]
    ConventionMismatch(&'static str),
    #[error("{0} is not prime")]
    NotPrime(String),
    #[error("invalid ring `{0}`")]
    InvalidRing(String),
    #[error("family is not a bidga candidate: map ({0},{1}) is present")]
    NotBidgaCandidate(usize, usize),
    #[error("family is not concentrated in horizontal degree 0: map ({0},{1}) is present")]
    NotClassical(usize, usize),
    #[error("slot {slot} out of range for arity {arity}")]
    SlotOutOfRange { slot: usize, arity: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("schema violation at {path}: {message}")]
    Schema { path: String, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
