//! Exact substrate: scalars, bidegrees, bases, tensor words, linear combinations and graded maps.

mod basis;
mod bidegree;
mod graded_map;
mod lincomb;
mod ring;
mod suspension;
mod word;

pub use basis::BigradedBasis;
pub use bidegree::{koszul_sign, Bidegree, Sign};
pub use graded_map::{mor_differential, GradedMap};
pub use lincomb::LinComb;
pub use ring::{Ring, Scalar};
pub use suspension::{desuspension_sign, suspend, suspension_sign, Direction};
pub use word::TensorWord;
