//! Exact verification of derived A-infinity algebras.
//!
//! The crate is organised bottom-up:
//! - [`exact`] holds scalars, bidegrees, bases, tensor words and graded maps.
//! - [`structure`] holds structure families, the defining relations and their checkers.
//! - [`bar`] models the cofree coalgebra `k[x] ⊗ T̄c(C)` and coderivation families.
//! - [`representation`] models the bicomodule `k[x] ⊗ Tc(sA) ⊗ sM ⊗ Tc(sA)`.
//! - [`cooperad`] expands the comultiplication of the Koszul dual cooperad symbolically.
//! - [`catalog`] builds the named example structures.
//! - [`document`] and [`report`] define the JSON formats shared by the CLI and the bindings.

pub mod bar;
pub mod catalog;
pub mod cooperad;
pub mod document;
mod error;
pub mod exact;
pub mod report;
pub mod representation;
pub mod structure;

pub use error::{Error, Result};
