//! Comultiplication of the cooperad generators `μ_uv`, their rescaled forms `μ̃_uv` and their suspensions `α_uv`.
//!
//! Generators are symbolic; a decomposition `c′; c″_1 ⊗ … ⊗ c″_j` is a [`DecompositionTerm`].

mod coassociativity;
mod decomposition;
mod generator;
mod signs;

pub use coassociativity::{check_coassociativity, coassociativity_defect, TwoLevelTree};
pub use decomposition::{
    compositions, decompose, decomposition_to_json, delta_alpha, delta_mu, delta_mu_tilde,
    format_decomposition, DecompositionTerm,
};
pub use generator::{CooperadGenerator, GeneratorKind};
pub use signs::{alpha_exponent, lambda_suspension_sign, phi, x_prime, x_sign, SUSPENSION};
