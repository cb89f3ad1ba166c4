//! Structure families `{m_ij}`, their defining relations, twisted complexes and bidga axioms.

mod bidga;
pub mod classical;
mod family;
mod relation;
mod twisted;

pub use bidga::{check_bidga, BidgaReport};
pub use family::{convert_convention, Bounds, Convention, StructureFamily};
pub use relation::{
    check_derived_ainfinity, check_relations, evaluate_terms, expand_relation,
    expand_star_relation, star_product_terms, CompositeTerm, RelationForm,
};
pub use twisted::{
    check_twisted_complex, check_twisted_map, compose_twisted_maps, TwistedComplex, TwistedMap,
};
