//! The cofree coalgebra `k[x] ⊗ T̄c(C)`, finite coalgebra triples, and coderivation families on `T̄c(sA)`.

mod agreement;
mod coderivation;
mod cofree;
mod triple;

pub use agreement::{compare_with_bar, BarAgreement, WindowAgreement};
pub use coderivation::{
    bar_family_from_structure, check_family_twisted, coderivation_from_family,
    corestriction_sign_table, CoderivationFamily, SignTableEntry, TotalCoderivation,
};
pub use cofree::{
    cofree_comultiplication, cofree_f, deconcatenate, key_bidegree, project_zero, split_sign,
    tensor_left, tensor_right, CoalgebraElement, CofreeKey, X_BIDEGREE,
};
pub use triple::{coaction_from_triple, CoalgebraTriple, TripleReport};
