//! Two-sided representations through the bicomodule `k[x] ⊗ Tc(sA) ⊗ sM ⊗ Tc(sA)`.

mod bimodule;
mod check;
mod family;
mod render;

pub use bimodule::{
    bicomodule_coactions, bimodule_f, bimodule_keys, bimodule_words,
    coaction_coassociativity_failures, BimoduleElement, BimoduleKey, BimoduleWord,
    CoactionIdentity, Coactions, Factor, MixedBases,
};
pub use check::{
    check_rep, rep_coderivation_from_family, CoactionTerm, RepReport, TotalRepCoderivation,
};
pub use family::{rep_family_from_action, RepCoderivationFamily, RepFamily};
pub use render::{
    bimodule_word_to_json, format_bimodule_word, rep_report_to_json, rep_report_to_text,
};
