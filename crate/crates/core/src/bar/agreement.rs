use serde::Serialize;

use super::coderivation::{bar_family_from_structure, check_family_twisted};
use crate::structure::{check_derived_ainfinity, StructureFamily};
use crate::Result;

/// Outcome of both checkers on the window `u' ≤ u`, `v' ≤ v`.
///
/// The windows are downward closed because a failing relation of low arity reappears,
/// tensored with identities, in the length-`v` component of the twisted condition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct WindowAgreement {
    pub u: usize,
    pub v: usize,
    pub relations_passed: bool,
    pub twisted_passed: bool,
}

/// The relations of a family against the twisted-complex condition on its bar family, window by window.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BarAgreement {
    pub windows: Vec<WindowAgreement>,
}

impl BarAgreement {
    pub fn agree(&self) -> bool {
        self.windows
            .iter()
            .all(|w| w.relations_passed == w.twisted_passed)
    }

    /// Both checkers pass every window.
    pub fn passed(&self) -> bool {
        self.windows
            .iter()
            .all(|w| w.relations_passed && w.twisted_passed)
    }
}

pub fn compare_with_bar(a: &StructureFamily, u_max: usize, v_max: usize) -> Result<BarAgreement> {
    let relations = check_derived_ainfinity(a, u_max, v_max)?;
    let twisted = check_family_twisted(&bar_family_from_structure(a), u_max, v_max)?;
    let closed = |reports: &[crate::report::RelationReport], u: usize, v: usize| {
        reports
            .iter()
            .filter(|r| r.u <= u && r.v <= v)
            .all(|r| r.passed())
    };
    let windows = relations
        .iter()
        .map(|r| WindowAgreement {
            u: r.u,
            v: r.v,
            relations_passed: closed(&relations, r.u, r.v),
            twisted_passed: closed(&twisted, r.u, r.v),
        })
        .collect();
    Ok(BarAgreement { windows })
}
