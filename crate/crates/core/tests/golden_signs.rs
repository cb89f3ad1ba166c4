//! Frozen desuspension signs of the bar corestrictions. Regenerate with `UPDATE_GOLDEN=1`.

use std::path::PathBuf;

use dainf_core::bar::{corestriction_sign_table, SignTableEntry};
use dainf_core::catalog::{build, ExampleId};
use dainf_core::structure::StructureFamily;

/// The k-th desuspension passes the k−1 earlier suspended factors, so factor `l` is passed `j − l` times.
fn oracle(a: &StructureFamily, input: &[String]) -> i64 {
    let j = input.len();
    let passed: i64 = input
        .iter()
        .enumerate()
        .map(|(l, name)| {
            let v = a.basis().bidegree(a.basis().index_of(name).unwrap()).vertical - 1;
            (j - 1 - l) as i64 * v
        })
        .sum();
    if passed.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

#[test]
fn sign_table_matches_oracle_and_golden() {
    let mut table: Vec<(String, Vec<SignTableEntry>)> = Vec::new();
    for id in [ExampleId::Rank3Derived, ExampleId::AlloccaLada] {
        let a = build(id, 4).unwrap();
        let rows = corestriction_sign_table(&a);
        assert!(!rows.is_empty());
        for row in &rows {
            assert_eq!(row.sign, oracle(&a, &row.input), "{id} {row:?}");
        }
        table.push((id.to_string(), rows));
    }
    let got = serde_json::to_string_pretty(&table).unwrap() + "\n";
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden/corestriction_signs.json");
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &got).unwrap();
    }
    let want = std::fs::read_to_string(&path).expect("golden file present; run with UPDATE_GOLDEN=1");
    assert_eq!(got, want);
}
