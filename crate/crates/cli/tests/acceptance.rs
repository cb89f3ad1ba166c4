//! One PASS/FAIL line per acceptance criterion.
//!
//! Exits nonzero only when a criterion's status differs from the recorded expectation; the one
//! expected failure is a claim about the modified example that the exact computation contradicts.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{random_family, BOUNDS, FAMILY_COUNT};
use dainf_core::bar::compare_with_bar;
use dainf_core::catalog::{build, ExampleId};
use dainf_core::cooperad::{
    alpha_exponent, coassociativity_defect, delta_mu, delta_mu_tilde, lambda_suspension_sign, phi,
    x_sign, CooperadGenerator, GeneratorKind,
};
use dainf_core::document::StructureDocument;
use dainf_core::exact::{GradedMap, Scalar, Sign};
use dainf_core::report::{format_lincomb, RelationReport};
use dainf_core::representation::{
    check_rep, coaction_coassociativity_failures, rep_family_from_action, RepFamily,
};
use dainf_core::structure::classical::ClassicalAInfinity;
use dainf_core::structure::{
    check_bidga, check_derived_ainfinity, check_relations, convert_convention, Convention,
    RelationForm, StructureFamily,
};

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

fn rank3() -> StructureFamily {
    build(ExampleId::Rank3Derived, 8).unwrap()
}

fn failing_windows(reports: &[RelationReport]) -> Vec<(usize, usize)> {
    reports
        .iter()
        .filter(|r| !r.passed())
        .map(|r| (r.u, r.v))
        .collect()
}

fn example_validity() -> Outcome {
    let a = rank3();
    let start = Instant::now();
    let reports = check_derived_ainfinity(&a, 2, 8).unwrap();
    let elapsed = start.elapsed();
    let failing = failing_windows(&reports);
    outcome(
        failing.is_empty() && elapsed < Duration::from_secs(5),
        format!(
            "{} windows, failing {failing:?}, {:.2}s",
            reports.len(),
            elapsed.as_secs_f64()
        ),
    )
}

fn modified_differential() -> Outcome {
    let a = build(ExampleId::Rank3ModifiedM01, 6).unwrap();
    let basis = a.basis();
    let reports = check_derived_ainfinity(&a, 2, 6).unwrap();
    let window = reports.iter().find(|r| (r.u, r.v) == (1, 3)).unwrap();
    let mut found: Vec<(String, String)> = window
        .residuals
        .iter()
        .map(|(w, x)| (basis.format_word(w), format_lincomb(x, basis)))
        .collect();
    found.sort();
    let named = vec![
        ("u⊗u⊗w".to_string(), "-v".to_string()),
        ("u⊗w⊗u".to_string(), "v".to_string()),
    ];
    let claimed_window = found == named;
    let baseline = failing_windows(&check_derived_ainfinity(&rank3(), 2, 6).unwrap());
    let others: Vec<_> = failing_windows(&reports)
        .into_iter()
        .filter(|&w| w != (1, 3))
        .collect();
    let unchanged = others.is_empty() && baseline.is_empty();
    outcome(
        claimed_window && unchanged,
        format!(
            "window (1,3) residuals {found:?} match: {claimed_window}; other windows unchanged: {unchanged} \
             (also failing: {others:?}, the modified differential breaks d² = 0 and the Leibniz windows)"
        ),
    )
}

fn bidga_truncations() -> Outcome {
    let ids = [
        ExampleId::Rank3TruncatedBidga,
        ExampleId::Rank3TruncatedBidgaM01,
    ];
    let results: Vec<_> = ids
        .iter()
        .map(|&id| (id, check_bidga(&build(id, 6).unwrap()).unwrap().passed()))
        .collect();
    outcome(results.iter().all(|r| r.1), format!("{results:?}"))
}

fn classical_examples() -> Outcome {
    let ids = [ExampleId::AlloccaLada, ExampleId::AlloccaLadaMinimal];
    let counts: Vec<_> = ids
        .iter()
        .map(|&id| {
            let c = ClassicalAInfinity::from_family(&build(id, 8).unwrap()).unwrap();
            (id, c.check(8).len())
        })
        .collect();
    outcome(
        counts.iter().all(|c| c.1 == 0),
        format!("failing words per example {counts:?}"),
    )
}

fn dainf(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_dainf"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn alpha_golden() -> Outcome {
    let out = dainf(&["cooperad", "alpha", "1", "2"]);
    let expected = "Δ(α[1,2]) =\n  + α[1,2] ; α[0,1] ⊗ α[0,1]\n  - α[1,1] ; α[0,2]\n  - α[0,2] ; α[1,1] ⊗ α[0,1]\n  - α[0,2] ; α[0,1] ⊗ α[1,1]\n  + α[0,1] ; α[1,2]\n";
    let text = String::from_utf8_lossy(&out.stdout);
    outcome(
        out.status.success() && text == expected,
        format!(
            "exit {:?}, {} lines",
            out.status.code(),
            text.lines().count()
        ),
    )
}

fn small_generators() -> impl Iterator<Item = (usize, usize)> {
    (0..=4).flat_map(|u| (1..=5 - u).map(move |v| (u, v)))
}

fn cooperad_coassociativity() -> Outcome {
    let mut checked = 0;
    let mut bad = Vec::new();
    for kind in GeneratorKind::ALL {
        for (u, v) in small_generators() {
            let g = CooperadGenerator::new(kind, u, v).unwrap();
            checked += 1;
            if !coassociativity_defect(g).is_zero() {
                bad.push(g.to_string());
            }
        }
    }
    let mut terms = 0;
    let mut identity_failures = 0;
    for (u, v) in small_generators() {
        for t in delta_mu(u, v) {
            let p: Vec<_> = t.inners.iter().map(|g| g.u).collect();
            let q: Vec<_> = t.inners.iter().map(|g| g.v).collect();
            let inners: Vec<_> = t.inners.iter().map(|g| (g.v, g.bidegree())).collect();
            let lhs = Sign::from_parity(x_sign(&p, &q))
                * lambda_suspension_sign(t.outer.bidegree(), &inners);
            terms += 1;
            if lhs != Sign::from_parity(alpha_exponent(t.outer.u, v, &p, &q)) {
                identity_failures += 1;
            }
        }
    }
    outcome(
        bad.is_empty() && identity_failures == 0,
        format!("{checked} generators, non-coassociative {bad:?}; sign identity {identity_failures} of {terms} terms off"),
    )
}

fn bar_equivalence() -> Outcome {
    let (mut passing, mut failing, mut disagree) = (0, 0, Vec::new());
    let rank3_agrees = compare_with_bar(&rank3(), 2, 4).unwrap();
    if !(rank3_agrees.agree() && rank3_agrees.passed()) {
        disagree.push("rank3".to_string());
    }
    for seed in 0..FAMILY_COUNT {
        let r = compare_with_bar(
            &random_family(seed, Convention::Sagave),
            BOUNDS.max_horizontal,
            BOUNDS.max_arity,
        )
        .unwrap();
        if !r.agree() {
            disagree.push(format!("seed {seed}"));
        }
        if r.passed() {
            passing += 1;
        } else {
            failing += 1;
        }
    }
    outcome(
        disagree.is_empty() && passing > 0 && failing > 0,
        format!("{FAMILY_COUNT} random families ({passing} satisfy, {failing} violate) plus rank3; disagreements {disagree:?}"),
    )
}

fn document(a: &StructureFamily) -> String {
    StructureDocument::Structure(a.clone()).to_pretty_string()
}

fn sign_conventions() -> Outcome {
    let mut families: Vec<_> = (0..FAMILY_COUNT)
        .map(|s| random_family(s, Convention::Sagave))
        .collect();
    families.extend(ExampleId::ALL.map(|id| build(id, 5).unwrap()));
    let involution = families.iter().all(|a| {
        let back = convert_convention(&convert_convention(a));
        back == *a && document(&back) == document(a)
    });
    let mut preserved = true;
    for a in families.iter().take(FAMILY_COUNT as usize) {
        let direct = check_relations(
            a,
            RelationForm::Sagave,
            BOUNDS.max_horizontal,
            BOUNDS.max_arity,
        )
        .unwrap();
        let star = check_relations(
            &convert_convention(a),
            RelationForm::Star,
            BOUNDS.max_horizontal,
            BOUNDS.max_arity,
        )
        .unwrap();
        preserved &= failing_windows(&direct) == failing_windows(&star);
    }
    let mut rescaling = true;
    for (u, v) in small_generators() {
        for (m, mt) in delta_mu(u, v).iter().zip(delta_mu_tilde(u, v)) {
            let q: Vec<_> = m.inners.iter().map(|g| g.v).collect();
            rescaling &= m.outer.u == mt.outer.u
                && mt.coefficient == m.coefficient * Sign::from_parity(phi(&q));
        }
    }
    outcome(
        involution && preserved && rescaling,
        format!(
            "involution {involution}, relations preserved {preserved}, φ rescaling {rescaling}"
        ),
    )
}

/// Doubles one randomly chosen action entry of arity below 4.
///
/// A top-arity action only meets unary maps inside the window, and the unary differential is zero
/// here, so only its `m11` composites could see it; lower arities also meet the binary maps.
fn perturbed(rep: &RepFamily, rng: &mut ChaCha8Rng) -> (RepFamily, String) {
    let candidates: Vec<_> = rep
        .actions()
        .filter(|((i, j, _), m)| *i <= 2 && *j < 4 && !m.is_empty())
        .flat_map(|(key, m)| m.entries().map(move |(input, _)| (key, input.clone())))
        .collect();
    let (key, input) = candidates[rng.gen_range(0..candidates.len())].clone();
    let (i, j, slot) = key;
    let map = rep.action(i, j, slot).unwrap();
    let mut changed = GradedMap::new(j, map.bidegree()).unwrap();
    for (w, out) in map.entries() {
        let out = if *w == input {
            out.scaled(&Scalar::from(2))
        } else {
            out.clone()
        };
        changed.insert(w.clone(), out).unwrap();
    }
    let mut r = rep.clone();
    r.set_action(i, j, slot, changed).unwrap();
    (
        r,
        format!(
            "action ({i},{j},{slot}) at {:?}",
            rep.mixed_names(&input, slot)
        ),
    )
}

fn representation_suite() -> Outcome {
    let a = build(ExampleId::Rank3Derived, 4).unwrap();
    let rep = RepFamily::regular(&a);
    let g = rep_family_from_action(&rep);
    let regular = check_rep(&g, 2, 4).unwrap().passed();
    let coassociative = coaction_coassociativity_failures(g.bases(), 2, 4).is_empty();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut caught = Vec::new();
    for _ in 0..5 {
        let (bad, what) = perturbed(&rep, &mut rng);
        caught.push((
            what,
            !check_rep(&rep_family_from_action(&bad), 2, 4)
                .unwrap()
                .passed(),
        ));
    }
    let all_caught = caught.iter().all(|c| c.1);
    outcome(
        regular && coassociative && all_caught,
        format!("regular {regular}, coactions coassociative {coassociative}, perturbations detected {caught:?}"),
    )
}

fn golden(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name)
}

fn plumbing() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let doc = dir.path().join("rank3.json");
    let doc_s = doc.to_str().unwrap();
    let mut notes = Vec::new();
    let made = dainf(&[
        "example",
        "rank3_derived",
        "--arity-bound",
        "4",
        "--out",
        doc_s,
    ]);
    notes.push(("example", made.status.code() == Some(0)));
    let first = dainf(&["check", doc_s, "--format", "json"]);
    let second = dainf(&["check", doc_s, "--format", "json"]);
    notes.push(("deterministic", first.stdout == second.stdout));
    let want = std::fs::read(golden("check_rank3.json")).unwrap_or_default();
    notes.push(("golden report", first.stdout == want));
    let converted = dir.path().join("converted.json");
    let back = dir.path().join("back.json");
    dainf(&["convert", doc_s, "--out", converted.to_str().unwrap()]);
    dainf(&[
        "convert",
        converted.to_str().unwrap(),
        "--out",
        back.to_str().unwrap(),
    ]);
    notes.push((
        "round trip",
        std::fs::read(&doc).unwrap() == std::fs::read(&back).unwrap(),
    ));
    let modified = dir.path().join("modified.json");
    dainf(&[
        "example",
        "rank3_modified_m01",
        "--arity-bound",
        "4",
        "--out",
        modified.to_str().unwrap(),
    ]);
    notes.push(("exit 0", first.status.code() == Some(0)));
    notes.push((
        "exit 1",
        dainf(&["check", modified.to_str().unwrap()]).status.code() == Some(1),
    ));
    notes.push((
        "exit 2",
        dainf(&["cooperad", "beta", "1", "1"]).status.code() == Some(2),
    ));
    notes.push((
        "exit 3",
        dainf(&["check", doc_s, "--v-max", "9"]).status.code() == Some(3),
    ));
    let failed: Vec<_> = notes.iter().filter(|n| !n.1).map(|n| n.0).collect();
    outcome(
        failed.is_empty(),
        format!("{} checks, failed {failed:?}", notes.len()),
    )
}

fn main() {
    type Criterion = (u32, &'static str, fn() -> Outcome, bool);
    let criteria: [Criterion; 10] = [
        (
            1,
            "rank-3 example satisfies all relations u ≤ 2, v ≤ 8",
            example_validity,
            true,
        ),
        (
            2,
            "modified differential fails exactly at the two named inputs",
            modified_differential,
            false,
        ),
        (3, "both bidga truncations pass", bidga_truncations, true),
        (
            4,
            "classical examples pass through arity 8",
            classical_examples,
            true,
        ),
        (
            5,
            "alpha(1,2) decomposition golden text",
            alpha_golden,
            true,
        ),
        (
            6,
            "cooperad coassociativity and suspension sign identity, u + v ≤ 5",
            cooperad_coassociativity,
            true,
        ),
        (
            7,
            "relations hold iff the bar family is a twisted complex",
            bar_equivalence,
            true,
        ),
        (
            8,
            "sign conventions: involution, preservation, rescaling",
            sign_conventions,
            true,
        ),
        (9, "representation suite", representation_suite, true),
        (
            10,
            "CLI determinism, round trip, exit codes",
            plumbing,
            true,
        ),
    ];
    let mut unexpected = 0;
    for (n, name, run, expected) in criteria {
        let o = run();
        let status = if o.passed { "PASS" } else { "FAIL" };
        let note = if o.passed == expected {
            ""
        } else {
            " [unexpected]"
        };
        println!("{status} criterion {n}: {name}: {}{note}", o.detail);
        if o.passed != expected {
            unexpected += 1;
        }
    }
    if unexpected > 0 {
        std::process::exit(1);
    }
}
