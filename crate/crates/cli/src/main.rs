//! `dainf`: load structure documents, run the checkers, print reports.
//!
//! Exit codes: 0 every relation holds, 1 some relation fails, 2 input error, 3 truncation too small.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use dainf_core::bar::compare_with_bar;
use dainf_core::catalog::{build, ExampleId, DEFAULT_ARITY_BOUND};
use dainf_core::cooperad::{
    decompose, decomposition_to_json, format_decomposition, CooperadGenerator, GeneratorKind,
};
use dainf_core::document::StructureDocument;
use dainf_core::report::{report_to_text, word_report_to_json, RelationReport};
use dainf_core::representation::{
    check_rep, rep_family_from_action, rep_report_to_json, rep_report_to_text, RepFamily,
};
use dainf_core::structure::{check_bidga, check_derived_ainfinity, StructureFamily};
use dainf_core::Error;

const REPORT_VERSION: u64 = 1;

#[derive(Parser)]
#[command(
    name = "dainf",
    version,
    about = "Exact checks for derived A-infinity structures"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Check the derived A-infinity relations of a structure document.
    Check {
        path: PathBuf,
        /// Largest horizontal index checked; defaults to the document's bound.
        #[arg(long)]
        u_max: Option<usize>,
        /// Largest arity checked; defaults to the document's bound.
        #[arg(long)]
        v_max: Option<usize>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Check the bidga axioms of a family supported on m01, m02, m11.
    CheckBidga {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Check a representation document through its bicomodule coderivations.
    CheckRep {
        path: PathBuf,
        #[arg(long)]
        u_max: Option<usize>,
        /// Largest total word length checked.
        #[arg(long)]
        v_max: Option<usize>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Check the relations and the twisted-complex condition on the bar family, and compare them window by window.
    BarCheck {
        path: PathBuf,
        #[arg(long)]
        u_max: Option<usize>,
        #[arg(long)]
        v_max: Option<usize>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Print the comultiplication of one cooperad generator (`mu`, `mu_tilde` or `alpha`).
    Cooperad {
        kind: String,
        u: usize,
        v: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Write a catalog example as a structure document.
    Example {
        id: String,
        #[arg(long, default_value_t = DEFAULT_ARITY_BOUND)]
        arity_bound: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Flip the convention of a document, rescaling its maps.
    Convert {
        path: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Failure before any relation could be evaluated.
enum Failure {
    Input(String),
    Truncation(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::TruncationInsufficient { .. } => Failure::Truncation(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

/// What a command printed and whether its relations held.
struct Outcome {
    output: String,
    passed: bool,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(outcome) => {
            print!("{}", outcome.output);
            ExitCode::from(if outcome.passed { 0 } else { 1 })
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Truncation(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn run(command: Command) -> Result<Outcome, Failure> {
    match command {
        Command::Check {
            path,
            u_max,
            v_max,
            format,
        } => {
            let a = load_structure(&path)?;
            let (u, v) = window(&a, u_max, v_max);
            let reports = check_derived_ainfinity(&a, u, v)?;
            Ok(word_reports("check", &a, u, v, &reports, format))
        }
        Command::CheckBidga { path, format } => {
            let a = load_structure(&path)?;
            let report = check_bidga(&a)?;
            Ok(word_reports(
                "check-bidga",
                &a,
                1,
                3,
                &report.relations,
                format,
            ))
        }
        Command::CheckRep {
            path,
            u_max,
            v_max,
            format,
        } => {
            let rep = load_representation(&path)?;
            let (u, v) = window(rep.algebra(), u_max, v_max);
            Ok(rep_reports(&rep, u, v, format)?)
        }
        Command::BarCheck {
            path,
            u_max,
            v_max,
            format,
        } => {
            let a = load_structure(&path)?;
            let (u, v) = window(&a, u_max, v_max);
            bar_check(&a, u, v, format)
        }
        Command::Cooperad { kind, u, v, format } => {
            let kind: GeneratorKind = kind.parse()?;
            let g = CooperadGenerator::new(kind, u, v)?;
            let terms = decompose(g);
            let output = match format {
                Format::Text => format_decomposition(g, &terms),
                Format::Json => {
                    let mut doc = decomposition_to_json(g, &terms);
                    doc["report_version"] = json!(REPORT_VERSION);
                    pretty(&doc)
                }
            };
            Ok(Outcome {
                output,
                passed: true,
            })
        }
        Command::Example {
            id,
            arity_bound,
            out,
        } => {
            let id: ExampleId = id.parse()?;
            let doc = StructureDocument::Structure(build(id, arity_bound)?);
            emit(&doc, out.as_deref())
        }
        Command::Convert { path, out } => {
            let doc = load(&path)?;
            emit(&doc.converted(), out.as_deref())
        }
    }
}

fn load(path: &Path) -> Result<StructureDocument, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    StructureDocument::parse(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_structure(path: &Path) -> Result<StructureFamily, Failure> {
    match load(path)? {
        StructureDocument::Structure(a) => Ok(a),
        StructureDocument::Representation(_) => Err(Failure::Input(format!(
            "{}: expected a structure document",
            path.display()
        ))),
    }
}

fn load_representation(path: &Path) -> Result<RepFamily, Failure> {
    match load(path)? {
        StructureDocument::Representation(r) => Ok(r),
        StructureDocument::Structure(_) => Err(Failure::Input(format!(
            "{}: expected a representation document",
            path.display()
        ))),
    }
}

fn window(a: &StructureFamily, u_max: Option<usize>, v_max: Option<usize>) -> (usize, usize) {
    let b = a.bounds();
    (
        u_max.unwrap_or(b.max_horizontal),
        v_max.unwrap_or(b.max_arity),
    )
}

fn emit(doc: &StructureDocument, out: Option<&Path>) -> Result<Outcome, Failure> {
    let text = doc.to_pretty_string();
    match out {
        Some(path) => {
            std::fs::write(path, text)
                .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
            Ok(Outcome {
                output: String::new(),
                passed: true,
            })
        }
        None => Ok(Outcome {
            output: text,
            passed: true,
        }),
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

fn summary_line(passed: bool) -> String {
    format!("result: {}\n", if passed { "PASS" } else { "FAIL" })
}

fn word_reports(
    command: &str,
    a: &StructureFamily,
    u: usize,
    v: usize,
    reports: &[RelationReport],
    format: Format,
) -> Outcome {
    let passed = reports.iter().all(RelationReport::passed);
    let basis = a.basis();
    let output = match format {
        Format::Text => {
            let mut s = String::new();
            for r in reports {
                s.push_str(&report_to_text(
                    r,
                    |w| basis.format_word(w),
                    |w| basis.format_word(w),
                ));
            }
            s + &summary_line(passed)
        }
        Format::Json => pretty(&json!({
            "report_version": REPORT_VERSION,
            "command": command,
            "convention": a.convention().name(),
            "u_max": u,
            "v_max": v,
            "passed": passed,
            "reports": reports.iter().map(|r| word_report_to_json(r, basis)).collect::<Vec<_>>(),
        })),
    };
    Outcome { output, passed }
}

fn rep_reports(rep: &RepFamily, u: usize, v: usize, format: Format) -> Result<Outcome, Failure> {
    let report = check_rep(&rep_family_from_action(rep), u, v)?;
    let passed = report.passed();
    let (alg, module) = (rep.algebra().basis(), rep.module());
    let output = match format {
        Format::Text => rep_report_to_text(&report, alg, module) + &summary_line(passed),
        Format::Json => {
            let mut doc = json!({
                "report_version": REPORT_VERSION,
                "command": "check-rep",
                "convention": rep.convention().name(),
                "u_max": u,
                "v_max": v,
                "passed": passed,
            });
            let body = rep_report_to_json(&report, alg, module);
            doc["twisted"] = body["twisted"].clone();
            doc["coderivation"] = body["coderivation"].clone();
            pretty(&doc)
        }
    };
    Ok(Outcome { output, passed })
}

/// Passes iff both checkers pass every window; a window where they disagree is reported and fails.
fn bar_check(a: &StructureFamily, u: usize, v: usize, format: Format) -> Result<Outcome, Failure> {
    let result = compare_with_bar(a, u, v)?;
    let (agree, passed) = (result.agree(), result.agree() && result.passed());
    let output = match format {
        Format::Text => {
            let mark = |b: bool| if b { "pass" } else { "fail" };
            let mut s = String::new();
            for w in &result.windows {
                let flag = if w.relations_passed == w.twisted_passed {
                    ""
                } else {
                    "  DISAGREE"
                };
                let _ = writeln!(
                    s,
                    "u ≤ {}, v ≤ {}: relations {} twisted {}{flag}",
                    w.u,
                    w.v,
                    mark(w.relations_passed),
                    mark(w.twisted_passed)
                );
            }
            let _ = writeln!(s, "agree: {agree}");
            s + &summary_line(passed)
        }
        Format::Json => pretty(&json!({
            "report_version": REPORT_VERSION,
            "command": "bar-check",
            "u_max": u,
            "v_max": v,
            "agree": agree,
            "passed": passed,
            "windows": result.windows,
        })),
    };
    Ok(Outcome { output, passed })
}
