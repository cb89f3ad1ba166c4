//! The JSON document format for structure families and representations.
//!
//! ```json
//! {
//!   "format_version": 1,
//!   "kind": "structure",
//!   "ring": "Z",
//!   "convention": "tilde",
//!   "bounds": { "max_horizontal": 2, "max_arity": 4 },
//!   "basis": [ { "name": "u", "bidegree": [0, 0] } ],
//!   "maps": [ { "i": 0, "j": 2, "input": ["u", "u"], "output": [ { "coeff": 1, "word": ["u"] } ] } ]
//! }
//! ```
//!
//! Representation documents use `"kind": "representation"` and add `module_basis` and `actions`, whose
//! entries carry a 1-based `slot` naming the module position of `input`.
//! Coefficients are JSON integers, or decimal strings when outside the 53-bit safe range.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::exact::{Bidegree, BigradedBasis, GradedMap, LinComb, Ring, TensorWord};
use crate::report::scalar_to_json;
use crate::representation::RepFamily;
use crate::structure::{Bounds, Convention, StructureFamily};
use crate::{Error, Result};

pub const FORMAT_VERSION: u64 = 1;

/// A parsed document.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StructureDocument {
    Structure(StructureFamily),
    Representation(RepFamily),
}

impl StructureDocument {
    pub fn parse(text: &str) -> Result<Self> {
        let de = &mut serde_json::Deserializer::from_str(text);
        let raw: RawDocument = serde_path_to_error::deserialize(de).map_err(|e| {
            let path = e.path().to_string();
            schema(
                if path == "." || path == "?" {
                    "$".into()
                } else {
                    path
                },
                e.into_inner().to_string(),
            )
        })?;
        raw.build()
    }

    pub fn to_json(&self) -> Value {
        match self {
            StructureDocument::Structure(a) => structure_to_json(a),
            StructureDocument::Representation(r) => representation_to_json(r),
        }
    }

    /// Pretty JSON with a trailing newline; identical inputs give identical bytes.
    pub fn to_pretty_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json()).expect("values serialize");
        s.push('\n');
        s
    }

    /// The document with its convention flipped and maps rescaled.
    pub fn converted(&self) -> StructureDocument {
        match self {
            StructureDocument::Structure(a) => {
                StructureDocument::Structure(crate::structure::convert_convention(a))
            }
            StructureDocument::Representation(r) => {
                StructureDocument::Representation(r.converted())
            }
        }
    }
}

fn schema(path: impl Into<String>, message: impl ToString) -> Error {
    Error::Schema {
        path: path.into(),
        message: message.to_string(),
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    format_version: u64,
    kind: String,
    ring: String,
    convention: String,
    bounds: RawBounds,
    basis: Vec<RawBasisEntry>,
    #[serde(default)]
    maps: Vec<RawEntry>,
    module_basis: Option<Vec<RawBasisEntry>>,
    actions: Option<Vec<RawEntry>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawBounds {
    max_horizontal: usize,
    max_arity: usize,
}

#[derive(Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct RawBasisEntry {
    name: String,
    bidegree: [i64; 2],
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawEntry {
    i: usize,
    j: usize,
    slot: Option<usize>,
    input: Vec<String>,
    output: Vec<RawTerm>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTerm {
    coeff: RawInt,
    word: Vec<String>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawInt {
    Number(i64),
    Text(String),
}

impl RawInt {
    fn value(&self, path: &str) -> Result<BigInt> {
        match self {
            RawInt::Number(n) => Ok(BigInt::from(*n)),
            RawInt::Text(s) => s
                .trim()
                .parse()
                .map_err(|_| schema(path, format!("`{s}` is not an integer"))),
        }
    }
}

fn basis_from(entries: &[RawBasisEntry], path: &str) -> Result<BigradedBasis> {
    BigradedBasis::new(
        entries
            .iter()
            .map(|e| (e.name.clone(), Bidegree::new(e.bidegree[0], e.bidegree[1]))),
    )
    .map_err(|e| schema(path, e))
}

fn words_of(
    names: &[String],
    path: &str,
    lookup: impl Fn(usize, &str) -> Result<u32>,
) -> Result<TensorWord> {
    let idx = names
        .iter()
        .enumerate()
        .map(|(k, n)| lookup(k, n).map_err(|e| schema(format!("{path}[{k}]"), e)))
        .collect::<Result<Vec<_>>>()?;
    TensorWord::new(idx).map_err(|e| schema(path, e))
}

fn output_of(terms: &[RawTerm], path: &str, target: &BigradedBasis) -> Result<LinComb<TensorWord>> {
    let mut out = LinComb::zero();
    for (k, t) in terms.iter().enumerate() {
        let p = format!("{path}[{k}]");
        let c = t.coeff.value(&format!("{p}.coeff"))?;
        let w = words_of(&t.word, &format!("{p}.word"), |_, n| target.index_of(n))?;
        if w.arity() != 1 {
            return Err(schema(
                format!("{p}.word"),
                "output words have a single factor",
            ));
        }
        out.add_term(w, c);
    }
    Ok(out)
}

impl RawDocument {
    fn build(self) -> Result<StructureDocument> {
        if self.format_version != FORMAT_VERSION {
            return Err(schema(
                "format_version",
                format!("unsupported version {}", self.format_version),
            ));
        }
        let ring: Ring = self.ring.parse().map_err(|e| schema("ring", e))?;
        let convention: Convention = self
            .convention
            .parse()
            .map_err(|e| schema("convention", e))?;
        let basis = basis_from(&self.basis, "basis")?;
        let bounds = Bounds {
            max_horizontal: self.bounds.max_horizontal,
            max_arity: self.bounds.max_arity,
        };
        let mut family = StructureFamily::new(basis.clone(), ring, bounds, convention);
        let mut maps: BTreeMap<(usize, usize), GradedMap> = BTreeMap::new();
        let mut origin: BTreeMap<(usize, usize), String> = BTreeMap::new();
        for (k, e) in self.maps.iter().enumerate() {
            let path = format!("maps[{k}]");
            if e.slot.is_some() {
                return Err(schema(
                    format!("{path}.slot"),
                    "structure maps take no slot",
                ));
            }
            if e.j == 0 {
                return Err(schema(format!("{path}.j"), Error::ZeroArity));
            }
            let input = words_of(&e.input, &format!("{path}.input"), |_, n| basis.index_of(n))?;
            let output = output_of(&e.output, &format!("{path}.output"), &basis)?;
            let map = maps.entry((e.i, e.j)).or_insert_with(|| {
                GradedMap::new(e.j, Bidegree::structure(e.i, e.j)).expect("positive arity")
            });
            map.add_entry(input, &output)
                .map_err(|err| schema(&path, err))?;
            origin.insert((e.i, e.j), path);
        }
        for ((i, j), map) in maps {
            family
                .insert_map(i, j, map)
                .map_err(|e| schema(&origin[&(i, j)], e))?;
        }
        match self.kind.as_str() {
            "structure" => {
                if self.module_basis.is_some() || self.actions.is_some() {
                    return Err(schema(
                        "kind",
                        "structure documents have no module_basis or actions",
                    ));
                }
                Ok(StructureDocument::Structure(family))
            }
            "representation" => {
                let module = basis_from(
                    self.module_basis.as_deref().unwrap_or_default(),
                    "module_basis",
                )?;
                let mut rep = RepFamily::new(family, module);
                let mut actions: BTreeMap<(usize, usize, usize), (GradedMap, String)> =
                    BTreeMap::new();
                for (k, e) in self.actions.iter().flatten().enumerate() {
                    let path = format!("actions[{k}]");
                    let slot = e
                        .slot
                        .ok_or_else(|| schema(&path, "missing field `slot`"))?;
                    if e.j == 0 {
                        return Err(schema(format!("{path}.j"), Error::ZeroArity));
                    }
                    if slot == 0 || slot > e.j || e.input.len() != e.j {
                        return Err(schema(
                            format!("{path}.slot"),
                            Error::SlotOutOfRange { slot, arity: e.j },
                        ));
                    }
                    let input = words_of(&e.input, &format!("{path}.input"), |p, n| {
                        if p + 1 == slot {
                            rep.module().index_of(n)
                        } else {
                            basis.index_of(n)
                        }
                    })?;
                    let output = output_of(&e.output, &format!("{path}.output"), rep.module())?;
                    let (map, origin) = actions.entry((e.i, e.j, slot)).or_insert_with(|| {
                        (
                            GradedMap::new(e.j, Bidegree::structure(e.i, e.j))
                                .expect("positive arity"),
                            String::new(),
                        )
                    });
                    map.add_entry(input, &output)
                        .map_err(|err| schema(&path, err))?;
                    *origin = path;
                }
                for ((i, j, slot), (map, path)) in actions {
                    rep.set_action(i, j, slot, map)
                        .map_err(|e| schema(&path, e))?;
                }
                Ok(StructureDocument::Representation(rep))
            }
            other => Err(schema("kind", format!("unknown kind `{other}`"))),
        }
    }
}

fn basis_json(b: &BigradedBasis) -> Value {
    b.iter()
        .map(|(name, d)| json!({ "name": name, "bidegree": [d.horizontal, d.vertical] }))
        .collect()
}

fn output_json(output: &LinComb<TensorWord>, target: &BigradedBasis) -> Value {
    output
        .iter()
        .map(|(w, c)| json!({ "coeff": scalar_to_json(c), "word": target.word_names(w) }))
        .collect()
}

fn header(a: &StructureFamily, kind: &str) -> serde_json::Map<String, Value> {
    let bounds = a.bounds();
    let maps: Vec<Value> = a
        .maps()
        .flat_map(|((i, j), m)| {
            m.entries().map(move |(input, output)| {
                json!({
                    "i": i,
                    "j": j,
                    "input": a.basis().word_names(input),
                    "output": output_json(output, a.basis()),
                })
            })
        })
        .collect();
    let mut doc = serde_json::Map::new();
    doc.insert("format_version".into(), json!(FORMAT_VERSION));
    doc.insert("kind".into(), json!(kind));
    doc.insert("ring".into(), json!(a.ring().to_string()));
    doc.insert("convention".into(), json!(a.convention().name()));
    doc.insert(
        "bounds".into(),
        json!({ "max_horizontal": bounds.max_horizontal, "max_arity": bounds.max_arity }),
    );
    doc.insert("basis".into(), basis_json(a.basis()));
    doc.insert("maps".into(), Value::Array(maps));
    doc
}

/// Canonical document: maps ordered by `(i, j)`, then by input word in basis order.
pub fn structure_to_json(a: &StructureFamily) -> Value {
    Value::Object(header(a, "structure"))
}

pub fn representation_to_json(r: &RepFamily) -> Value {
    let mut doc = header(r.algebra(), "representation");
    doc.insert("module_basis".into(), basis_json(r.module()));
    let actions: Vec<Value> = r
        .actions()
        .flat_map(|((i, j, slot), m)| {
            m.entries().map(move |(input, output)| {
                json!({
                    "i": i,
                    "j": j,
                    "slot": slot,
                    "input": r.mixed_names(input, slot),
                    "output": output_json(output, r.module()),
                })
            })
        })
        .collect();
    doc.insert("actions".into(), Value::Array(actions));
    Value::Object(doc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{build, ExampleId};

    fn parse_err(text: &str) -> (String, String) {
        match StructureDocument::parse(text) {
            Err(Error::Schema { path, message }) => (path, message),
            other => panic!("expected a schema error, got {other:?}"),
        }
    }

    const MINIMAL: &str = r#"{"format_version":1,"kind":"structure","ring":"Z","convention":"sagave",
        "bounds":{"max_horizontal":1,"max_arity":2},
        "basis":[{"name":"a","bidegree":[0,0]},{"name":"b","bidegree":[0,1]}],
        "maps":[{"i":0,"j":1,"input":["a"],"output":[{"coeff":"-3","word":["b"]}]}]}"#;

    #[test]
    fn minimal_document() {
        let StructureDocument::Structure(a) = StructureDocument::parse(MINIMAL).unwrap() else {
            panic!("kind");
        };
        let m = a.map(0, 1).unwrap();
        assert_eq!(
            m.apply_word(&[0]),
            LinComb::term(TensorWord::single(1), BigInt::from(-3))
        );
    }

    #[test]
    fn catalog_documents_round_trip() {
        for id in ExampleId::ALL {
            let doc = StructureDocument::Structure(build(id, 5).unwrap());
            let text = doc.to_pretty_string();
            let back = StructureDocument::parse(&text).unwrap();
            assert_eq!(back, doc);
            assert_eq!(back.to_pretty_string(), text);
        }
    }

    #[test]
    fn representation_round_trip() {
        let rep = RepFamily::regular(&build(ExampleId::Rank3Derived, 3).unwrap());
        let doc = StructureDocument::Representation(rep);
        let back = StructureDocument::parse(&doc.to_pretty_string()).unwrap();
        assert_eq!(back, doc);
    }

    #[test]
    fn conversion_twice_is_identity() {
        let doc = StructureDocument::Structure(build(ExampleId::Rank3Derived, 4).unwrap());
        assert_eq!(doc.converted().converted(), doc);
    }

    #[test]
    fn large_coefficients_are_strings() {
        let text = MINIMAL.replace("\"-3\"", "\"123456789012345678901234567890\"");
        let doc = StructureDocument::parse(&text).unwrap();
        let out = doc.to_pretty_string();
        assert!(out.contains("\"123456789012345678901234567890\""));
        assert!(out.contains("\"format_version\": 1"));
    }

    #[test]
    fn errors_carry_paths() {
        assert_eq!(
            parse_err(&MINIMAL.replace("\"b\"]}]}]}", "\"c\"]}]}]}")).0,
            "maps[0].output[0].word[0]"
        );
        assert_eq!(parse_err(&MINIMAL.replace("\"Z\"", "\"Z/4\"")).0, "ring");
        assert_eq!(
            parse_err(&MINIMAL.replace("\"sagave\"", "\"other\"")).0,
            "convention"
        );
        assert_eq!(
            parse_err(&MINIMAL.replace("\"max_arity\":2", "\"max_arity\":\"2\"")).0,
            "bounds.max_arity"
        );
        assert_eq!(
            parse_err(&MINIMAL.replace("\"-3\"", "\"x\"")).0,
            "maps[0].output[0].coeff"
        );
        assert_eq!(
            parse_err(&MINIMAL.replace("\"j\":1", "\"j\":3")).0,
            "maps[0]"
        );
        assert_eq!(parse_err(&MINIMAL.replace("[0,1]", "[0,2]")).0, "maps[0]");
        assert_eq!(parse_err("{").0, "$");
    }

    #[test]
    fn empty_maps_are_allowed() {
        let text = MINIMAL.replace(
            r#""maps":[{"i":0,"j":1,"input":["a"],"output":[{"coeff":"-3","word":["b"]}]}]"#,
            r#""maps":[]"#,
        );
        let StructureDocument::Structure(a) = StructureDocument::parse(&text).unwrap() else {
            panic!("kind");
        };
        assert!(a.support().is_empty());
    }
}
