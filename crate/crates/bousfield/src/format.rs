//! Reading and writing posets, tuples, chain families and normal forms.
//!
//! Posets are read from JSON (`{"elements": [..], "relations": ["a < b"]}`)
//! or from a line-oriented text form:
//!
//! ```text
//! # a diamond
//! t
//! a
//! b
//! m
//! a < t
//! b < t
//! m < a
//! m < b
//! ```
//!
//! Each line holds one element or one relation; `#` starts a comment.
//! Tuples are JSON arrays of arrays of element names, families are
//! `{"generators": [[..], ..]}`, and normal forms are objects tagged by
//! `"form"`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use bousfield_core::{Chain, ChainFamily, Error, NormalForm, Poset, Subset, SubsetTuple};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

/// A read failure: malformed input, or a model error raised while building
/// the value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FormatError {
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    Model(Error),
}

impl std::fmt::Display for FormatError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FormatError::Parse {
                line,
                column,
                message,
            } => write!(f, "parse error at {line}:{column}: {message}"),
            FormatError::Model(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for FormatError {}

impl From<Error> for FormatError {
    fn from(e: Error) -> Self {
        FormatError::Model(e)
    }
}

impl FormatError {
    pub fn code(&self) -> &'static str {
        match self {
            FormatError::Parse { .. } => "ParseError",
            FormatError::Model(e) => e.code(),
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            FormatError::Parse {
                line,
                column,
                message,
            } => json!({"error": {
                "code": self.code(), "message": message, "line": line, "column": column
            }}),
            FormatError::Model(e) => json!({"error": {
                "code": self.code(), "message": e.to_string()
            }}),
        }
    }

    fn parse(line: usize, column: usize, message: impl Into<String>) -> FormatError {
        FormatError::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}

impl From<serde_json::Error> for FormatError {
    fn from(e: serde_json::Error) -> Self {
        let message = e.to_string();
        // serde_json appends " at line L column C"; keep the bare message.
        let message = match message.rfind(" at line ") {
            Some(i) => message[..i].to_string(),
            None => message,
        };
        FormatError::parse(e.line(), e.column(), message)
    }
}

pub type Result<T> = std::result::Result<T, FormatError>;

/// 1-based line and column of byte offset `at`.
fn position(text: &str, at: usize) -> (usize, usize) {
    let before = &text[..at];
    let line = before.matches('\n').count() + 1;
    let column = before.len() - before.rfind('\n').map_or(0, |i| i + 1) + 1;
    (line, column)
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PosetDoc {
    elements: Vec<String>,
    relations: Vec<String>,
}

/// Splits `"a < b"`; the separator must be exactly `" < "`.
fn split_relation(s: &str) -> Option<(&str, &str)> {
    let (a, b) = s.split_once(" < ")?;
    if a.is_empty() || b.is_empty() || b.contains('<') || a.contains('<') {
        return None;
    }
    Some((a, b))
}

/// Reads a poset, detecting JSON by a leading `{`.
pub fn parse_poset(text: &str) -> Result<Poset> {
    if text.trim_start().starts_with('{') {
        parse_poset_json(text)
    } else {
        parse_poset_text(text)
    }
}

pub fn parse_poset_json(text: &str) -> Result<Poset> {
    let doc: PosetDoc = serde_json::from_str(text)?;
    let mut rel = Vec::with_capacity(doc.relations.len());
    for r in &doc.relations {
        let Some(pair) = split_relation(r) else {
            let quoted = format!("\"{r}\"");
            let (line, column) = text.find(&quoted).map_or((1, 1), |i| position(text, i));
            return Err(FormatError::parse(
                line,
                column,
                format!("relation `{r}` is not of the form `a < b`"),
            ));
        };
        rel.push(pair);
    }
    Ok(Poset::new(doc.elements.iter(), &rel)?)
}

pub fn parse_poset_text(text: &str) -> Result<Poset> {
    let mut elements: Vec<&str> = Vec::new();
    let mut rel: Vec<(&str, &str, usize, usize)> = Vec::new();
    for (i, raw) in text.split('\n').enumerate() {
        let body = raw.split('#').next().unwrap();
        let trimmed = body.trim();
        if trimmed.is_empty() {
            continue;
        }
        let column = body.len() - body.trim_start().len() + 1;
        if trimmed.contains('<') {
            let Some((a, b)) = split_relation(trimmed) else {
                return Err(FormatError::parse(
                    i + 1,
                    column,
                    format!("relation `{trimmed}` is not of the form `a < b`"),
                ));
            };
            rel.push((a.trim(), b.trim(), i + 1, column));
        } else if trimmed.split_whitespace().count() > 1 {
            return Err(FormatError::parse(
                i + 1,
                column,
                format!("expected one element per line, found `{trimmed}`"),
            ));
        } else {
            elements.push(trimmed);
        }
    }
    for &(a, b, line, column) in &rel {
        for x in [a, b] {
            if !elements.contains(&x) {
                return Err(FormatError::parse(
                    line,
                    column,
                    format!("unknown element `{x}`"),
                ));
            }
        }
    }
    let pairs: Vec<(&str, &str)> = rel.iter().map(|&(a, b, _, _)| (a, b)).collect();
    Ok(Poset::new(elements, &pairs)?)
}

/// JSON document listing the elements and the cover relations.
pub fn poset_to_json(p: &Poset) -> Value {
    json!({
        "elements": p.names(),
        "relations": p
            .covers()
            .iter()
            .map(|&(a, b)| format!("{} < {}", p.name(a), p.name(b)))
            .collect::<Vec<_>>(),
    })
}

pub fn poset_to_text(p: &Poset) -> String {
    let mut out = String::new();
    for n in p.names() {
        let _ = writeln!(out, "{n}");
    }
    for &(a, b) in p.covers() {
        let _ = writeln!(out, "{} < {}", p.name(a), p.name(b));
    }
    out
}

/// Cover edges, lower element to upper element.
pub fn poset_to_dot(p: &Poset) -> String {
    let mut out = String::from("digraph poset {\n  rankdir=BT;\n");
    for n in p.names() {
        let _ = writeln!(out, "  \"{n}\";");
    }
    for &(a, b) in p.covers() {
        let _ = writeln!(out, "  \"{}\" -> \"{}\";", p.name(a), p.name(b));
    }
    out.push_str("}\n");
    out
}

fn subset_from_names(p: &Poset, names: &[String]) -> Result<Subset> {
    Ok(p.subset(names)?)
}

fn names_of(p: &Poset, s: Subset) -> Vec<String> {
    p.subset_names(s).into_iter().map(String::from).collect()
}

pub fn parse_tuple(p: &Poset, text: &str) -> Result<SubsetTuple> {
    let parts: Vec<Vec<String>> = serde_json::from_str(text)?;
    tuple_from_names(p, &parts)
}

pub fn tuple_from_names(p: &Poset, parts: &[Vec<String>]) -> Result<SubsetTuple> {
    let parts = parts
        .iter()
        .map(|names| subset_from_names(p, names))
        .collect::<Result<Vec<_>>>()?;
    Ok(SubsetTuple::new(p, parts)?)
}

pub fn tuple_to_json(p: &Poset, t: &SubsetTuple) -> Value {
    Value::from(
        t.parts()
            .iter()
            .map(|&s| Value::from(names_of(p, s)))
            .collect::<Vec<_>>(),
    )
}

fn set_text(p: &Poset, s: Subset) -> String {
    format!("{{{}}}", p.subset_names(s).join(", "))
}

pub fn tuple_to_text(p: &Poset, t: &SubsetTuple) -> String {
    let parts: Vec<String> = t.parts().iter().map(|&s| set_text(p, s)).collect();
    format!("({})", parts.join(", "))
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FamilyDoc {
    generators: Vec<Vec<String>>,
}

pub fn parse_family(p: &Poset, text: &str) -> Result<ChainFamily> {
    let doc: FamilyDoc = serde_json::from_str(text)?;
    let mut chains = Vec::with_capacity(doc.generators.len());
    for g in &doc.generators {
        let s = subset_from_names(p, g)?;
        if s.is_empty() {
            return Err(Error::EmptyChain.into());
        }
        chains.push(p.chain(s)?);
    }
    Ok(ChainFamily::from_chains(chains))
}

pub fn family_to_json(p: &Poset, f: &ChainFamily) -> Value {
    json!({
        "generators": f
            .generators()
            .iter()
            .map(|g| names_of(p, g.members()))
            .collect::<Vec<_>>(),
    })
}

pub fn family_to_text(p: &Poset, f: &ChainFamily) -> String {
    let gens: Vec<String> = f.generators().iter().map(|g| set_text(p, g.members())).collect();
    format!("{{{}}}", gens.join(", "))
}

pub fn chain_to_text(p: &Poset, c: Chain) -> String {
    set_text(p, c.members())
}

pub fn form_to_json(p: &Poset, form: &NormalForm) -> Value {
    let mut map = serde_json::Map::new();
    map.insert("form".into(), form.tag().into());
    if let NormalForm::Unresolved(t) = form {
        map.insert("canonical".into(), tuple_to_json(p, t));
    }
    for (key, s) in form.payloads() {
        map.insert(key.into(), names_of(p, s).into());
    }
    Value::Object(map)
}

pub fn form_to_text(p: &Poset, form: &NormalForm) -> String {
    let mut out = form.tag().to_string();
    if let NormalForm::Unresolved(t) = form {
        let _ = write!(out, " {}", tuple_to_text(p, t));
    }
    for (key, s) in form.payloads() {
        let _ = write!(out, " {key}={}", set_text(p, s));
    }
    out
}

pub fn parse_form(p: &Poset, text: &str) -> Result<NormalForm> {
    let mut map: BTreeMap<String, Value> = serde_json::from_str(text)?;
    let Some(Value::String(tag)) = map.remove("form") else {
        return Err(FormatError::parse(1, 1, "missing string field `form`"));
    };
    let form = if tag == "Unresolved" {
        let Some(v) = map.remove("canonical") else {
            return Err(FormatError::parse(1, 1, "missing field `canonical`"));
        };
        let parts: Vec<Vec<String>> = serde_json::from_value(v)?;
        NormalForm::Unresolved(tuple_from_names(p, &parts)?)
    } else {
        let mut bad: Option<FormatError> = None;
        let form = NormalForm::from_tag(&tag, |key| {
            let names: Vec<String> = match map.remove(key).map(serde_json::from_value) {
                Some(Ok(v)) => v,
                Some(Err(e)) => {
                    bad = Some(e.into());
                    return Err(Error::BadParameter(format!("field `{key}`")));
                }
                None => {
                    bad = Some(FormatError::parse(1, 1, format!("missing field `{key}`")));
                    return Err(Error::BadParameter(format!("field `{key}`")));
                }
            };
            p.subset(&names)
        });
        match (form, bad) {
            (_, Some(e)) => return Err(e),
            (f, None) => f?,
        }
    };
    if let Some(extra) = map.keys().next() {
        return Err(FormatError::parse(1, 1, format!("unknown field `{extra}`")));
    }
    Ok(form)
}
