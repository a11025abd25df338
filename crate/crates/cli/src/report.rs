//! Command results and their text, JSON and DOT renderings.

use std::fmt::Write as _;

use qlattice::{AxiomReport, Subspace, Witness};
use serde_json::{json, Map, Value};

use crate::document::{vector_from_literal, vector_literal, VectorLiteral};
use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

/// Output of one command. `passed` decides the exit status.
#[derive(Clone, Debug)]
pub struct Report {
    pub command: &'static str,
    pub passed: bool,
    pub fields: Map<String, Value>,
    pub text: String,
    pub dot: Option<String>,
}

impl Report {
    pub fn new(command: &'static str) -> Self {
        Report {
            command,
            passed: true,
            fields: Map::new(),
            text: String::new(),
            dot: None,
        }
    }

    pub fn field(&mut self, key: &str, value: Value) {
        self.fields.insert(key.to_string(), value);
    }

    pub fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }

    pub fn json(&self) -> Value {
        let mut m = Map::new();
        m.insert("schema".into(), json!(1));
        m.insert("command".into(), json!(self.command));
        m.insert("passed".into(), json!(self.passed));
        m.extend(self.fields.clone());
        Value::Object(m)
    }

    pub fn render(&self, format: Format) -> Result<String, CliError> {
        match format {
            Format::Text => Ok(self.text.clone()),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json()).expect("reports serialize");
                s.push('\n');
                Ok(s)
            }
            Format::Dot => self.dot.clone().ok_or_else(|| {
                CliError::Usage(format!(
                    "--format dot is not available for {}",
                    self.command
                ))
            }),
        }
    }
}

/// `{"dim": d, "basis": [...]}` with the canonical basis in the document's
/// entry encoding.
pub fn subspace_json(u: &Subspace) -> Value {
    let basis: Vec<VectorLiteral> = u.basis().iter().map(vector_literal).collect();
    json!({ "dim": u.dim(), "basis": basis })
}

/// Inverse of [`subspace_json`].
pub fn subspace_from_json(ambient_dim: usize, v: &Value) -> Result<Subspace, String> {
    let rows: Vec<VectorLiteral> =
        serde_json::from_value(v["basis"].clone()).map_err(|e| e.to_string())?;
    let span: Vec<_> = rows.iter().map(|r| vector_from_literal(r)).collect();
    Subspace::from_span(ambient_dim, &span).map_err(|e| e.to_string())
}

pub fn axiom_json(r: &AxiomReport) -> Value {
    let counterexample = r.counterexample.as_ref().map(|cx| {
        let mut m = Map::new();
        m.insert("indices".into(), json!(cx.indices));
        match &cx.witness {
            Witness::Unequal { left, right } => {
                m.insert("left".into(), subspace_json(left));
                m.insert("right".into(), subspace_json(right));
            }
            Witness::Escapes { result } => {
                m.insert("result".into(), subspace_json(result));
            }
        }
        Value::Object(m)
    });
    json!({ "axiom": r.axiom.name(), "holds": r.holds, "counterexample": counterexample })
}

pub fn axiom_line(r: &AxiomReport) -> String {
    let Some(cx) = &r.counterexample else {
        return format!("{}: holds", r.axiom);
    };
    let at: Vec<String> = cx.indices.iter().map(ToString::to_string).collect();
    let mut s = format!("{}: fails at elements ({})", r.axiom, at.join(", "));
    match &cx.witness {
        Witness::Unequal { left, right } => write!(
            s,
            ": left {}, right {}",
            left.basis_string(),
            right.basis_string()
        )
        .unwrap(),
        Witness::Escapes { result } => {
            write!(s, ": {} is not in the family", result.basis_string()).unwrap()
        }
    }
    s
}

pub fn element_line(k: usize, u: &Subspace) -> String {
    format!("  [{k}] dim {} {}", u.dim(), u.basis_string())
}

pub fn elements_json(es: &[Subspace]) -> Value {
    Value::Array(es.iter().map(subspace_json).collect())
}
