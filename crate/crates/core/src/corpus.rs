//! Golden corpus: directories of `name.expr` / `name.expected.json` pairs.
//!
//! Each `.expr` file holds one expression (lines starting with `#` are
//! comments). Its output is a certificate, or an error object
//! `{"input", "error", "message"}` when evaluation fails. A case passes when
//! the output equals the expected JSON value exactly.

use std::fs;
use std::path::{Path, PathBuf};

use serde_json::{json, Value};

use crate::certificate::Certificate;
use crate::error::{Error, Result};
use crate::expr::{self, Config};
use crate::par;

#[derive(Clone, Debug)]
pub struct Case {
    pub name: String,
    pub text: String,
    pub expected: Option<Value>,
    pub path: PathBuf,
}

#[derive(Clone, Debug)]
pub struct CaseReport {
    pub name: String,
    pub actual: Value,
    pub expected: Option<Value>,
}

impl CaseReport {
    pub fn passed(&self) -> bool {
        self.expected.as_ref() == Some(&self.actual)
    }

    /// Top-level keys whose values differ, for failure messages.
    pub fn differing_keys(&self) -> Vec<String> {
        let empty = serde_json::Map::new();
        let a = self.actual.as_object().unwrap_or(&empty);
        let e = self.expected.as_ref().and_then(Value::as_object).unwrap_or(&empty);
        let mut keys: Vec<String> = a.keys().chain(e.keys()).filter(|k| a.get(*k) != e.get(*k)).cloned().collect();
        keys.sort();
        keys.dedup();
        keys
    }
}

fn strip_comments(text: &str) -> String {
    text.lines().filter(|l| !l.trim_start().starts_with('#')).collect::<Vec<_>>().join("\n")
}

/// Evaluates one expression to its JSON outcome.
pub fn case_output(text: &str, cfg: &Config) -> Value {
    let source = strip_comments(text);
    let parsed = match expr::parse(&source) {
        Ok(e) => e,
        Err(e) => return error_json(source.trim(), &e),
    };
    let input = parsed.to_string();
    match expr::evaluate(&parsed, cfg) {
        Ok(a) => serde_json::to_value(Certificate::for_series(&input, &a)).expect("certificates serialize"),
        Err(e) => error_json(&input, &e),
    }
}

pub fn error_json(input: &str, e: &Error) -> Value {
    json!({ "input": input, "error": e.kind(), "message": e.to_string() })
}

/// Loads all cases of a directory, sorted by name.
pub fn load_dir(dir: &Path) -> Result<Vec<Case>> {
    let mut cases = Vec::new();
    for entry in fs::read_dir(dir)? {
        let path = entry?.path();
        let Some(name) = path.file_name().and_then(|n| n.to_str()).and_then(|n| n.strip_suffix(".expr")) else {
            continue;
        };
        let name = name.to_string();
        let text = fs::read_to_string(&path)?;
        let expected_path = dir.join(format!("{name}.expected.json"));
        let expected = if expected_path.exists() {
            let raw = fs::read_to_string(&expected_path)?;
            Some(serde_json::from_str(&raw).map_err(|e| Error::Eval(format!("{}: {e}", expected_path.display())))?)
        } else {
            None
        };
        cases.push(Case { name, text, expected, path });
    }
    cases.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(cases)
}

fn report(c: &Case, cfg: &Config) -> CaseReport {
    CaseReport { name: c.name.clone(), actual: case_output(&c.text, cfg), expected: c.expected.clone() }
}

/// Runs cases on the worker pool; reports come back in input order.
pub fn run_cases(cases: &[Case], cfg: &Config) -> Vec<CaseReport> {
    par::map(cases, |c| report(c, cfg))
}

pub fn run_cases_sequential(cases: &[Case], cfg: &Config) -> Vec<CaseReport> {
    par::map_sequential(cases, |c| report(c, cfg))
}

pub fn run_dir(dir: &Path, cfg: &Config) -> Result<Vec<CaseReport>> {
    Ok(run_cases(&load_dir(dir)?, cfg))
}

/// Writes the current outputs as the expected files.
pub fn bless(dir: &Path, cfg: &Config) -> Result<usize> {
    let reports = run_dir(dir, cfg)?;
    for r in &reports {
        let text = serde_json::to_string_pretty(&r.actual).expect("json") + "\n";
        fs::write(dir.join(format!("{}.expected.json", r.name)), text)?;
    }
    Ok(reports.len())
}
