//! The example corpus replayed by `lspace reproduce`.
//!
//! Each case is a command line plus the expected exit code and a JSON
//! fragment the report must contain. Objects match when every expected
//! key matches; arrays must match element by element.

use std::path::Path;

use clap::Parser;
use serde_json::{json, Value};

use crate::commands::{error_report, execute, Cli};
use crate::CliError;

/// The embedded corpus.
pub const EMBEDDED: &str = include_str!("../corpus/cases.json");

#[derive(Debug, Clone)]
pub struct Case {
    pub name: String,
    pub anchor: String,
    pub args: Vec<String>,
    pub exit_code: i32,
    pub expect: Value,
}

pub fn parse_corpus(text: &str) -> Result<Vec<Case>, CliError> {
    let v: Value = serde_json::from_str(text).map_err(|e| CliError::Json(e.to_string()))?;
    let items = v.as_array().ok_or_else(|| CliError::Json("corpus must be an array".into()))?;
    items
        .iter()
        .map(|c| {
            let field = |k: &str| c.get(k).ok_or_else(|| CliError::Json(format!("case is missing `{k}`: {c}")));
            let text = |k: &str| -> Result<String, CliError> {
                field(k)?.as_str().map(str::to_owned).ok_or_else(|| CliError::Json(format!("`{k}` must be a string")))
            };
            let args = field("args")?
                .as_array()
                .and_then(|a| a.iter().map(|s| s.as_str().map(str::to_owned)).collect::<Option<Vec<_>>>())
                .ok_or_else(|| CliError::Json("`args` must be an array of strings".into()))?;
            let exit_code = field("exit_code")?
                .as_i64()
                .and_then(|n| i32::try_from(n).ok())
                .ok_or_else(|| CliError::Json("`exit_code` must be an integer".into()))?;
            Ok(Case { name: text("name")?, anchor: text("anchor")?, args, exit_code, expect: field("expect")?.clone() })
        })
        .collect()
}

/// Checks that `actual` contains `expected`; on mismatch returns the path
/// of the first difference.
pub fn contains(expected: &Value, actual: &Value, path: &str) -> Result<(), String> {
    match (expected, actual) {
        (Value::Object(e), Value::Object(a)) => {
            for (k, ev) in e {
                let sub = format!("{path}.{k}");
                let av = a.get(k).ok_or_else(|| format!("{sub}: missing"))?;
                contains(ev, av, &sub)?;
            }
            Ok(())
        }
        (Value::Array(e), Value::Array(a)) => {
            if e.len() != a.len() {
                return Err(format!("{path}: expected {} elements, found {}", e.len(), a.len()));
            }
            for (i, (ev, av)) in e.iter().zip(a).enumerate() {
                contains(ev, av, &format!("{path}[{i}]"))?;
            }
            Ok(())
        }
        (Value::Number(e), Value::Number(a)) if e.to_string() == a.to_string() => Ok(()),
        _ if expected == actual => Ok(()),
        _ => Err(format!("{path}: expected {expected}, found {actual}")),
    }
}

/// Runs one case and reports the first mismatch, if any.
pub fn run_case(case: &Case) -> Result<(), String> {
    let argv = std::iter::once("lspace".to_owned()).chain(case.args.iter().cloned());
    let cli = Cli::try_parse_from(argv).map_err(|e| format!("bad arguments: {e}"))?;
    let (report, code) = match execute(&cli) {
        Ok(out) => (out.report, out.exit_code),
        Err(e) => (error_report(&e), 2),
    };
    if code != case.exit_code {
        return Err(format!("exit code {code}, expected {}", case.exit_code));
    }
    contains(&case.expect, &report, "$")
}

pub fn reproduce(only: Option<&str>, path: Option<&Path>) -> Result<crate::Outcome, CliError> {
    let text = match path {
        Some(p) => std::fs::read_to_string(p)?,
        None => EMBEDDED.to_owned(),
    };
    let cases: Vec<Case> = parse_corpus(&text)?.into_iter().filter(|c| only.is_none_or(|o| c.name == o)).collect();
    if let Some(o) = only {
        if cases.is_empty() {
            return Err(CliError::Usage(format!("no corpus case named `{o}`")));
        }
    }
    let results: Vec<Value> = cases
        .iter()
        .map(|c| {
            let res = run_case(c);
            json!({
                "name": c.name,
                "anchor": c.anchor,
                "passed": res.is_ok(),
                "detail": res.err(),
            })
        })
        .collect();
    let failed = results.iter().filter(|r| r["passed"] == false).count();
    let outputs = json!({
        "cases": results,
        "passed": results.len() - failed,
        "failed": failed,
    });
    Ok(crate::Outcome {
        report: json!({ "command": "reproduce", "inputs": { "only": only }, "outputs": outputs }),
        exit_code: i32::from(failed > 0),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subset_matching() {
        let actual = json!({ "a": { "b": 1, "c": [1, 2] }, "d": "x" });
        assert!(contains(&json!({ "a": { "b": 1 } }), &actual, "$").is_ok());
        assert!(contains(&json!({ "a": { "c": [1, 2] } }), &actual, "$").is_ok());
        assert_eq!(contains(&json!({ "a": { "b": 2 } }), &actual, "$"), Err("$.a.b: expected 2, found 1".into()));
        assert!(contains(&json!({ "a": { "c": [1] } }), &actual, "$").is_err());
        assert!(contains(&json!({ "z": 1 }), &actual, "$").is_err());
    }

    #[test]
    fn embedded_corpus_parses() {
        let cases = parse_corpus(EMBEDDED).unwrap();
        assert!(cases.len() >= 20);
        let mut names: Vec<&str> = cases.iter().map(|c| c.name.as_str()).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), cases.len(), "case names must be unique");
    }
}
