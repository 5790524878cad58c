//! Embedded expectation batteries, one data file per case set.

use std::collections::BTreeMap;

use serde::Deserialize;
use serde_json::Value;

use crate::commands::execute;
use crate::error::{CliError, Result};
use crate::input::Inputs;
use crate::report::{Expectation, Report};

pub const CASE_SETS: [(&str, &str); 6] = [
    ("gl4", include_str!("../data/gl4.json")),
    ("gln", include_str!("../data/gln.json")),
    ("sp", include_str!("../data/sp.json")),
    ("heisenberg", include_str!("../data/heisenberg.json")),
    ("degeneration", include_str!("../data/degeneration.json")),
    ("cosets", include_str!("../data/cosets.json")),
];

#[derive(Debug, Deserialize)]
struct CaseFile {
    cases: Vec<Case>,
}

#[derive(Debug, Deserialize)]
struct Case {
    name: String,
    command: String,
    inputs: Inputs,
    expect: BTreeMap<String, Expectation>,
}

fn case_file(set: &str) -> Result<CaseFile> {
    let text = CASE_SETS.iter().find(|(name, _)| *name == set).map(|(_, t)| *t).ok_or_else(|| {
        CliError::UnknownCaseSet { name: set.to_string(), known: CASE_SETS.map(|(n, _)| n).join(", ") }
    })?;
    serde_json::from_str(text).map_err(|e| CliError::json(&format!("data/{set}.json"), e))
}

pub fn run_set(set: &str) -> Result<Vec<Report>> {
    let file = case_file(set)?;
    file.cases
        .into_iter()
        .map(|case| {
            let results = execute(&case.command, &case.inputs)?;
            Ok(Report::new(&case.name, Value::Object(case.inputs), results, Some(case.expect)))
        })
        .collect()
}
