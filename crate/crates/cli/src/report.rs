use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Expectation {
    pub expected: Value,
    /// Where the expected value is stated.
    pub source: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub case_name: String,
    pub inputs: Value,
    pub results: Value,
    pub paper_expectations: Option<BTreeMap<String, Expectation>>,
    #[serde(rename = "match")]
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Mismatch {
    pub key: String,
    pub expected: Value,
    pub found: Option<Value>,
    pub source: String,
}

impl Report {
    pub fn new(case_name: &str, inputs: Value, results: Value, expectations: Option<BTreeMap<String, Expectation>>) -> Self {
        let mut report = Report { case_name: case_name.to_string(), inputs, results, paper_expectations: expectations, matches: true };
        report.matches = report.mismatches().is_empty();
        report
    }

    pub fn mismatches(&self) -> Vec<Mismatch> {
        let Some(expect) = &self.paper_expectations else { return Vec::new() };
        expect
            .iter()
            .filter_map(|(key, e)| {
                let found = self.results.get(key);
                (found != Some(&e.expected)).then(|| Mismatch {
                    key: key.clone(),
                    expected: e.expected.clone(),
                    found: found.cloned(),
                    source: e.source.clone(),
                })
            })
            .collect()
    }
}
