//! Radical chain descriptions.
//!
//! A chain is a JSON document
//!
//! ```json
//! { "stages": [ {"k": 2, "radicand": "2"}, {"k": 2, "radicand": "1 + r1"} ] }
//! ```
//!
//! Stage `i` adjoins a root of `x^k - radicand`. The radicand uses the
//! polynomial grammar (integers, rationals, `+ - * / ^`, parentheses) with
//! the names `r1, …, r(i-1)` standing for the radicals adjoined earlier.

use std::io::Read;
use std::path::Path;

use serde::Deserialize;

use galois_kit::radical::RadicalSpec;

use crate::report::ErrorReport;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ChainFile {
    stages: Vec<StageEntry>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct StageEntry {
    k: u32,
    radicand: String,
}

/// Parses a chain description.
pub fn parse_chain(text: &str) -> Result<Vec<RadicalSpec>, ErrorReport> {
    let file: ChainFile = serde_json::from_str(text).map_err(|e| {
        ErrorReport::parse(format!("chain description, line {}: {e}", e.line()), Some(e.column()))
    })?;
    Ok(file
        .stages
        .into_iter()
        .map(|s| RadicalSpec::new(s.k, s.radicand))
        .collect())
}

/// Reads a chain description from `path`, or from stdin when `path` is `-`.
pub fn read_chain(path: &Path) -> Result<Vec<RadicalSpec>, ErrorReport> {
    let mut text = String::new();
    let read = if path == Path::new("-") {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    read.map_err(|e| ErrorReport::input(format!("cannot read {}: {e}", path.display())))?;
    parse_chain(&text)
}
