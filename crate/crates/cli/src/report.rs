//! The report every command produces, in the shape published by
//! [`SCHEMA`](crate::SCHEMA).

use serde::Serialize;
use serde_json::Value;

use galois_kit::Error;

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct Report {
    pub engine: Engine,
    pub command: CommandEcho,
    pub settings: Settings,
    pub status: Status,
    pub exit_code: i32,
    /// Command-specific payload; absent on error.
    pub result: Option<Value>,
    /// Every identity the engine or the front end checked for this command.
    pub checks: Vec<CheckLine>,
    pub error: Option<ErrorReport>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Engine {
    pub name: String,
    pub version: String,
}

impl Default for Engine {
    fn default() -> Self {
        Engine {
            name: "galois-kit".into(),
            version: env!("CARGO_PKG_VERSION").into(),
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CommandEcho {
    pub name: String,
    /// The arguments as given, without the program name.
    pub argv: Vec<String>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Settings {
    pub degree_cap: usize,
    pub seed: u64,
    pub primes: Vec<u64>,
}

#[derive(Clone, Copy, Debug, Serialize, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    /// The command ran but some check failed; always a bug.
    ChecksFailed,
    Error,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CheckLine {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckLine {
    pub fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        CheckLine {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Copy, Debug, Serialize, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
pub enum ErrorKind {
    Parse,
    Input,
    DegreeCap,
    Soundness,
}

impl ErrorKind {
    pub fn exit_code(self) -> i32 {
        match self {
            ErrorKind::Parse | ErrorKind::Input => 2,
            ErrorKind::DegreeCap => 3,
            ErrorKind::Soundness => 4,
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ErrorReport {
    pub kind: ErrorKind,
    pub message: String,
    /// 1-based column for parse errors.
    pub column: Option<usize>,
    pub expected: Vec<String>,
}

impl ErrorReport {
    pub fn input(message: impl Into<String>) -> Self {
        ErrorReport {
            kind: ErrorKind::Input,
            message: message.into(),
            column: None,
            expected: Vec::new(),
        }
    }

    pub fn parse(message: impl Into<String>, column: Option<usize>) -> Self {
        ErrorReport {
            kind: ErrorKind::Parse,
            message: message.into(),
            column,
            expected: Vec::new(),
        }
    }
}

impl From<Error> for ErrorReport {
    fn from(e: Error) -> Self {
        let message = e.to_string();
        match e {
            Error::Parse { column, expected, .. } => ErrorReport {
                kind: ErrorKind::Parse,
                message,
                column: Some(column),
                expected,
            },
            Error::DegreeCapExceeded { .. } | Error::OrderBoundExceeded { .. } => ErrorReport {
                kind: ErrorKind::DegreeCap,
                ..ErrorReport::input(message)
            },
            Error::Soundness(_) => ErrorReport {
                kind: ErrorKind::Soundness,
                ..ErrorReport::input(message)
            },
            _ => ErrorReport::input(message),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn engine_errors_map_to_exit_codes() {
        let cap = Error::DegreeCapExceeded {
            required: 120,
            cap: 64,
            context: "test".into(),
        };
        assert_eq!(ErrorReport::from(cap).kind.exit_code(), 3);
        assert_eq!(ErrorReport::from(Error::Soundness("broken".into())).kind.exit_code(), 4);
        assert_eq!(ErrorReport::from(Error::ZeroPolynomial).kind.exit_code(), 2);
        assert_eq!(ErrorReport::parse("bad", Some(3)).kind.exit_code(), 2);
    }
}
