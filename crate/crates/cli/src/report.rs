//! The one JSON document each invocation emits, and the exit-code contract.

use std::fmt;

use serde::Serialize;
use serde_json::Value;
use transgen_core::arith::{ArithError, ExactRational};
use transgen_core::bounds::BoundError;
use transgen_core::permgrp::GroupError;
use transgen_core::profiles::{ProfileError, TABLE_VERSION};

use crate::seeds::{SeedError, SeedSet};

pub const SCHEMA_VERSION: u32 = 1;

/// An exact rational with its `≈` rendering to 6 significant digits.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Approx {
    pub exact: ExactRational,
    pub approx: String,
}

impl Approx {
    pub fn new(exact: &ExactRational) -> Self {
        Approx { exact: exact.clone(), approx: format!("≈{}", exact.to_decimal(6)) }
    }
}

impl fmt::Display for Approx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exact.is_integer() {
            write!(f, "{}", self.exact)
        } else {
            write!(f, "{} {}", self.exact, self.approx)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

impl Status {
    pub fn exit_code(self, error: Option<&CliError>) -> i32 {
        match (self, error) {
            (Status::Pass, _) => 0,
            (Status::Fail, _) => 1,
            (Status::Error, Some(e)) => e.exit_code(),
            (Status::Error, None) => 2,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Engine {
    pub name: &'static str,
    pub version: &'static str,
    pub table_version: u32,
}

pub const ENGINE: Engine = Engine { name: "transgen", version: env!("CARGO_PKG_VERSION"), table_version: TABLE_VERSION };

#[derive(Debug, Clone, Serialize)]
pub struct SeedInfo {
    pub source: crate::seeds::Source,
    pub sha256: String,
}

impl From<&SeedSet> for SeedInfo {
    fn from(s: &SeedSet) -> Self {
        SeedInfo { source: s.source.clone(), sha256: s.sha256.clone() }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub engine: Engine,
    pub command: Vec<String>,
    pub inputs: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed_file: Option<SeedInfo>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub results: Value,
}

/// Why an invocation could not produce a verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Input(String),
    Resource(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Resource(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(m) | CliError::Resource(m) => f.write_str(m),
        }
    }
}

impl std::error::Error for CliError {}

fn arith_is_cap(e: &ArithError) -> bool {
    matches!(e, ArithError::TooLarge(_) | ArithError::PrecisionExhausted { .. })
}

impl From<ArithError> for CliError {
    fn from(e: ArithError) -> Self {
        if arith_is_cap(&e) {
            CliError::Resource(e.to_string())
        } else {
            CliError::Input(e.to_string())
        }
    }
}

impl From<ProfileError> for CliError {
    fn from(e: ProfileError) -> Self {
        match &e {
            ProfileError::TooMany { .. } => CliError::Resource(e.to_string()),
            ProfileError::Arith(a) if arith_is_cap(a) => CliError::Resource(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<BoundError> for CliError {
    fn from(e: BoundError) -> Self {
        match e {
            BoundError::Arith(a) => a.into(),
            BoundError::Profile(p) => p.into(),
            BoundError::Overflow => CliError::Resource(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<GroupError> for CliError {
    fn from(e: GroupError) -> Self {
        match e {
            GroupError::CapExceeded { .. } => CliError::Resource(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<SeedError> for CliError {
    fn from(e: SeedError) -> Self {
        CliError::Input(e.to_string())
    }
}

/// What a command hands back: typed results as JSON, the human rendering of
/// the same data, and whether every check passed.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub results: Value,
    pub human: String,
    pub passed: bool,
}

pub fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn approx_rendering() {
        let a = Approx::new(&ExactRational::new(230945, 8));
        assert_eq!(a.approx, "≈28868.1");
        assert_eq!(a.to_string(), "230945/8 ≈28868.1");
        assert_eq!(Approx::new(&ExactRational::from_integer(16384)).to_string(), "16384");
        assert_eq!(serde_json::to_string(&a).unwrap(), r#"{"exact":"230945/8","approx":"≈28868.1"}"#);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(Status::Pass.exit_code(None), 0);
        assert_eq!(Status::Fail.exit_code(None), 1);
        let cap: CliError = ProfileError::TooMany { row: 1, count: 5 }.into();
        assert_eq!(Status::Error.exit_code(Some(&cap)), 3);
        let bad: CliError = BoundError::OutsideFamilies(30).into();
        assert_eq!(Status::Error.exit_code(Some(&bad)), 2);
    }
}
