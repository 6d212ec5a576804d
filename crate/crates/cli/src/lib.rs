//! `transgen`: batch verification of generator bounds for the exceptional
//! transitive degrees, with human and JSON reports.

pub mod commands;
pub mod report;
pub mod seeds;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use transgen_core::bounds::{Family, Mode};
use transgen_core::permgrp::Suite;

use report::{CliError, Outcome, Report, SeedInfo, Status, ENGINE, SCHEMA_VERSION};

#[derive(Debug, Parser)]
#[command(name = "transgen", version, about = "Verify generator bounds d(G) <= floor(c·n/sqrt(log2 n)) for the exceptional transitive degrees")]
pub struct Cli {
    /// Emit one JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed file replacing the bundled one.
    #[arg(long, global = true, value_name = "PATH")]
    pub seeds: Option<PathBuf>,
    /// `fidelity` uses the 2-part closed forms where rows have them; `sharp` sums E_sol everywhere.
    #[arg(long, global = true, default_value = "fidelity", value_parser = parse_mode)]
    pub mode: Mode,
    #[command(subcommand)]
    pub command: Command,
}

fn parse_mode(s: &str) -> Result<Mode, String> {
    s.parse().map_err(|e: transgen_core::bounds::BoundError| e.to_string())
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: transgen_core::permgrp::GroupError| e.to_string())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    #[value(name = "5")]
    Five,
    #[value(name = "15")]
    Fifteen,
    All,
}

impl FamilyArg {
    fn families(self) -> Vec<Family> {
        match self {
            FamilyArg::Five => vec![Family::Five],
            FamilyArg::Fifteen => vec![Family::Fifteen],
            FamilyArg::All => vec![Family::Five, Family::Fifteen],
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Factorization statistics, ws, s_2 and E_sol(s, 2).
    Esol { s: u64 },
    /// floor(sqrt(3)/2 · n / sqrt(log2 n)), correctly floored.
    Threshold { n: u64 },
    /// Table rows applicable to degree m and their orbit profiles.
    Profiles {
        m: u64,
        #[arg(long)]
        row: Option<u8>,
        /// List every profile instead of the first 25 per row.
        #[arg(long)]
        all: bool,
    },
    /// Certificate for one exceptional degree.
    Bound { n: u64 },
    /// Sweep whole degree families.
    VerifyChain {
        #[arg(long, default_value = "all")]
        family: FamilyArg,
    },
    /// Brute-force the permutation-group fixtures against their orbit tables.
    VerifyGroups {
        #[arg(long, value_delimiter = ',', default_value = "a5,a6,a5sq,a8,l2", value_parser = parse_suite)]
        suite: Vec<Suite>,
    },
}

/// Everything an invocation writes, so tests can run it in-process.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Execution {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn uses_seeds(c: &Command) -> bool {
    matches!(c, Command::Bound { .. } | Command::VerifyChain { .. })
}

fn inputs(cli: &Cli) -> serde_json::Value {
    let mode = cli.mode.to_string();
    match &cli.command {
        Command::Esol { s } => json!({ "s": s }),
        Command::Threshold { n } => json!({ "n": n }),
        Command::Profiles { m, row, all } => json!({ "m": m, "row": row, "all": all }),
        Command::Bound { n } => json!({ "n": n, "mode": mode }),
        Command::VerifyChain { family } => {
            let f: Vec<String> = family.families().iter().map(ToString::to_string).collect();
            json!({ "families": f, "mode": mode })
        }
        Command::VerifyGroups { suite } => {
            let s: Vec<&str> = suite.iter().map(|s| s.name()).collect();
            json!({ "suites": s })
        }
    }
}

fn dispatch(cli: &Cli, seed_set: Option<&seeds::SeedSet>) -> Result<Outcome, CliError> {
    let need = || seed_set.ok_or_else(|| CliError::Input("no seed set loaded".into()));
    match &cli.command {
        Command::Esol { s } => commands::esol(*s),
        Command::Threshold { n } => commands::threshold(*n),
        Command::Profiles { m, row, all } => commands::profiles(*m, *row, *all),
        Command::Bound { n } => commands::bound(*n, need()?, cli.mode),
        Command::VerifyChain { family } => commands::verify_chain(&family.families(), need()?, cli.mode),
        Command::VerifyGroups { suite } => commands::verify_groups(suite),
    }
}

pub fn run<I, T>(args: I) -> Execution
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code();
            return if code == 0 {
                Execution { code, stdout: text, stderr: String::new() }
            } else {
                Execution { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let command: Vec<String> = args.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
    let loaded = if uses_seeds(&cli.command) { Some(seeds::load(cli.seeds.as_deref())) } else { None };
    let (seed_set, seed_err) = match loaded {
        Some(Ok(s)) => (Some(s), None),
        Some(Err(e)) => (None, Some(CliError::from(e))),
        None => (None, None),
    };
    let result = match seed_err {
        Some(e) => Err(e),
        None => dispatch(&cli, seed_set.as_ref()),
    };
    let (status, error, outcome) = match result {
        Ok(o) => (if o.passed { Status::Pass } else { Status::Fail }, None, Some(o)),
        Err(e) => (Status::Error, Some(e), None),
    };
    let code = status.exit_code(error.as_ref());
    if cli.json {
        let report = Report {
            schema_version: SCHEMA_VERSION,
            engine: ENGINE,
            command,
            inputs: inputs(&cli),
            seed_file: seed_set.as_ref().map(SeedInfo::from),
            status,
            error: error.as_ref().map(ToString::to_string),
            results: outcome.map(|o| o.results).unwrap_or(serde_json::Value::Null),
        };
        let mut stdout = serde_json::to_string_pretty(&report).expect("report serializes");
        stdout.push('\n');
        let stderr = error.map(|e| format!("error: {e}\n")).unwrap_or_default();
        Execution { code, stdout, stderr }
    } else {
        let mut stdout = String::new();
        if let Some(s) = &seed_set {
            stdout.push_str(&format!("seeds: {} (sha256 {})\n", s.source, s.sha256));
        }
        if let Some(o) = outcome {
            stdout.push_str(&o.human);
        }
        let stderr = error.map(|e| format!("error: {e}\n")).unwrap_or_default();
        Execution { code, stdout, stderr }
    }
}
