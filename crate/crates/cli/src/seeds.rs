//! Seed files: TOML records `(degree, bound, citation)` plus a digest of the
//! exact bytes read.

use std::fmt;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use transgen_core::bounds::SeedConstant;

pub const BUNDLED: &str = include_str!("../data/seeds.toml");

const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct SeedFile {
    schema_version: u32,
    #[serde(default)]
    seed: Vec<Record>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct Record {
    degree: u64,
    bound: u64,
    citation: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "path")]
pub enum Source {
    Bundled,
    File(PathBuf),
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Source::Bundled => f.write_str("bundled"),
            Source::File(p) => write!(f, "{}", p.display()),
        }
    }
}

/// Seeds as loaded, with where they came from.
#[derive(Debug, Clone, Serialize)]
pub struct SeedSet {
    pub source: Source,
    pub sha256: String,
    pub seeds: Vec<SeedConstant>,
}

#[derive(Debug)]
pub enum SeedError {
    Io { path: PathBuf, err: std::io::Error },
    Parse(String),
    Schema(u32),
    Invalid { degree: u64, bound: u64 },
    Duplicate(u64),
}

impl fmt::Display for SeedError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeedError::Io { path, err } => write!(f, "cannot read seed file {}: {err}", path.display()),
            SeedError::Parse(e) => write!(f, "malformed seed file: {e}"),
            SeedError::Schema(v) => write!(f, "seed file schema_version {v} unsupported (expected {SCHEMA_VERSION})"),
            SeedError::Invalid { degree, bound } => write!(f, "invalid seed: degree {degree}, bound {bound}"),
            SeedError::Duplicate(d) => write!(f, "degree {d} seeded twice"),
        }
    }
}

impl std::error::Error for SeedError {}

pub fn parse(text: &str, source: Source) -> Result<SeedSet, SeedError> {
    let file: SeedFile = toml::from_str(text).map_err(|e| SeedError::Parse(e.to_string()))?;
    if file.schema_version != SCHEMA_VERSION {
        return Err(SeedError::Schema(file.schema_version));
    }
    let mut seeds: Vec<SeedConstant> = Vec::new();
    for r in file.seed {
        if seeds.iter().any(|s| s.degree == r.degree) {
            return Err(SeedError::Duplicate(r.degree));
        }
        let s = SeedConstant::new(r.degree, r.bound, r.citation)
            .map_err(|_| SeedError::Invalid { degree: r.degree, bound: r.bound })?;
        seeds.push(s);
    }
    Ok(SeedSet { source, sha256: hex::encode(Sha256::digest(text.as_bytes())), seeds })
}

pub fn bundled() -> SeedSet {
    parse(BUNDLED, Source::Bundled).expect("bundled seed file is valid")
}

/// `--seeds PATH` replaces the bundled file entirely.
pub fn load(path: Option<&Path>) -> Result<SeedSet, SeedError> {
    match path {
        None => Ok(bundled()),
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|err| SeedError::Io { path: p.to_path_buf(), err })?;
            parse(&text, Source::File(p.to_path_buf()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_matches_engine_defaults() {
        assert_eq!(bundled().seeds, transgen_core::bounds::default_seeds());
    }

    #[test]
    fn rejects_bad_files() {
        assert!(matches!(parse("schema_version = 2", Source::Bundled), Err(SeedError::Schema(2))));
        let dup = "schema_version = 1\n[[seed]]\ndegree = 10\nbound = 3\ncitation = \"\"\n[[seed]]\ndegree = 10\nbound = 4\ncitation = \"\"\n";
        assert!(matches!(parse(dup, Source::Bundled), Err(SeedError::Duplicate(10))));
        let bad = "schema_version = 1\n[[seed]]\ndegree = 7\nbound = 3\ncitation = \"\"\n";
        assert!(matches!(parse(bad, Source::Bundled), Err(SeedError::Invalid { degree: 7, .. })));
        assert!(matches!(parse("schema_version = 1\nextra = 1", Source::Bundled), Err(SeedError::Parse(_))));
        let empty = parse("schema_version = 1", Source::Bundled).unwrap();
        assert!(empty.seeds.is_empty());
    }

    #[test]
    fn digest_tracks_bytes() {
        let a = parse(BUNDLED, Source::Bundled).unwrap();
        let b = parse(&format!("{BUNDLED}\n"), Source::Bundled).unwrap();
        assert_eq!(a.seeds, b.seeds);
        assert_ne!(a.sha256, b.sha256);
        assert_eq!(a.sha256.len(), 64);
    }
}
