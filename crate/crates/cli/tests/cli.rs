use std::collections::BTreeSet;

use serde_json::Value;
use transgen_cli::{run, Execution};
use transgen_core::bounds::{default_seeds, pipeline, BoundCertificate, Mode};

fn exec(args: &[&str]) -> Execution {
    run(std::iter::once("transgen").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut a = args.to_vec();
    a.push("--json");
    let out = exec(&a);
    (out.code, serde_json::from_str(&out.stdout).unwrap())
}

/// Every maximal run of digits (with an optional decimal part) in `text`.
fn numbers(text: &str) -> BTreeSet<String> {
    let mut out = BTreeSet::new();
    let mut cur = String::new();
    for ch in text.chars().chain(std::iter::once(' ')) {
        if ch.is_ascii_digit() || (ch == '.' && !cur.is_empty() && !cur.contains('.')) {
            cur.push(ch);
        } else if !cur.is_empty() {
            out.insert(cur.trim_end_matches('.').to_string());
            cur.clear();
        }
    }
    out
}

fn assert_lossless(args: &[&str]) {
    // the formula's constants are not data
    let human = exec(args).stdout.replace("floor(sqrt(3)/2 · n / sqrt(log2 n))", "");
    let (_, doc) = json(args);
    let text = doc.to_string();
    let in_json = numbers(&text);
    for n in numbers(&human) {
        assert!(in_json.contains(&n) || text.contains(&n), "{args:?}: {n} missing from JSON");
    }
}

#[test]
fn esol_examples() {
    let (code, doc) = json(&["esol", "5"]);
    assert_eq!(code, 0);
    assert_eq!(doc["results"]["e_sol"]["exact"], "1");
    assert_eq!(doc["results"]["ws"]["exact"], "15/8");
    assert_eq!(json(&["esol", "1"]).1["results"]["e_sol"]["exact"], "1");
    let (_, doc) = json(&["esol", "163840"]);
    assert_eq!(doc["results"]["e_sol"]["exact"], "230945/8");
    assert_eq!(doc["results"]["e_sol"]["approx"], "≈28868.1");
    assert_eq!(exec(&["esol", "0"]).code, 2);
    assert_eq!(exec(&["esol", &(1u64 << 41).to_string()]).code, 3);
}

#[test]
fn threshold_values() {
    for (n, t) in [(655360u64, 129117u64), (491520, 97895), (983040, 190809), (1966080, 372380)] {
        let (code, doc) = json(&["threshold", &n.to_string()]);
        assert_eq!(code, 0);
        assert_eq!(doc["results"]["threshold"], t);
    }
    assert_eq!(exec(&["threshold", "1"]).code, 2);
}

#[test]
fn profiles_examples() {
    let (code, doc) = json(&["profiles", "327680"]);
    assert_eq!(code, 0);
    let rows: Vec<u64> = doc["results"]["rows"].as_array().unwrap().iter().map(|r| r["row"].as_u64().unwrap()).collect();
    assert_eq!(rows, [7, 18, 19, 29]);
    let (_, doc) = json(&["profiles", "491520", "--row", "1"]);
    assert_eq!(doc["results"]["rows"][0]["count"], 10);
    assert_eq!(exec(&["profiles", "7"]).code, 2);
    assert_eq!(exec(&["profiles", "491520", "--row", "31"]).code, 2);
    // row 16 has 77 profiles; the listing is capped unless --all
    let (_, capped) = json(&["profiles", "245760", "--row", "16"]);
    assert_eq!(capped["results"]["rows"][0]["count"], 77);
    assert_eq!(capped["results"]["rows"][0]["profiles"].as_array().unwrap().len(), 25);
    let (_, all) = json(&["profiles", "245760", "--row", "16", "--all"]);
    assert_eq!(all["results"]["rows"][0]["profiles"].as_array().unwrap().len(), 77);
}

#[test]
fn bound_certificate() {
    let (code, doc) = json(&["bound", "655360"]);
    assert_eq!(code, 0);
    assert_eq!(doc["schema_version"], 1);
    assert_eq!(doc["status"], "pass");
    assert_eq!(doc["results"]["total"], 126313);
    assert_eq!(doc["results"]["verdict"], "PASS");
    assert_eq!(doc["results"]["witness_profile"], serde_json::json!([[81920, 4]]));
    assert_eq!(doc["seed_file"]["sha256"].as_str().unwrap().len(), 64);
    // the certificate round-trips exactly
    let back: BoundCertificate = serde_json::from_value(doc["results"].clone()).unwrap();
    assert_eq!(back, pipeline(655360, &default_seeds(), Mode::Fidelity).unwrap());
    assert_eq!(exec(&["bound", "30"]).code, 2);
    assert_eq!(exec(&["bound", "655360", "--mode", "loose"]).code, 2);
    assert_eq!(exec(&["bound", "491520"]).code, 1);
    assert_eq!(exec(&["bound", "491520", "--mode", "sharp"]).code, 1);
}

#[test]
fn json_is_deterministic_and_lossless() {
    for args in [&["bound", "1310720"][..], &["verify-chain", "--family", "5"], &["esol", "245760"], &["threshold", "491520"]] {
        let mut a = args.to_vec();
        a.push("--json");
        assert_eq!(exec(&a).stdout, exec(&a).stdout, "{args:?}");
        assert_lossless(args);
    }
    assert_lossless(&["bound", "491520"]);
    assert_lossless(&["profiles", "327680"]);
    assert_lossless(&["verify-groups", "--suite", "a5"]);
}

#[test]
fn chain_exit_codes() {
    assert_eq!(exec(&["verify-chain", "--family", "5"]).code, 0);
    let fifteen = exec(&["verify-chain", "--family", "15"]);
    assert_eq!(fifteen.code, 1);
    assert!(fifteen.stdout.contains("0/21 PASS"));
    assert_eq!(exec(&["verify-chain", "--family", "7"]).code, 2);

    let dir = std::env::temp_dir().join(format!("transgen-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let partial = dir.join("seeds.toml");
    std::fs::write(&partial, "schema_version = 1\n[[seed]]\ndegree = 245760\nbound = 49150\ncitation = \"\"\n").unwrap();
    let out = exec(&["verify-chain", "--family", "all", "--seeds", partial.to_str().unwrap()]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.contains("no quotient bound for degree 2^16·5 (327680)"));
    let missing = dir.join("absent.toml");
    let out = exec(&["verify-chain", "--seeds", missing.to_str().unwrap()]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("absent.toml"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn group_suites() {
    assert_eq!(exec(&["verify-groups", "--suite", "a8"]).code, 0);
    assert_eq!(exec(&["verify-groups", "--suite", "a6,l2"]).code, 0);
    let (code, doc) = json(&["verify-groups", "--suite", "a5"]);
    assert_eq!(code, 1);
    let bad: Vec<&str> = doc["results"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["matches"] == false)
        .map(|c| c["fixture"].as_str().unwrap())
        .collect();
    assert_eq!(bad, ["a5_c5"]);
    assert_eq!(exec(&["verify-groups", "--suite", "a7"]).code, 2);
}

#[test]
fn usage_errors() {
    assert_eq!(exec(&[]).code, 2);
    assert_eq!(exec(&["frobnicate"]).code, 2);
    assert_eq!(exec(&["--version"]).code, 0);
}
