//! End-to-end checks of the setfam binary: exit codes, report envelopes,
//! and canonical family serialization.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;
use setfam_core::Family;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_setfam"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn tmp(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("setfam-cli-test-{}-{name}", std::process::id()));
    p
}

fn read_envelope(path: &PathBuf) -> Value {
    let text = std::fs::read_to_string(path).expect("report exists");
    serde_json::from_str(&text).expect("report is json")
}

#[test]
fn bound_prints_value() {
    let out = run(&["bound", "--name", "hk", "--n", "9", "--k", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), r#"{"value":51}"#);

    let out = run(&["bound", "--name", "hm", "--n", "9", "--k", "4"]);
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), r#"{"value":53}"#);
}

#[test]
fn construct_writes_canonical_family_json() {
    let path = tmp("j2.json");
    let out = run(&["construct", "--family", "j", "--n", "9", "--k", "4", "--i", "2", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));

    let text = std::fs::read_to_string(&path).unwrap();
    let family: Family = serde_json::from_str(&text).expect("family parses");
    assert_eq!(family.size(), 51);

    // writer output is already in canonical order, so re-serializing is a fixpoint
    let reserialized = serde_json::to_string(&family).unwrap();
    assert_eq!(text.trim_end(), reserialized);
    std::fs::remove_file(&path).ok();
}

#[test]
fn size_agrees_with_construct() {
    let out = run(&["size", "--family", "e", "--n", "9", "--k", "4", "--l", "5"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), r#"{"value":51}"#);

    let out = run(&["construct", "--family", "e", "--n", "9", "--k", "4", "--l", "5"]);
    let family: Family = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(family.size(), 51);
}

#[test]
fn verify_lemma7_verifies_and_reports() {
    let report = tmp("l7.json");
    let csv = tmp("l7.csv");
    let out = run(&[
        "verify", "--theorem", "lemma7", "--m", "8", "--s", "3", "--k", "4",
        "--report", report.to_str().unwrap(), "--csv", csv.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));

    let envelope = read_envelope(&report);
    assert_eq!(envelope["report"]["status"], "verified");
    assert_eq!(envelope["report"]["stats"]["equality_classes"][0]["representative"], "t2s");
    assert_eq!(envelope["report"]["stats"]["equality_classes"][0]["count"], 280);
    assert!(envelope["manifest"]["report_digest"].as_str().unwrap().len() == 64);
    assert!(envelope["manifest"]["command_line"].as_array().unwrap().len() >= 8);

    let csv_text = std::fs::read_to_string(&csv).unwrap();
    let mut lines = csv_text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "theorem,params,status,families_examined,families_checked,equality_cases,counterexamples"
    );
    assert!(lines.next().unwrap().starts_with("lemma7,"));
    std::fs::remove_file(&report).ok();
    std::fs::remove_file(&csv).ok();
}

#[test]
fn cross_without_seed_is_usage_error() {
    let out = run(&["verify", "--theorem", "cross", "--n", "9", "--a", "4", "--b", "3"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--seed"));
}

#[test]
fn cross_with_seed_verifies() {
    let report = tmp("cross.json");
    let out = run(&[
        "verify", "--theorem", "cross", "--n", "9", "--a", "4", "--b", "3",
        "--samples", "500", "--seed", "42", "--report", report.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let envelope = read_envelope(&report);
    assert_eq!(envelope["report"]["status"], "verified");
    assert_eq!(envelope["manifest"]["seed"], 42);
    std::fs::remove_file(&report).ok();
}

#[test]
fn budget_capped_run_is_inconclusive() {
    let report = tmp("hk.json");
    let out = run(&[
        "verify", "--theorem", "hk", "--n", "9", "--k", "4",
        "--max-nodes", "1000", "--report", report.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    let envelope = read_envelope(&report);
    assert_eq!(envelope["report"]["status"], "inconclusive");
    assert_eq!(envelope["report"]["budget"]["complete"], false);
    assert!(!envelope["report"]["stats"]["notes"].as_array().unwrap().is_empty());
    std::fs::remove_file(&report).ok();
}

#[test]
fn verify_thm4p1_reads_family_files() {
    let fam = tmp("fam.json");
    let msub = tmp("msub.json");
    run(&["construct", "--family", "j", "--n", "9", "--k", "4", "--i", "2", "--out", fam.to_str().unwrap()]);

    // bar-1 part of J_2: its two blocks
    std::fs::write(&msub, r#"{"n":9,"k":4,"sets":[[2,3,4,5],[3,4,5,6]]}"#).unwrap();
    let report = tmp("t4.json");
    let out = run(&[
        "verify", "--theorem", "thm4p1",
        "--family", fam.to_str().unwrap(), "--msub", msub.to_str().unwrap(),
        "--report", report.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let envelope = read_envelope(&report);
    assert_eq!(envelope["report"]["status"], "verified");
    let digests = envelope["manifest"]["input_digests"].as_object().unwrap();
    assert_eq!(digests.len(), 2);
    for p in [&fam, &msub, &report] {
        std::fs::remove_file(p).ok();
    }
}

#[test]
fn enumerate_counts_tau2_families() {
    let out = run(&["enumerate", "--mode", "tau2", "--m", "8", "--s", "3", "--k", "4", "--count-only"]);
    assert_eq!(out.status.code(), Some(0));
    let body: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(body["report"]["count"], 5390);
    assert!(body["report"]["families"].is_null());
}

#[test]
fn replicate_chains_suite_passes() {
    let report = tmp("chains.json");
    let out = run(&["replicate", "--suite", "chains", "--report", report.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let envelope = read_envelope(&report);
    assert_eq!(envelope["report"]["status"], "verified");
    assert_eq!(envelope["report"]["items"].as_array().unwrap().len(), 5);
    std::fs::remove_file(&report).ok();
}

#[test]
fn replicate_cross_requires_seed() {
    let out = run(&["replicate", "--suite", "cross"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn unknown_flag_is_usage_error() {
    let out = run(&["bound", "--name", "hk", "--n", "9", "--k", "4", "--bogus"]);
    assert_eq!(out.status.code(), Some(3));
    let out = run(&["verify", "--theorem", "thm1", "--k", "3"]);
    assert_eq!(out.status.code(), Some(3));
}
