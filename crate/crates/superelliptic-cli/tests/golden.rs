//! Golden-file coverage for every subcommand.
//!
//! Each case runs the binary twice and demands byte-identical output on
//! both runs and byte equality with the checked-in golden file.  The
//! goldens pin both the numbers (already frozen in the library's oracle
//! suite) and the exact serialization the CLI promises to scripts.

use std::path::Path;
use std::process::{Command, Output};

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_superelliptic")
}

fn manifest(rel: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join(rel)
        .to_str()
        .expect("utf-8 path")
        .to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(bin())
        .args(args)
        .output()
        .expect("binary runs")
}

/// Runs twice, checks success and run-to-run byte stability, and returns
/// the (identical) stdout bytes.
fn stable_stdout(args: &[&str]) -> Vec<u8> {
    let first = run(args);
    let second = run(args);
    assert!(
        first.status.success(),
        "exit {:?} for {args:?}: {}",
        first.status.code(),
        String::from_utf8_lossy(&first.stderr)
    );
    assert_eq!(
        first.stdout, second.stdout,
        "output of {args:?} differs between runs"
    );
    assert_eq!(first.status.code(), second.status.code());
    first.stdout
}

fn check_golden(name: &str, args: &[&str]) {
    let expect = std::fs::read(manifest(&format!("tests/golden/{name}.golden")))
        .unwrap_or_else(|e| panic!("golden file {name}: {e}"));
    let got = stable_stdout(args);
    assert_eq!(
        got,
        expect,
        "{name}: output drifted from golden file\n--- got ---\n{}",
        String::from_utf8_lossy(&got)
    );
}

#[test]
fn genus_golden() {
    check_golden("genus", &["genus", "--n", "9", "--alpha0", "3"]);
}

#[test]
fn ranks_golden() {
    check_golden("ranks", &["ranks", "--n", "5", "--alpha0", "8"]);
}

#[test]
fn cw_golden() {
    check_golden(
        "cw",
        &["cw", "--n", "5", "--residues", "1,1,1,1,1,1,1,1,2", "--i", "2"],
    );
}

#[test]
fn invariants_golden() {
    let table = manifest("tests/data/genus2-table.json");
    check_golden("invariants", &["invariants", "--indices", &table]);
}

#[test]
fn lambda_golden() {
    check_golden(
        "lambda",
        &["lambda", "--n", "5", "--alpha0", "8", "--regime", "compact"],
    );
}

#[test]
fn slope_golden() {
    let table = manifest("tests/data/slope-5-8.json");
    check_golden(
        "slope",
        &["slope", "--indices", &table, "--regime", "compact"],
    );
}

#[test]
fn bound_golden() {
    check_golden(
        "bound",
        &["bound", "--n", "6", "--alpha0", "8", "--regime", "compact"],
    );
}

#[test]
fn lemma3101_golden() {
    check_golden("lemma3101", &["lemma3101", "--p", "5"]);
}

#[test]
fn nu_table_golden() {
    check_golden("nu-table", &["nu-table"]);
}

#[test]
fn candidates_golden() {
    check_golden("candidates", &["candidates"]);
}

#[test]
fn exclude_golden() {
    check_golden("exclude", &["exclude", "--n", "6", "--alpha0", "8"]);
}

#[test]
fn exclude_text_golden() {
    check_golden(
        "exclude-text",
        &["exclude", "--n", "5", "--alpha0", "8", "--text"],
    );
}

#[test]
fn sweep_golden() {
    check_golden("sweep", &["sweep"]);
}

#[test]
fn exit_codes_follow_the_contract() {
    // Invalid input: precondition failure maps to exit 1 with a
    // diagnostic on stderr.
    let out = run(&["genus", "--n", "9", "--alpha0", "2"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("alpha0 must be >= 3"), "stderr: {err}");
    assert!(out.stdout.is_empty());

    // Usage errors (unknown flag, missing value, bad subcommand) also
    // exit 1.
    assert_eq!(run(&["genus", "--n", "9", "--weird"]).status.code(), Some(1));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(1));
    assert_eq!(
        run(&["lambda", "--n", "5", "--alpha0", "8", "--regime", "odd"])
            .status
            .code(),
        Some(1)
    );

    // Help is not an error.
    let out = run(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("superelliptic"));
}

#[test]
fn json_and_text_modes_disagree_only_in_rendering() {
    let json = stable_stdout(&["exclude", "--n", "8", "--alpha0", "6"]);
    let text = stable_stdout(&["exclude", "--n", "8", "--alpha0", "6", "--text"]);
    let rep: serde_json::Value = serde_json::from_slice(&json).unwrap();
    let text = String::from_utf8(text).unwrap();
    // Same verdict and the same step count in both renderings.
    let verdict = rep["verdict"].as_str().unwrap();
    assert!(text.contains(&format!("verdict: {verdict}")));
    let steps = rep["steps"].as_array().unwrap();
    assert_eq!(
        text.lines().filter(|l| l.contains('[')).count(),
        steps.len()
    );
    // Conflicting mode flags are rejected as usage errors.
    assert_eq!(
        run(&["genus", "--n", "9", "--alpha0", "3", "--json", "--text"])
            .status
            .code(),
        Some(1)
    );
}
