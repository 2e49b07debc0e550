//! End-to-end tests of the `stirling-lambda` binary: output bytes, exit
//! codes, and determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stirling-lambda"))
        .args(args)
        .output()
        .expect("failed to launch binary")
}

fn stdout_of(output: &Output) -> &str {
    std::str::from_utf8(&output.stdout).expect("stdout is not utf-8")
}

#[test]
fn table_csv_at_lambda_zero() {
    let out = run(&[
        "table", "--kind", "s2", "--n-max", "2", "--lambda", "0", "--format", "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout_of(&out),
        "n,k,value\n0,0,1\n1,0,0\n1,1,1\n2,0,0\n2,1,1\n2,2,1\n"
    );
}

#[test]
fn table_text_symbolic_entry() {
    let out = run(&["table", "--kind", "s2", "--n-max", "2", "--format", "text"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).contains("(2,1) 1 - l"));
}

#[test]
fn table_single_row() {
    let out = run(&["table", "--kind", "s1", "--n-max", "0"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out), "(0,0) 1\n");
}

#[test]
fn table_json_shape() {
    let out = run(&["table", "--kind", "s1", "--n-max", "2", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(stdout_of(&out)).unwrap();
    assert_eq!(doc["kind"], "s1");
    assert_eq!(doc["n_max"], 2);
    assert!(doc["lambda"].is_null());
    // S1(2,1) = -1 + l
    assert_eq!(doc["rows"][2][1][0], "-1");
    assert_eq!(doc["rows"][2][1][1], "1");
    // zero entries serialize as empty coefficient arrays
    assert_eq!(doc["rows"][1][0].as_array().unwrap().len(), 0);
}

#[test]
fn table_json_evaluated() {
    let out = run(&[
        "table", "--kind", "s2", "--n-max", "3", "--lambda", "1/2", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(stdout_of(&out)).unwrap();
    assert_eq!(doc["lambda"], "1/2");
    // S2(2,1) = 1 - l -> 1/2
    assert_eq!(doc["rows"][2][1], "1/2");
}

#[test]
fn table_rejects_bad_lambda() {
    let out = run(&["table", "--kind", "s2", "--n-max", "2", "--lambda", "1/0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn table_safety_cap() {
    let out = run(&["table", "--kind", "s2", "--n-max", "201"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn normal_order_words() {
    let out = run(&["normal-order", "a a+"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out), "1 + (a+)^1 a^1\n");

    let out = run(&["normal-order", "a+ a a+ a"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out), "(a+)^1 a^1 + (a+)^2 a^2\n");
}

#[test]
fn normal_order_rejects_bad_token() {
    let out = run(&["normal-order", "b"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn normal_order_json() {
    let out = run(&["normal-order", "a a+", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(stdout_of(&out)).unwrap();
    assert_eq!(doc["terms"][0]["i"], 0);
    assert_eq!(doc["terms"][0]["j"], 0);
    assert_eq!(doc["terms"][0]["coeff"]["coeffs"][0], "1");
    assert_eq!(doc["terms"][1]["i"], 1);
    assert_eq!(doc["terms"][1]["j"], 1);
}

#[test]
fn verify_single_check_degenerate_range() {
    let out = run(&["verify", "--theorem", "t7", "--k-max", "0"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).starts_with("t7: pass"));
}

#[test]
fn verify_unknown_theorem() {
    let out = run(&["verify", "--theorem", "t99"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_rejects_csv() {
    let out = run(&["verify", "--theorem", "t3", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_full_suite() {
    let out = run(&["verify", "--theorem", "all", "--k-max", "10"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    for id in [
        "prop1", "t3", "t4", "t5", "t6", "t7", "t8", "t9", "t10", "t11", "eq14", "eq17",
        "eq19", "eq23", "gf", "altsum",
    ] {
        assert!(text.contains(&format!("{id}: pass")), "missing {id} in:\n{text}");
    }
}

#[test]
fn verify_json_is_deterministic() {
    let first = run(&["verify", "--theorem", "prop1", "--k-max", "6", "--format", "json"]);
    let second = run(&["verify", "--theorem", "prop1", "--k-max", "6", "--format", "json"]);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    let doc: serde_json::Value = serde_json::from_str(stdout_of(&first)).unwrap();
    assert_eq!(doc[0]["id"], "prop1");
    assert_eq!(doc[0]["status"], "pass");
}

#[test]
fn table_output_is_deterministic() {
    let first = run(&["table", "--kind", "s2", "--n-max", "8"]);
    let second = run(&["table", "--kind", "s2", "--n-max", "8"]);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn gf_command() {
    let out = run(&["gf", "--k-max", "6"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).lines().all(|line| line.contains("pass")));

    let out = run(&["gf", "--k-max", "6", "--order", "4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn limit_tables() {
    let out = run(&["limit", "--kind", "s2", "--n-max", "3", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).contains("3,2,3\n"));

    let out = run(&["limit", "--kind", "s1", "--n-max", "3", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).contains("3,2,-3\n"));
}

#[test]
fn output_to_file() {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("table_out.csv");
    let out = run(&[
        "table", "--kind", "s2", "--n-max", "2", "--lambda", "0", "--format", "csv",
        "--output", path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(written, "n,k,value\n0,0,1\n1,0,0\n1,1,1\n2,0,0\n2,1,1\n2,2,1\n");
}

#[test]
fn unwritable_output_is_io_error() {
    let out = run(&[
        "table", "--kind", "s2", "--n-max", "2",
        "--output", "/nonexistent-dir/table.txt",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn missing_subcommand_is_usage_error() {
    let out = run(&[]);
    assert_eq!(out.status.code(), Some(2));
}
