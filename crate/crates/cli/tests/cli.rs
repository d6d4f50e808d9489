use std::process::{Command, Output};

use serde_json::Value;

fn bifib(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bifib"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_str(&stdout(out)).expect("valid JSON")
}

#[test]
fn seq_plain_lists_every_index() {
    let out = bifib(&[
        "seq", "--a", "1", "--b", "1", "--kind", "q", "--from", "0", "--to", "10", "--format",
        "plain",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let lines: Vec<_> = stdout(&out).lines().map(str::to_owned).collect();
    assert_eq!(lines.len(), 11);
    assert_eq!(lines[0], "0 0");
    assert_eq!(lines[10], "10 55");
}

#[test]
fn seq_json_scalar_schema() {
    let out = bifib(&[
        "seq", "--a", "2", "--b", "3", "--kind", "l", "--from", "-3", "--to", "1", "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["a"], "2");
    assert_eq!(doc["b"], "3");
    assert_eq!(doc["kind"], "l");
    let entries = doc["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 5);
    assert_eq!(entries[0]["n"], -3);
    assert_eq!(entries[0]["value"], "-18");
    assert_eq!(entries[3]["value"], "2");
    assert!(entries.iter().all(|e| e["value"].is_string()));
}

#[test]
fn seq_json_octonion_schema() {
    let out = bifib(&[
        "seq", "--a", "1/2", "--b", "-3", "--kind", "O", "--from", "0", "--to", "2", "--format",
        "json",
    ]);
    let doc = json(&out);
    let coords = doc["entries"][0]["coords"].as_array().unwrap();
    assert_eq!(coords.len(), 8);
    assert_eq!(coords[0], "0");
    assert_eq!(coords[1], "1");
    assert_eq!(coords[2], "1/2");
    assert_eq!(doc["entries"][2]["n"], 2);
}

#[test]
fn seq_rejects_bad_input() {
    for (args, flag) in [
        (vec!["seq", "--a", "1", "--b", "0", "--to", "3"], "--b"),
        (vec!["seq", "--a", "0.5", "--b", "1", "--to", "3"], "--a"),
        (vec!["seq", "--a", "1", "--b", "1/0", "--to", "3"], "--b"),
        (
            vec!["seq", "--a", "1", "--b", "1", "--from", "4", "--to", "3"],
            "--from",
        ),
        (
            vec!["seq", "--a", "1", "--b", "1", "--kind", "x", "--to", "3"],
            "--kind",
        ),
    ] {
        let out = bifib(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(stderr(&out).contains(flag), "{args:?}: {}", stderr(&out));
    }
}

#[test]
fn verify_needs_both_parameters() {
    let out = bifib(&["verify", "--a", "1", "--suite", "sums"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--b"));
}

#[test]
fn verify_rejects_unknown_suite_and_zero_bounds() {
    let out = bifib(&["verify", "--a", "1", "--b", "1", "--suite", "everything"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--suite"));
    let out = bifib(&["verify", "--a", "1", "--b", "1", "--n-max", "0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--n-max"));
}

#[test]
fn verify_passing_suite_exits_zero() {
    let out = bifib(&[
        "verify", "--a", "-1/2", "--b", "5", "--suite", "sums", "--n-max", "12",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["pass"], true);
    assert_eq!(doc["grid"], serde_json::json!([{"a": "-1/2", "b": "5"}]));
    let checks = doc["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 36);
    let first = &checks[0];
    assert_eq!(first["id"], "sum_all");
    assert_eq!(
        first["params"],
        serde_json::json!({"a": "-1/2", "b": "5", "n": 1})
    );
    assert!(first.get("detail").is_none());
}

#[test]
fn verify_identity_failure_exits_one_with_report() {
    let out = bifib(&[
        "verify", "--a", "2", "--b", "3", "--suite", "catalan", "--n-max", "3", "--r-max", "1",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let doc = json(&out);
    assert_eq!(doc["pass"], false);
    let checks = doc["checks"].as_array().unwrap();
    assert!(checks
        .iter()
        .any(|c| c["id"] == "cassini" && c["pass"] == false && c["detail"].is_string()));
    assert!(checks
        .iter()
        .filter(|c| c["id"] == "cassini_beta_first")
        .all(|c| c["pass"] == true));
}

#[test]
fn verify_default_grid_is_used_without_parameters() {
    let out = bifib(&[
        "verify", "--suite", "algebra", "--n-max", "4", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["grid"].as_array().unwrap().len(), 30);
    assert_eq!(doc["grid"][3], serde_json::json!({"a": "1", "b": "5"}));
}

#[test]
fn verify_plain_and_csv() {
    let args = [
        "verify", "--a", "2", "--b", "-2", "--suite", "binet", "--n-max", "2",
    ];
    let plain = stdout(&bifib(&[&args[..], &["--format", "plain"]].concat()));
    assert!(plain.contains("skip fib_binet a=2 b=-2 (skipped: degenerate)"));
    assert!(
        plain.ends_with("PASS: 13 checks, 0 failed, 3 skipped\n"),
        "{plain}"
    );
    let csv = stdout(&bifib(&[&args[..], &["--format", "csv"]].concat()));
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("id,suite,a,b,n,r,order,status,detail"));
    assert_eq!(
        lines.next(),
        Some("fib_binet,binet,2,-2,,,,skip,skipped: degenerate")
    );
}

#[test]
fn genfun_check_reports_context_and_order() {
    let out = bifib(&["genfun-check", "--a", "1/2", "--b", "2", "--order", "16"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["context"], serde_json::json!({"a": "1/2", "b": "2"}));
    assert_eq!(doc["order"], 16);
    assert_eq!(doc["pass"], true);
    assert!(doc.get("first_mismatch_degree").is_none());
    assert!(doc["checks"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["pass"] == true));
}

#[test]
fn genfun_check_order_is_validated() {
    let out = bifib(&["genfun-check", "--a", "2", "--b", "3", "--order", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--order"));
}

#[test]
fn output_is_deterministic() {
    let args = [
        "verify", "--suite", "prop1", "--n-max", "6", "--format", "json",
    ];
    assert_eq!(stdout(&bifib(&args)), stdout(&bifib(&args)));
}
