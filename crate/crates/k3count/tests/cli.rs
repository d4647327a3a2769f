//! End-to-end tests of the command-line binary: document shapes, byte
//! determinism, and exit codes.

use std::process::{Command, Output};

fn k3count(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_k3count"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 output")
}

#[test]
fn verify_json_reports_all_checks_passing() {
    let out = k3count(&["verify", "--order", "64", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(doc["order"], 64);
    let checks = doc["checks"].as_array().expect("checks array");
    assert_eq!(checks.len(), 12);
    for check in checks {
        assert_eq!(check["status"], "pass", "{}", check["id"]);
        assert_eq!(check["first_failing_exponent"], serde_json::Value::Null);
        assert_eq!(check["order_certified"], 64);
    }
    let ids: Vec<&str> = checks
        .iter()
        .map(|c| c["id"].as_str().unwrap())
        .collect();
    assert_eq!(
        ids,
        ["C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9", "C10", "C11", "C12"]
    );
}

#[test]
fn verify_check_filter() {
    let out = k3count(&["verify", "--order", "16", "--check", "C3", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(
        lines[0],
        "id,description,paper_equation,status,order_certified,first_failing_exponent"
    );
    assert!(lines[1].starts_with("C3,"));
    assert!(lines[1].ends_with(",pass,16,"));

    let bad = k3count(&["verify", "--order", "16", "--check", "C99"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn table_csv_has_the_documented_rows() {
    let out = k3count(&["table", "--max-e", "2", "--order", "8", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "d,e,N1_index1,N1_index2,agree\n1,1,1,1,true\n5,2,49440,49440,true\n"
    );
}

#[test]
fn series_g2_coefficients() {
    let out = k3count(&["series", "--name", "g2", "--order", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(doc["name"], "g2");
    let coeffs: Vec<&str> = doc["coeffs"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c.as_str().unwrap())
        .collect();
    assert_eq!(coeffs, ["-1/24", "1", "3", "4", "7"]);
}

#[test]
fn series_family_and_unknown_names() {
    let out = k3count(&["series", "--name", "m1-theorem", "--order", "4", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "n,coeff\n0,0\n1,0\n2,3\n3,480\n4,49500\n");

    let bad = k3count(&["series", "--name", "nonsense", "--order", "4"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn reduce_prints_the_closed_form() {
    for family in ["a", "b"] {
        let out = k3count(&["reduce", "--target", "trr", "--family", family]);
        assert_eq!(out.status.code(), Some(0));
        let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
        assert_eq!(doc["gw1pt"], "-2/3");
        assert_eq!(doc["gw0"], "1/9*d^2 - 4/9*d + 4/9");
        assert_eq!(doc["irreducible"].as_array().unwrap().len(), 0);
    }
    let divisor_demo = k3count(&["reduce", "--target", "gw1-f-f-pt"]);
    let doc: serde_json::Value =
        serde_json::from_str(&stdout(&divisor_demo)).expect("valid json");
    assert_eq!(doc["gw1pt"], "4");
    assert_eq!(doc["gw0"], "0");

    let csv = k3count(&["reduce", "--target", "pf-trr3", "--format", "csv"]);
    assert_eq!(
        stdout(&csv),
        "field,value\ngw1pt,0\ngw0,1/9*d^2 - 4/9*d + 4/9\nirreducible,\n"
    );
}

#[test]
fn bench_small_order_spot_checks() {
    let out = k3count(&["bench", "--order", "64", "--algo", "fast", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("n,coeff,matches_naive\n"));
    for line in text.lines().skip(1) {
        assert!(line.ends_with(",true"), "{line}");
    }
    let naive = k3count(&["bench", "--order", "64", "--algo", "naive", "--format", "csv"]);
    assert_eq!(stdout(&naive), text);
}

#[test]
fn output_is_byte_deterministic() {
    for args in [
        &["verify", "--order", "16"][..],
        &["table", "--max-e", "3", "--order", "16", "--format", "csv"][..],
        &["series", "--name", "f-combo", "--order", "12"][..],
        &["reduce"][..],
    ] {
        let first = k3count(args);
        let second = k3count(args);
        assert_eq!(stdout(&first), stdout(&second), "{args:?}");
    }
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(k3count(&["--unknown-flag"]).status.code(), Some(2));
    assert_eq!(k3count(&["verify", "--order", "4"]).status.code(), Some(2));
    assert_eq!(
        k3count(&["table", "--max-e", "32", "--order", "64"]).status.code(),
        Some(2)
    );
    assert_eq!(
        k3count(&["reduce", "--target", "nonsense"]).status.code(),
        Some(2)
    );
    // diagnostics go to stderr, stdout stays empty
    let bad = k3count(&["verify", "--order", "4"]);
    assert!(bad.stdout.is_empty());
    assert!(!bad.stderr.is_empty());
}

#[test]
fn help_and_version_exit_0() {
    assert_eq!(k3count(&["--help"]).status.code(), Some(0));
    assert_eq!(k3count(&["--version"]).status.code(), Some(0));
}
