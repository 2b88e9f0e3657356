//! End-to-end tests against the built binary.

use std::process::{Command, Output};

fn horadam(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_horadam"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 stdout")
}

fn assert_exit(output: &Output, code: i32) {
    assert_eq!(
        output.status.code(),
        Some(code),
        "stdout: {}\nstderr: {}",
        stdout(output),
        String::from_utf8_lossy(&output.stderr)
    );
}

#[test]
fn eval_walks_backward() {
    let out = horadam(&["eval", "--seq", "fibonacci", "-n", "-7"]);
    assert_exit(&out, 0);
    assert_eq!(stdout(&out).trim(), "13");
}

#[test]
fn eval_with_explicit_coefficients_and_binet() {
    let out = horadam(&[
        "eval", "--f", "1", "--g", "1", "--h", "0", "--k", "1", "-n", "10", "--method", "binet",
    ]);
    assert_exit(&out, 0);
    assert_eq!(stdout(&out).trim(), "55");
}

#[test]
fn eval_auto_cross_checks_every_method() {
    let out = horadam(&["eval", "--seq", "pell", "-n", "6", "--method", "auto"]);
    assert_exit(&out, 0);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("70"));
    assert!(text.contains("case: non-degenerate"));
    for method in ["iter", "fast", "binet"] {
        assert!(
            text.contains(&format!("{method}: 70 (agree)")),
            "missing {method} in:\n{text}"
        );
    }
}

#[test]
fn eval_binet_on_degenerate_spec_is_a_domain_error() {
    let out = horadam(&[
        "eval", "--f", "2", "--g", "-1", "--h", "1", "--k", "3", "-n", "4", "--method", "binet",
    ]);
    assert_exit(&out, 1);
    assert!(String::from_utf8_lossy(&out.stderr).contains("discriminant"));
}

#[test]
fn table_renders_csv_rows() {
    let out = horadam(&[
        "table", "--seq", "lucas", "--from", "0", "--to", "5", "--format", "csv",
    ]);
    assert_exit(&out, 0);
    assert_eq!(stdout(&out), "n,value\n0,2\n1,1\n2,3\n3,4\n4,7\n5,11\n");
}

#[test]
fn table_spans_negative_indices() {
    let out = horadam(&["table", "--seq", "fibonacci", "--from", "-3", "--to", "3"]);
    assert_exit(&out, 0);
    let text = stdout(&out);
    let values: Vec<&str> = text
        .lines()
        .map(|l| l.split_whitespace().nth(1).unwrap())
        .collect();
    assert_eq!(values, ["2", "-1", "1", "0", "1", "1", "2"]);
}

#[test]
fn table_single_index_is_one_row() {
    let out = horadam(&["table", "--seq", "fibonacci", "--from", "0", "--to", "0"]);
    assert_exit(&out, 0);
    assert_eq!(stdout(&out).trim(), "0 0");
}

#[test]
fn table_rejects_inverted_range() {
    let out = horadam(&["table", "--seq", "fibonacci", "--from", "3", "--to", "1"]);
    assert_exit(&out, 2);
}

#[test]
fn symbolic_specs_require_a_sample_point() {
    let out = horadam(&["eval", "--seq", "fibonacci_poly", "-n", "4"]);
    assert_exit(&out, 2);

    let out = horadam(&["eval", "--seq", "fibonacci_poly", "-n", "4", "--at", "2"]);
    assert_exit(&out, 0);
    assert_eq!(stdout(&out).trim(), "12"); // 2³ + 2·2

    let out = horadam(&[
        "eval", "--f", "0,1", "--g", "1", "--h", "0", "--k", "1", "-n", "4", "--at", "2",
    ]);
    assert_exit(&out, 0);
    assert_eq!(stdout(&out).trim(), "12");
}

#[test]
fn unknown_sequence_is_a_usage_error() {
    let out = horadam(&["eval", "--seq", "nope", "-n", "1"]);
    assert_exit(&out, 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("valid names"));
}

#[test]
fn verify_passes_and_reproduces_byte_identically() {
    let args = [
        "verify", "--suite", "cassini", "--trials", "200", "--seed", "42", "--nmax", "10",
    ];
    let first = horadam(&args);
    assert_exit(&first, 0);
    assert!(stdout(&first).contains("failures=0 PASS"));
    let second = horadam(&args);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn verify_all_suites_small_population() {
    let out = horadam(&[
        "verify", "--suite", "all", "--trials", "5", "--seed", "1", "--nmax", "5",
    ]);
    assert_exit(&out, 0);
    let text = stdout(&out);
    for suite in [
        "matrix", "cassini", "dispatch", "catalog", "binet", "diag", "sums", "addition",
    ] {
        assert!(text.contains(&format!("suite {suite}:")), "{text}");
    }
    assert!(text.contains("overall: PASS"));
}

#[test]
fn verify_rejects_unknown_suite() {
    let out = horadam(&["verify", "--suite", "bogus", "--trials", "1"]);
    assert_exit(&out, 2);
}

#[test]
fn bench_reports_agreement_at_the_seed() {
    let out = horadam(&[
        "bench", "--seq", "fibonacci", "-n", "0", "--methods", "iter,fast",
    ]);
    assert_exit(&out, 0);
    let text = stdout(&out);
    assert!(text.contains("method=iter"));
    assert!(text.contains("method=fast"));
    assert!(text.contains("agree: yes"));
}

#[test]
fn bench_reports_the_digit_count_at_large_indices() {
    let out = horadam(&[
        "bench", "--seq", "fibonacci", "-n", "100000", "--methods", "fast",
    ]);
    assert_exit(&out, 0);
    let text = stdout(&out);
    assert!(text.contains("digits=20899"), "{text}");
    assert!(text.contains("matrix_muls="));
}

#[test]
fn bench_skips_inapplicable_methods() {
    let out = horadam(&[
        "bench", "--f", "2", "--g", "-1", "--h", "1", "--k", "3", "-n", "10", "--methods",
        "iter,fast,binet",
    ]);
    assert_exit(&out, 0);
    assert!(stdout(&out).contains("method=binet skipped: degenerate discriminant"));
}

#[test]
fn json_outputs_round_trip_byte_identically() {
    let cases: Vec<Vec<&str>> = vec![
        vec!["eval", "--seq", "fibonacci", "-n", "10", "--format", "json"],
        vec![
            "eval", "--seq", "pell", "-n", "-4", "--method", "auto", "--format", "json",
        ],
        vec![
            "table", "--seq", "jacobsthal", "--from", "-2", "--to", "4", "--format", "json",
        ],
        vec![
            "verify", "--suite", "binet", "--trials", "3", "--nmax", "3", "--format", "json",
        ],
        vec![
            "bench", "--seq", "pell", "-n", "40", "--methods", "fast", "--format", "json",
        ],
        vec!["catalog", "--format", "json"],
    ];
    for args in cases {
        let out = horadam(&args);
        assert_exit(&out, 0);
        let text = stdout(&out);
        let parsed: serde_json::Value = serde_json::from_str(text.trim()).expect("valid JSON");
        assert_eq!(
            parsed.to_string(),
            text.trim(),
            "round trip changed bytes for {args:?}"
        );
    }
}

#[test]
fn eval_json_matches_the_documented_schema() {
    let out = horadam(&["eval", "--seq", "fibonacci", "-n", "10", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(doc["value"], "55");
    assert_eq!(doc["n"], 10);
    assert_eq!(doc["method"], "fast");
    assert_eq!(doc["case"], "non-degenerate");
    assert_eq!(doc["spec"]["f"], "1");
    assert_eq!(doc["spec"]["h"], "0");
}

#[test]
fn catalog_lists_all_eleven() {
    let out = horadam(&["catalog", "--format", "csv"]);
    assert_exit(&out, 0);
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 12); // header + 11 entries
    assert!(text.contains("tchebychev_t,2*x,-1,1,x,true"));
    assert!(text.contains("pell_lucas,2,1,2,2,false"));
}
