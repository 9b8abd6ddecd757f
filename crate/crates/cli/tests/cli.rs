//! End-to-end tests for the `stern` binary: output formats, exit codes,
//! and the documented example invocations.

use std::process::{Command, Output};

fn stern(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stern"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = stern(args);
    assert!(
        out.status.success(),
        "expected success for {args:?}, stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf8 output")
}

fn exit_code(args: &[&str]) -> i32 {
    stern(args).status.code().expect("exit code")
}

fn json(args: &[&str]) -> serde_json::Value {
    serde_json::from_str(&stdout(args)).expect("valid json")
}

// ---- Polynomials ----

#[test]
fn poly_renders_low_degree_first() {
    assert_eq!(stdout(&["poly", "7"]), "1 + t + t^2\n");
    assert_eq!(stdout(&["poly", "1"]), "1\n");
}

#[test]
fn poly_zero_has_empty_coefficients() {
    let v = json(&["poly", "0", "--format", "json"]);
    assert_eq!(v["command"], "poly");
    assert_eq!(v["params"]["n"], 0);
    assert_eq!(v["result"]["coeffs"].as_array().unwrap().len(), 0);
}

#[test]
fn poly_coefficients_are_decimal_strings() {
    let v = json(&["poly", "12", "--format", "json"]);
    let coeffs: Vec<&str> = v["result"]["coeffs"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c.as_str().unwrap())
        .collect();
    assert_eq!(coeffs, ["0", "0", "1", "1"]);
}

#[test]
fn poly_csv_lists_coefficients_by_index() {
    assert_eq!(
        stdout(&["poly", "5", "--format", "csv"]),
        "i,coefficient\n0,1\n1,2\n"
    );
}

// ---- Sequences ----

#[test]
fn seq_degree_prefix() {
    assert_eq!(
        stdout(&["seq", "e", "--from", "1", "--to", "8"]),
        "0\n1\n1\n2\n1\n2\n2\n3\n"
    );
}

#[test]
fn seq_order_equals_dyadic_valuation_prefix() {
    assert_eq!(
        stdout(&["seq", "d", "--from", "1", "--to", "8"]),
        "0\n1\n0\n2\n0\n1\n0\n3\n"
    );
}

#[test]
fn seq_sign_sum_prefix() {
    assert_eq!(
        stdout(&["seq", "t", "--from", "0", "--to", "7"]),
        "1\n1\n-3\n1\n5\n-7\n-3\n17\n"
    );
}

#[test]
fn seq_first_power_sum_is_powers_of_ten() {
    assert_eq!(
        stdout(&["seq", "sk", "--k", "1", "--from", "0", "--to", "3"]),
        "1\n10\n100\n1000\n"
    );
}

#[test]
fn seq_values_are_strings_in_json() {
    let v = json(&["seq", "s", "--from", "0", "--to", "4", "--format", "json"]);
    let values: Vec<&str> = v["result"]["values"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c.as_str().unwrap())
        .collect();
    assert_eq!(values, ["0", "1", "1", "2", "1"]);
}

#[test]
fn seq_rejects_unknown_names() {
    assert_eq!(exit_code(&["seq", "nope", "--from", "1", "--to", "2"]), 2);
}

#[test]
fn seq_sk_requires_the_exponent() {
    assert_eq!(exit_code(&["seq", "sk", "--from", "0", "--to", "3"]), 2);
}

#[test]
fn seq_rejects_empty_ranges() {
    assert_eq!(exit_code(&["seq", "e", "--from", "5", "--to", "1"]), 2);
}

// ---- Tables ----

#[test]
fn table_hn_three_is_a_binomial_row() {
    assert_eq!(stdout(&["table", "hn", "3"]), "1,3,3,1\n");
}

#[test]
fn table_ecount_matches_hn() {
    assert_eq!(stdout(&["table", "ecount", "5"]), stdout(&["table", "hn", "5"]));
}

#[test]
fn table_auxpoly_lists_known_rows() {
    let out = stdout(&["table", "auxpoly", "16"]);
    assert!(out.contains("5\t1 + t\n"));
    assert!(out.contains("11\t1 + 2t + t^2\n"));
    assert!(out.contains("16\t0"));
}

#[test]
fn table_maxcoeff_over_the_cap_exits_three() {
    assert_eq!(exit_code(&["table", "maxcoeff", "25"]), 3);
}

#[test]
fn table_rejects_unknown_names() {
    assert_eq!(exit_code(&["table", "nope", "3"]), 2);
}

// ---- Checks ----

#[test]
fn check_passes_and_exits_zero() {
    let out = stern(&["check", "d-eq-nu", "--max", "512"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("passed=512 failed=0"), "got: {text}");
}

#[test]
fn check_report_json_shape() {
    let v = json(&["check", "three-term", "--max", "64", "--format", "json"]);
    assert_eq!(v["result"]["check_name"], "three-term");
    assert_eq!(v["result"]["passed"], 64);
    assert_eq!(v["result"]["failed"], 0);
    assert!(v["result"]["first_failure"].is_null());
}

#[test]
fn check_csv_has_a_header_row() {
    let out = stdout(&["check", "urbiha", "--max", "64", "--format", "csv"]);
    let mut lines = out.lines();
    assert_eq!(
        lines.next(),
        Some("check_name,range,passed,failed,first_failure")
    );
    assert_eq!(lines.next(), Some("urbiha,1 <= m <= 64,64,0,"));
}

#[test]
fn check_f2_algebraic_reports_both_quartics() {
    let v = json(&["check", "f2-algebraic", "--format", "json"]);
    assert_eq!(v["result"]["derived_ok"], true);
    assert_eq!(v["result"]["paper_form_ok"], false);
    assert_eq!(v["result"]["failed"], 0);
}

#[test]
fn check_functional_eq_validates_order() {
    assert_eq!(exit_code(&["check", "functional-eq", "--order", "4"]), 2);
    assert_eq!(exit_code(&["check", "functional-eq", "--order", "8192"]), 3);
}

#[test]
fn check_rejects_unknown_names() {
    assert_eq!(exit_code(&["check", "nope"]), 2);
}

#[test]
fn check_output_is_byte_stable() {
    let args = ["check", "gk-closed", "--max", "8", "--format", "json"];
    assert_eq!(stdout(&args), stdout(&args));
}

#[test]
fn check_all_runs_every_check_and_exits_zero() {
    let out = stern(&["check", "all"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let reports = text
        .lines()
        .filter(|l| l.starts_with("check "))
        .count();
    assert_eq!(reports, 16, "got: {text}");
    assert!(!text.contains("first_failure"), "got: {text}");
}

// ---- Explorers ----

#[test]
fn explore_maxcoeff_smallest_case_is_one_matching_row() {
    assert_eq!(stdout(&["explore", "maxcoeff", "--max-n", "2"]), "(2,1,1,true)\n");
}

#[test]
fn explore_maxcoeff_reports_rows_without_failing() {
    let v = json(&["explore", "maxcoeff", "--max-n", "14", "--format", "json"]);
    assert_eq!(v["result"]["rows"].as_array().unwrap().len(), 13);
    for row in v["result"]["rows"].as_array().unwrap() {
        assert_eq!(row["match"], true);
    }
    assert_eq!(v["result"]["findings"].as_array().unwrap().len(), 0);
}

#[test]
fn explore_transcendence_default_probe_supports() {
    assert_eq!(
        stdout(&["explore", "transcendence", "--k", "2", "--max-deg", "4"]),
        "supports=true\n"
    );
}

#[test]
fn explore_transcendence_validates_inconclusive_orders() {
    assert_eq!(
        exit_code(&["explore", "transcendence", "--k", "2", "--max-deg", "4", "--order", "10"]),
        2
    );
}

#[test]
fn explore_rejects_unknown_names() {
    assert_eq!(exit_code(&["explore", "nope"]), 2);
}
