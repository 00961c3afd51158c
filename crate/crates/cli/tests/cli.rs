//! End-to-end runs of the binary.

use std::process::{Command, Output};

use serde_json::Value;

fn cuemom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cuemom")).args(args).output().expect("binary runs")
}

fn json_of(args: &[&str]) -> Value {
    let out = cuemom(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn first_diagonal_moment() {
    let v = json_of(&["moment", "--deriv", "2", "--M", "1", "--k", "1", "--json"]);
    assert_eq!(v["value"], "1/80");
    assert_eq!(v["barnes_ratio"], "1");
    assert_eq!(v["R"], "1/80");
    assert_eq!(v["schema"], "1");
}

#[test]
fn taylor_coefficients_for_k_one() {
    let v = json_of(&["tau-series", "--k", "1", "--terms", "3", "--json"]);
    assert_eq!(v["a"], serde_json::json!(["1", "1/2", "1/12", "1/144"]));
}

#[test]
fn eta_half_coefficients() {
    let v = json_of(&["eta", "--k", "1", "--terms", "3", "--json"]);
    assert_eq!(v["c"][2], "1/192");
    assert_eq!(v["c"][3], "-1/3072");
}

#[test]
fn third_order_and_first_order_moments() {
    let v = json_of(&["moment", "--deriv", "3", "--M", "1", "--k", "1", "--json"]);
    assert_eq!(v["value"], "1/448");
    let v = json_of(&["moment", "--deriv", "1", "--M", "1", "--k", "1", "--json"]);
    assert_eq!(v["value"], "1/12");
    let v = json_of(&["moment", "--deriv", "1", "--M", "1/2", "--k", "1", "--json"]);
    assert_eq!(v["M"], "1/2");
}

#[test]
fn symbolic_f_one() {
    let v = json_of(&["f-expr", "--l", "1", "--json"]);
    assert_eq!(v["k"], "symbolic");
    assert_eq!(v["terms"]["1"]["0"], "-2*k");
    let v = json_of(&["f-expr", "--l", "3", "--k", "2", "--route", "truncated", "--json"]);
    assert_eq!(v["route"], "truncated");
}

#[test]
fn matrix_output() {
    let v = json_of(&["matrix", "--kind", "A", "--l", "2", "--json"]);
    assert_eq!(v["entries"], serde_json::json!([["-1", "-1"], ["1", "-1"]]));
    let v = json_of(&["matrix", "--kind", "C3~", "--l", "4", "--k", "2", "--json"]);
    assert_eq!(v["kind"], "C3~");
}

#[test]
fn reconstructs_r_one() {
    let v = json_of(&["r-reconstruct", "--order", "2", "--M", "1", "--k-from", "1", "--k-to", "6", "--json"]);
    assert_eq!(v["numerator"], serde_json::json!(["1/64"]));
    assert_eq!(v["denominator"], serde_json::json!(["-3/4", "1", "1"]));
}

#[test]
fn oracle_series() {
    let v = json_of(&["oracle", "--k", "1", "--l", "1", "--trunc", "8", "--json"]);
    assert_eq!(v["series"]["coeffs"]["3"], "1/6");
    let v = json_of(&["oracle", "--k", "2", "--diagram", "1", "--trunc", "8", "--json"]);
    assert_eq!(v["series"]["coeffs"]["5"], "-1/24");
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["moment", "--deriv", "2", "--M", "3", "--k", "2"][..],
        &["moment", "--deriv", "4", "--M", "1", "--k", "1"],
        &["moment", "--deriv", "2", "--M", "1/2", "--k", "1"],
        &["tau-series", "--k", "1"],
        &["matrix", "--kind", "Q", "--l", "2"],
        &["frobnicate"],
    ] {
        assert_eq!(cuemom(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn computation_errors_exit_one() {
    // too few samples for the requested degrees
    let out = cuemom(&["r-reconstruct", "--order", "2", "--M", "1", "--k-from", "1", "--k-to", "3", "--degrees", "2,4"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn output_is_deterministic() {
    let args = ["f-expr", "--l", "3", "--json"];
    assert_eq!(cuemom(&args).stdout, cuemom(&args).stdout);
}

#[test]
fn fast_suite_passes() {
    let out = cuemom(&["verify", "--suite", "fast"]);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(out.status.success(), "{text}");
    assert!(text.contains("11/11 checks passed"));
}

#[test]
fn injected_failure_is_reported() {
    let out = cuemom(&["verify", "--suite", "fast", "--seeds", "1", "--inject-failure", "--json"]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let failed: Vec<&str> =
        v["checks"].as_array().unwrap().iter().filter(|c| c["pass"] == false).map(|c| c["name"].as_str().unwrap()).collect();
    assert_eq!(failed, vec!["injected"]);
    assert_eq!(v["total"], 12);
}
