//! End-to-end tests of the `steklov` binary: JSON/CSV/SVG surfaces,
//! exit codes, and byte-stable determinism.

use std::process::{Command, Output};

fn steklov(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_steklov"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json_field(text: &str, key: &str) -> f64 {
    let value: serde_json::Value = serde_json::from_str(text).expect("valid JSON");
    value[key].as_f64().unwrap_or_else(|| panic!("field {key}"))
}

#[test]
fn shell_matches_closed_forms() {
    let out = steklov(&["shell", "--n", "2", "--r1", "1", "--r2", "2"]);
    assert!(out.status.success());
    let sigma = json_field(&stdout(&out), "sigma1");
    assert!((sigma - 1.0 / (2.0 * 2.0_f64.ln())).abs() < 1e-14);

    let out = steklov(&["shell", "--n", "3", "--r1", "1", "--r2", "2"]);
    assert_eq!(json_field(&stdout(&out), "sigma1"), 0.5);
}

#[test]
fn shell_rejects_bad_radii_with_a_message() {
    let out = steklov(&["shell", "--n", "2", "--r1", "2", "--r2", "1"]);
    assert!(!out.status.success());
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("0 < R1 < R2"), "message names the precondition: {err}");
}

#[test]
fn shell_parses_scientific_notation_exactly() {
    let out = steklov(&["shell", "--n", "2", "--r1", "1e-5", "--r2", "1"]);
    assert!(out.status.success());
    let sigma = json_field(&stdout(&out), "sigma1");
    let expected = 1.0 / (1e-5_f64.recip().ln());
    assert_eq!(sigma, expected, "1e-5 must parse to the exact f64");
}

#[test]
fn solve_reports_the_spec_fields() {
    let out = steklov(&[
        "solve",
        "--body",
        r#"{"type":"fourier","a0":2.0,"cos":[],"sin":[],"M":256}"#,
        "--r1",
        "1",
        "--orders",
        "8",
        "--quad",
        "256",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    for key in ["sigma1", "N", "M", "b_condition", "residual"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    let sigma = v["sigma1"].as_f64().unwrap();
    assert!((sigma - 1.0 / (2.0 * 2.0_f64.ln())).abs() < 1e-12);
    assert_eq!(v["N"].as_u64().unwrap(), 8);
    assert_eq!(v["M"].as_u64().unwrap(), 256);
}

#[test]
fn solve_rejects_a_hole_that_touches_the_boundary() {
    let out = steklov(&[
        "solve",
        "--body",
        r#"{"type":"ellipse","a":1.0,"b":1.2}"#,
        "--r1",
        "1.0",
    ]);
    assert!(!out.status.success());
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("inner ball not contained"), "{err}");
}

#[test]
fn verify_main_writes_a_well_formed_deterministic_csv() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sweep.csv");
    let args = [
        "verify-main",
        "--seed",
        "42",
        "--samples",
        "15",
        "--r1",
        "1",
        "--out",
        path.to_str().unwrap(),
    ];
    let out = steklov(&args);
    assert!(out.status.success());
    let first = std::fs::read(&path).unwrap();
    let text = String::from_utf8(first.clone()).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "seed,R1,volume_omega,R2_equiv,sigma1_num,sigma1_shell,rayleigh_w,grad_energy_omega,grad_energy_shell,D_omega,D_shell,inside_rbar,pass_main,pass_hl,pass_key"
    );
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 15);
    for row in &rows {
        assert_eq!(row.split(',').count(), 15);
        assert!(row.ends_with("true,true,true,true") || row.contains(",true,"));
        let seed: u64 = row.split(',').next().unwrap().parse().unwrap();
        assert!((42..57).contains(&seed));
    }
    // byte-identical rerun
    let out = steklov(&args);
    assert!(out.status.success());
    assert_eq!(std::fs::read(&path).unwrap(), first);
}

#[test]
fn verify_main_explore_mode_probes_beyond_rbar() {
    let out = steklov(&[
        "verify-main",
        "--seed",
        "7",
        "--samples",
        "3",
        "--r1",
        "1",
        "--rmax",
        "12.3",
        "--explore",
    ]);
    assert!(out.status.success(), "explore mode never asserts");
    let text = stdout(&out);
    assert!(text.lines().count() == 4, "header + 3 rows on stdout");
    assert!(text.contains(",false,"), "records flag inside_rbar = false");
}

#[test]
fn counterexample_reproduces_the_reference_configuration() {
    let out = steklov(&["counterexample"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["key_inequality_violated"].as_bool(), Some(true));
    assert_eq!(v["references_swapped"].as_bool(), Some(true));
    let d_ellipse = v["d_ellipse"].as_f64().unwrap();
    let d_shell = v["d_shell"].as_f64().unwrap();
    assert!(d_ellipse < d_shell);
    assert!((d_ellipse - 828.919156).abs() < 1e-5);
    assert!((d_shell - 832.820208).abs() < 1e-5);
}

#[test]
fn counterexample_circle_case_is_an_equality() {
    let out = steklov(&["counterexample", "--b", "1.0"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(v["difference"].as_f64().unwrap().abs() < 1e-9);
    assert_eq!(v["key_inequality_violated"].as_bool(), Some(false));
}

#[test]
fn bounds_pass_on_a_shell() {
    let out = steklov(&[
        "bounds",
        "--body",
        r#"{"type":"fourier","a0":2.0,"M":256}"#,
        "--r1",
        "1",
        "--orders",
        "8",
        "--quad",
        "256",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["pass"].as_bool(), Some(true));
    assert!(v["inside_rbar"].as_bool().unwrap());
}

#[test]
fn plot_emits_three_closed_curves_byte_stably() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("domain.svg");
    let args = [
        "plot",
        "--body",
        r#"{"type":"ellipse","a":1,"b":1.2}"#,
        "--r1",
        "0.5",
        "--out",
        path.to_str().unwrap(),
    ];
    let out = steklov(&args);
    assert!(out.status.success());
    let first = std::fs::read(&path).unwrap();
    let text = String::from_utf8(first.clone()).unwrap();
    assert!(text.starts_with("<svg"));
    assert_eq!(text.matches("<circle").count(), 2);
    assert_eq!(text.matches("Z\"").count(), 1);
    let out = steklov(&args);
    assert!(out.status.success());
    assert_eq!(std::fs::read(&path).unwrap(), first, "byte-stable output");
}

#[test]
fn invalid_body_json_fails_with_context() {
    let out = steklov(&["solve", "--body", r#"{"type":"disk","r":1}"#, "--r1", "0.5"]);
    assert!(!out.status.success());
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("invalid body JSON"), "{err}");
}

#[test]
fn body_file_source_works() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("body.json");
    std::fs::write(&path, r#"{"type":"ellipse","a":1,"b":1.1,"M":256}"#).unwrap();
    let out = steklov(&[
        "solve",
        "--body-file",
        path.to_str().unwrap(),
        "--r1",
        "0.5",
        "--orders",
        "12",
        "--quad",
        "256",
    ]);
    assert!(out.status.success());
    assert!(json_field(&stdout(&out), "sigma1") > 0.0);
}
