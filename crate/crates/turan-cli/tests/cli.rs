//! End-to-end tests of the CLI contract: exit codes, report formats,
//! determinism, and the environment seed override.

use std::process::{Command, Output};

fn turan(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_turan"))
        .args(args)
        .env_remove("TURAN_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn verify_small_sweep_exits_zero_and_round_trips() {
    let out = turan(&[
        "verify",
        "--instances",
        "20",
        "--points",
        "16",
        "--seed",
        "7",
        "--kinds",
        "all",
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let body = stdout(&out);
    let value: serde_json::Value = serde_json::from_str(&body).unwrap();
    assert_eq!(value["version"], 1);
    assert_eq!(value["seed"], 7);
    // parsing then re-serializing is byte-identical
    let reserialized = serde_json::to_string_pretty(&value).unwrap();
    assert_eq!(body.trim_end(), reserialized);
}

#[test]
fn verify_kind_filter_restricts_report() {
    let out = turan(&[
        "verify", "--instances", "5", "--points", "8", "--kinds", "Thm3_1", "--force-s",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let kinds = value["kinds"].as_array().unwrap();
    assert_eq!(kinds.len(), 1);
    assert_eq!(kinds[0]["kind"], "Thm3_1");
    assert_eq!(value["config"]["force_s_positive"], true);
}

#[test]
fn verify_unknown_kind_is_a_usage_error() {
    let out = turan(&["verify", "--kinds", "Thm99"]);
    assert_eq!(out.status.code(), Some(2));
    let err = stderr(&out);
    assert!(err.contains("unknown kind"));
    assert!(err.contains("Thm3_1"), "usage message lists valid kinds");
}

#[test]
fn verify_rejects_csv_format() {
    let out = turan(&["verify", "--instances", "2", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_writes_report_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = turan(&[
        "verify",
        "--instances",
        "4",
        "--points",
        "8",
        "--kinds",
        "Thm2_3",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let body = std::fs::read_to_string(&path).unwrap();
    assert!(serde_json::from_str::<serde_json::Value>(&body).is_ok());
}

#[test]
fn verify_is_deterministic_for_a_seed() {
    let args = [
        "verify", "--instances", "10", "--points", "16", "--seed", "3", "--kinds", "all",
    ];
    let a = turan(&args);
    let b = turan(&args);
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn env_var_overrides_seed_flag() {
    let run = |env: Option<&str>| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_turan"));
        cmd.args(["verify", "--instances", "3", "--points", "8", "--seed", "1", "--kinds", "Thm3_1"]);
        match env {
            Some(v) => cmd.env("TURAN_SEED", v),
            None => cmd.env_remove("TURAN_SEED"),
        };
        cmd.output().unwrap()
    };
    let with_env = run(Some("123"));
    let value: serde_json::Value = serde_json::from_str(&stdout(&with_env)).unwrap();
    assert_eq!(value["seed"], 123);

    let bad = run(Some("not-a-number"));
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn scan_extremal_instance_has_zero_margin_at_angle_zero() {
    let out = turan(&[
        "scan",
        "--poles",
        "2,0;2,0",
        "--zeros=-0.5,0",
        "--s",
        "1",
        "--k",
        "0.5",
        "--points",
        "360",
        "--kinds",
        "Thm3_1",
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let body = stdout(&out);
    let mut lines = body.lines();
    assert_eq!(
        lines.next().unwrap(),
        "angle,abs_r,abs_r_prime,abs_b_prime,rhs_Thm3_1,margin_Thm3_1"
    );
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 360);
    let first: Vec<f64> = rows[0].split(',').map(|v| v.parse().unwrap()).collect();
    assert_eq!(first[0], 0.0);
    assert!((first[2] - 5.5).abs() < 1e-9, "abs_r_prime {}", first[2]);
    assert!(first[5].abs() < 1e-9, "margin {}", first[5]);
}

#[test]
fn scan_rejects_pole_inside_unit_circle() {
    let out = turan(&["scan", "--poles", "0.9,0"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("inside unit circle"));
}

#[test]
fn scan_rejects_zero_outside_radius_k() {
    let out = turan(&["scan", "--poles", "2,0", "--zeros", "0.9,0", "--k", "0.5"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("outside the radius-0.5 disk"));
}

#[test]
fn scan_malformed_complex_is_a_usage_error() {
    let out = turan(&["scan", "--poles", "2;0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn extremal_default_passes_and_reports_grid_parameters() {
    let out = turan(&["extremal"]);
    assert_eq!(out.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["failures"], 0);
    let row = &value["sharp_rows"][0];
    for key in ["n", "m", "s", "k", "a", "lhs", "rhs"] {
        assert!(row.get(key).is_some(), "missing column {key}");
    }
}

#[test]
fn extremal_impossible_tolerance_exits_nonzero() {
    let out = turan(&["extremal", "--tolerance", "1e-15"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn selftest_passes() {
    let out = turan(&["selftest"]);
    assert_eq!(out.status.code(), Some(0), "stdout: {}", stdout(&out));
}
