//! End-to-end tests of the `verlinde` command-line front end, driving the
//! compiled binary exactly as a user would.

use std::path::PathBuf;
use std::process::Command;
use verlinde::Report;

fn run_cli(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_verlinde"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

fn write_weights(name: &str, text: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("{name}-{}.json", std::process::id()));
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn closed_surface_count_round_trips_through_json() {
    let (code, stdout, _) = run_cli(&["compute", "--n", "2", "--d", "1", "--g", "2", "--k", "2"]);
    assert_eq!(code, 0, "stdout: {stdout}");
    let report: Report = serde_json::from_str(&stdout).expect("stdout is one JSON report");
    assert_eq!(report.value.as_deref(), Some("6"));
    assert_eq!(report.sum_value.as_deref(), Some("6"));
    assert_eq!(report.residue_value.as_deref(), Some("6"));
    assert!(report.agreement);
    assert!(report.integral);
    assert!(report.chamber_valid);
    assert!(report.error.is_none());
    // The parsed report re-serializes to the same JSON object.
    let round: serde_json::Value =
        serde_json::from_str(&serde_json::to_string(&report).unwrap()).unwrap();
    let original: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(round, original);
}

#[test]
fn validation_failures_exit_with_code_two() {
    // Shared divisor between n and d.
    let (code, stdout, _) = run_cli(&["compute", "--n", "4", "--d", "2", "--g", "2", "--k", "4"]);
    assert_eq!(code, 2);
    let report: Report = serde_json::from_str(&stdout).unwrap();
    assert!(report.error.as_deref().unwrap().contains("coprime"));
    assert_eq!(report.error_kind.as_deref(), Some("validation"));

    // Level not divisible by n.
    let (code, stdout, _) = run_cli(&["compute", "--n", "2", "--d", "1", "--g", "2", "--k", "3"]);
    assert_eq!(code, 2);
    let report: Report = serde_json::from_str(&stdout).unwrap();
    assert!(report.error.as_deref().unwrap().contains("divisible"));

    // Neither --k nor --sweep.
    let (code, _, stderr) = run_cli(&["compute", "--n", "2", "--d", "1", "--g", "2"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("--k or --sweep"));

    // Unknown method name.
    let (code, _, stderr) = run_cli(&[
        "compute", "--n", "2", "--d", "1", "--g", "2", "--k", "2", "--method", "abacus",
    ]);
    assert_eq!(code, 2);
    assert!(stderr.contains("unknown method"));

    // Missing required arguments is also invalid input.
    let (code, _, _) = run_cli(&["compute"]);
    assert_eq!(code, 2);
}

#[test]
fn weight_files_feed_marked_points() {
    let one = write_weights("one-point", "[[2]]");
    let (code, stdout, _) = run_cli(&[
        "compute", "--n", "2", "--d", "1", "--g", "2", "--k", "2", "--weights",
        one.to_str().unwrap(),
    ]);
    std::fs::remove_file(&one).ok();
    assert_eq!(code, 0, "stdout: {stdout}");
    let report: Report = serde_json::from_str(&stdout).unwrap();
    assert_eq!(report.value.as_deref(), Some("10"));
    assert!(report.agreement);

    let two = write_weights("two-point", "[[1],[1]]");
    let (code, stdout, _) = run_cli(&[
        "compute", "--n", "2", "--d", "1", "--g", "2", "--k", "2", "--weights",
        two.to_str().unwrap(),
    ]);
    std::fs::remove_file(&two).ok();
    assert_eq!(code, 0);
    let report: Report = serde_json::from_str(&stdout).unwrap();
    assert_eq!(report.value.as_deref(), Some("16"));

    // A malformed weight file is invalid input.
    let bad = write_weights("bad-weights", "{\"not\": \"an array\"}");
    let (code, _, stderr) = run_cli(&[
        "compute", "--n", "2", "--d", "1", "--g", "2", "--k", "2", "--weights",
        bad.to_str().unwrap(),
    ]);
    std::fs::remove_file(&bad).ok();
    assert_eq!(code, 2);
    assert!(stderr.contains("JSON array"));

    // A missing weight file is invalid input.
    let (code, _, stderr) = run_cli(&[
        "compute", "--n", "2", "--d", "1", "--g", "2", "--k", "2", "--weights",
        "/nonexistent/weights.json",
    ]);
    assert_eq!(code, 2);
    assert!(stderr.contains("cannot read"));
}

#[test]
fn marked_weights_outside_the_root_lattice_vanish_by_the_sum_route() {
    // The residue route refuses such weights, so asking for both methods is
    // an input error; the sum route alone reports the vanishing count.
    let odd = write_weights("odd-weight", "[[1]]");
    let (code, stdout, _) = run_cli(&[
        "compute", "--n", "2", "--d", "1", "--g", "2", "--k", "4", "--weights",
        odd.to_str().unwrap(), "--method", "sum",
    ]);
    assert_eq!(code, 0, "stdout: {stdout}");
    let report: Report = serde_json::from_str(&stdout).unwrap();
    assert_eq!(report.value.as_deref(), Some("0"));

    let (code, stdout, _) = run_cli(&[
        "compute", "--n", "2", "--d", "1", "--g", "2", "--k", "4", "--weights",
        odd.to_str().unwrap(), "--method", "both",
    ]);
    std::fs::remove_file(&odd).ok();
    assert_eq!(code, 2);
    let report: Report = serde_json::from_str(&stdout).unwrap();
    assert!(report.error.as_deref().unwrap().contains("root lattice"));
}

#[test]
fn sweeps_produce_one_report_per_level() {
    let (code, stdout, _) = run_cli(&[
        "compute", "--n", "2", "--d", "1", "--g", "2", "--sweep", "2,4",
    ]);
    assert_eq!(code, 0, "stdout: {stdout}");
    let reports: Vec<Report> = serde_json::from_str(&stdout).unwrap();
    assert_eq!(reports.len(), 2);
    assert_eq!(reports[0].k, 2);
    assert_eq!(reports[0].value.as_deref(), Some("6"));
    assert_eq!(reports[1].k, 4);
    assert_eq!(reports[1].value.as_deref(), Some("19"));
}

#[test]
fn sweeps_isolate_bad_levels_without_failing_the_run() {
    let (code, stdout, _) = run_cli(&[
        "compute", "--n", "2", "--d", "1", "--g", "2", "--sweep", "2,3,4",
    ]);
    assert_eq!(code, 0, "a sweep that runs exits 0; stdout: {stdout}");
    let reports: Vec<Report> = serde_json::from_str(&stdout).unwrap();
    assert_eq!(reports.len(), 3);
    assert_eq!(reports[0].value.as_deref(), Some("6"));
    assert!(reports[1].error.as_deref().unwrap().contains("divisible"));
    assert_eq!(reports[1].error_kind.as_deref(), Some("validation"));
    assert_eq!(reports[2].value.as_deref(), Some("19"));
}

#[test]
fn csv_output_has_a_header_and_one_row_per_report() {
    let (code, stdout, _) = run_cli(&[
        "compute", "--n", "2", "--d", "1", "--g", "2", "--sweep", "2,4", "--out", "csv",
    ]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = stdout.trim_end().lines().collect();
    assert_eq!(lines.len(), 3, "header plus two rows: {stdout}");
    assert!(lines[0].starts_with("n,d,g,k,weights,method,backend,value"));
    assert!(lines[1].contains(",6,"));
    assert!(lines[2].contains(",19,"));
}

#[test]
fn reports_are_deterministic_apart_from_timing() {
    let args = ["compute", "--n", "2", "--d", "1", "--g", "2", "--k", "4"];
    let (_, first, _) = run_cli(&args);
    let (_, second, _) = run_cli(&args);
    let mut a: serde_json::Value = serde_json::from_str(&first).unwrap();
    let mut b: serde_json::Value = serde_json::from_str(&second).unwrap();
    a["elapsed_ms"] = 0.into();
    b["elapsed_ms"] = 0.into();
    assert_eq!(a, b);
}

#[test]
fn backend_and_method_are_selectable() {
    let (code, stdout, _) = run_cli(&[
        "compute", "--n", "2", "--d", "1", "--g", "2", "--k", "2", "--backend", "float",
        "--method", "sum",
    ]);
    assert_eq!(code, 0, "stdout: {stdout}");
    let report: Report = serde_json::from_str(&stdout).unwrap();
    assert_eq!(report.value.as_deref(), Some("6"));

    let (code, stdout, _) = run_cli(&[
        "compute", "--n", "2", "--d", "1", "--g", "2", "--k", "2", "--method", "residue",
    ]);
    assert_eq!(code, 0);
    let report: Report = serde_json::from_str(&stdout).unwrap();
    assert_eq!(report.residue_value.as_deref(), Some("6"));
    assert!(report.sum_value.is_none());
    assert_eq!(report.value.as_deref(), Some("6"));

    // The residue route has no float variant; asking for one is rejected.
    let (code, stdout, _) = run_cli(&[
        "compute", "--n", "2", "--d", "1", "--g", "2", "--k", "2", "--backend", "float",
        "--method", "residue",
    ]);
    assert_eq!(code, 2);
    let report: Report = serde_json::from_str(&stdout).unwrap();
    assert!(report.error.as_deref().unwrap().contains("float backend"));
    assert_eq!(report.error_kind.as_deref(), Some("validation"));
}
