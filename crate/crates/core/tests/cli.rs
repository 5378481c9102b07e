//! End-to-end tests of the `rootlat` binary: output shape, cross-check
//! statuses, exit codes, and byte-level determinism.

use std::process::{Command, Output};

use serde_json::Value;

fn rootlat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rootlat"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json_reports(out: &Output) -> Vec<Value> {
    let text = String::from_utf8_lossy(&out.stdout);
    serde_json::from_str::<Vec<Value>>(&text).expect("stdout is a JSON array of reports")
}

fn coefficients(report: &Value) -> Vec<String> {
    report["coefficients"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap().to_string())
        .collect()
}

#[test]
fn h_subcommand() {
    let out = rootlat(&["h", "A", "2"]);
    assert!(out.status.success());
    let reports = json_reports(&out);
    assert_eq!(reports.len(), 1);
    assert_eq!(coefficients(&reports[0]), ["1", "4", "1"]);
    assert_eq!(reports[0]["quantity"], "h_closed");
    assert_eq!(reports[0]["family"], "A");
    assert_eq!(reports[0]["status"], "ok");
    // timing is absent unless requested
    assert!(reports[0].get("timing_ms").is_none());
}

#[test]
fn f_subcommand() {
    let out = rootlat(&["f", "C", "2"]);
    assert!(out.status.success());
    let reports = json_reports(&out);
    assert_eq!(coefficients(&reports[0]), ["8", "8", "1"]);
}

#[test]
fn series_hd_order_4() {
    let out = rootlat(&["series", "hd", "--order", "4"]);
    assert!(out.status.success());
    let reports = json_reports(&out);
    assert_eq!(reports.len(), 5);
    assert_eq!(coefficients(&reports[4]), ["1", "20", "54", "20", "1"]);
    assert_eq!(reports[2]["n"], 2);
    assert_eq!(coefficients(&reports[2]), ["1", "2", "1"]);
}

#[test]
fn growth_kmax_zero() {
    let out = rootlat(&["growth", "C", "2", "--kmax", "0"]);
    assert!(out.status.success());
    let reports = json_reports(&out);
    // default method is both: one breadth-first report, one series report
    assert_eq!(reports.len(), 2);
    for r in &reports {
        assert_eq!(coefficients(r), ["1"]);
        assert_eq!(r["status"], "pass");
    }
}

#[test]
fn growth_cross_check_passes() {
    let out = rootlat(&["growth", "A", "2", "--kmax", "3", "--method", "both"]);
    assert!(out.status.success());
    let reports = json_reports(&out);
    assert_eq!(coefficients(&reports[0]), ["1", "6", "12", "18"]);
    assert_eq!(reports[0]["quantity"], "growth_bfs");
    assert_eq!(reports[1]["quantity"], "growth_series");
    assert_eq!(reports[0]["status"], "pass");
}

#[test]
fn hstar_matches() {
    let out = rootlat(&["hstar", "D", "3"]);
    assert!(out.status.success());
    let reports = json_reports(&out);
    assert_eq!(coefficients(&reports[0]), ["1", "9", "9", "1"]);
    assert_eq!(reports[0]["status"], "pass");
}

#[test]
fn faces_with_dump() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("faces.txt");
    let out = rootlat(&["faces", "A", "3", "--dump", path.to_str().unwrap()]);
    assert!(out.status.success());
    let reports = json_reports(&out);
    assert_eq!(coefficients(&reports[0]), ["1", "12", "30", "20"]);

    let dump = std::fs::read_to_string(&path).unwrap();
    let lines: Vec<&str> = dump.lines().collect();
    assert_eq!(lines.len(), 12 + 30 + 20);
    assert_eq!(lines[0], "0,1");
    // vertices come first, sorted; the top cells close the file
    assert_eq!(lines[11], "3,2");
    assert!(lines.last().unwrap().split(' ').count() == 3);
}

#[test]
fn faces_rejects_non_a_families() {
    let out = rootlat(&["faces", "D", "3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(rootlat(&["h", "E", "3"]).status.code(), Some(2));
    assert_eq!(rootlat(&["h", "C", "1"]).status.code(), Some(2));
    assert_eq!(rootlat(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn output_is_byte_identical_across_runs() {
    let first = rootlat(&["h", "D", "4"]);
    let second = rootlat(&["h", "D", "4"]);
    assert_eq!(first.stdout, second.stdout);
    let first = rootlat(&["verify", "--nmax", "2"]);
    let second = rootlat(&["verify", "--nmax", "2"]);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn verify_small_passes() {
    let out = rootlat(&["verify", "--nmax", "2"]);
    assert!(out.status.success());
    let reports = json_reports(&out);
    assert_eq!(reports.len(), 11);
    for r in &reports {
        assert_eq!(r["status"], "pass");
    }
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert_eq!(stderr.lines().filter(|l| l.contains("criterion")).count(), 11);
}

#[test]
fn csv_output() {
    let out = rootlat(&["h", "A", "2", "--csv"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "command,family,n,quantity,index,coefficient,status");
    assert_eq!(lines[1], "h A 2 --csv,A,2,h_closed,0,1,ok");
    assert_eq!(lines[2], "h A 2 --csv,A,2,h_closed,1,4,ok");
    assert_eq!(lines.len(), 4);
}

#[test]
fn timing_flag_adds_field() {
    let out = rootlat(&["h", "A", "2", "--timing"]);
    let reports = json_reports(&out);
    assert!(reports[0].get("timing_ms").is_some());
}
