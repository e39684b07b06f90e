//! End-to-end tests of the CLI: exit codes, report shape, file round-trips,
//! and payload determinism.

use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_plumknot")
}

fn run(args: &[&str]) -> (Output, Value) {
    let out = Command::new(bin()).args(args).output().expect("spawn plumknot");
    let report: Value =
        serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("bad report: {}\nstdout: {}", e, String::from_utf8_lossy(&out.stdout)));
    (out, report)
}

fn write_payload(report: &Value, path: &Path) {
    std::fs::write(path, serde_json::to_string(&report["payload"]).unwrap()).unwrap();
}

#[test]
fn theorem1_passes_for_small_n() {
    let (out, report) = run(&["verify", "theorem1", "--n", "1"]);
    assert!(out.status.success());
    assert_eq!(report["status"], "pass");
    assert_eq!(report["payload"]["lower"], 2);
    assert_eq!(report["payload"]["upper"], 2);
    let (out, report) = run(&["verify", "theorem1", "--n", "2"]);
    assert!(out.status.success());
    assert_eq!(report["payload"]["lower"], 4);
    assert_eq!(report["payload"]["upper"], 4);
}

#[test]
fn subclaims_pass_for_n_3() {
    let (out, report) = run(&["verify", "subclaims", "--n", "3"]);
    assert!(out.status.success());
    assert_eq!(report["status"], "pass");
    let rows = report["payload"]["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[0]["cost"], 4);
    assert_eq!(rows[1]["cost"], 5);
    assert_eq!(rows[2]["cost"], 6);
}

#[test]
fn generated_diagram_feeds_invariants() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("plum3.json");
    let (out, report) = run(&["plum", "gen", "--n", "1"]);
    assert!(out.status.success());
    write_payload(&report, &path);
    let (out, report) = run(&["invariants", "--diagram", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(report["payload"]["linkingVector"], serde_json::json!([3]));
    assert_eq!(report["payload"]["verdict"], "nontrivial");

    let (out, report) = run(&["diagram", "validate", "--diagram", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(report["payload"]["ok"], true);
}

#[test]
fn projection_analysis_certifies_all_resolutions() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cube-proj.json");
    let (out, report) = run(&["plum", "gen", "--n", "1", "--kind", "projection"]);
    assert!(out.status.success());
    write_payload(&report, &path);
    let (out, report) = run(&["projection", "analyze", "--file", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(report["payload"]["resolutions"], 8);
    assert_eq!(report["payload"]["allNontrivial"], true);
    assert_eq!(
        report["payload"]["hopfMultiset"],
        serde_json::json!([1, 1, 1, 1, 1, 1, 3, 3])
    );
}

#[test]
fn l1_solve_reports_cost_and_witness() {
    let (out, report) = run(&["l1", "solve", "--dim", "2", "--n", "2", "--target", "5,0"]);
    assert!(out.status.success());
    assert_eq!(report["payload"]["cost"], 4);
    assert_eq!(report["payload"]["achieved"], serde_json::json!([5, 0]));
}

#[test]
fn l1_budget_exhaustion_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("gens.json");
    std::fs::write(&path, "[[2]]").unwrap();
    let (out, report) = run(&[
        "l1", "solve", "--dim", "1", "--gens", path.to_str().unwrap(), "--target", "3",
        "--max-cost", "10",
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(report["status"], "unresolved");
}

#[test]
fn usage_errors_exit_2() {
    let out = Command::new(bin()).arg("frobnicate").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(bin()).args(["plum", "gen"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bounds_pipeline_over_files() {
    let dir = tempfile::tempdir().unwrap();
    let graph_path = dir.path().join("cube-graph.json");
    let (out, report) = run(&["plum", "gen", "--n", "1", "--kind", "graph"]);
    assert!(out.status.success());
    write_payload(&report, &graph_path);
    let (out, report) = run(&[
        "bounds", "--graph", graph_path.to_str().unwrap(), "--optimize", "eval", "--c", "3",
    ]);
    assert!(out.status.success());
    assert_eq!(report["payload"]["a"], 16);
    assert_eq!(report["payload"]["A"], "8");
    assert_eq!(report["payload"]["bound"]["value"], "40");
}

#[test]
fn moveset_payload_is_deterministic() {
    let (_, a) = run(&["moveset", "--n", "3"]);
    let (_, b) = run(&["moveset", "--n", "3"]);
    assert_eq!(
        serde_json::to_string(&a["payload"]).unwrap(),
        serde_json::to_string(&b["payload"]).unwrap()
    );
    let vectors = a["payload"]["vectors"].as_array().unwrap();
    assert_eq!(vectors.len(), 11); // |B_7|: 3+2+2+1+1+1+1
}

#[test]
fn selftest_passes() {
    let (out, report) = run(&["selftest"]);
    assert!(out.status.success(), "selftest failed: {}", report);
    assert_eq!(report["payload"]["failed"], 0);
    assert_eq!(report["payload"]["passed"], 10);
}

#[test]
fn pretty_flag_renders_multiline() {
    let out = Command::new(bin())
        .args(["moveset", "--n", "1", "--pretty"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(out.stdout.iter().filter(|&&b| b == b'\n').count() > 3);
}
