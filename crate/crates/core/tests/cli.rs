//! The command-line contract: exit codes, reproducible bytes and the compute commands.

use std::fs;
use std::path::Path;
use std::process::Command;

use serde_json::Value;

use pplab::cli::{main_with, EXIT_FAIL, EXIT_PARSE, EXIT_PASS, EXIT_USAGE};
use pplab::engine::serial::Serial;
use pplab::sset::text::write_sset;
use pplab::sset::{cell_inclusion, generate_cell, CellKind, SSet};

fn run(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let code = main_with(std::iter::once("pplab").chain(args.iter().copied()), &mut out);
    (code, String::from_utf8(out).unwrap())
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn chain_counterexample_suite_passes() {
    let (code, out) = run(&["run", "--suite", "chain-counterexample"]);
    assert_eq!(code, EXIT_PASS);
    assert!(out.contains("suite passed"));
}

#[test]
fn reports_are_byte_identical() {
    let args = ["run", "--suite", "pp-laws", "--count", "5", "--seed", "9", "--json"];
    let (a, first) = run(&args);
    let (b, second) = run(&args);
    assert_eq!((a, b), (EXIT_PASS, EXIT_PASS));
    assert_eq!(first, second);
    let doc: Value = serde_json::from_str(&first).unwrap();
    assert_eq!(doc["config"]["seed"], "9");
    assert_eq!(doc["reports"][0]["instances"].as_array().unwrap().len(), 10);
}

#[test]
fn filtration_suite_writes_its_report() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    let (code, _) = run(&["run", "--suite", "filtration", "--engine", "finset", "--n", "1,1", "--count", "3", "--out", path(&out)]);
    assert_eq!(code, EXIT_PASS);
    let doc: Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(doc["pass"], true);
    let inst = &doc["reports"][0]["instances"][0];
    assert_eq!(inst["millis"], "0");
    let full = inst["verdicts"].as_array().unwrap().iter().find(|v| v["claim"] == "full certificate").unwrap();
    let steps = full["witnesses"].as_array().unwrap().iter().find(|w| w["label"] == "expected steps").unwrap();
    assert_eq!(steps["detail"], "4");
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(run(&["run", "--suite", "unknown-name"]).0, EXIT_USAGE);
    assert_eq!(run(&["run"]).0, EXIT_USAGE);
    assert_eq!(run(&["run", "--suite", "filtration", "--n", "0"]).0, EXIT_USAGE);
}

#[test]
fn malformed_files_exit_with_three() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    fs::write(&bad, "sset X\ndim 0 two\nend\n").unwrap();
    assert_eq!(run(&["compute", "homology", path(&bad)]).0, EXIT_PARSE);
    let json = dir.path().join("bad.json");
    fs::write(&json, "{ not json").unwrap();
    assert_eq!(run(&["verify", path(&json), "--engine", "finset"]).0, EXIT_PARSE);
}

#[test]
fn homology_of_the_circle() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("circle.txt");
    fs::write(&file, write_sset("circle", &generate_cell(CellKind::Boundary, 2, None).unwrap())).unwrap();
    let (code, out) = run(&["compute", "homology", path(&file)]);
    assert_eq!(code, EXIT_PASS);
    let doc: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["table"], "(Z, Z)");
}

#[test]
fn pp_power_reports_the_fixed_diagonal() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("edge.txt");
    let f = cell_inclusion(CellKind::Boundary, 1, None).unwrap();
    fs::write(&file, SSet.mor_json(&f)["text"].as_str().unwrap()).unwrap();
    let (code, out) = run(&["compute", "pp-power", path(&file), "--n", "2"]);
    assert_eq!(code, EXIT_PASS);
    let doc: Value = serde_json::from_str(&out).unwrap();
    // Δ¹ × Δ¹ has edges (0,0)-(0,1), (0,0)-(1,0), (0,1)-(1,1), (1,0)-(1,1) and one diagonal
    assert_eq!(doc["codomain"]["counts"], serde_json::json!(["4", "5", "2"]));
    assert_eq!(doc["fixed cell vertices"], "[0, 3]");
    assert_eq!(doc["digest"].as_str().unwrap().len(), 64);
}

#[test]
fn certificates_round_trip_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("ladder.json");
    fs::write(&input, r#"{"v0": [{"cod": "2", "table": ["1"]}], "v1": [{"cod": "3", "table": ["0", "2"]}]}"#).unwrap();
    let cert = dir.path().join("cert.json");
    let (code, _) = run(&["compute", "certificate", path(&input), "--engine", "finset", "--n", "1", "--out", path(&cert)]);
    assert_eq!(code, EXIT_PASS);
    let mut doc: Value = serde_json::from_str(&fs::read_to_string(&cert).unwrap()).unwrap();
    assert_eq!(doc["steps"].as_array().unwrap().len(), 2);
    assert_eq!(run(&["verify", path(&cert), "--engine", "finset"]).0, EXIT_PASS);
    doc["steps"][1]["stage_digest"] = Value::String("0".repeat(64));
    fs::write(&cert, doc.to_string()).unwrap();
    let (code, out) = run(&["verify", path(&cert), "--engine", "finset"]);
    assert_eq!(code, EXIT_FAIL);
    assert!(out.contains("\"pass\": false"));
}

#[test]
fn sset_certificates_from_text() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("ladder.txt");
    let v0 = cell_inclusion(CellKind::Boundary, 1, None).unwrap();
    let v1 = cell_inclusion(CellKind::Horn, 2, Some(1)).unwrap();
    // the horn contains the edge 0-1 as its face d₂, which is how Δ¹ sits in Λ²₁
    let edge = pplab::sset::map_from_vertices(&v0.cod, &v1.dom, &[0, 1]).unwrap();
    let text = format!(
        "{}{}{}{}{}",
        write_sset("a", &v0.dom),
        write_sset("b", &v0.cod),
        write_sset("c", &v1.dom),
        pplab::sset::text::write_map("v0", "a", "b", &v0),
        pplab::sset::text::write_map("e", "b", "c", &edge),
    );
    fs::write(&input, text).unwrap();
    let (code, out) = run(&["compute", "certificate", path(&input), "--n", "1"]);
    assert_eq!(code, EXIT_PASS, "{out}");
    let doc: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["steps"].as_array().unwrap().len(), 2);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_pplab");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap().status.code();
    assert_eq!(status(&["run", "--suite", "bsigma"]), Some(EXIT_PASS));
    assert_eq!(status(&["run", "--suite", "nope"]), Some(EXIT_USAGE));
}
