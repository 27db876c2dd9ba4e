use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_posetkit")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

const GRID: &str = r#"{
  "elements": ["00","01","02","10","11","12","20","21","22"],
  "le": [["00","01"],["01","02"],["10","11"],["11","12"],["20","21"],["21","22"],
         ["00","10"],["10","20"],["01","11"],["11","21"],["02","12"],["12","22"]]
}"#;

#[test]
fn poset_spine_round_trips_through_check_spine() {
    let dir = tempfile::tempdir().unwrap();
    let grid = dir.path().join("grid3.json");
    fs::write(&grid, GRID).unwrap();
    let out = run(&["poset", "spine", grid.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let cert = json(&out);
    assert_eq!(cert["chain"].as_array().unwrap().len(), 5);
    assert_eq!(cert["antichains"].as_array().unwrap().len(), 5);

    let cert_path = dir.path().join("cert.json");
    fs::write(&cert_path, &out.stdout).unwrap();
    let out = run(&["poset", "check-spine", grid.to_str().unwrap(), cert_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["status"], "pass");
}

#[test]
fn poset_covers_output_reloads() {
    let dir = tempfile::tempdir().unwrap();
    let grid = dir.path().join("grid3.json");
    fs::write(&grid, GRID).unwrap();
    let first = run(&["poset", "covers", grid.to_str().unwrap()]);
    let again = dir.path().join("again.json");
    fs::write(&again, &first.stdout).unwrap();
    let second = run(&["poset", "covers", again.to_str().unwrap()]);
    assert_eq!(first.stdout, second.stdout);
    let w = run(&["poset", "width", grid.to_str().unwrap()]);
    assert_eq!(json(&w)["width"], 3);
}

#[test]
fn smc_failure_exits_one_with_witness() {
    let dir = tempfile::tempdir().unwrap();
    let grid = dir.path().join("grid3.json");
    fs::write(&grid, GRID).unwrap();
    let out = run(&["poset", "smc", grid.to_str().unwrap(), "--chain", "00,22"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(json(&out)["witness"]["inserted"].is_array());
}

#[test]
fn ot_check_reports_non_vacillation() {
    let out = run(&["ot", "check", "w[w*]"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["vacillating"], false);
    assert_eq!(v["term"], "w[w*]");
    let out = run(&["ot", "reverse", "w+1"]);
    assert_eq!(json(&out)["term"], "1+w*");
}

#[test]
fn parse_errors_exit_two() {
    let out = run(&["ot", "check", "w["]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("position"));
    assert_eq!(run(&["family", "check", "P9", "--claim", "x"]).status.code(), Some(2));
    assert_eq!(run(&["family", "check", "P1", "--claim", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "rows"]).status.code(), Some(2));
}

#[test]
fn verify_counting_matches_formula() {
    let out = run(&["verify", "counting", "--a", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["status"], "pass");
    assert_eq!(v["witness"]["F_size"], 7);
    assert_eq!(v["witness"]["T_height"], 6);
}

#[test]
fn family_window_writes_poset_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p5.json");
    let out = run(&["family", "window", "P5", "--spec", "0..2,0..2,0..1", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let file: Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(file["elements"].as_array().unwrap().len(), 18);
    let h = run(&["poset", "height", path.to_str().unwrap()]);
    assert_eq!(h.status.code(), Some(0));
}

#[test]
fn family_check_and_cofinality() {
    let out = run(&["family", "check", "P1", "--claim", "pigeonhole", "--params", "m=2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["witness"]["demanders"].as_array().unwrap().len(), 3);

    let out = run(&["family", "check", "P3", "--claim", "row_bound", "--params", "y=2,B=20"]);
    let v = json(&out);
    assert_eq!(v["status"], "verified-up-to-bound");
    assert_eq!(v["witness"]["width"], 3);

    let out = run(&["family", "cofinal", "P3", "--upper", "C(0)", "--lower", "C(1)", "--bound", "0..6,0..6", "--slack", "2,2"]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["family", "bicomparable", "P2", "--a", "C0", "--b", "C1", "--bound", "-8..8,0..8", "--slack", "2,2"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn output_is_deterministic() {
    let a = run(&["verify", "levels", "--n", "0", "--s", "4", "--bound", "10"]);
    let b = run(&["verify", "levels", "--n", "0", "--s", "4", "--bound", "10"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.status.code(), Some(0));
}

#[test]
fn sweep_runs_every_criterion() {
    let out = run(&["sweep", "--seed", "7"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out);
    assert_eq!(v.as_array().unwrap().len(), 12);
    assert!(String::from_utf8_lossy(&out.stderr).contains("12 of 12 criteria passed"));
}
