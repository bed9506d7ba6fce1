use serde_json::Value;
use std::fs;
use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

fn eqlines(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eqlines"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_eqlines"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn ok(args: &[&str]) -> String {
    let o = eqlines(args);
    assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stderr(&o));
    stdout(&o)
}

fn save(dir: &Path, name: &str, body: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, body).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn every_construction_reverifies() {
    let dir = tempfile::tempdir().unwrap();
    let runs: [&[&str]; 6] = [
        &["construct", "lgc", "--graph", "petersen"],
        &["construct", "union", "--graph", "cycle:5", "--t", "4"],
        &["construct", "shearer", "--lambda", "21/10", "--eps", "1e-4"],
        &["construct", "theorem1", "--tau", "9/50", "--i", "8", "--t", "4"],
        &["certify", "--graph", "kneser:8:2", "--beta", "3"],
        &["certify", "--graph", "cycle:5", "--beta", "sqrt(5)"],
    ];
    for (k, args) in runs.iter().enumerate() {
        let path = save(dir.path(), &format!("c{k}.json"), &ok(args));
        let out = ok(&["verify", &path]);
        assert!(out.starts_with("PASS"), "{out}");
    }
}

#[test]
fn lgc_petersen_fields() {
    let v: Value = serde_json::from_str(&ok(&["construct", "lgc", "--graph", "petersen"])).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["kind"], "r_bound");
    assert_eq!(v["n"], 15);
    assert_eq!(v["d"], 14);
    assert_eq!(v["multiplicity"], 1);
    assert_eq!(v["beta"]["poly"], serde_json::json!(["-6", "1"]));
}

#[test]
fn theorem1_has_positive_eta() {
    let v: Value =
        serde_json::from_str(&ok(&["construct", "theorem1", "--tau", "9/50", "--i", "8", "--t", "4"])).unwrap();
    assert_eq!(v["kind"], "n_bound");
    let num: i64 = v["eta"]["num"].as_str().unwrap().parse().unwrap();
    assert!(num > 0);
}

#[test]
fn precondition_failures_exit_2() {
    let o = eqlines(&["construct", "shearer", "--lambda", "2", "--eps", "1e-3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("BelowThreshold"));
    let o = eqlines(&["construct", "theorem1", "--tau", "0.4", "--i", "3", "--t", "2"]);
    assert_eq!(o.status.code(), Some(2));
    let o = eqlines(&["certify", "--graph", "complete:3", "--beta", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("EigenvalueBelowThreshold"));
    let o = eqlines(&["construct", "lgc", "--graph", "complete:4"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("WrongOrder"));
    let o = eqlines(&["search", "--beta", "3", "--n", "11"]);
    assert_eq!(o.status.code(), Some(2));
    let o = eqlines(&["frobnicate"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn tampered_certificates_exit_1() {
    let dir = tempfile::tempdir().unwrap();
    let mut v: Value =
        serde_json::from_str(&ok(&["certify", "--graph", "kneser:8:2", "--beta", "3"])).unwrap();
    let original = v.clone();
    v["d"] = Value::from(6);
    let o = eqlines(&["verify", &save(dir.path(), "rank.json", &v.to_string())]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("rank mismatch"), "{}", stderr(&o));

    let mut v = original;
    v["beta"] = serde_json::json!({"poly": ["-3", "2"], "interval": [{"num": "3", "den": "2"}, {"num": "3", "den": "2"}]});
    let o = eqlines(&["verify", &save(dir.path(), "beta.json", &v.to_string())]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("eigenvalue threshold"), "{}", stderr(&o));

    let o = eqlines(&["verify", &save(dir.path(), "junk.json", "{not json")]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn convert_and_dimension_check() {
    let dir = tempfile::tempdir().unwrap();
    let cert = save(dir.path(), "k.json", &ok(&["certify", "--graph", "kneser:8:2", "--beta", "3"]));
    let v: Value = serde_json::from_str(&ok(&["convert", "--cert", &cert, "--target-d", "7"])).unwrap();
    assert_eq!(v["n"], 28);
    assert_eq!(v["eta"], serde_json::json!({"num": "3", "den": "1"}));
    let o = eqlines(&["convert", "--cert", &cert, "--target-d", "6"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("DimensionTooSmall"));
}

#[test]
fn realize_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let cert = save(dir.path(), "k.json", &ok(&["certify", "--graph", "kneser:8:2", "--beta", "3"]));
    let csv = dir.path().join("lines.csv");
    let o = eqlines(&["realize", "--cert", &cert, "--out", csv.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stderr(&o).contains("verify-lines: pass"));
    let text = fs::read_to_string(&csv).unwrap();
    assert_eq!(text.lines().count(), 28);
    assert!(text.lines().all(|l| l.split(',').count() == 7));
    ok(&["verify", csv.to_str().unwrap(), "--alpha", "1/3"]);

    let mut broken = text.replacen('.', ".9", 1);
    broken.push('\n');
    let bad = save(dir.path(), "bad.csv", &broken);
    let o = eqlines(&["verify", &bad, "--alpha", "1/3"]);
    assert_eq!(o.status.code(), Some(1));

    let json = dir.path().join("lines.json");
    ok(&["realize", "--cert", &cert, "--out", json.to_str().unwrap(), "--format", "json"]);
    assert!(ok(&["verify", json.to_str().unwrap()]).starts_with("PASS: 28 lines in R^7"));
}

#[test]
fn search_output_and_resume() {
    let out = ok(&["search", "--beta", "3", "--n", "4"]);
    assert!(out.starts_with("R_3(4) = 3"), "{out}");
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("r.jsonl");
    let f = file.to_str().unwrap();
    ok(&["search", "--beta", "3", "--n-lo", "2", "--n-hi", "5", "--out", f, "--workers", "2"]);
    let table = ok(&["search", "--beta", "3", "--n-lo", "2", "--n-hi", "6", "--out", f, "--resume", "--table"]);
    assert_eq!(fs::read_to_string(&file).unwrap().lines().count(), 5);
    assert_eq!(table.lines().count(), 7);
    let infeasible = ok(&["search", "--beta", "1/2", "--n", "3"]);
    assert!(infeasible.contains("infeasible"));
}

#[test]
fn parity_audit_summary() {
    let out = ok(&["parity-audit", "--max-n", "5"]);
    assert!(out.contains("all 52 isomorphism classes pass"), "{out}");
}

#[test]
fn graph6_on_stdin_and_stdout() {
    assert_eq!(ok(&["graph", "complete:2"]).trim(), "A_");
    let o = with_stdin(&["certify", "--graph", "-", "--beta", "3"], "C]\n");
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["graph6"], "C]");
    let o = with_stdin(&["verify", "-"], &stdout(&o));
    assert_eq!(o.status.code(), Some(0));
    let o = eqlines(&["graph", "random-cubic:14"]);
    assert_eq!(o.status.code(), Some(2));
}
