use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_equitable")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("valid json")
}

fn entries(v: &Value) -> Vec<Vec<String>> {
    v["entries"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r.as_array().unwrap().iter().map(|a| a.as_str().unwrap().to_string()).collect())
        .collect()
}

#[test]
fn emit_family_e() {
    let o = run(&["emit", "--family", "E", "--d", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["rows"], 4);
    let e = entries(&v);
    assert_eq!(e[0][0], "q^-3");
    assert_eq!(e[0][1], "q^3 - q^-3");
    assert_eq!(e[3][3], "q^3");
    assert_eq!(e[3][0], "0");
}

#[test]
fn emit_family_k_at_zero() {
    let o = run(&["emit", "--family", "K", "--d", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(entries(&json(&o)), vec![vec!["1".to_string()]]);
}

#[test]
fn emit_rep_table() {
    let o = run(&["emit", "--rep", "V:[y]row:x", "--d", "2", "--format", "table"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("q^2 - q^-2"));
    assert_eq!(s.lines().filter(|l| l.starts_with('[')).count(), 3);
}

#[test]
fn emit_is_deterministic() {
    let args = ["emit", "--basis", "V*:[z]col", "--d", "3", "--scalars", "xy=2,zx=3/2"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_symbolic_range() {
    let o = run(&["verify", "--suite", "all", "--d", "0..2"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(!s.contains("FAIL"));
    assert!(s.trim_end().ends_with("0 failed"));
}

#[test]
fn verify_rational_with_scalars() {
    let o = run(&[
        "verify", "--suite", "pairing,transition", "--d", "0..3", "--backend", "rational", "--q", "3", "--scalars",
        "xy=2,yz=-1/3,zx=5,yx=7,zy=1/2",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).trim_end().ends_with("0 failed"));
}

#[test]
fn emit_recognize_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("triple.json");
    let o = run(&["emit", "--triple", "--d", "3", "--backend", "rational", "--q", "2", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["recognize", path.to_str().unwrap(), "--backend", "rational"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["branch"], "quantum");
    assert_eq!(v["b"], "1/4");
    assert_eq!(v["q"], "2");
    assert!(v["certificate"].as_array().unwrap().iter().all(|c| c["passed"] == true));
    let x = entries(&v["normalized"]["x"]);
    assert_eq!(x[0][0], "8");
    assert_eq!(x[3][3], "1/8");
}

#[test]
fn recognize_inconsistent_triple() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("triple.json");
    let triple = r#"{
      "x": {"rows": 3, "cols": 3, "entries": [["1", "0", "0"], ["0", "2", "0"], ["0", "0", "4"]]},
      "y": {"rows": 3, "cols": 3, "entries": [["1", "0", "0"], ["1", "2", "0"], ["0", "1", "3"]]},
      "z": {"rows": 3, "cols": 3, "entries": [["4", "1", "0"], ["0", "2", "1"], ["0", "0", "1"]]}
    }"#;
    fs::write(&path, triple).unwrap();
    let o = run(&["recognize", path.to_str().unwrap(), "--backend", "rational"]);
    assert_eq!(o.status.code(), Some(4), "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn recognize_classical_with_hint() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("classical.json");
    let triple = r#"{
      "x": {"rows": 2, "cols": 2, "entries": [["-1", "0"], ["0", "1"]]},
      "y": {"rows": 2, "cols": 2, "entries": [["1", "0"], ["1", "-1"]]},
      "z": {"rows": 2, "cols": 2, "entries": [["1", "-4"], ["0", "-1"]]}
    }"#;
    fs::write(&path, triple).unwrap();
    let o = run(&["recognize", path.to_str().unwrap(), "--backend", "rational", "--b", "1"]);
    let v = json(&o);
    assert_eq!(v["branch"], "classical_sl2");
    assert_eq!(v["b"], "1");
}

#[test]
fn malformed_input_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    fs::write(&path, r#"{"x": 1}"#).unwrap();
    let o = run(&["recognize", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    let o = run(&["recognize", dir.path().join("missing.json").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    let ragged = r#"{
      "x": {"rows": 2, "cols": 2, "entries": [["1"], ["0", "1"]]},
      "y": {"rows": 2, "cols": 2, "entries": [["1", "0"], ["0", "1"]]},
      "z": {"rows": 2, "cols": 2, "entries": [["1", "0"], ["0", "1"]]}
    }"#;
    fs::write(&path, ragged).unwrap();
    let o = run(&["recognize", path.to_str().unwrap(), "--backend", "rational"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn bad_names_exit_2() {
    assert_eq!(run(&["emit", "--family", "NOPE", "--d", "2"]).status.code(), Some(2));
    assert_eq!(run(&["emit", "--rep", "W:[x]row:x", "--d", "2"]).status.code(), Some(2));
    assert_eq!(run(&["transition", "--from", "[x]row", "--to", "[w]col", "--d", "2"]).status.code(), Some(2));
    assert_eq!(run(&["emit", "--family", "E", "--d", "2", "--q", "2"]).status.code(), Some(2));
    assert_eq!(run(&["emit", "--family", "E", "--d", "2", "--backend", "rational"]).status.code(), Some(2));
    assert_eq!(run(&["emit", "--family", "E", "--d", "x"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--suite", "nonsense", "--d", "1"]).status.code(), Some(2));
}

#[test]
fn term_bound_exits_5() {
    let o = run(&["verify", "--suite", "algebra", "--d", "3", "--term-bound", "3"]);
    assert_eq!(o.status.code(), Some(5));
    assert!(String::from_utf8_lossy(&o.stderr).contains("term bound"));
}

#[test]
fn transition_and_gram() {
    let o = run(&["transition", "--space", "V", "--from", "[x]row", "--to", "[y]row", "--d", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["rows"], 3);
    let o = run(&["gram", "--v", "[x]row", "--vdual", "[x]^{inv}col", "--d", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let g = entries(&json(&o));
    for (i, r) in g.iter().enumerate() {
        for (j, a) in r.iter().enumerate() {
            assert_eq!(a, if i == j { "1" } else { "0" });
        }
    }
}
