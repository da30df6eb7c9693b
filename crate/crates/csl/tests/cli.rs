use std::io::Write;
use std::process::{Command, Output};

use csl::report::{IdealReport, PvdReport, QuadReport, SemigroupReport};

fn csl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_csl")).args(args).output().expect("spawn csl")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write_tmp(contents: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

#[test]
fn quad_json_round_trips_and_is_deterministic() {
    let a = csl(&["quad", "-d", "-15", "-f", "1", "--json"]);
    let b = csl(&["quad", "-d", "-15", "-f", "1", "--json"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let report: QuadReport = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(report.classes.len(), 2);
    assert!(report.clifford);
    assert!(!report.boolean);
    let again = csl::report::to_json(&report).unwrap();
    assert_eq!(again.trim(), stdout(&a).trim());
}

#[test]
fn quad_small_cases() {
    let r: QuadReport = serde_json::from_str(&stdout(&csl(&["quad", "-d", "-3", "-f", "2", "--json"]))).unwrap();
    assert_eq!(r.classes.len(), 2);
    assert!(r.boolean);
    let r: QuadReport = serde_json::from_str(&stdout(&csl(&["quad", "-d", "-3", "-f", "1", "--json"]))).unwrap();
    assert_eq!(r.classes.len(), 1);
}

#[test]
fn quad_csv_has_header_and_rows() {
    let out = stdout(&csl(&["quad", "-d", "-15", "--csv"]));
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[0].starts_with("class,label"));
}

#[test]
fn window_verdicts() {
    let parse = |args: &[&str]| -> IdealReport {
        let o = csl(args);
        assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
        serde_json::from_str(&stdout(&o)).unwrap()
    };
    let r = parse(&["window", "-c", "X^2", "-D", "const", "-I", "X^2-1,X^3-1", "--json"]);
    assert!(r.regular && r.stable && !r.strongly_stable);
    assert_eq!(r.endo_ring, "R");
    let r = parse(&["window", "-c", "X^2", "-D", "const", "-I", "X^2-1,X^3-1", "--field", "F_5", "--json"]);
    assert!(r.regular && r.stable && !r.strongly_stable);
    let r = parse(&["window", "-c", "X^2", "-D", "const", "-I", "X^2,X^3", "--json"]);
    assert!(r.strongly_stable);
    let r = parse(&["window", "-c", "X", "-D", "const", "-I", "1", "--json"]);
    assert!(r.regular && r.stable && r.strongly_stable);
}

#[test]
fn window_rejects_non_subalgebra() {
    let o = csl(&["window", "-c", "X^2", "-D", "X", "-I", "1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn tower_file_matches_preset() {
    let tower = write_tmp(
        r#"{"base": "Q", "dim": 2,
            "mult_table": [[[1,0],[0,1]], [[0,1],[2,0]]],
            "k_basis_rows": [[1,0]],
            "labels": ["1", "r"]}"#,
    );
    let o = csl(&["pvd", "--tower", tower.path().to_str().unwrap(), "--json"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let r: PvdReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(r.boolean);
    assert_eq!(r.classes.len(), 2);
    let preset: PvdReport = serde_json::from_str(&stdout(&csl(&["pvd", "--preset", "sqrt2", "--json"]))).unwrap();
    assert_eq!(r.table, preset.table);
}

#[test]
fn pvd_single_ideal() {
    let o = csl(&["pvd", "--preset", "sqrt2-sqrt3", "--level", "1", "--w", "1,0,0,0;0,1,0,0;0,0,1,0", "--json"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let r: IdealReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(!r.regular);
}

#[test]
fn pvd_witness_for_quartic() {
    let r: PvdReport = serde_json::from_str(&stdout(&csl(&["pvd", "--preset", "sqrt2-sqrt3", "--json"]))).unwrap();
    assert!(!r.clifford);
    assert!(r.witness.unwrap().strict);
}

#[test]
fn semigroup_file() {
    let f = write_tmp(r#"{"labels": ["e", "z"], "table": [[0, 1], [1, 1]]}"#);
    let o = csl(&["semigroup", f.path().to_str().unwrap(), "--json"]);
    assert!(o.status.success());
    let r: SemigroupReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(r.clifford && r.boolean);
    assert_eq!(r.size, 2);

    let bad = write_tmp(r#"{"table": [[0, 1], [0, 1]]}"#);
    assert_eq!(csl(&["semigroup", bad.path().to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn exit_codes() {
    assert_eq!(csl(&["examples", "example-5.4"]).status.code(), Some(0));
    assert_eq!(csl(&["examples", "no-such-example"]).status.code(), Some(2));
    assert_eq!(csl(&["quad", "-d", "5"]).status.code(), Some(2));
    assert_eq!(csl(&["quad"]).status.code(), Some(2));
    assert_eq!(csl(&["pvd", "--preset", "nope"]).status.code(), Some(2));
}

#[test]
fn examples_json_lists_checks() {
    let o = csl(&["examples", "example-4.6", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v[0]["id"], "example-4.6");
    assert!(v[0]["checks"].as_array().unwrap().len() >= 7);
}
