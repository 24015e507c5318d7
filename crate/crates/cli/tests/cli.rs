use std::fs;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_clutterlab")).args(args).output().unwrap()
}

fn write(dir: &tempfile::TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

const TRIANGLE: &str = "# C3\nv: x1 x2 x3\ne: x1 x2\ne: x2 x3\ne: x1 x3\n";

#[test]
fn check_triangle() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(&dir, "t.txt", TRIANGLE);
    let out = run(&["check", "--props", "konig,pp,alpha0,beta1", &f]);
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let r = &json["reports"][0];
    assert_eq!(r["summary"]["konig"], false);
    assert_eq!(r["summary"]["alpha0"], 2);

    let strict = run(&["check", "--strict", "--props", "konig", &f]);
    assert_eq!(strict.status.code(), Some(1));

    let csv = run(&["check", "--format", "csv", "--props", "konig,pp", &f]);
    assert_eq!(String::from_utf8(csv.stdout).unwrap().lines().count(), 3);
}

#[test]
fn dropped_vertices_are_reported() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(&dir, "d.txt", "v: a b c\ne: a b\n");
    let out = run(&["check", "--props", "alpha0", &f]);
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["reports"][0]["dropped_vertices"], serde_json::json!(["c"]));
}

#[test]
fn transforms() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(&dir, "e.txt", "v: x1 x2\ne: x1 x2\n");
    let out = run(&["transform", "parallelize", "--w", "3,3", &f]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("e:")).count(), 9);

    let out = run(&["transform", "whisker", "--vertex", "x1", &f]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "v: x1 x2 z1\ne: x1 x2\ne: x1 z1\n");

    let out = run(&["transform", "minor", "--contract", "x1,x2", &f]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn usage_and_size_errors() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(3));
    assert_eq!(run(&["check", "--field", "r", "x"]).status.code(), Some(3));
    assert_eq!(run(&["check", "/nonexistent/file"]).status.code(), Some(3));
    assert_eq!(run(&["scan", "--n", "9"]).status.code(), Some(4));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn scan_and_verify() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("scan.json");
    let out = run(&["scan", "--n", "3", "--d", "2", "--out", out_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_slice(&fs::read(&out_path).unwrap()).unwrap();
    assert_eq!(json["candidates"], 0);

    let out = run(&["verify", "--n", "3", "--d", "2", "--iso"]);
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["violations"], serde_json::json!([]));
}
