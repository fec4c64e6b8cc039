use std::path::PathBuf;
use std::process::{Command, Output};

use rp2conf::catalog::Catalog;
use rp2conf::pointfile::format_point_file;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rp2conf")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("rp2conf-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn seven(name: &str) -> PathBuf {
    let e = Catalog::shipped().seven(name).unwrap();
    write(&format!("{name}.txt"), &format_point_file(&e.points))
}

#[test]
fn classify_seven_points() {
    let f = seven("(D,6)");
    let o = run(&["classify", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("class (3,4,0,0)_1"), "{s}");
    assert_eq!(s.matches("cubic node").count(), 7);
}

#[test]
fn classify_six_points_as_json() {
    let e = Catalog::shipped().find(rp2conf::catalog::EntryKind::Six, "gamma").unwrap();
    let f = write("gamma.txt", &format_point_file(&e.points));
    let o = run(&["classify", f.to_str().unwrap(), "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["class"], "γ");
    assert_eq!(v["pencils"].as_array().unwrap().len(), 6);
}

#[test]
fn degenerate_input_exits_4() {
    let f = write("line.txt", "1 0 0\n0 1 0\n1 1 0\n3 5 7\n2 -3 11\n-4 1 9\n");
    let o = run(&["classify", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(4));
    assert!(stdout(&o).contains("line-wall"));
    let c = Catalog::shipped().coconic('B').unwrap();
    let f = write("coconic.txt", &format_point_file(&c.points));
    let o = run(&["classify", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(4));
    assert!(stdout(&o).contains("conic-wall B"));
}

#[test]
fn parse_errors_exit_3() {
    let f = write("bad.txt", "1 0 0\n0 1 x\n");
    let o = run(&["classify", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    assert_eq!(run(&["classify", "/nonexistent/points.txt"]).status.code(), Some(3));
    let f = seven("(E,6)");
    assert_eq!(run(&["cross", f.to_str().unwrap(), "--triple", "45"]).status.code(), Some(3));
    assert_eq!(run(&["graph", "--level", "5"]).status.code(), Some(3));
}

#[test]
fn cross_writes_the_far_side() {
    let f = seven("(D,6)");
    let out = write("cross.txt", "");
    let o = run(&["cross", f.to_str().unwrap(), "--triple", "456", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let s = std::fs::read_to_string(&out).unwrap();
    assert!(s.contains("wall W18"), "{s}");
    assert!(s.contains("4, 5, 17, 6, 27, {37,12}, 13, 23"), "{s}");
    assert!(s.contains("after (1,4,2,0)"), "{s}");
}

#[test]
fn graph_formats() {
    let dot = run(&["graph", "--level", "6", "--conics", "--format", "dot"]);
    assert_eq!(dot.status.code(), Some(0));
    assert!(stdout(&dot).starts_with("graph"));
    let json = run(&["graph", "--level", "6", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(v["vertices"].as_array().unwrap().len(), 4);
    assert_eq!(v["edges"].as_array().unwrap().len(), 3);
}

#[test]
fn census_and_representatives() {
    let o = run(&["census", "--points", "six", "--samples", "50", "--seed", "4", "--jobs", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["samples"], 50);
    assert_eq!(v["unknown"], 0);
    assert_eq!(run(&["census", "--samples", "0"]).status.code(), Some(3));
    let r = run(&["representatives", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&r)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 36);
}

#[test]
fn tables_match() {
    let o = run(&["tables"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("all tables match\n"));
}
