use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cohesion-lab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

const G1: &str = "a b\na c\nb c\nd e\nd f\ne f\na e\nc d\n";

#[test]
fn check_exit_codes() {
    let dir = TempDir::new().unwrap();
    let g1 = write(dir.path(), "g1.txt", G1);
    let out = run(&["check", &g1]);
    assert_eq!(out.status.code(), Some(1));
    let json: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["status"], "not_cohesive");
    let set: Vec<&str> = json["certificate"]["blocking_set"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap())
        .collect();
    assert!(set == ["a", "b", "c"] || set == ["d", "e", "f"], "{set:?}");

    let star = write(dir.path(), "star.txt", "a b\na c\na d\na e\n");
    let out = run(&["check", &star]);
    assert_eq!(out.status.code(), Some(0));
    let json: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["status"], "cohesive");
    assert!(json.get("certificate").is_none());
}

#[test]
fn inconclusive_and_cap() {
    let dir = TempDir::new().unwrap();
    // K_{13,13}: no quick test applies and 26 nodes exceed the default cap
    let mut text = String::new();
    for u in 0..13 {
        for v in 13..26 {
            text += &format!("{u} {v}\n");
        }
    }
    let k = write(dir.path(), "k1313.txt", &text);
    assert_eq!(run(&["check", &k, "--quick-only"]).status.code(), Some(2));
    assert_eq!(run(&["check", &k]).status.code(), Some(4));
}

#[test]
fn bad_input() {
    let dir = TempDir::new().unwrap();
    let bad = write(dir.path(), "bad.txt", "a b c\n");
    assert_eq!(run(&["check", &bad]).status.code(), Some(3));
    let looped = write(dir.path(), "loop.txt", "a a\n");
    assert_eq!(run(&["check", &looped]).status.code(), Some(3));
    assert_eq!(
        run(&["check", "/nonexistent/graph.txt"]).status.code(),
        Some(3)
    );
    assert_eq!(run(&["check"]).status.code(), Some(64));
    assert_eq!(run(&["reduce", &bad, "--k", "2"]).status.code(), Some(3));
}

#[test]
fn reduce_writes_sidecar() {
    let dir = TempDir::new().unwrap();
    let tri = write(dir.path(), "tri.txt", "0 1\n1 2\n0 2\n");
    let out_path = dir.path().join("h.edgelist");
    let out = run(&[
        "reduce",
        &tri,
        "--k",
        "3",
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let sidecar: Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("h.json")).unwrap()).unwrap();
    assert_eq!(sidecar["v1"], 18);
    assert_eq!(sidecar["v2"], 15);
    assert_eq!(sidecar["d"], 6);
    assert_eq!(sidecar["nodes"], 33);
    let edges = fs::read_to_string(&out_path).unwrap();
    let count = edges
        .lines()
        .filter(|l| !l.starts_with('#') && !l.is_empty())
        .count();
    assert_eq!(Some(count as u64), sidecar["edges"].as_u64());

    let out = run(&["reduce", &tri, "--k", "2"]);
    assert_eq!(out.status.code(), Some(5));
}

#[test]
fn enumerate_and_report() {
    let dir = TempDir::new().unwrap();
    let csv = dir.path().join("n5.csv");
    let out = run(&["enumerate", "5", "--out", csv.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = fs::read_to_string(&csv).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("n,s,b,c,accuracy,core_stable_rate,improved_node_rate,method,seed")
    );
    assert!(lines.all(|l| l.starts_with("5,21,")));

    let sampled = dir.path().join("n8.csv");
    let out = run(&[
        "sample",
        "8",
        "--samples",
        "50",
        "--methods",
        "ap",
        "--seed",
        "3",
        "--out",
        sampled.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let again = run(&[
        "sample",
        "8",
        "--samples",
        "50",
        "--methods",
        "ap",
        "--seed",
        "3",
    ]);
    assert_eq!(
        fs::read_to_string(&sampled).unwrap(),
        String::from_utf8(again.stdout).unwrap()
    );

    let out = run(&[
        "report",
        dir.path().join("n5.json").to_str().unwrap(),
        dir.path().join("n8.json").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let merged = String::from_utf8(out.stdout).unwrap();
    assert_eq!(merged.lines().count(), 1 + 2 + 1);
    let md = run(&[
        "report",
        "--markdown",
        dir.path().join("n5.json").to_str().unwrap(),
    ]);
    assert!(String::from_utf8(md.stdout).unwrap().starts_with('|'));
}

#[test]
fn real_network_report() {
    let karate = Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/tests/data/karate.edgelist");
    let out = run(&["real", karate.to_str().unwrap(), "--name", "ZA"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("dataset,nodes,edges,method,communities"));
    assert!(text
        .lines()
        .nth(1)
        .unwrap()
        .starts_with("ZA,34,78,grand,1,"));
}
