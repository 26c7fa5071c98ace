use serde_json::Value;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_markov-deform"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn strs(v: &Value) -> Vec<String> {
    v.as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_str().unwrap().to_string())
        .collect()
}

#[test]
fn qrat_five_halves() {
    let out = run(&["qrat", "5/2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["num"]["offset"], 0);
    assert_eq!(strs(&v["num"]["coeffs"]), ["1", "2", "1", "1"]);
    assert_eq!(strs(&v["den"]["coeffs"]), ["1", "1"]);
    for via in ["negative", "matrix"] {
        let other = run(&["qrat", "5/2", "--via", via]);
        assert_eq!(other.stdout, out.stdout, "{via}");
    }
}

#[test]
fn verify_qmarkov_passes() {
    let out = run(&["verify", "qmarkov", "--depth", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["checked"], 15);
    assert_eq!(v["passed"], true);
    assert!(out.stderr.is_empty());
}

#[test]
fn markov_tree_depth_two() {
    let out = run(&["tree", "markov", "--depth", "2", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    let triples: Vec<Vec<String>> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|n| strs(&n["values"]))
        .collect();
    assert_eq!(
        triples,
        [["1", "5", "2"], ["1", "13", "5"], ["5", "29", "2"]]
    );
}

#[test]
fn failing_verification_writes_witness() {
    let out = run(&["verify", "alt2", "--depth", "1"]);
    assert_eq!(out.status.code(), Some(1));
    let w: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(w["check"], "alt2");
    assert_eq!(w["failed"], 1);
    let fixed = run(&["verify", "alt2", "--depth", "3", "--corrected"]);
    assert_eq!(fixed.status.code(), Some(0));
}

#[test]
fn usage_errors_exit_two() {
    let out = run(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("valid subcommands: qrat, cf, word"));
    assert_eq!(run(&["qrat", "five"]).status.code(), Some(2));
    assert_eq!(
        run(&["qrat", "5/2", "--format", "dot"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["tree", "qmarkov", "--at", "t=3"]).status.code(),
        Some(2)
    );
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["tree", "qmarkov", "--depth", "4"][..],
        &["search", "figure4", "--format", "text"],
        &["tree", "castling", "--budget", "10000", "--format", "dot"],
        &["errata"],
    ] {
        assert_eq!(run(args).stdout, run(args).stdout, "{args:?}");
    }
}

#[test]
fn dot_labels_follow_specialisation() {
    let out = run(&[
        "tree", "tmarkov", "--depth", "3", "--format", "dot", "--at", "t=3",
    ]);
    let s = String::from_utf8(out.stdout).unwrap();
    assert!(s.starts_with("digraph"));
    assert!(s.contains("\"nLR\" [label=\"(13, 194, 5)\"]"));
    assert!(s.contains("\"nL\" -> \"nLR\""));
}

#[test]
fn castling_scan_reaches_listed_triples() {
    let out = run(&["tree", "castling", "--budget", "10000"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    let labels: Vec<Vec<String>> = v["markov_labels"]
        .as_array()
        .unwrap()
        .iter()
        .map(strs)
        .collect();
    assert!(labels.contains(&vec!["13".into(), "194".into(), "7561".into()]));
}

#[test]
fn errata_ledger_contents() {
    let out = run(&["errata"]);
    let v = stdout_json(&out);
    let entries = v.as_array().unwrap();
    let h = entries.iter().find(|e| e["id"] == "h-table").unwrap();
    assert!(h["computed"].as_str().unwrap().contains("value 89"));
    let t = entries
        .iter()
        .find(|e| e["id"] == "chebyshev-t-difference")
        .unwrap();
    assert!(t["computed"].as_str().unwrap().contains("t^2 - 4"));
}

#[test]
fn pv_and_word() {
    let v = stdout_json(&run(&["pv", "8/13"]));
    assert_eq!(strs(&v["label"]), ["433", "37666", "48928105"]);
    let v = stdout_json(&run(&["word", "1/3"]));
    assert_eq!(v["compact"], "a^2b");
}
