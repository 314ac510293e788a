use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_blobtl")).args(args).output().expect("spawn")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut v = args.to_vec();
    v.extend(["--output", "json"]);
    serde_json::from_str(&stdout(&v)).unwrap()
}

#[test]
fn basis_count() {
    assert_eq!(stdout(&["basis", "--type", "B", "--n", "3", "--count-only"]).trim(), "20");
    assert_eq!(stdout(&["basis", "--type", "D", "--n", "4", "--count-only"]).trim(), "35");
}

#[test]
fn jw_d2_has_three_terms() {
    let v = json(&["jw", "--kind", "d", "--n", "2", "--ring", "ratfunc"]);
    let text = v.to_string();
    let terms = v["terms"].as_array().or_else(|| v.as_array()).unwrap_or_else(|| panic!("{text}"));
    assert_eq!(terms.len(), 3);
}

#[test]
fn converge_reaches_target() {
    let v = json(&["converge", "--n", "2", "--target", "9", "--max-power", "4", "--precision", "32"]);
    assert_eq!(v["achieved_at"], 2);
    assert_eq!(v["status"], "achieved");
}

#[test]
fn every_subcommand_emits_json() {
    let cases: &[&[&str]] = &[
        &["basis", "--type", "D", "--n", "2"],
        &["mul", "--n", "2", "--left", "U1", "--right", "U1"],
        &["jw", "--kind", "b+", "--n", "2", "--ring", "series", "--check"],
        &["higher", "--eps", "1,-1"],
        &["weyl", "order", "--type", "D", "--n", "4"],
        &["weyl", "classes", "--n", "3"],
        &["weyl", "dims", "--n", "3"],
        &["symmetrizer", "--bipartition", "1,1|1"],
        &["braid", "eval", "--family", "D", "--n", "3", "--word", "s0' s1 s2^-1"],
        &["braid", "eval", "--n", "3", "--random-length", "6", "--seed", "7"],
        &["braid", "reidemeister", "--n", "3", "--jobs", "2"],
        &["braid", "embed", "--n", "2", "--word", "s0 s1"],
        &["affine", "--n", "2", "--check"],
        &["twist", "--family", "D", "--n", "2", "--power", "2", "--precision", "10"],
        &["rep", "eigen", "--n", "3"],
        &["rep", "rank", "--n", "3"],
        &["rep", "project", "--kind", "b+", "--n", "3"],
        &["rep", "op", "--gen", "B", "--n", "2"],
    ];
    for args in cases {
        json(args);
    }
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["braid", "eval", "--n", "4", "--random-length", "10", "--seed", "3", "--output", "json"][..],
        &["braid", "reidemeister", "--n", "4", "--jobs", "4", "--output", "json"],
        &["jw", "--kind", "d", "--n", "3"],
    ] {
        let a = run(args);
        let b = run(args);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
    let a = stdout(&["braid", "eval", "--n", "4", "--random-length", "10", "--seed", "3"]);
    let b = stdout(&["braid", "eval", "--n", "4", "--random-length", "10", "--seed", "4"]);
    assert_ne!(a, b);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["basis", "--n"]).status.code(), Some(2));
    assert_eq!(run(&["basis", "--n", "3", "--bogus"]).status.code(), Some(2));
    let bad = run(&["mul", "--n", "2", "--left", "U7", "--right", "1"]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&bad.stderr).starts_with("error:"));
    assert_eq!(run(&["twist", "--family", "B1", "--n", "2", "--precision", "4"]).status.code(), Some(1));
}
