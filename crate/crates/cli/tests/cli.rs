use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_alexander"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn compute_corpus_mapping_torus() {
    let out = run(&["compute", "--corpus", "mapping-torus-A"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["delta"], "t^2 - 4*t + 1");
    assert_eq!(v["b1"], 1);
    assert_eq!(v["torsion"], serde_json::json!([2]));
    assert_eq!(v["symmetry"], "UnitSymmetric");
    assert_eq!(v["trace"], -2);
}

#[test]
fn compute_t3() {
    let out = run(&["compute", "--corpus", "t3"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["delta"], "1");
}

#[test]
fn compute_from_file_round_trips_corpus_show() {
    let dir = tempfile::tempdir().unwrap();
    let shown = run(&["corpus", "show", "heisenberg"]);
    assert_eq!(code(&shown), 0);
    let path = dir.path().join("heis.txt");
    fs::write(&path, &shown.stdout).unwrap();
    let out = run(&["compute", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(
        (v["b1"].clone(), v["delta"].clone()),
        (2.into(), "1".into())
    );
}

#[test]
fn compute_usage_and_parse_errors() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("nonsense.txt");
    fs::write(&bad, "this is not a presentation").unwrap();
    assert_eq!(code(&run(&["compute", bad.to_str().unwrap()])), 2);
    assert_eq!(code(&run(&["compute", "/definitely/missing/file"])), 2);
    assert_eq!(code(&run(&["compute"])), 2);
    assert_eq!(code(&run(&["compute", "--corpus", "nope"])), 2);
    assert_eq!(code(&run(&["frobnicate"])), 2);
}

#[test]
fn compute_b1_zero_fails() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("z2.txt");
    fs::write(&path, "<x | x^2>").unwrap();
    let out = run(&["compute", path.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    assert!(!out.stderr.is_empty());
}

#[test]
fn classify_examples() {
    let v = json(&run(&["classify", "t^2 - 4*t + 1"]));
    assert_eq!(v["symmetry"], "UnitSymmetric");
    assert_eq!(v["trace"], -2);
    assert_eq!(v["realizable"], true);

    let v = json(&run(&["classify", "t - 1"]));
    assert_eq!(v["symmetry"], "ModUnitSymmetric");
    assert_eq!(v["trace"], 0);
    assert_eq!(v["realizable"], false);

    let v = json(&run(&["classify", "t + t^-1"]));
    assert_eq!(v["symmetry"], "Symmetric");
    assert_eq!(v["trace"], 2);
    assert_eq!(v["realizable"], true);

    let v = json(&run(&["classify", "t1*t2^-1 + t1^-1*t2"]));
    assert_eq!(v["symmetry"], "Symmetric");
    assert_eq!(v["realizable"], Value::Null);
}

#[test]
fn classify_errors() {
    assert_eq!(code(&run(&["classify", "t^2 + + 1"])), 2);
    assert_eq!(code(&run(&["classify", "0"])), 1);
}

#[test]
fn verify_torsion_cover() {
    let out = run(&[
        "verify",
        "torsion-cover",
        "--corpus",
        "mapping-torus-A",
        "--primes",
        "3",
    ]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!((v["lhs"].clone(), v["rhs"].clone()), (50.into(), 50.into()));
    assert_eq!(v["status"], "equal");
    assert_eq!(v["theorem"], "torsion-cover");
}

#[test]
fn verify_suites_pass() {
    for args in [
        &["verify", "levine", "--seed", "7", "--cases", "50"][..],
        &["verify", "blanchfield", "--corpus", "all"],
        &["verify", "b1-one-characterization", "--cases", "10"],
        &[
            "verify",
            "shalen-wagreich",
            "--corpus",
            "s1xs2",
            "--primes",
            "5",
        ],
        &[
            "verify",
            "hironaka",
            "--corpus",
            "heisenberg",
            "--primes",
            "2,3",
        ],
        &["verify", "b1-ge-4"],
    ] {
        let out = run(args);
        assert_eq!(
            code(&out),
            0,
            "{args:?}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
        let v = json(&out);
        for key in ["theorem", "inputs", "lhs", "rhs", "status"] {
            assert!(v.get(key).is_some(), "{args:?} lacks {key}");
        }
    }
}

#[test]
fn verify_failures() {
    assert_eq!(code(&run(&["verify", "fermat"])), 2);
    assert_eq!(code(&run(&["verify", "levine", "--seed", "x"])), 2);
    assert_eq!(code(&run(&["verify", "b1-ge-4", "--corpus", "t3"])), 1);
    assert_eq!(
        code(&run(&[
            "verify",
            "shalen-wagreich",
            "--corpus",
            "t3",
            "--primes",
            "7"
        ])),
        3
    );
    assert_eq!(
        code(&run(&[
            "verify",
            "hironaka",
            "--corpus",
            "t3",
            "--primes",
            "3",
            "--max-index",
            "8"
        ])),
        3
    );
}

#[test]
fn output_is_byte_stable() {
    let a = run(&["verify", "levine", "--seed", "3", "--cases", "10"]);
    let b = run(&["verify", "levine", "--seed", "3", "--cases", "10"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn corpus_listing() {
    let out = run(&["corpus", "list"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    let names: Vec<&str> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["name"].as_str().unwrap())
        .collect();
    assert!(names.contains(&"mapping-torus-A") && names.contains(&"connected-sum-5"));
    let plain = run(&["corpus", "list", "--json", "false"]);
    assert!(String::from_utf8_lossy(&plain.stdout).contains("t3\t<x, y, z |"));
    assert_eq!(code(&run(&["corpus", "show", "nope"])), 2);
}

#[test]
fn plain_text_output() {
    let out = run(&["compute", "--corpus", "t3", "--json", "false"]);
    assert_eq!(code(&out), 0);
    assert!(String::from_utf8_lossy(&out.stdout).contains("delta: 1"));
}
