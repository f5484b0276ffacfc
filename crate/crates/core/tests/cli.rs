use std::process::Command;

use linloop::certificate::{verify, CertificateDoc, WitnessDoc};

const BIN: &str = env!("CARGO_BIN_EXE_linloop");

const GOLDEN: &str = r#"{"n":4,"A":[[2,-1,0,0],[-1,2,-1,0],[0,-1,2,1],[0,0,0,2]],"f":[-1,-1,1,1]}"#;
const COMPANION: &str = r#"{"n":2,"A":[["0","1"],["1","-2"]],"f":["1","0"]}"#;

fn linloop(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(BIN).args(args).output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn temp_file(name: &str, contents: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("linloop-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn check_from_file_writes_verifiable_certificate() {
    let input = temp_file("golden.json", GOLDEN);
    let cert = input.with_file_name("golden.cert.json");
    let (code, stdout, _) = linloop(&[
        "check",
        input.to_str().unwrap(),
        "--format",
        "matrix",
        "--out",
        cert.to_str().unwrap(),
    ]);
    assert_eq!(code, 1);
    assert!(stdout.contains("NONTERMINATING"));
    let doc = CertificateDoc::from_json(&std::fs::read_to_string(&cert).unwrap()).unwrap();
    assert!(verify(&doc).unwrap().is_empty());
    let (vcode, vout, _) = linloop(&["verify", cert.to_str().unwrap()]);
    assert_eq!(vcode, 0);
    assert!(vout.contains("verified"));
}

#[test]
fn dsl_file_terminating() {
    let input = temp_file(
        "jordan.loop",
        "vars x, y, z;\nwhile (z > 0) {\n  x := x + y;\n  z := -z;\n}\n",
    );
    let (code, stdout, stderr) = linloop(&["check", input.to_str().unwrap()]);
    assert_eq!(code, 0, "{stderr}");
    assert!(stdout.starts_with("verdict: TERMINATING"));
}

#[test]
fn witness_json() {
    let (code, stdout, _) = linloop(&["witness", "--inline", COMPANION, "--json"]);
    assert_eq!(code, 1);
    let doc = WitnessDoc::from_json(&stdout).unwrap();
    assert_eq!(doc.rank_r, 1);
    assert_eq!(doc.eigenvalue.minpoly, vec!["-1", "2", "1"]);
    let sim = doc.simulation.unwrap();
    assert!(sim.survived);
    assert_eq!(sim.steps, 50);
}

#[test]
fn simulate_and_bench() {
    let (code, stdout, _) = linloop(&[
        "simulate",
        "--inline",
        "while (z > 0) { x := x + y; z := -z; }",
        "--x",
        "0,0,1",
        "--bound",
        "10",
    ]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "terminated at k=1");

    let (code, stdout, _) = linloop(&[
        "bench", "--dims", "3", "--loops", "20", "--seed", "3", "--json",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    let row = &v["rows"][0];
    assert_eq!(
        row["terminating"].as_u64().unwrap() + row["nonterminating"].as_u64().unwrap(),
        20
    );
    let (_, again, _) = linloop(&[
        "bench", "--dims", "3", "--loops", "20", "--seed", "3", "--json",
    ]);
    let w: serde_json::Value = serde_json::from_str(&again).unwrap();
    assert_eq!(v["rows"][0]["terminating"], w["rows"][0]["terminating"]);
}

#[test]
fn errors_exit_two() {
    for args in [
        vec!["check", "--inline", "while (x > 0) { }"],
        vec!["check", "--inline", "{\"n\": 2}"],
        vec!["check", "/definitely/not/here"],
        vec!["simulate", "--inline", COMPANION, "--x", "1"],
        vec![
            "witness",
            "--inline",
            r#"{"n":2,"A":[[3,-2],[4,-1]],"f":[3,-1]}"#,
        ],
        vec!["bench", "--dims", "12"],
        vec![],
    ] {
        let (code, _, stderr) = linloop(&args);
        assert_eq!(code, 2, "{args:?}");
        assert!(!stderr.is_empty(), "{args:?}");
    }
}
