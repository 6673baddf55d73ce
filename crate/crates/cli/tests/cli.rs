//! End-to-end tests of the `dtl` binary: exit codes, report formats, and
//! the documented command examples.

use std::path::Path;
use std::process::{Command, Output};

fn dtl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dtl"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn rank_examples() {
    let out = dtl(&["rank", "--algebra", "brA", "--m", "3"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("expected 105, got 105"));

    let out = dtl(&["rank", "--algebra", "dtlB", "--n", "2"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("expected 6, got 6"));

    let out = dtl(&["rank", "--algebra", "dtlC", "--n", "2"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("expected 6, got 6"));

    let out = dtl(&["rank", "--type", "B4"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("expected 55, got 55"));

    let out = dtl(&["rank", "--algebra", "tlA", "--n", "4"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("expected 42, got 42"));
}

#[test]
fn rank_usage_errors_exit_2() {
    let out = dtl(&["rank", "--algebra", "brA"]);
    assert_eq!(out.status.code(), Some(2));
    let out = dtl(&["rank", "--algebra", "nosuch", "--n", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_suites() {
    for args in [
        vec!["verify", "--suite", "def11", "--type", "A4"],
        vec!["verify", "--suite", "def11", "--type", "D4"],
        vec!["verify", "--suite", "rem31", "--type", "A4"],
        vec!["verify", "--suite", "def01", "--type", "B3"],
        vec!["verify", "--suite", "def02", "--type", "C2"],
        vec!["verify", "--suite", "newrel", "--n", "4"],
        vec!["verify", "--suite", "heightinv", "--type", "A3"],
    ] {
        let out = dtl(&args);
        assert!(out.status.success(), "{:?}: {}", args, stdout(&out));
        assert!(stdout(&out).contains("verdict: pass"));
    }
    let out = dtl(&["verify", "--suite", "nosuch"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_json_report_schema() {
    let out = dtl(&["verify", "--suite", "def02", "--type", "C2", "--json"]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["schema"], 1);
    assert_eq!(report["pass"], true);
    assert_eq!(report["checks"].as_array().unwrap().len(), 16);
    for check in report["checks"].as_array().unwrap() {
        assert_eq!(check["pass"], true, "{}", check["name"]);
    }
}

#[test]
fn orbit_rejects_inadmissible_seed_with_suggestion() {
    let out = dtl(&["orbit", "--type", "D4", "--seed", "a1,a2,a4"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr).into_owned();
    assert!(err.contains("not admissible"));
    assert!(err.contains("a1+a2+2a3+a4"));
}

#[test]
fn hasse_writes_height_ranked_dot() {
    let path = std::env::temp_dir().join("dtl_test_a4.dot");
    let out = dtl(&[
        "hasse",
        "--type",
        "A4",
        "--seed",
        "a1,a3",
        "--dot",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let dot = std::fs::read_to_string(&path).unwrap();
    assert_eq!(dot.matches("\\nht ").count(), 15); // 15 nodes
    assert_eq!(dot.matches(" -> ").count(), 24); // raising edges with labels
    assert!(dot.contains("rank=same"));
    std::fs::remove_file(&path).ok();
}

#[test]
fn hasse_is_deterministic() {
    let run = || {
        let out = dtl(&["hasse", "--type", "A4", "--seed", "a1,a3"]);
        assert!(out.status.success());
        stdout(&out)
            .lines()
            .filter(|l| !l.starts_with("# dtl")) // the duration header
            .collect::<Vec<_>>()
            .join("\n")
    };
    assert_eq!(run(), run());
}

#[test]
fn action_example() {
    let out = dtl(&["action", "--type", "A2", "--word", "E1", "--set", "a2"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("result: {a1}"));

    // a Weyl word that fixes its input
    let out = dtl(&[
        "action",
        "--type",
        "A4",
        "--word",
        "R4 R1 R2 R1",
        "--set",
        "a1+a2,a4",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("result: {a4, a1+a2}"));
}

#[test]
fn closure_example() {
    let out = dtl(&["closure", "--type", "D4", "--roots", "a1,a2,a4"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("a1+a2+2a3+a4"));
}

#[test]
fn enumerate_counts() {
    let out = dtl(&["enumerate", "--type", "A3", "--gens", "tl", "--count"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("14 elements"));

    let out = dtl(&["enumerate", "--type", "A3", "--gens", "full", "--count"]);
    assert!(stdout(&out).contains("105 elements"));

    let out = dtl(&[
        "enumerate",
        "--type",
        "D3",
        "--gens",
        "tl",
        "--layer",
        "l1",
        "--count",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("6 elements"));
}

#[test]
fn enumerate_cap_fails_with_exit_1_or_2() {
    let out = dtl(&[
        "enumerate",
        "--type",
        "A4",
        "--gens",
        "full",
        "--count",
        "--max-elements",
        "10",
    ]);
    assert!(!out.status.success());
}

#[test]
fn iso_check_writes_witnesses() {
    let path = std::env::temp_dir().join("dtl_test_witnesses.json");
    let out = dtl(&[
        "iso-check",
        "--n",
        "2",
        "--witnesses",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stdout(&out));
    let payload: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(payload["schema"], 1);
    assert_eq!(payload["n"], 2);
    let sizes = payload["sizes"].as_array().unwrap();
    assert_eq!(sizes.len(), 3);
    for size in sizes {
        for w in size["witnesses"].as_array().unwrap() {
            assert!(w["word"].is_string(), "unreached target {}", w["target"]);
        }
    }
    std::fs::remove_file(&path).ok();
    assert!(Path::new(env!("CARGO_BIN_EXE_dtl")).exists());
}

#[test]
fn rootsys_lists_positive_roots() {
    let out = dtl(&["rootsys", "--type", "D4", "--list-positive"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("12 positive roots"));
    assert!(text.contains("a1+a2+2a3+a4"));
    assert!(text.contains("e3+e4"));
}
