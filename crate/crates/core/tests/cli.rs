use std::path::PathBuf;
use std::process::{Command, Output};

use cycflat::fixtures::Fixture;

fn cycflat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cycflat"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn lattice_formats() {
    let text = cycflat(&["lattice", "--fixture", "example1"]);
    assert_eq!(code(&text), 0);
    assert!(stdout(&text).contains("nullity:2"));

    let dot = stdout(&cycflat(&["lattice", "--fixture", "code_6_3_3", "--format", "dot"]));
    assert!(dot.starts_with("digraph") || dot.starts_with("graph"));
    assert!(dot.contains("rank=same"));

    let json = stdout(&cycflat(&["lattice", "--fixture", "reed_muller_8_4_4", "--format", "json"]));
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["elements"].as_array().unwrap().len(), 16);
    assert_eq!(v["edges"].as_array().unwrap().len(), 28);
}

#[test]
fn json_is_byte_stable() {
    for f in Fixture::ALL {
        let args = ["analyze", "--fixture", f.name(), "--format", "json"];
        let first = cycflat(&args);
        let second = cycflat(&args);
        assert_eq!(code(&first), 0, "{}", f.name());
        assert_eq!(first.stdout, second.stdout, "{}", f.name());
    }
}

#[test]
fn analyze_with_verification() {
    let out = cycflat(&["analyze", "--fixture", "code_11_4_5", "--verify", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["griesmer"]["slack"], 0);
    assert_eq!(v["params"]["d"], 5);
    for check in v["verification"].as_array().unwrap() {
        assert_eq!(check["ok"], true, "{check}");
    }
}

#[test]
fn matrix_file_input() {
    let path = scratch("hamming.txt", Fixture::Hamming743.text());
    let out = cycflat(&["griesmer", "--input", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("(7,4,3)"));

    let out = cycflat(&["residual", "--input", path.to_str().unwrap(), "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!((v["size"].as_u64(), v["rank"].as_u64()), (Some(4), Some(3)));
}

#[test]
fn binarity_and_minors() {
    let out = cycflat(&["binary", "--uniform", "4", "2", "--verify"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("binary: false"));
    let out = cycflat(&["binary", "--fixture", "dual_k5_10_6_3", "--verify"]);
    assert!(stdout(&out).contains("binary: true"));

    let out = cycflat(&["minors", "--fixture", "example1", "--restrict", "1,2,3", "--verify"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("uniform: true (U(3,2))"));
}

#[test]
fn axioms_roundtrip_on_fixtures() {
    for f in Fixture::ALL {
        let json = stdout(&cycflat(&["lattice", "--fixture", f.name(), "--format", "json"]));
        let path = scratch(&format!("{}.json", f.name()), &json);
        let out = cycflat(&["axioms", "--input", path.to_str().unwrap(), "--emit", "--format", "json"]);
        assert_eq!(code(&out), 0, "{}", f.name());
        let rebuilt = stdout(&out);
        let rebuilt = rebuilt.strip_prefix("pass\n").unwrap();
        assert_eq!(rebuilt, json, "{}", f.name());
    }
}

#[test]
fn axiom_violations() {
    let z1 = scratch("z1.txt", "n=3\n- 1\n1,2,3 2\n");
    let out = cycflat(&["axioms", "--input", z1.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).starts_with("fail"));
    assert!(String::from_utf8_lossy(&out.stderr).contains("Z1"));

    // Two rank-2 blocks of four meeting in two elements under a rank-3 top.
    let z3 = scratch("z3.txt", "n=6\n- 0\n1,2,3,4 2\n3,4,5,6 2\n1,2,3,4,5,6 3\n");
    let out = cycflat(&["axioms", "--input", z3.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    assert!(String::from_utf8_lossy(&out.stderr).contains("Z3"));
}

#[test]
fn exit_codes_for_bad_input() {
    let empty = scratch("empty.txt", "");
    assert_eq!(code(&cycflat(&["lattice", "--input", empty.to_str().unwrap()])), 2);
    let ragged = scratch("ragged.txt", "101\n11\n");
    assert_eq!(code(&cycflat(&["lattice", "--input", ragged.to_str().unwrap()])), 2);
    assert_eq!(code(&cycflat(&["lattice", "--input", "/nonexistent/matrix.txt"])), 2);
    assert_eq!(code(&cycflat(&["lattice", "--fixture", "nope"])), 2);
    assert_eq!(code(&cycflat(&["lattice", "--uniform", "70", "3"])), 3);
}
