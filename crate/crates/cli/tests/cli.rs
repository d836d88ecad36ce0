use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn unital(out: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_unital"))
        .arg("--out")
        .arg(out)
        .args(args)
        .output()
        .expect("run unital")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn small_field_build_and_verify() {
    let dir = tempfile::tempdir().unwrap();
    let built = unital(dir.path(), &["--q", "3", "build"]);
    assert!(built.status.success());
    assert_eq!(stdout(&built).trim(), "points=28 secants=63 conics=252");
    let verified = unital(dir.path(), &["--q", "3", "verify"]);
    assert!(verified.status.success(), "{}", stdout(&verified));
    assert!(!stdout(&verified).contains("FAIL"));
    assert!(dir.path().join("verify_report.json").exists());
}

#[test]
fn builds_are_deterministic() {
    let (a, b) = (tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap());
    assert!(unital(a.path(), &["--q", "3", "build"]).status.success());
    assert!(unital(b.path(), &["--q", "3", "build"]).status.success());
    let mut names: Vec<_> = fs::read_dir(a.path()).unwrap().map(|e| e.unwrap().file_name()).collect();
    names.sort();
    assert!(!names.is_empty());
    for name in names {
        assert_eq!(fs::read(a.path().join(&name)).unwrap(), fs::read(b.path().join(&name)).unwrap(), "{name:?}");
    }
}

#[test]
fn unsupported_field_is_a_configuration_error() {
    let dir = tempfile::tempdir().unwrap();
    let o = unital(dir.path(), &["--q", "4", "build"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("configuration error"));
}

#[test]
fn unknown_graph_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let o = unital(dir.path(), &["export", "petersen"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn corrupted_graph_file_fails_verification() {
    let dir = tempfile::tempdir().unwrap();
    let built = unital(dir.path(), &["build"]);
    assert!(built.status.success());
    assert_eq!(stdout(&built).trim(), "points=126 secants=525 conics=3150 components=150");

    let exported = unital(dir.path(), &["export", "hs1", "--format", "edge-list"]);
    assert!(exported.status.success());
    let edges = fs::read_to_string(dir.path().join("hs1.txt")).unwrap();
    assert_eq!(edges.lines().filter(|l| !l.trim().is_empty()).count(), 175);

    // flip the first adjacency bit held by the last graph6 character
    let path = dir.path().join("mclaughlin.g6");
    let text = fs::read_to_string(&path).unwrap();
    let mut bytes = text.trim_end().as_bytes().to_vec();
    let last = bytes.len() - 1;
    bytes[last] = ((bytes[last] - 63) ^ 32) + 63;
    fs::write(&path, bytes).unwrap();

    let verified = unital(dir.path(), &["verify"]);
    assert_eq!(verified.status.code(), Some(1));
    assert!(stdout(&verified).contains("FAIL"));
}
