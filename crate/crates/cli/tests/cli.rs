//! End-to-end runs of the `ydscreen` binary.

use std::process::{Command, Output};

use serde_json::Value;

fn ydscreen(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ydscreen")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn classify_json_has_the_report_fields() {
    let o = ydscreen(&["classify", "--group", "sl2", "--q", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["group"], "sl2");
    assert_eq!(v["q"], 5);
    let classes = v["classes"].as_array().unwrap();
    assert_eq!(classes.len(), 9);
    for c in classes {
        for key in ["tag", "params", "size", "survivors", "ruled_out", "unresolved"] {
            assert!(c.get(key).is_some(), "{key} missing");
        }
    }
    for p in v["paper_checks"].as_array().unwrap() {
        assert!(p.get("proposition").is_some() && p.get("status").is_some() && p.get("diff").is_some());
    }
}

#[test]
fn repeated_runs_are_byte_identical() {
    let a = ydscreen(&["classify", "--group", "gl2", "--q", "5"]);
    let b = ydscreen(&["classify", "--group", "gl2", "--q", "5"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn csv_and_text_formats() {
    let o = ydscreen(&["--format", "csv", "tables", "--group", "gl2", "--q", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let mut rdr = csv::Reader::from_reader(o.stdout.as_slice());
    assert_eq!(rdr.headers().unwrap().iter().next(), Some("tag"));
    assert_eq!(rdr.records().count(), 8);

    let o = ydscreen(&["--format", "text", "classify", "--group", "sl2", "--q", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().count() > 5);
}

#[test]
fn out_writes_the_file_instead_of_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o = ydscreen(&["classify", "--group", "sl2", "--q", "7", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["q"], 7);
}

#[test]
fn modulus_override_is_reported() {
    let o = ydscreen(&["classify", "--group", "sl2", "--q", "25", "--modulus", "3,0,1"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["field"]["modulus"], serde_json::json!([3, 0, 1]));
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        vec!["classify", "--q", "6"],
        vec!["classify", "--q", "33"],
        vec!["classify", "--group", "sl3", "--q", "5"],
        vec!["classify", "--q", "25", "--modulus", "1,0,1"],
        vec!["classify", "--group", "gl2", "--q", "25", "--bound", "1000"],
        vec!["braiding", "--q", "5", "--class", "C9"],
        vec!["check-lemmas", "--max-p", "41"],
        vec!["frobnicate"],
    ] {
        let o = ydscreen(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    }
    assert_eq!(ydscreen(&["--help"]).status.code(), Some(0));
}

#[test]
fn braiding_and_racks_subcommands() {
    let o = ydscreen(&["braiding", "--group", "sl2", "--q", "5", "--class", "C8", "--character", "1"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(serde_json::from_str::<Value>(&stdout(&o)).is_ok());

    let o = ydscreen(&["racks", "--group", "sl2", "--q", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("tetrahedron_vertices"));
}

#[test]
fn check_lemmas_passes() {
    let o = ydscreen(&["--format", "text", "check-lemmas", "--max-n", "2000", "--max-p", "13"]);
    assert_eq!(o.status.code(), Some(0));
}
