mod common;

use std::process::Command;

use common::{run, validate};
use latin_terwilliger::corpus;
use latin_terwilliger::report::{AnalysisReport, SCHEMA, TSV_HEADER};
use serde_json::Value;

fn schema() -> Value {
    serde_json::from_str(SCHEMA).unwrap()
}

fn check_json(args: &[&str]) -> Value {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let r = run(&full);
    assert!(r.code == 0 || r.code == 1, "{args:?}: exit {} {}", r.code, r.stderr);
    let value: Value = serde_json::from_str(&r.stdout).unwrap_or_else(|e| panic!("{args:?}: {e}"));
    if let Err(e) = validate(&schema(), &value) {
        panic!("{args:?}: {e}");
    }
    AnalysisReport::from_json(&r.stdout).unwrap();
    value
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_latin-tw");
    let dir = tempfile::tempdir().unwrap();
    let fig2 = dir.path().join("fig2.txt");
    std::fs::write(&fig2, corpus::get("fig2").unwrap().text).unwrap();
    let fig3 = dir.path().join("fig3.txt");
    std::fs::write(&fig3, corpus::get("fig3").unwrap().text).unwrap();
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "1 2 3\n2 3\n").unwrap();

    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap();
    let out = status(&["certify", fig2.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout), "certified-right-bol\n");
    assert_eq!(status(&["certify", fig3.to_str().unwrap()]).status.code(), Some(1));
    let out = status(&["certify", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(!out.stderr.is_empty());
    assert_eq!(status(&["certify", "/no/such/file"]).status.code(), Some(2));
    assert_eq!(status(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn pi_on_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("fig1.txt");
    std::fs::write(&path, "1 2 3\n2 3 1\n3 1 2\n").unwrap();
    let r = run(&["pi", path.to_str().unwrap(), "--base", "1,1"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.stdout, "(2 3)\n");
}

#[test]
fn verify_fig3() {
    let r = run(&["verify", "corpus:fig3", "--base", "3,1"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(r.stdout.contains("predicted 98"), "{}", r.stdout);
    assert!(r.stdout.contains("oracle 98"));
    assert!(r.stdout.contains("match"));
    let v = check_json(&["verify", "corpus:fig3", "--base", "3,1"]);
    assert_eq!(v["oracle"][0]["prediction"]["dimension"], 98);
    assert_eq!(v["oracle"][0]["oracle_dimension"], 98);
    assert_eq!(v["oracle"][0]["dimension_match"], true);
}

#[test]
fn conjugacy_rc_twice_is_identity() {
    let dir = tempfile::tempdir().unwrap();
    for &name in corpus::names() {
        let original = corpus::get(name).unwrap().text;
        let a = dir.path().join("a.txt");
        let b = dir.path().join("b.txt");
        std::fs::write(&a, &original).unwrap();
        let once = run(&["transform", a.to_str().unwrap(), "--conjugacy", "rc"]);
        assert_eq!(once.code, 0);
        std::fs::write(&b, &once.stdout).unwrap();
        let twice = run(&["transform", b.to_str().unwrap(), "--conjugacy", "rc"]);
        assert_eq!(twice.code, 0);
        assert_eq!(twice.stdout.as_bytes(), original.as_bytes(), "{name}");
    }
}

#[test]
fn isotopy_file() {
    let dir = tempfile::tempdir().unwrap();
    let iso = dir.path().join("iso.txt");
    // identity on rows and columns, entries shifted by one
    std::fs::write(&iso, "# rows\n1 2 3\n1 2 3\n2 3 1\n").unwrap();
    let r = run(&["transform", "corpus:fig1", "--isotopy", iso.to_str().unwrap()]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert_eq!(r.stdout, "2 3 1\n3 1 2\n1 2 3\n");
    std::fs::write(&iso, "1 2\n1 2\n1 2\n").unwrap();
    assert_eq!(run(&["transform", "corpus:fig1", "--isotopy", iso.to_str().unwrap()]).code, 2);
    assert_eq!(run(&["transform", "corpus:fig1"]).code, 2);
    assert_eq!(run(&["transform", "corpus:fig1", "--conjugacy", "rrc"]).code, 2);
}

#[test]
fn validate_verdicts() {
    let dir = tempfile::tempdir().unwrap();
    let not_latin = dir.path().join("x.txt");
    std::fs::write(&not_latin, "1 2\n1 2\n").unwrap();
    let r = run(&["validate", not_latin.to_str().unwrap()]);
    assert_eq!(r.code, 1);
    assert!(r.stdout.contains("not a Latin square"));
    let ragged = dir.path().join("y.txt");
    std::fs::write(&ragged, "1 2\n2\n").unwrap();
    assert_eq!(run(&["validate", ragged.to_str().unwrap()]).code, 2);
    assert_eq!(run(&["validate", "corpus:fig2"]).code, 0);
    let v = check_json(&["validate", not_latin.to_str().unwrap()]);
    assert_eq!(v["valid"], false);
}

#[test]
fn profile_tsv_layout() {
    let r = run(&["profile", "corpus:fig2", "--tsv"]);
    assert_eq!(r.code, 0);
    let lines: Vec<&str> = r.stdout.lines().collect();
    assert_eq!(lines[0], TSV_HEADER);
    assert_eq!(lines.len(), 65);
    assert_eq!(lines[1], "1\t1\t1\t1 2^3\t1\t2\t98");
    assert_eq!(lines[64], "8\t8\t1\t1 2^3\t1\t2\t98");
    let small = run(&["profile", "corpus:fig1", "--tsv"]);
    assert_eq!(small.stdout.lines().nth(1), Some("1\t1\t1\t2\t0\t-\t-"));
}

#[test]
fn profile_is_deterministic_across_thread_counts() {
    let one = run(&["--json", "profile", "corpus:fig3", "--threads", "1"]);
    let four = run(&["--json", "profile", "corpus:fig3", "--threads", "4"]);
    let default = run(&["--json", "profile", "corpus:fig3"]);
    assert_eq!(one.stdout, four.stdout);
    assert_eq!(one.stdout, default.stdout);
}

#[test]
fn moufang_check_in_profile() {
    let v = check_json(&["profile", "corpus:z2^3"]);
    assert_eq!(v["verdicts"]["moufang"]["self_inverse"], 8);
    assert_eq!(v["verdicts"]["moufang"]["predicted_fixed"], 7);
    assert_eq!(v["verdicts"]["moufang"]["holds"], true);
    let v = check_json(&["profile", "corpus:fig2"]);
    assert!(v["verdicts"].get("moufang").is_none());
}

#[test]
fn search_is_reproducible() {
    let a = run(&["--json", "--seed", "3", "search", "--budget", "4"]);
    let b = run(&["--json", "--seed", "3", "search", "--budget", "4"]);
    assert_eq!(a.code, 0);
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_str(&a.stdout).unwrap();
    assert_eq!(v["seed"], 3);
    assert_eq!(run(&["search", "--min-order", "6", "--max-order", "5"]).code, 2);
}

/// Every subcommand and flag combination, on every corpus entry, yields a
/// report that validates against the published schema. The oracle sweep
/// over all base points is restricted to orders up to 5: the report shape
/// does not depend on the order, and a full sweep at order 8 costs tens of
/// seconds.
#[test]
fn json_reports_match_schema() {
    for &name in corpus::names() {
        let input = format!("corpus:{name}");
        let input = input.as_str();
        let order = corpus::square(name).unwrap().order();
        check_json(&["validate", input]);
        check_json(&["properties", input]);
        check_json(&["certify", input]);
        check_json(&["pi", input, "--base", "1,2"]);
        check_json(&["--seed", "9", "pi", input, "--base", "2,1"]);
        check_json(&["profile", input]);
        check_json(&["profile", input, "--threads", "2"]);
        check_json(&["transform", input, "--conjugacy", "rc"]);
        check_json(&["transform", input, "--conjugacy", "ecr"]);
        check_json(&["corpus", name]);
        check_json(&["verify", input]);
        check_json(&["verify", input, "--base", "2,2", "--center"]);
        if order >= 5 {
            check_json(&["modules", input, "--base", "1,1"]);
        }
        if order <= 5 {
            check_json(&["verify", input, "--all"]);
            check_json(&["verify", input, "--all", "--center"]);
        }
    }
    check_json(&["corpus"]);
    check_json(&["--seed", "1", "search", "--budget", "3"]);
    check_json(&["search", "--budget", "2", "--min-order", "5", "--max-order", "6"]);
}

#[test]
fn schema_checker_rejects_bad_reports() {
    let v = check_json(&["pi", "corpus:fig2", "--base", "1,1"]);
    let mut broken = v.clone();
    broken["schema_version"] = Value::from("0.9");
    assert!(validate(&schema(), &broken).is_err());
    let mut broken = v.clone();
    broken["base_points"][0]["pi"] = Value::from("2 4 3 5");
    assert!(validate(&schema(), &broken).is_err());
    let mut broken = v.clone();
    broken["base_points"][0]["base"]["row"] = Value::from(0);
    assert!(validate(&schema(), &broken).is_err());
    let mut broken = v;
    broken.as_object_mut().unwrap().remove("command");
    assert!(validate(&schema(), &broken).is_err());
}

#[test]
fn readers_tolerate_unknown_fields() {
    let r = run(&["--json", "certify", "corpus:fig2"]);
    let mut v: Value = serde_json::from_str(&r.stdout).unwrap();
    v["verdicts"]["added_later"] = Value::from(true);
    v["extra"] = serde_json::json!([1, 2, 3]);
    let report = AnalysisReport::from_json(&v.to_string()).unwrap();
    assert!(report.verdicts.unwrap().certificate.unwrap().is_certified());
}
