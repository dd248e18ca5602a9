use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn abcgg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_abcgg")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn compute_family_text() {
    let o = abcgg(&["compute", "--family", "b1:3,8"]);
    assert!(o.status.success());
    let out = stdout(&o);
    let total: f64 = out.lines().find_map(|l| l.strip_prefix("total ")).unwrap().parse().unwrap();
    assert!((total - 6.4896308469).abs() < 1e-9);
    let rows = out.lines().skip_while(|l| !l.contains("contribution")).skip(1).count();
    assert_eq!(rows, 11);
}

#[test]
fn compute_json_carries_schema_version() {
    let o = abcgg(&["compute", "--family", "h:8", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["per_edge"].as_array().unwrap().len(), 9);
    assert!((v["total"].as_f64().unwrap() - 7.8376630108).abs() < 1e-9);
}

#[test]
fn formula_value() {
    let o = abcgg(&["formula", "--name", "conjecture2", "--params", "n=9"]);
    assert!(o.status.success());
    let v: f64 = stdout(&o).trim().parse().unwrap();
    assert!((v - 5.9160797831).abs() < 1e-9);
}

#[test]
fn formula_domain_and_unchecked() {
    let o = abcgg(&["formula", "--name", "f_oddodd", "--params", "k=5,x=4"]);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(stderr(&o).lines().count(), 1);
    let o = abcgg(&["formula", "--name", "f_oddodd", "--params", "k=5,x=4", "--unchecked"]);
    assert!(o.status.success());
}

#[test]
fn verify_theorem1_reports_printed_gap() {
    let o = abcgg(&["verify", "--suite", "theorem1", "--n-range", "9..16"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let mut rdr = csv::Reader::from_reader(o.stdout.as_slice());
    let header = rdr.headers().unwrap().clone();
    let col = |name: &str| header.iter().position(|h| h == name).unwrap();
    let rows: Vec<csv::StringRecord> = rdr.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 8);
    let n9 = rows.iter().find(|r| &r[col("n")] == "9").unwrap();
    let gap: f64 = n9[col("alt_abs_gap")].parse().unwrap();
    assert!((gap - 0.4479).abs() < 1e-3);
    assert!(rows.iter().all(|r| &r[col("pass")] == "true"));
    // At least ten significant digits in every real column.
    let digits = n9[col("optimum")].chars().filter(char::is_ascii_digit).count();
    assert!(digits >= 10);
}

#[test]
fn verify_failure_exit_code() {
    let o = abcgg(&["verify", "--suite", "conjecture3", "--n-range", "8..9", "--format", "json"]);
    assert_eq!(o.status.code(), Some(1));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let cx = v["counterexamples"].as_array().unwrap();
    assert_eq!(cx.len(), 2);
    assert!(cx.iter().all(|c| c["certificate"].is_string() && c["params"].is_string()));
}

#[test]
fn lemma_behavior_single_check() {
    let o = abcgg(&["verify", "--suite", "lemma-behavior", "--lemma", "l6-min", "--n-range", "10..60"]);
    assert_eq!(o.status.code(), Some(0));
    let o = abcgg(&["verify", "--suite", "lemma-behavior", "--lemma", "l5-monotone", "--n-range", "10..30"]);
    assert_eq!(o.status.code(), Some(1));
    let o = abcgg(&["verify", "--suite", "lemmas", "--n-range", "5..8"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn theta_guard_diagnostic() {
    let o = abcgg(&["compute", "--family", "b3:5,4,5"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("two unit paths create a multi-edge"));
    let o = abcgg(&["compute", "--family", "b3:5,5,4"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn usage_errors() {
    assert_eq!(abcgg(&["compute", "--frobnicate"]).status.code(), Some(2));
    assert_eq!(abcgg(&["verify", "--suite", "theorem1", "--n-range", "12..9"]).status.code(), Some(2));
    assert_eq!(abcgg(&["--tolerance", "0", "formula", "--name", "lemma1", "--params", "p=3,q=3"]).status.code(), Some(2));
}

#[test]
fn malformed_edge_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    fs::write(&path, "4\n0 1\n1 x\n").unwrap();
    let o = abcgg(&["compute", "--edges", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("line 3"));
    fs::write(&path, "3\n0 1\n").unwrap();
    assert_eq!(abcgg(&["compute", "--edges", path.to_str().unwrap()]).status.code(), Some(3));
}

#[test]
fn resource_limit() {
    let o = abcgg(&["enumerate", "--n", "13"]);
    assert_eq!(o.status.code(), Some(4));
    assert_eq!(abcgg(&["enumerate", "--n", "9", "--limit", "8"]).status.code(), Some(4));
}

#[test]
fn edgelist_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.txt");
    let o = abcgg(&["compute", "--family", "b2:3,2,4", "--format", "edgelist", "--output", path.to_str().unwrap()]);
    assert!(o.status.success());
    let cert = |args: &[&str]| {
        let v: Value = serde_json::from_str(&stdout(&abcgg(args))).unwrap();
        v["cert"].as_str().unwrap().to_string()
    };
    assert_eq!(
        cert(&["compute", "--family", "b2:3,2,4", "--format", "json"]),
        cert(&["compute", "--edges", path.to_str().unwrap(), "--format", "json"])
    );
}

#[test]
fn output_directory_variable() {
    let dir = tempfile::tempdir().unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_abcgg"))
        .args(["enumerate", "--n", "6", "--output", "six.jsonl"])
        .env("ABCGG_OUTPUT_DIR", dir.path())
        .output()
        .unwrap();
    assert!(o.status.success());
    let text = fs::read_to_string(dir.path().join("six.jsonl")).unwrap();
    assert_eq!(text.lines().count(), 19);
    for line in text.lines() {
        let v: Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["n"], 6);
        assert!(v["abcgg"].is_null());
        assert_eq!(v["edges"].as_array().unwrap().len(), 7);
    }
}

#[test]
fn jobs_do_not_change_output() {
    let a = abcgg(&["--jobs", "1", "enumerate", "--n", "9", "--with-index"]);
    let b = abcgg(&["--jobs", "3", "enumerate", "--n", "9", "--with-index"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let a = abcgg(&["--jobs", "1", "extremal", "--n", "10", "--class", "no-pendant"]);
    let b = abcgg(&["--jobs", "4", "extremal", "--n", "10", "--class", "no-pendant"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn extremal_max_is_h() {
    let o = abcgg(&["extremal", "--n", "8", "--objective", "max"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["optimizers"].as_array().unwrap().len(), 1);
    assert!((v["optimum"].as_f64().unwrap() - 7.8376630108).abs() < 1e-9);
    assert_eq!(v["verdict"], false);
    assert_eq!(v["alternative"]["matches"], true);
}
