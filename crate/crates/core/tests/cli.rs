use std::fs;
use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn syk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_syk")).args(args).output().expect("binary runs")
}

fn syk_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_syk"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

#[test]
fn nf_reorders_an_odd_pair() {
    let out = syk_stdin(&["nf", "--mn", "1,1"], r#"{"terms":[{"coeff":"1","word":[[2,1,1],[1,2,1]]}]}"#);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    // t21 t12 = -t12 t21 + t22 - t11
    let terms: Vec<(String, Value)> = v["terms"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| (t["coeff"].as_str().unwrap().to_string(), t["word"].clone()))
        .collect();
    assert_eq!(
        terms,
        vec![
            ("-1".to_string(), serde_json::json!([[1, 1, 1]])),
            ("-1".to_string(), serde_json::json!([[1, 2, 1], [2, 1, 1]])),
            ("1".to_string(), serde_json::json!([[2, 2, 1]])),
        ]
    );
    let again = syk_stdin(&["nf", "--mn", "1,1"], std::str::from_utf8(&out.stdout).unwrap());
    assert_eq!(again.stdout, out.stdout);
}

#[test]
fn nf_edge_cases() {
    let empty = syk(&["nf", "--mn", "1,1", "--expr", r#"{"terms": []}"#]);
    assert_eq!(json(&empty), serde_json::json!({"terms": []}));
    let bad = syk(&["nf", "--mn", "1,1", "--expr", r#"{"terms": ["#]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("line 1 column"));
    let missing = syk(&["nf", "--mn", "1,1", "/nonexistent/x.json"]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn verify_exit_codes() {
    let ok = syk(&["verify", "--suite", "thm73", "--mu", "1|1", "-K", "3"]);
    assert_eq!(ok.status.code(), Some(0));
    let v = json(&ok);
    assert_eq!(v["failed"], 0);
    assert_eq!(v["total"], 94);
    assert!(v.get("elapsed_ms").is_none());

    let shape = syk(&["verify", "--suite", "lemma72", "--mu", "1|1"]);
    assert_eq!(shape.status.code(), Some(2));
    assert!(shape.stdout.is_empty());

    let usage = syk(&["verify", "--suite", "nope", "--mu", "1|1"]);
    assert_eq!(usage.status.code(), Some(2));

    let timed = syk(&["verify", "--suite", "mn11", "--mu", "1|1", "-K", "2", "--timing"]);
    assert!(json(&timed).get("elapsed_ms").is_some());
}

#[test]
fn verify_writes_a_report_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let out = syk(&["verify", "--suite", "all", "--mu", "1,1|1", "-K", "2", "--json", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["suite"], "all");
    assert!(v["relations"].as_object().unwrap().keys().any(|k| k.starts_with("thm73/")));
}

#[test]
fn gauss_on_one_one() {
    let v = json(&syk(&["gauss", "--mu", "1|1", "-K", "2"]));
    let blocks = v["blocks"].as_object().unwrap();
    for key in ["D/1", "D/2", "Dp/1", "Dp/2", "E/1/2", "F/2/1"] {
        assert!(blocks.contains_key(key), "{key}");
    }
    let bad = syk(&["gauss", "--mu", "1|x", "-K", "2"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn map_zeta_of_t11() {
    let v = json(&syk(&["map", "--name", "zeta", "--mn", "1,1", "-K", "2", "--expr", "t11"]));
    assert_eq!(v["target"], "(1|1)");
    let c = &v["image"]["coeffs"];
    // order-1 coefficient of t'_22(u) is -t22^(1)
    assert_eq!(c[1]["exp"], serde_json::json!([1, 0, 0]));
    assert_eq!(c[1]["elt"], serde_json::json!({"terms": [{"coeff": "-1", "word": [[2, 2, 1]]}]}));
    let bad = syk(&["map", "--name", "sigma", "--mn", "1,1", "-K", "2", "--expr", "t11"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn pbw_smallest_window() {
    let out = syk(&["pbw", "--mu", "1|1", "--deg", "0", "--len", "1", "-K", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!((v["count"].as_u64(), v["rank"].as_u64(), v["span_failures"].as_u64()), (Some(4), Some(4), Some(0)));
    let rank_only = json(&syk(&["pbw", "--mu", "1|1", "--deg", "0", "--len", "1", "-K", "1", "--check", "rank"]));
    assert!(rank_only["span_failures"].is_null());
    let short = syk(&["pbw", "--mu", "1|1", "--deg", "2", "--len", "1", "-K", "1"]);
    assert_eq!(short.status.code(), Some(2));
}

#[test]
fn output_does_not_depend_on_worker_count() {
    let run = |w: &str| {
        Command::new(env!("CARGO_BIN_EXE_syk"))
            .env("SYK_WORKERS", w)
            .args(["verify", "--suite", "all", "--mu", "2|1", "-K", "2"])
            .output()
            .unwrap()
    };
    let (a, b) = (run("1"), run("3"));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn fixtures_match_the_golden_corpus() {
    let dir = tempfile::tempdir().unwrap();
    let out = syk(&["fixtures", "--out", dir.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let golden = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let mut names: Vec<_> = fs::read_dir(&golden).unwrap().map(|e| e.unwrap().file_name()).collect();
    names.sort();
    let mut fresh: Vec<_> = fs::read_dir(dir.path()).unwrap().map(|e| e.unwrap().file_name()).collect();
    fresh.sort();
    assert_eq!(names, fresh);
    for n in names {
        let want = fs::read(golden.join(&n)).unwrap();
        let got = fs::read(dir.path().join(&n)).unwrap();
        assert!(want == got, "{} differs from the golden copy", n.to_string_lossy());
    }
}
