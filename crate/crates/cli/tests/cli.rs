use std::fs;
use std::process::{Command, Output};

fn tfree(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tfree")).args(args).env("FREESET_THREADS", "2").output().unwrap()
}

fn design(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_design")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn check_reports_witness_and_exit_code() {
    let ok = tfree(&["check", "--n", "8", "--t", "3", "--set", "1,3"]);
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(stdout(&ok).trim(), "t-free");

    let bad = tfree(&["check", "--n", "7", "--t", "3", "--set", "1,2"]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).contains("1+1≡2 (mod 7)"));

    let json = tfree(&["check", "--n", "8", "--t", "4", "--set", "1,3", "--json"]);
    assert_eq!(json.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(v["Violation"]["left"], serde_json::json!([1, 1, 1]));
    assert_eq!(v["Violation"]["right"], serde_json::json!([3]));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(tfree(&["check", "--n", "8", "--t", "3", "--set", "1,x"]).status.code(), Some(2));
    assert_eq!(tfree(&["check", "--n", "0", "--t", "3", "--set", "1"]).status.code(), Some(2));
    assert_eq!(tfree(&["smax", "--n", "10"]).status.code(), Some(2));
    assert_eq!(design(&["build", "--n", "10", "--gens", "0,3"]).status.code(), Some(2));
    assert_eq!(design(&["dgs", "--t", "3"]).status.code(), Some(2));
}

#[test]
fn smax_and_budget_exhaustion() {
    let exact = tfree(&["smax", "--n", "73", "--t", "3"]);
    assert_eq!(exact.status.code(), Some(0));
    assert!(stdout(&exact).contains("= 12"));

    let cut = tfree(&["smax", "--n", "150", "--t", "4", "--node-limit", "5"]);
    assert_eq!(cut.status.code(), Some(3));
    assert!(stdout(&cut).contains("lower bound only"));
}

#[test]
fn construct_bounds_greedy_dgs() {
    let c = tfree(&["construct", "--n", "99", "--t", "3"]);
    assert_eq!(c.status.code(), Some(0));
    assert!(stdout(&c).contains("size: 18"));

    let b = tfree(&["bounds", "--n", "99", "--t", "3", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&b)).unwrap();
    assert_eq!((v["lower"].as_u64(), v["upper"].as_u64()), (Some(18), Some(24)));

    let g = tfree(&["greedy", "--n", "5", "--t", "4", "--m", "1"]);
    assert_eq!(g.status.code(), Some(0));
    assert_eq!(stdout(&g).lines().last(), Some("set: 1"));

    let d = design(&["dgs", "--t", "11", "--d", "23"]);
    assert_eq!(stdout(&d).trim(), "196560");
}

#[test]
fn table_writes_cache_records_and_discards_corruption() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache.jsonl");
    let cache_arg = cache.to_str().unwrap();
    let t = tfree(&["table", "--t", "3", "--n-min", "8", "--n-max", "12", "--cache", cache_arg]);
    assert_eq!(t.status.code(), Some(0));
    let lines: Vec<serde_json::Value> =
        stdout(&t).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 5);
    let sizes: Vec<u64> = lines.iter().map(|r| r["s_lower"].as_u64().unwrap()).collect();
    assert_eq!(sizes, vec![2, 1, 2, 2, 3]);
    assert!(lines.iter().all(|r| r["exact"] == true));

    // a record whose witness is not 3-free, plus a line that is not JSON
    let forged = r#"{"n":20,"t":3,"s_lower":9,"s_upper":9,"exact":true,"witness":[1,2,3,4,5,6,7,8,9],"method":"bnb","elapsed_ms":0}"#;
    let mut text = fs::read_to_string(&cache).unwrap();
    text.push_str(forged);
    text.push_str("\nnot json\n");
    fs::write(&cache, text).unwrap();

    let s = tfree(&["smax", "--n", "20", "--t", "3", "--cache", cache_arg, "--json"]);
    assert_eq!(s.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&s.stderr).contains("discarded 2"));
    let rec: serde_json::Value = serde_json::from_str(stdout(&s).trim()).unwrap();
    assert_eq!(rec["s_lower"], 5);
    let saved = fs::read_to_string(&cache).unwrap();
    assert!(!saved.contains("not json") && !saved.contains("[1,2,3,4,5,6,7,8,9]"));
}

#[test]
fn build_then_verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let pts = dir.path().join("pts.csv");
    let pts_arg = pts.to_str().unwrap();
    let b = design(&["build", "--n", "10", "--gens", "1,3", "--strength", "3", "--out", pts_arg]);
    assert_eq!(b.status.code(), Some(0));

    let first = design(&["verify", "--input", pts_arg, "--t", "3", "--json"]);
    let second = design(&["verify", "--input", pts_arg, "--t", "3", "--json"]);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(stdout(&first), stdout(&second));
    let v: serde_json::Value = serde_json::from_str(&stdout(&first)).unwrap();
    assert_eq!(v["pass"], true);

    let idx = design(&["index", "--input", pts_arg, "--k", "4"]);
    assert_eq!(idx.status.code(), Some(1));

    let bad = dir.path().join("bad.csv");
    let b = design(&["build", "--n", "7", "--gens", "1,2", "--out", bad.to_str().unwrap()]);
    assert_eq!(b.status.code(), Some(0));
    let v = design(&["verify", "--input", bad.to_str().unwrap(), "--t", "3"]);
    assert_eq!(v.status.code(), Some(1));
}
