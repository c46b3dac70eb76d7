use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use hurwitz::{Engine, Partition};
use serde_json::Value;

fn hurwitz(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hurwitz")).args(args).env_remove("HURWITZ_CACHE").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn path_arg(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn compute_prints_value_and_metadata() {
    let o = hurwitz(&["compute", "--base-genus", "0", "--cover-genus", "2", "--ramification", "1,2"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "h=0 g=2 alpha=(1,2) k=3 m=2 r=7 value=364/1 integer=364\n");
    assert!(stderr(&o).contains("provider: strict"));

    let o = hurwitz(&["compute", "--cover-genus", "0", "--ramification", "1"]);
    assert!(stdout(&o).ends_with("value=1/1 integer=1\n"));
}

#[test]
fn compute_over_a_genus_range() {
    let o = hurwitz(&[
        "compute",
        "--cover-genus",
        "0",
        "--max-cover-genus",
        "2",
        "--ramification",
        "3",
        "--ramification",
        "1,1",
    ]);
    let lines: Vec<String> = stdout(&o).lines().map(str::to_owned).collect();
    assert_eq!(lines.len(), 6);
    assert!(lines[2].contains("g=2 alpha=(3)") && lines[2].ends_with("integer=81"));
    assert!(lines[3].starts_with("h=0 g=0 alpha=(1,1)") && lines[3].ends_with("value=1/2"));
}

#[test]
fn exit_codes() {
    let o = hurwitz(&[
        "compute",
        "--base-genus",
        "1",
        "--cover-genus",
        "1",
        "--ramification",
        "1,1",
        "--provider",
        "strict",
    ]);
    assert_eq!(code(&o), 3);
    assert!(stderr(&o).contains("(h=1, g=1, alpha=1,1)"), "{}", stderr(&o));

    let o = hurwitz(&["compute", "--base-genus", "1", "--cover-genus", "1", "--ramification", "1,1"]);
    assert_eq!(code(&o), 2);

    for bad in ["0,1", "x", ""] {
        let o = hurwitz(&["compute", "--cover-genus", "0", "--ramification", bad]);
        assert_eq!(code(&o), 2, "{bad:?}");
    }
    assert_eq!(code(&hurwitz(&["table", "--degrees", "0"])), 2);
    assert_eq!(code(&hurwitz(&["verify", "closed-form", "--base-genus", "1", "--provider", "strict"])), 2);
}

#[test]
fn monodromy_provider_handles_positive_base_genus() {
    let o = hurwitz(&[
        "compute",
        "--base-genus",
        "1",
        "--cover-genus",
        "1",
        "--ramification",
        "1,1",
        "--provider",
        "monodromy",
    ]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("value=3/2"));
    assert!(stderr(&o).contains("degree ceiling 6"));
}

#[test]
fn table_matches_the_published_grid() {
    let o = hurwitz(&["table"]);
    assert_eq!(code(&o), 0);
    let got: Vec<Vec<String>> =
        stdout(&o).lines().skip(1).map(|l| l.split_whitespace().map(str::to_owned).collect()).collect();
    let expected: Vec<Vec<String>> = include_str!("data/genus_zero_table.txt")
        .lines()
        .filter(|l| !l.starts_with('#'))
        .map(|l| l.split_whitespace().map(str::to_owned).collect())
        .collect();
    assert_eq!(got, expected);
}

#[test]
fn table_edge_cases() {
    let o = hurwitz(&["table", "--degrees", ""]);
    assert_eq!((code(&o), stdout(&o)), (0, String::new()));

    let o = hurwitz(&["table", "--degrees", "3", "--cover-genus", "1", "--max-cover-genus", "1", "--format", "csv"]);
    assert_eq!(
        stdout(&o),
        "h,g,k,m,r,alpha,num,den\n0,1,3,1,4,(3),9,1\n0,1,3,2,5,\"(1,2)\",40,1\n0,1,3,3,6,\"(1,1,1)\",40,1\n"
    );
}

#[test]
fn json_parses_back_to_exact_values() {
    let o = hurwitz(&["table", "--degrees", "2,5", "--format", "json", "--threads", "3"]);
    assert_eq!(code(&o), 0);
    let doc: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let rows = doc.as_array().unwrap();
    assert_eq!(rows.len(), (2 + 7) * 6);
    let e = Engine::genus_zero();
    for row in rows {
        let alpha: Vec<u32> = serde_json::from_value(row["alpha"].clone()).unwrap();
        let g = row["g"].as_u64().unwrap() as u32;
        let v = e.mu(0, g, &Partition::new(alpha).unwrap()).unwrap();
        assert_eq!(row["value"]["num"], Value::String(v.numer().to_string()));
        assert_eq!(row["value"]["den"], Value::String(v.denom().to_string()));
        assert_eq!(row["num"], row["value"]["num"]);
    }
    assert_eq!(rows.last().unwrap()["value"]["num"], "138543794363520");
}

#[test]
fn table_writes_the_cache() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("memo.jsonl");
    let o = hurwitz(&["table", "--degrees", "3", "--cache", path_arg(&cache)]);
    assert_eq!(code(&o), 0);
    let text = fs::read_to_string(&cache).unwrap();
    assert!(text.lines().any(|l| l == r#"{"h":0,"g":0,"alpha":[2,1],"num":"4","den":"1"}"#));

    // A second run is served from the cache and leaves it unchanged.
    let o = hurwitz(&["table", "--degrees", "3", "--cache", path_arg(&cache)]);
    assert!(stderr(&o).contains("expansions=0"), "{}", stderr(&o));
    assert_eq!(fs::read_to_string(&cache).unwrap(), text);
}

#[test]
fn cache_path_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("env.jsonl");
    let o = Command::new(env!("CARGO_BIN_EXE_hurwitz"))
        .args(["compute", "--cover-genus", "0", "--ramification", "2"])
        .env("HURWITZ_CACHE", &cache)
        .output()
        .unwrap();
    assert_eq!(code(&o), 0);
    assert!(fs::read_to_string(&cache).unwrap().contains(r#""alpha":[2],"num":"1","den":"2""#));
}

#[test]
fn import_then_compute_needs_no_expansions() {
    let dir = tempfile::tempdir().unwrap();
    let exported = dir.path().join("export.jsonl");
    let cache = dir.path().join("cache.jsonl");
    let o = hurwitz(&["cache-export", "--degrees", "3", "--max-cover-genus", "2", "--output", path_arg(&exported)]);
    assert_eq!(code(&o), 0);

    let o = hurwitz(&["cache-import", path_arg(&exported), "--cache", path_arg(&cache)]);
    assert_eq!(code(&o), 0);
    assert_eq!(fs::read(&exported).unwrap(), fs::read(&cache).unwrap());

    let o = hurwitz(&["compute", "--cover-genus", "2", "--ramification", "1,2", "--cache", path_arg(&cache)]);
    assert!(stdout(&o).contains("integer=364"));
    assert!(stderr(&o).contains("expansions=0 memo_hits=1"), "{}", stderr(&o));
}

#[test]
fn cache_export_to_stdout() {
    let o = hurwitz(&["cache-export", "--degrees", "1", "--max-cover-genus", "0"]);
    assert_eq!(stdout(&o), "{\"h\":0,\"g\":0,\"alpha\":[1],\"num\":\"1\",\"den\":\"1\"}\n");
}

#[test]
fn malformed_cache_lines_exit_two_with_line_number() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.jsonl");
    let good = r#"{"h":0,"g":0,"alpha":[1],"num":"1","den":"1"}"#;
    for line in [
        r#"{"h":0,"g":0,"alpha":[2,1],"num":"8","den":"2"}"#,
        r#"{"h":0,"g":0,"alpha":[1,2],"num":"4","den":"1"}"#,
        r#"{"h":0,"g":0,"alpha":[2,1],"num":"04","den":"1"}"#,
        r#"{"h":0,"g":0,"alpha":[2,1],"num":"4"}"#,
        "not json",
    ] {
        fs::write(&bad, format!("{good}\n\n{line}\n")).unwrap();
        let o = hurwitz(&["cache-import", path_arg(&bad)]);
        assert_eq!(code(&o), 2, "{line}");
        assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));

        let o = hurwitz(&["compute", "--cover-genus", "0", "--ramification", "1", "--cache", path_arg(&bad)]);
        assert_eq!(code(&o), 2);
    }
}

#[test]
fn verify_suites_pass() {
    for args in [
        &["verify", "closed-form", "--max-degree", "8"][..],
        &["verify", "pde", "--max-degree", "4", "--max-genus", "2"],
        &["verify", "monodromy", "--max-degree", "3"],
    ] {
        let o = hurwitz(args);
        assert_eq!(code(&o), 0, "{args:?}\n{}", stdout(&o));
        assert!(stdout(&o).contains(" 0 failed"));
    }
}

#[test]
fn verify_reports_skips_without_failing() {
    let o = hurwitz(&["verify", "monodromy", "--max-degree", "3", "--monodromy-node-limit", "5"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("SKIP "));
}

#[test]
fn verify_fails_on_a_corrupted_cache_value() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("wrong.jsonl");
    fs::write(&cache, "{\"h\":0,\"g\":0,\"alpha\":[2,1],\"num\":\"5\",\"den\":\"1\"}\n").unwrap();
    for suite in ["closed-form", "pde"] {
        let o = hurwitz(&["verify", suite, "--max-degree", "3", "--cache", path_arg(&cache)]);
        assert_eq!(code(&o), 1, "{suite}\n{}", stdout(&o));
        assert!(stdout(&o).contains("FAIL "));
    }
}

#[test]
fn pde_dump_is_written() {
    let dir = tempfile::tempdir().unwrap();
    let dump = dir.path().join("phi.txt");
    let o = hurwitz(&[
        "verify",
        "pde",
        "--max-degree",
        "2",
        "--max-genus",
        "0",
        "--max-u-degree",
        "2",
        "--dump",
        path_arg(&dump),
    ]);
    assert_eq!(code(&o), 0);
    let text = fs::read_to_string(&dump).unwrap();
    assert!(text.lines().any(|l| l.starts_with("coeff 1/1 ") && l.ends_with("p_1")), "{text}");
}
