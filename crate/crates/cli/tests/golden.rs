//! Golden-file tests. Set `UPDATE_GOLDEN=1` to rewrite the stored outputs.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

const CASES: &[(&str, &str)] = &[
    ("hvector_u24", "hvector tests/data/u24.json"),
    ("hvector_fano", "hvector tests/data/fano.json"),
    ("hvector_two_pairs", "hvector tests/data/two_pairs.json"),
    ("paving_h_7_3_28", "paving-h --n 7 --r 3 --b 28"),
    ("certify_fano", "certify tests/data/fano.json"),
    ("certify_two_pairs", "certify tests/data/two_pairs.json"),
    ("f_solve_3_3", "f-solve --r 3 --d 3"),
    ("f_solve_5_4", "f-solve --r 5 --d 4"),
    ("fbar_5_3", "fbar --r 5 --d 3"),
    ("necklaces_2_2", "necklaces --r 2 --d 2 --brute"),
    ("scan_4_3", "scan --rmax 4 --dmax 3"),
    ("enumerate_3_6", "enumerate --r 3 --n 6"),
    ("enumerate_sparse_2_4", "enumerate --r 2 --n 4 --sparse"),
    ("g_3_6", "g --r 3 --n 6"),
    ("tutte_fano", "tutte tests/data/fano.json"),
    ("tutte_sparse_7_3_7", "tutte-sparse --n 7 --r 3 --lambda 7"),
    ("steiner_fano", "steiner tests/data/fano_design.json"),
    ("steiner_not", "steiner tests/data/not_steiner.json"),
    ("bounds_3_6", "bounds --r 3 --n 6"),
    ("bounds_2_5", "bounds --r 2 --n 5"),
];

fn manifest_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pavingkit"))
        .args(args)
        .current_dir(manifest_dir())
        .output()
        .expect("binary runs")
}

fn run_format(format: &str, cmd: &str) -> String {
    let mut args = vec!["--format", format];
    args.extend(cmd.split_whitespace());
    let out = run(&args);
    assert!(out.status.success(), "{cmd}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

/// Integers and booleans in order of appearance.
fn numeric_tokens(s: &str) -> Vec<String> {
    s.split(|c: char| !(c.is_ascii_alphanumeric() || c == '-' || c == '_'))
        .filter(|t| t.parse::<i64>().is_ok() || *t == "true" || *t == "false")
        .map(str::to_string)
        .collect()
}

fn check_golden(path: &Path, actual: &str) {
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        fs::write(path, actual).unwrap();
        return;
    }
    let expected = fs::read_to_string(path)
        .unwrap_or_else(|_| panic!("missing {}; rerun with UPDATE_GOLDEN=1", path.display()));
    assert_eq!(actual, expected, "{} differs", path.display());
}

#[test]
fn outputs_match_golden_files() {
    let dir = manifest_dir().join("tests/golden");
    fs::create_dir_all(&dir).unwrap();
    for (name, cmd) in CASES {
        check_golden(&dir.join(format!("{name}.json")), &run_format("json", cmd));
        check_golden(&dir.join(format!("{name}.txt")), &run_format("table", cmd));
    }
}

#[test]
fn json_and_table_carry_the_same_numbers() {
    for (_, cmd) in CASES {
        let json = run_format("json", cmd);
        let table = run_format("table", cmd);
        let csv = run_format("csv", cmd);
        let from_json = numeric_tokens(&json);
        assert!(!from_json.is_empty(), "{cmd}");
        assert_eq!(from_json, numeric_tokens(&table), "{cmd}");
        assert_eq!(from_json, numeric_tokens(&csv), "{cmd}");
    }
}

#[test]
fn reruns_are_identical() {
    for (_, cmd) in CASES {
        for format in ["json", "table"] {
            assert_eq!(run_format(format, cmd), run_format(format, cmd), "{cmd}");
        }
    }
}

#[test]
fn headline_examples() {
    let v: serde_json::Value = serde_json::from_str(&run_format("json", "bounds --r 3 --n 6")).unwrap();
    assert_eq!((v["S"].as_i64(), v["f_bound"].as_i64(), v["S_bound"].as_i64()), (Some(4), Some(13), Some(14)));
    let v: serde_json::Value = serde_json::from_str(&run_format("json", "enumerate --r 3 --n 6")).unwrap();
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 8);
    assert_eq!(rows.iter().filter_map(|r| r["bases"].as_u64()).min(), Some(15));
    let v: serde_json::Value = serde_json::from_str(&run_format("json", "necklaces --r 2 --d 2")).unwrap();
    assert_eq!(v["L2"], 1);
}

fn exit_code(args: &[&str]) -> (i32, String) {
    let out = run(args);
    (out.status.code().unwrap(), String::from_utf8(out.stderr).unwrap())
}

#[test]
fn exit_codes() {
    assert_eq!(exit_code(&["bogus"]).0, 1);
    assert_eq!(exit_code(&["bounds", "--r", "3"]).0, 1);
    assert_eq!(exit_code(&["bounds", "--r", "3", "--n", "6", "--unknown"]).0, 1);
    assert_eq!(exit_code(&["hvector", "tests/data/missing.json"]).0, 1);
    assert_eq!(exit_code(&["enumerate", "--r", "3", "--n", "9"]).0, 2);
    assert_eq!(exit_code(&["f-solve", "--r", "6", "--d", "4", "--max-nodes", "1"]).0, 2);
    assert_eq!(exit_code(&["hvector", "tests/data/not_a_matroid.json"]).0, 3);
    assert_eq!(exit_code(&["tutte-sparse", "--n", "4", "--r", "2", "--lambda", "7"]).0, 3);
    assert_eq!(exit_code(&["paving-h", "--n", "4", "--r", "2", "--b", "2"]).0, 3);
}

#[test]
fn json_errors_carry_a_code() {
    let (code, err) = exit_code(&["--format", "json", "hvector", "tests/data/not_a_matroid.json"]);
    assert_eq!(code, 3);
    let v: serde_json::Value = serde_json::from_str(err.trim()).unwrap();
    assert_eq!(v["code"], 3);
    assert_eq!(v["kind"], "validation");
    let (code, err) = exit_code(&["--format", "json", "enumerate", "--r", "4", "--n", "8"]);
    assert_eq!(code, 2);
    let v: serde_json::Value = serde_json::from_str(err.trim()).unwrap();
    assert_eq!(v["code"], 2);
}

#[test]
fn enumerate_writes_hash_named_files() {
    let dir = tempfile::tempdir().unwrap();
    let out_dir = dir.path().join("enum");
    let out = run(&["--threads", "2", "enumerate", "--r", "3", "--n", "6", "--out", out_dir.to_str().unwrap()]);
    assert!(out.status.success());
    let summary = fs::read_to_string(out_dir.join("summary.csv")).unwrap();
    let mut lines = summary.lines();
    assert_eq!(lines.next(), Some("hash,n,r,bases,paving,sparse,h"));
    let hashes: Vec<&str> = lines.map(|l| l.split(',').next().unwrap()).collect();
    assert_eq!(hashes.len(), 8);
    for h in hashes {
        let text = fs::read_to_string(out_dir.join(format!("{h}.json"))).unwrap();
        let again = run(&["--format", "json", "hvector", out_dir.join(format!("{h}.json")).to_str().unwrap()]);
        assert!(again.status.success(), "{text}");
    }
}
