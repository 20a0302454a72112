//! End-to-end CLI runs diffed against files in tests/golden.
//! Set UPDATE_GOLDEN=1 to rewrite them.

use std::path::{Path, PathBuf};
use std::process::Command;

fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_projcode"))
        .args(args)
        .current_dir(golden_dir())
        .output()
        .expect("run projcode");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).expect("utf-8 stdout"),
        String::from_utf8(out.stderr).expect("utf-8 stderr"),
    )
}

fn render(code: i32, stdout: &str, stderr: &str) -> String {
    format!("exit: {code}\n--- stdout\n{stdout}--- stderr\n{stderr}")
}

fn check(name: &str, actual: &str) -> Result<(), String> {
    let path = golden_dir().join(format!("{name}.golden"));
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, actual).unwrap();
        return Ok(());
    }
    let expected = std::fs::read_to_string(&path).map_err(|e| format!("{name}: {e}"))?;
    if expected == actual {
        Ok(())
    } else {
        Err(format!("{name}: output differs\n--- expected\n{expected}\n--- actual\n{actual}"))
    }
}

const CASES: &[(&str, &[&str])] = &[
    ("construct_multilevel_fixture", &["construct", "multilevel", "--fixture", "ex-3.5.3.8"]),
    ("construct_multilevel_words", &["construct", "multilevel", "--words", "11000,00110", "--delta", "2"]),
    ("construct_multilevel_words_q3", &["construct", "multilevel", "--words", "1100,0011", "--delta", "2", "--q", "3"]),
    ("construct_multilevel_lexicode", &["construct", "multilevel", "--lexicode", "6", "3", "--delta", "2"]),
    ("construct_multilevel_delta1", &["construct", "multilevel", "--words", "1100,0110", "--delta", "1"]),
    ("construct_lift", &["construct", "lift", "--k", "2", "--cols", "3", "--d", "2"]),
    ("construct_spread", &["construct", "spread", "--n", "4", "--k", "2"]),
    ("construct_puncture_fixture", &["construct", "puncture", "--fixture", "ex-3.5.3.9"]),
    ("construct_puncture_file", &["construct", "puncture", "--code", "inputs/code_5_9.json", "--special", "10001", "--extremes"]),
    ("bounds_point", &["bounds", "--q", "2", "--n", "6", "--k", "3", "--delta", "2"]),
    ("bounds_grid_csv", &["--format", "csv", "bounds", "--q", "2..3", "--n", "4..6"]),
    ("bounds_projective", &["bounds", "--n", "4..6", "--d", "2..3"]),
    ("distance", &["distance", "--q", "2", "1000;0100", "1000;0101"]),
    ("distance_q3", &["distance", "--q", "3", "1020;0112", "1000"]),
    ("index_encode_full", &["index", "encode", "--n", "6", "--k", "3", "001000;000110;000001"]),
    ("index_encode_full_hex", &["index", "encode", "--n", "6", "--k", "3", "--radix", "hex", "100000;010000;001000"]),
    ("index_decode_full", &["index", "decode", "--n", "6", "--k", "3", "00000000010"]),
    ("index_decode_full_hex", &["index", "decode", "--n", "5", "--k", "2", "0x12"]),
    ("index_encode_compact", &["index", "encode", "--n", "6", "--k", "3", "--scheme", "compact", "000100;000010;000001"]),
    ("index_decode_compact", &["index", "decode", "--n", "6", "--k", "3", "--scheme", "compact", "00000000010"]),
    ("index_encode_extended", &["index", "encode", "--n", "5", "--k", "2", "--scheme", "extended", "10010;01001"]),
    ("index_decode_extended", &["index", "decode", "--n", "5", "--k", "2", "--scheme", "extended", "1001001"]),
    ("simulate_summary", &["simulate", "--fixture", "ex-3.5.3.9", "--t", "1", "--rho", "0", "--trials", "200", "--seed", "7"]),
    ("simulate_outcomes_csv", &["--format", "csv", "simulate", "--code", "inputs/code_5_9.json", "--t", "1", "--rho", "1", "--trials", "5", "--seed", "3", "--outcomes"]),
    ("verify_json", &["verify", "inputs/code_5_9.json"]),
    ("verify_csv", &["--format", "csv", "verify", "inputs/code_5_9.json"]),
    ("experiment_hamming", &["experiment", "hamming"]),
    ("experiment_puncture_profile", &["experiment", "puncture-profile", "--fixture", "ex-3.5.3.9"]),
    ("experiment_closed_form", &["--format", "csv", "experiment", "closed-form", "--n", "5", "--k", "2"]),
    ("error_usage_missing_arg", &["distance", "--q", "2", "1000"]),
    ("error_usage_bad_range", &["bounds", "--n", "4..x"]),
    ("error_unknown_fixture", &["construct", "multilevel", "--fixture", "ex-9"]),
    ("error_verify_duplicate", &["verify", "inputs/duplicate.json"]),
    ("error_verify_bad_digit", &["verify", "inputs/bad_digit.json"]),
    ("error_verify_missing_file", &["verify", "inputs/missing.json"]),
    ("error_distance_mismatch", &["distance", "1000", "10000"]),
    ("error_decode_not_codeword", &["index", "decode", "--n", "6", "--k", "3", "00000000011"]),
    ("error_simulate_infeasible", &["simulate", "--fixture", "ex-3.5.3.8", "--t", "0", "--rho", "3"]),
];

#[test]
fn golden_outputs() {
    let failures: Vec<String> = CASES
        .iter()
        .filter_map(|(name, args)| {
            let (code, out, err) = run(args);
            check(name, &render(code, &out, &err)).err()
        })
        .collect();
    assert!(failures.is_empty(), "{}", failures.join("\n\n"));
}

#[test]
fn out_writes_code_file_and_prints_summary() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c.json");
    let (code, out, err) = run(&["construct", "multilevel", "--fixture", "ex-3.5.3.8", "--out", path.to_str().unwrap()]);
    check("construct_out_summary", &render(code, &out, &err)).unwrap();
    let written = std::fs::read_to_string(&path).unwrap();
    let (_, stdout, _) = run(&["construct", "multilevel", "--fixture", "ex-3.5.3.8"]);
    assert_eq!(written, stdout);
    let input = std::fs::read_to_string(golden_dir().join("inputs/code_5_9.json")).unwrap();
    assert_eq!(written, input);
}

#[test]
fn table_output_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("b.csv");
    let (code, out, _) = run(&["--format", "csv", "--out", path.to_str().unwrap(), "bounds", "--n", "6", "--k", "3", "--delta", "2"]);
    assert_eq!((code, out.as_str()), (0, ""));
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("q,n,k,delta,") && text.contains("2,6,3,2,1395,155,93,90,"));
}

#[test]
fn json_is_stable_under_reserialization() {
    for args in [&["bounds", "--n", "6..7"][..], &["verify", "inputs/code_5_9.json"], &["experiment", "hamming"]] {
        let (_, out, _) = run(args);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        let mut again = serde_json::to_string_pretty(&v).unwrap();
        again.push('\n');
        assert_eq!(again, out);
    }
}
