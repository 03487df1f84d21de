use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn solvlie(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_solvlie")).args(args).output().unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("terminated by signal")
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p
}

fn generate(dir: &Path, family: &str, field: &str) -> PathBuf {
    let out = solvlie(&["generate", "--family", family, "--field", field]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    write(dir, &format!("{family}-{field}.json"), std::str::from_utf8(&out.stdout).unwrap())
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn check_accepts_valid_and_rejects_broken_input() {
    let dir = tempfile::tempdir().unwrap();
    let good = generate(dir.path(), "cyclic-shift", "gf3");
    assert_eq!(code(&solvlie(&["check", s(&good)])), 0);

    // [e0,e1] = e0 and [e0,e2] = e1 violate Jacobi on (e0, e1, e2).
    let broken = write(
        dir.path(),
        "broken.json",
        r#"{"field":{"type":"GF","p":3},"dim":3,"brackets":[
            {"i":0,"j":1,"coeffs":{"0":1}},{"i":0,"j":2,"coeffs":{"1":1}}]}"#,
    );
    let out = solvlie(&["check", s(&broken)]);
    assert_eq!(code(&out), 1);
    assert!(String::from_utf8_lossy(&out.stderr).to_lowercase().contains("jacobi"));

    let out_of_range = write(
        dir.path(),
        "range.json",
        r#"{"field":{"type":"Q"},"dim":2,"brackets":[{"i":0,"j":5,"coeffs":{"0":"1"}}]}"#,
    );
    assert_eq!(code(&solvlie(&["check", s(&out_of_range)])), 1);

    let garbage = write(dir.path(), "garbage.json", "{ not json");
    assert_eq!(code(&solvlie(&["check", s(&garbage)])), 2);
    assert_eq!(code(&solvlie(&["check", s(&dir.path().join("missing.json"))])), 2);
}

#[test]
fn is_a_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let shift = generate(dir.path(), "cyclic-shift", "gf2");
    let heis = generate(dir.path(), "heisenberg", "gf3");
    assert_eq!(code(&solvlie(&["is-a", s(&shift)])), 0);

    let out = solvlie(&["is-a", s(&heis)]);
    assert_eq!(code(&out), 3);
    let cert: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(cert["verdict"], false);
    assert!(cert["witness"]["x"].is_array());

    let out = solvlie(&["--max-pairs", "1", "is-a", "--method", "oracle", s(&shift)]);
    assert_eq!(code(&out), 4);
    let cert: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(cert["verdict"].is_null());
}

#[test]
fn analyze_writes_a_report_without_timings_by_default() {
    let dir = tempfile::tempdir().unwrap();
    let shift = generate(dir.path(), "cyclic-shift", "gf3");
    let out_path = dir.path().join("report.json");
    let out = solvlie(&["analyze", s(&shift), "--out", s(&out_path)]);
    assert_eq!(code(&out), 0);
    let report: Value = serde_json::from_str(&fs::read_to_string(&out_path).unwrap()).unwrap();
    assert_eq!(report["tool"]["name"], "solvlie");
    assert_eq!(report["a_certificate"]["verdict"], true);
    assert_eq!(report["triangular_decomposition"]["derived_length"], 3);
    assert!(report.get("timings_ms").is_none());
    assert!(report.get("properties").is_none());

    let out = solvlie(&["analyze", s(&shift), "--timings", "--properties"]);
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(report["timings_ms"].is_object());
    assert!(report["properties"]["results"]["derived_series_splitting"].is_object());
}

#[test]
fn decompose_prints_parts_and_complements() {
    let dir = tempfile::tempdir().unwrap();
    let shift = generate(dir.path(), "cyclic-shift", "gf5");
    let out = solvlie(&["decompose", s(&shift)]);
    assert_eq!(code(&out), 0);
    let td: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(td["A"].as_array().unwrap().len(), 3);
    assert_eq!(td["complements"].as_array().unwrap().len(), 2);
}

#[test]
fn generate_families_round_trip_through_check() {
    let dir = tempfile::tempdir().unwrap();
    let runs: &[&[&str]] = &[
        &["--family", "abelian", "--dim", "3", "--field", "q"],
        &["--family", "diagonal", "--lambdas", "1,2;0,1", "--field", "gf5"],
        &["--family", "cyclic-module", "--lambdas", "0,1", "--field", "gf2"],
        &["--family", "random", "--field", "gf3", "--count", "3"],
        &["--family", "invertible", "--field", "gf2", "--count", "2"],
    ];
    for (i, args) in runs.iter().enumerate() {
        let sub = dir.path().join(i.to_string());
        let mut full = vec!["generate", "--out", s(&sub)];
        full.extend_from_slice(args);
        assert_eq!(code(&solvlie(&full)), 0, "{args:?}");
        for entry in fs::read_dir(&sub).unwrap() {
            let p = entry.unwrap().path();
            assert_eq!(code(&solvlie(&["check", s(&p)])), 0, "{p:?}");
        }
    }
    let out = solvlie(&["generate", "--family", "invertible", "--field", "q"]);
    assert_eq!(code(&out), 1);
}

#[test]
fn verify_reports_a_table_and_flags_the_injected_fault() {
    let dir = tempfile::tempdir().unwrap();
    let shift = generate(dir.path(), "cyclic-shift", "gf3");
    let out = solvlie(&["verify", "--corpus", "files", "--files", s(&shift)]);
    assert_eq!(code(&out), 0);
    let table = String::from_utf8(out.stdout).unwrap();
    assert!(table.starts_with("property\tpass\tfail\tnot_applicable\tskipped\n"));
    assert!(table.contains("triangular_decomposition\t1\t0\t0\t0"));

    let failures = dir.path().join("failures.jsonl");
    let out = solvlie(&[
        "--inject-fault",
        "linear-complement",
        "verify",
        "--corpus",
        "files",
        "--files",
        s(&shift),
        "--out",
        s(&failures),
    ]);
    assert_eq!(code(&out), 5);
    let lines = fs::read_to_string(&failures).unwrap();
    let records: Vec<Value> = lines.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    let split = records
        .iter()
        .find(|r| r["property"] == "triangular_decomposition")
        .expect("decomposition failure recorded");
    assert_eq!(split["closed_field_proxy"], false);
    assert!(split["algebra"]["brackets"].is_array());
}
