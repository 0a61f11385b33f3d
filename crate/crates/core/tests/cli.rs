use std::collections::BTreeSet;
use std::path::Path;
use std::process::{Command, Output};

use origami_monodromy::certify::{CertificateReport, Verdict};
use origami_monodromy::cli::ScanRecord;
use origami_monodromy::report::to_canonical_json;

fn origami(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_origami")).args(args).env_remove("ORIGAMI_SEED").output().unwrap()
}

fn code(args: &[&str]) -> i32 {
    origami(args).status.code().unwrap()
}

fn records(path: &Path) -> Vec<ScanRecord> {
    std::fs::read_to_string(path).unwrap().lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["certify", "--family", "4", "--m", "1"]), 0);
    assert_eq!(code(&["certify", "--family", "7", "--m", "1"]), 2);
    assert_eq!(code(&["decompose", "--h", "(1 2)", "--v", "(1)(2)", "--dir", "0,0"]), 2);
    assert_eq!(code(&["inspect", "--h", "(1)(2)", "--v", "(1)(2)"]), 3);
    assert_eq!(code(&["certify", "--family", "4", "--m", "1", "--prime-budget", "3"]), 4);
    assert_eq!(code(&["certify", "--family", "4", "--m", "1", "--json-out", "/nonexistent/dir/r.json"]), 5);
    let out = origami(&["certify", "--family", "7", "--m", "1"]);
    assert!(!String::from_utf8_lossy(&out.stderr).contains("panicked"));
}

#[test]
fn report_round_trip_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let p = path.to_str().unwrap();
    assert_eq!(code(&["certify", "--family", "5", "--m", "1", "--json-out", p, "--seed", "11"]), 0);
    let text = std::fs::read_to_string(&path).unwrap();
    let r: CertificateReport = serde_json::from_str(&text).unwrap();
    assert_eq!(r.seed, 11);
    assert_eq!(r.verdict, Verdict::ArithmeticCertified);
    assert_eq!(to_canonical_json(&r).unwrap() + "\n", text);
}

#[test]
fn seed_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let status = Command::new(env!("CARGO_BIN_EXE_origami"))
        .args(["certify", "--family", "4", "--m", "1", "--json-out", path.to_str().unwrap()])
        .env("ORIGAMI_SEED", "99")
        .output()
        .unwrap();
    assert!(status.status.success());
    let r: CertificateReport = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(r.seed, 99);
}

#[test]
fn scan_is_resumable_and_parallel_safe() {
    let dir = tempfile::tempdir().unwrap();
    let serial = dir.path().join("serial.jsonl");
    let parallel = dir.path().join("parallel.jsonl");
    let base = ["scan", "--family", "4", "--from", "1", "--to", "8", "--no-filter", "--out"];

    let mut args = base.to_vec();
    args.push(serial.to_str().unwrap());
    assert_eq!(code(&args), 0);
    let first = std::fs::read_to_string(&serial).unwrap();
    assert_eq!(first.lines().count(), 8);
    assert_eq!(code(&args), 0);
    assert_eq!(std::fs::read_to_string(&serial).unwrap(), first);

    let mut args = base.to_vec();
    args.push(parallel.to_str().unwrap());
    args.extend(["--jobs", "4"]);
    assert_eq!(code(&args), 0);

    let strip = |v: Vec<ScanRecord>| -> BTreeSet<String> {
        v.into_iter().map(|r| to_canonical_json(&ScanRecord { wall_ms: 0, ..r }).unwrap()).collect()
    };
    assert_eq!(strip(records(&serial)), strip(records(&parallel)));
}

#[test]
fn scan_congruence_filter() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("s.jsonl");
    let p = out.to_str().unwrap();
    assert_eq!(code(&["scan", "--family", "4", "--to", "30", "--congruence", "1:11", "--out", p]), 0);
    let ms: Vec<usize> = records(&out).iter().map(|r| r.m).collect();
    assert_eq!(ms, vec![1, 12, 23]);
    assert_eq!(code(&["scan", "--family", "4", "--to", "30", "--congruence", "1-11", "--out", p]), 2);
}
