use std::process::{Command, Output};

use nsg_core::KunzVector;

fn nsg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nsg"))
        .args(args)
        .output()
        .unwrap()
}

fn nsg_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nsg"))
        .args(args)
        .env(key, value)
        .output()
        .unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn text(bytes: &[u8]) -> String {
    String::from_utf8(bytes.to_vec()).unwrap()
}

#[test]
fn count_trivial() {
    let out = nsg(&["count", "-F", "1"]);
    assert_eq!(code(&out), 0);
    let stdout = text(&out.stdout);
    assert!(stdout.contains("total 1\n") && stdout.contains("irreducible 1\n"));
}

#[test]
fn usage_errors_exit_1() {
    for args in [
        &["enumerate"][..],
        &["enumerate", "-F", "0"],
        &["enumerate", "-F", "x"],
        &["class"],
        &["class", "--gens", "3,5", "--kunz", "1101001"],
        &["enumerate", "-F", "5", "--format", "xml"],
        &["frobnicate"],
    ] {
        let out = nsg(args);
        assert_eq!(code(&out), 1, "{args:?}");
        assert!(out.stdout.is_empty());
        assert!(!out.stderr.is_empty());
    }
    assert_eq!(code(&nsg(&["--help"])), 0);
}

#[test]
fn domain_errors_exit_2() {
    for args in [
        &["class", "--gens", "4,6"][..],
        &["class", "--kunz", "11011"],
        &["class", "--kunz", "0101"],
        &["delta", "--gens", "3,8,10"],
        &["delta-inverse", "--gens", "3,5"],
        &["verify", "-F", "30"],
    ] {
        let out = nsg(args);
        assert_eq!(code(&out), 2, "{args:?}");
        assert!(out.stdout.is_empty());
    }
    let out = nsg(&["class", "--gens", "3,8,10"]);
    assert!(text(&out.stderr).contains("1101001"));
}

#[test]
fn ceiling_from_environment() {
    assert_eq!(
        code(&nsg_env(&["verify", "-F", "9"], "NSG_ORACLE_CEILING", "8")),
        2
    );
    assert_eq!(
        code(&nsg_env(
            &["verify", "-F", "9"],
            "NSG_ORACLE_CEILING",
            "nine"
        )),
        1
    );
    let out = nsg_env(&["verify", "-F", "9"], "NSG_ORACLE_CEILING", "9");
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
    let report = text(&out.stderr);
    assert!(report.contains("[PASS]") && !report.contains("[FAIL]"));
}

#[test]
fn jsonl_records_are_consistent() {
    let out = nsg(&["enumerate", "-F", "11"]);
    assert_eq!(code(&out), 0);
    let mut n = 0;
    for line in text(&out.stdout).lines() {
        let r: serde_json::Value = serde_json::from_str(line).unwrap();
        let x: KunzVector = r["kunz"].as_str().unwrap().parse().unwrap();
        let class_of: KunzVector = r["class_of"].as_str().unwrap().parse().unwrap();
        assert_eq!(r["frobenius"], 11);
        assert_eq!(r["genus"], x.popcount());
        assert_eq!(r["gaps"], serde_json::json!(x.ones().collect::<Vec<_>>()));
        assert_eq!(r["irreducible"], x.is_irreducible());
        assert_eq!(r["homogeneous"], x.is_homogeneous());
        assert!(class_of.is_irreducible());
        assert_eq!(class_of.theta_k(), x.theta_k());
        n += 1;
    }
    assert_eq!(n, 51);
}

#[test]
fn limit_and_setform() {
    let out = nsg(&[
        "enumerate",
        "-F",
        "9",
        "--limit",
        "3",
        "--format",
        "bits",
        "--sorted",
    ]);
    let oracle = nsg_core::brute_force_sem(9).unwrap();
    let expected: String = oracle.members[..3]
        .iter()
        .map(|x| format!("{x}\n"))
        .collect();
    assert_eq!(text(&out.stdout), expected);
    let fast = nsg(&["class", "--kunz", "11001", "--format", "bits"]);
    let slow = nsg(&["class", "--kunz", "11001", "--format", "bits", "--setform"]);
    let sorted = |o: &Output| {
        let mut v: Vec<String> = text(&o.stdout).lines().map(String::from).collect();
        v.sort();
        v
    };
    assert_eq!(sorted(&fast), sorted(&slow));
}

#[test]
fn homogeneous_and_delta_inverse() {
    let out = nsg(&["homogeneous", "-F", "5", "--format", "gens"]);
    assert_eq!(text(&out.stdout), "<2,7>\n<6,7,8,9,10,11>\n");
    let out = nsg(&["delta-inverse", "--gens", "3,8,10", "--format", "gens"]);
    assert_eq!(text(&out.stdout), "<3,5>\n");
}
