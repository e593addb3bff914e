use std::process::Command;

use amalgams::analysis::theorem_report;
use amalgams::cli::run_cli;
use amalgams::cosetenum::EnumerationLimits;
use amalgams::presentations::{catalog, CatalogName};

fn run(args: &[&str]) -> amalgams::cli::CliOutput {
    let mut argv = vec!["amalgams"];
    argv.extend_from_slice(args);
    run_cli(&argv)
}

#[test]
fn verify_catalog_entry() {
    let out = run(&["verify", "gamma1"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("25 squares, 100 corner pairs, complete"));
    let out = run(&["verify", "wiseW"]);
    assert!(out.stdout.contains("12 squares, 48 corner pairs, complete"));
}

#[test]
fn verify_broken_file_lists_missing_pairs() {
    let mut p = catalog(CatalogName::Gamma1);
    p.relators.truncate(24);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.sqp");
    p.save(&path).unwrap();
    let out = run(&["verify", path.to_str().unwrap()]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.contains("24 squares, 96 corner pairs, incomplete"));
    // r25 = a5 B4 A5 B2 leaves exactly its four corners uncovered
    assert_eq!(out.stdout.matches("missing corner pair").count(), 4);
    assert!(out.stdout.contains("missing corner pair (a5, B4)"));
    assert!(!out.stderr.is_empty());
}

#[test]
fn file_round_trip_through_cli() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g3.sqp");
    catalog(CatalogName::Gamma3).save(&path).unwrap();
    let out = run(&["verify", path.to_str().unwrap()]);
    assert_eq!(out.code, 0, "{}", out.stderr);
}

#[test]
fn usage_and_io_errors_exit_2() {
    assert_eq!(run(&[]).code, 2);
    assert_eq!(run(&["frobnicate"]).code, 2);
    assert_eq!(run(&["verify", "/nonexistent/file.sqp"]).code, 2);
    assert_eq!(run(&["certificate", "4"]).code, 2);
    assert_eq!(run(&["local-groups", "gamma1", "--side", "x"]).code, 2);
    assert_eq!(run(&["normal-form", "gamma1", "c7"]).code, 2);
    assert_eq!(run(&["--help"]).code, 0);
}

#[test]
fn quotient_gamma2_has_order_8() {
    let out = run(&["quotient", "gamma2", "--add-relator", "a2 A1 a3 A4"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.starts_with("order 8\n"));
    let out = run(&["quotient", "gamma1", "--add-relator", "a2 A1 a3 A4"]);
    assert!(out.stdout.contains("order 4") && out.stdout.contains("klein_four"));
}

#[test]
fn quotient_limit_is_reported() {
    let out = run(&["--max-cosets", "50", "quotient", "gamma1"]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("index unknown"));
}

#[test]
fn normal_form_command() {
    let out = run(&["normal-form", "gamma3", "B1 a5 a5 a5 a5 b1"]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout, "a-part A5 A5 A5 A5\nb-part (empty)\n");
    let split = run(&["normal-form", "gamma3", "B1", "a5", "a5", "a5", "a5", "b1"]);
    assert_eq!(split.stdout, out.stdout);
    let json: serde_json::Value =
        serde_json::from_str(&run(&["--json", "normal-form", "gamma3", "b1 B2"]).stdout).unwrap();
    assert_eq!(json["b_part"], "b1 B2");
    assert_eq!(json["trivial"], false);
}

#[test]
fn local_groups_command() {
    let out = run(&["local-groups", "gamma3", "--side", "h"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("order 3840"));
    assert!(!out.stdout.contains("Vertical"));
    let json: serde_json::Value =
        serde_json::from_str(&run(&["--json", "local-groups", "gamma1"]).stdout).unwrap();
    let groups = json["local_groups"].as_array().unwrap();
    assert_eq!(groups.len(), 2);
    assert_eq!(groups[0]["classification"]["order"], 1814400);
    assert!(groups[0]["strict"].is_null());
    let strict = run(&["--strict-local-generators", "local-groups", "gamma3"]);
    assert_eq!(strict.code, 0);
    assert!(strict.stdout.contains("printed generators: order 3840"));
}

#[test]
fn certificate_json_matches_library() {
    for i in 1..=3usize {
        let arg = i.to_string();
        let out = run(&["--json", "certificate", &arg]);
        assert_eq!(out.code, 0);
        let lib = theorem_report(i, EnumerationLimits::default()).unwrap().to_json() + "\n";
        assert_eq!(out.stdout, lib);
    }
}

#[test]
fn certificate_discrepancy_exits_1() {
    let out = run(&["--max-cosets", "100", "certificate", "2"]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.contains("verdict: discrepancy"));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["--json", "verify", "gamma2"][..],
        &["--json", "local-groups", "gamma2"][..],
        &["--json", "quotient", "gamma3", "--add-relator", "a2 A1 a3 A4"][..],
    ] {
        assert_eq!(run(args), run(args));
    }
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_amalgams");
    let ok = Command::new(bin).args(["verify", "gamma2"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("complete"));
    let bad = Command::new(bin).args(["verify"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
