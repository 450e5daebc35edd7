use std::process::Command;

use rjpascal::cli::run;
use serde_json::Value;

fn cli(args: &[&str]) -> rjpascal::cli::Outcome {
    run(std::iter::once("rjpascal").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> (i32, Value) {
    let out = cli(args);
    let v = serde_json::from_str(&out.stdout)
        .unwrap_or_else(|e| panic!("{args:?}: not JSON ({e}): {}", out.stdout));
    (out.code, v)
}

#[test]
fn show_r_csv() {
    let out = cli(&["show-r", "--n", "3", "--format", "csv"]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout, "0,0,1\n0,1,1\n1,2,1\n");
}

#[test]
fn show_r_symbolic_pretty() {
    let out = cli(&["show-r", "--n", "3", "--x", "symbolic"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("x^2"), "{}", out.stdout);
}

#[test]
fn show_r_json_decodes() {
    let (code, v) = json(&["show-r", "--n", "2", "--format", "json"]);
    assert_eq!(code, 0);
    assert_eq!(v["n"], 2);
    let m: rjpascal::IntMatrix = serde_json::from_value(v).unwrap();
    assert_eq!(m, rjpascal::build_r(2).unwrap());
}

#[test]
fn power_csv() {
    let out = cli(&["power", "--n", "2", "--m", "2", "--format", "csv"]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout, "1,1\n1,2\n");
}

#[test]
fn power_negative_is_inverse() {
    let out = cli(&["power", "--n", "2", "--m", "-1", "--format", "csv"]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout, "-1,1\n1,0\n");
}

#[test]
fn power_rejects_symbolic() {
    assert_eq!(
        cli(&["power", "--n", "2", "--m", "2", "--x", "symbolic"]).code,
        2
    );
}

#[test]
fn verify_symbolic_eigen() {
    let (code, v) = json(&["verify", "--n", "6", "--check", "eigen", "--x", "symbolic"]);
    assert_eq!(code, 0);
    let reports = v.as_array().unwrap();
    assert_eq!(reports.len(), 6);
    assert!(reports
        .iter()
        .all(|r| r["check"] == "eigen" && r["pass"] == true));
}

#[test]
fn verify_all_passes() {
    let (code, v) = json(&["verify", "--n", "5"]);
    assert_eq!(code, 0);
    let checks: Vec<&str> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["check"].as_str().unwrap())
        .collect();
    for c in ["eigen", "involution", "power", "diag"] {
        assert!(checks.contains(&c), "missing {c} in {checks:?}");
    }
    assert!(v.as_array().unwrap().iter().all(|r| r["pass"] == true));
}

#[test]
fn verify_symbolic_power_is_usage_error() {
    assert_eq!(
        cli(&["verify", "--n", "3", "--x", "symbolic", "--check", "power"]).code,
        2
    );
}

#[test]
fn identities_default_box() {
    // The companion trinomial identity fails on negative I, so the default
    // sweep exits 1 with every other identity clean.
    let (code, v) = json(&["identities"]);
    assert_eq!(code, 1);
    let reports = v.as_array().unwrap();
    assert_eq!(reports.len(), 6);
    for r in reports {
        let failures = r["failures"].as_array().unwrap();
        if r["identity"] == "TRINOMIAL_COMPANION" {
            assert_eq!(failures.len(), 819);
            assert!(failures
                .iter()
                .all(|f| f["params"]["I"].as_i64().unwrap() < 0));
        } else {
            assert!(failures.is_empty(), "{}", r["identity"]);
        }
    }
}

#[test]
fn identities_single_with_ranges() {
    let (code, v) = json(&[
        "identities",
        "--only",
        "double-delta",
        "--N",
        "-8..12",
        "--L",
        "0..12",
    ]);
    assert_eq!(code, 0);
    let reports = v.as_array().unwrap();
    assert_eq!(reports.len(), 1);
    assert_eq!(reports[0]["cases_checked"], 21 * 13);
    let report = rjpascal::IdentityReport::from_json(&reports[0].to_string()).unwrap();
    assert!(report.passed());
}

#[test]
fn identities_precondition_and_unknown_parameter() {
    assert_eq!(
        cli(&["identities", "--only", "alternating", "--N", "-1..5"]).code,
        2
    );
    assert_eq!(
        cli(&["identities", "--only", "star", "--L", "0..3"]).code,
        2
    );
    assert_eq!(cli(&["identities", "--N", "5..1"]).code, 2);
}

#[test]
fn usage_errors() {
    for args in [
        &["show-r", "--n", "0"][..],
        &["show-r"],
        &["show-r", "--n", "3", "--x", "one"],
        &["show-w", "--n", "2", "--x", "symbolic", "--format", "csv"],
        &["power", "--n", "2"],
        &["bogus"],
    ] {
        let out = cli(args);
        assert_eq!(out.code, 2, "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn help_goes_to_stdout() {
    let out = cli(&["--help"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("identities"));
}

#[test]
fn binary_end_to_end() {
    let out = Command::new(env!("CARGO_BIN_EXE_rjpascal"))
        .args(["show-r", "--n", "3", "--format", "csv"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "0,0,1\n0,1,1\n1,2,1\n"
    );

    let bad = Command::new(env!("CARGO_BIN_EXE_rjpascal"))
        .args(["show-r", "--n", "0"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
    assert!(bad.stdout.is_empty());
}
