//! End-to-end checks of the installed binary: exit codes, stream contracts,
//! and byte-identical reruns through the process boundary.

use std::process::Command;

fn binary() -> Command {
    Command::new(env!("CARGO_BIN_EXE_anharmonic"))
}

#[test]
fn instanton_subcommand_reports_all_three_action_routes() {
    let out = binary().args(["instanton", "--degree", "3"]).output().unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["results"]["closed_form"], "2/15");
    let numeric = v["results"]["action_numeric"].as_f64().unwrap();
    assert!((numeric - 2.0 / 15.0).abs() < 1e-10);
    let beta = v["results"]["action_beta"].as_f64().unwrap();
    assert!((numeric - beta).abs() < 1e-9);
    assert_eq!(v["provenance"]["action_numeric"], "quadrature");
}

#[test]
fn domain_error_goes_to_stderr_as_single_json_line() {
    let out = binary()
        .args(["widths", "--degree", "3", "--level", "0", "--coupling", "-0.1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
    let err = String::from_utf8(out.stderr).unwrap();
    assert_eq!(err.lines().count(), 1, "stderr: {err}");
    let v: serde_json::Value = serde_json::from_str(err.trim()).unwrap();
    assert_eq!(v["kind"], "domain");
    assert_eq!(v["exit_code"], 1);
}

#[test]
fn usage_error_exits_two() {
    let out = binary().args(["perturb", "--degree", "3"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = binary().args(["perturb", "--degree", "3", "--orders", "2", "--format", "yaml"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn identical_invocations_are_byte_identical() {
    let run_once = || {
        binary()
            .args(["largeorder", "--degree", "3", "--level", "0", "--orders", "12", "--format", "csv"])
            .output()
            .unwrap()
    };
    let a = run_once();
    let b = run_once();
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8(a.stdout).unwrap();
    assert!(text.starts_with("# command: anharmonic largeorder"));
    assert!(text.lines().nth(1).unwrap().starts_with("K,exact,predicted,ratio"));
}

#[test]
fn oracle_subcommand_verifies_equality() {
    let out = binary()
        .args(["oracle", "--degree", "4", "--level", "2", "--orders", "3"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["results"]["agree"], true);
    assert_eq!(v["results"]["recursion"], v["results"]["oracle"]);
}

#[test]
fn checkall_single_criterion_prints_pass_line() {
    let out = binary().args(["checkall", "--criterion", "9"]).output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("criterion 09"), "{text}");
    assert!(text.contains("PASS"), "{text}");
    assert!(text.contains("1/1 criteria passed"), "{text}");
}

#[test]
fn resonance_subcommand_reports_spectral_fields() {
    let out = binary()
        .args(["resonance", "--degree", "3", "--coupling", "0.0001", "--basis", "64"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let re = v["results"]["energy_re"].as_f64().unwrap();
    let expect = 0.5 - 11.0 / 8.0 * 1e-4 - 465.0 / 32.0 * 1e-8;
    assert!((re - expect).abs() < 1e-9, "re = {re} vs {expect}");
    assert_eq!(v["results"]["converged"], true);
    assert_eq!(v["results"]["basis_n"], 64);
    assert_eq!(v["config"]["theta"], 0.4);
    assert_eq!(v["provenance"]["energy_im"], "spectral");
}

#[test]
fn widths_fixed_order_matches_bracket_arithmetic() {
    let out = binary()
        .args(["widths", "--degree", "3", "--level", "1", "--coupling", "0.01", "--orders", "1"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let w = v["results"]["imag_energy"].as_f64().unwrap();
    // leading factor times (1 - 853/16 * 0.01)
    let lead = -8.0 * (-2.0 / 0.15f64).exp() / (std::f64::consts::PI.sqrt() * 0.01f64.powf(1.5));
    let expect = lead * (1.0 - 853.0 / 16.0 * 0.01);
    assert!((w - expect).abs() < 1e-12 * expect.abs(), "{w} vs {expect}");
}

#[test]
fn precision_env_variable_is_honored() {
    let out = binary()
        .args(["perturb", "--degree", "3", "--orders", "1"])
        .env("ANHARMONIC_PRECISION", "8")
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["config"]["precision_digits"], 8);
    let out = binary()
        .args(["perturb", "--degree", "3", "--orders", "1"])
        .env("ANHARMONIC_PRECISION", "not-a-number")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}
