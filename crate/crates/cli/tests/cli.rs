//! End-to-end tests of the `dirichlet` binary: output shapes and the
//! exit-code contract (0 exact, 1 usage, 2 divergent, 3 verification failed).

use std::process::{Command, Output};

use dirichlet_cli::output::OutputRecord;
use dirichlet_core::closed_form::{evaluate, IntegralParams};

fn dirichlet(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dirichlet"))
        .args(args)
        .output()
        .expect("binary launches")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 stdout")
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("process not killed by signal")
}

#[test]
fn eval_prints_closed_form_and_exits_zero() {
    let out = dirichlet(&["eval", "2", "3", "--format", "text"]);
    assert_eq!(stdout_of(&out).trim(), "3/4*ln(3)");
    assert_eq!(exit_code(&out), 0);
}

#[test]
fn eval_divergent_exits_two_in_every_format() {
    for format in ["text", "json", "latex"] {
        let out = dirichlet(&["eval", "1", "2", "--format", format]);
        assert_eq!(exit_code(&out), 2, "format {format}");
    }
    let out = dirichlet(&["eval", "1", "2"]);
    assert_eq!(stdout_of(&out).trim(), "divergent");
}

#[test]
fn eval_rejects_invalid_exponents() {
    let out = dirichlet(&["eval", "0", "3"]);
    assert_eq!(exit_code(&out), 1);
    let out = dirichlet(&["eval", "3", "0"]);
    assert_eq!(exit_code(&out), 1);
}

#[test]
fn eval_enforces_configurable_cap() {
    let out = dirichlet(&["eval", "2", "70"]);
    assert_eq!(exit_code(&out), 1);
    let out = dirichlet(&["eval", "2", "70", "--cap", "80"]);
    assert_eq!(exit_code(&out), 0);
}

#[test]
fn eval_reports_origin_singularity() {
    let out = dirichlet(&["eval", "3", "2", "--format", "json"]);
    assert_eq!(exit_code(&out), 2);
    let record: OutputRecord = serde_json::from_str(stdout_of(&out).trim()).unwrap();
    assert_eq!(record.divergence_reason.as_deref(), Some("origin_singularity"));
    assert!(record.float_value.is_none());
}

#[test]
fn table_single_row() {
    let out = dirichlet(&["table", "--max-n", "1"]);
    assert_eq!(stdout_of(&out).trim(), "I(1,1) = 1/2*pi");
    assert_eq!(exit_code(&out), 0);
}

#[test]
fn table_rejects_zero() {
    let out = dirichlet(&["table", "--max-n", "0"]);
    assert_eq!(exit_code(&out), 1);
}

#[test]
fn table_latex_renders_fractions() {
    let out = dirichlet(&["table", "--max-n", "7", "--format", "latex"]);
    assert!(stdout_of(&out).contains("\\frac{77}{768}\\pi"));
}

#[test]
fn table_seven_matches_known_results() {
    let out = dirichlet(&["table", "--max-n", "7", "--format", "json"]);
    let text = stdout_of(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 28, "one row per 1 <= m <= n <= 7");

    let records: Vec<OutputRecord> = lines
        .iter()
        .map(|line| serde_json::from_str(line).expect("valid record"))
        .collect();

    // rows ordered m ascending, then n
    let order: Vec<(u32, u32)> = records.iter().map(|r| (r.m, r.n)).collect();
    let mut expected_order = Vec::new();
    for m in 1..=7 {
        for n in m..=7 {
            expected_order.push((m, n));
        }
    }
    assert_eq!(order, expected_order);

    // every row agrees with a fresh library evaluation, so the known
    // values (including I(1,2) divergent and I(5,7) = 77/768 pi) appear
    for record in &records {
        let result = evaluate(IntegralParams::new(record.m, record.n).unwrap());
        assert_eq!(record, &OutputRecord::new(record.m, record.n, &result));
    }
    let i57 = records.iter().find(|r| (r.m, r.n) == (5, 7)).unwrap();
    assert_eq!(i57.pi_coeff.as_deref(), Some("77/768"));
}

#[test]
fn json_records_round_trip_byte_identical() {
    let out = dirichlet(&["table", "--max-n", "6", "--format", "json"]);
    for line in stdout_of(&out).lines() {
        let record: OutputRecord = serde_json::from_str(line).expect("valid record");
        let reserialized = serde_json::to_string(&record).unwrap();
        assert_eq!(line, reserialized);
    }
}

#[test]
fn verify_passes_at_default_tolerances() {
    let out = dirichlet(&["verify", "--max-n", "8"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("summary:"));
    assert!(!text.contains("FAIL"));
}

#[test]
fn verify_fails_when_tolerance_is_unreachable() {
    let out = dirichlet(&[
        "verify",
        "--max-n",
        "8",
        "--abs-tol",
        "1e-30",
        "--max-intervals",
        "20000",
    ]);
    assert_eq!(exit_code(&out), 3);
    let text = stdout_of(&out);
    assert!(text.contains("FAIL quadrature"));
}

#[test]
fn verify_rejects_zero_max_n() {
    let out = dirichlet(&["verify", "--max-n", "0"]);
    assert_eq!(exit_code(&out), 1);
}

#[test]
fn reg_agrees_across_routes() {
    let out = dirichlet(&["reg", "1", "1", "--eps", "0.001", "--format", "json"]);
    assert_eq!(exit_code(&out), 0);
    let record: serde_json::Value = serde_json::from_str(stdout_of(&out).trim()).unwrap();
    let identity = record["identity_re"].as_f64().unwrap();
    let quadrature = record["quadrature"].as_f64().unwrap();
    assert!((identity - std::f64::consts::FRAC_PI_2).abs() < 0.05);
    assert!((quadrature - std::f64::consts::FRAC_PI_2).abs() < 0.05);
    assert!(record["difference"].as_f64().unwrap() < 1e-6);

    // damping rescues the divergent (1,2) case
    let out = dirichlet(&["reg", "1", "2", "--eps", "0.5", "--format", "json"]);
    assert_eq!(exit_code(&out), 0);
    let record: serde_json::Value = serde_json::from_str(stdout_of(&out).trim()).unwrap();
    assert!(record["identity_re"].as_f64().unwrap().is_finite());
    assert!(record["difference"].as_f64().unwrap() < 1e-6);
}

#[test]
fn reg_rejects_nonpositive_eps() {
    let out = dirichlet(&["reg", "2", "2", "--eps", "-1"]);
    assert_eq!(exit_code(&out), 1);
    let out = dirichlet(&["reg", "2", "2", "--eps", "0"]);
    assert_eq!(exit_code(&out), 1);
}
