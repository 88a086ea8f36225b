//! The `verify` subcommand: golden values, power-sum identities, parity of
//! the closed form, and closed-form-vs-quadrature agreement, reported
//! per case.

use std::process::ExitCode;

use num_traits::Zero;

use dirichlet_core::closed_form::{
    alternating_power_sum, classify, evaluate, reference_values, render, ClosedFormResult,
    Convergence, IntegralParams, RenderFormat,
};
use dirichlet_core::quadrature::{integrate_sinc_power, QuadratureConfig};

use crate::output::{CheckRecord, SummaryRecord};
use crate::{usage_error, Format, EXIT_OK, EXIT_VERIFY_FAILED};

pub(crate) fn cmd_verify(
    max_n: u32,
    abs_tol: Option<f64>,
    max_intervals: usize,
    format: Format,
    cap: u32,
) -> ExitCode {
    if max_n < 1 || max_n > cap {
        return usage_error(&format!("max-n must be between 1 and the cap ({cap})"));
    }

    let mut checks = Vec::new();
    golden_checks(&mut checks);
    power_sum_checks(&mut checks);
    parity_checks(&mut checks);
    quadrature_checks(max_n, abs_tol, max_intervals, &mut checks);

    let failures = checks.iter().filter(|check| !check.pass).count();
    for check in &checks {
        print_check(check, format);
    }
    print_summary(checks.len(), failures, format);

    if failures == 0 {
        ExitCode::from(EXIT_OK)
    } else {
        ExitCode::from(EXIT_VERIFY_FAILED)
    }
}

fn golden_checks(checks: &mut Vec<CheckRecord>) {
    for (params, expected) in reference_values() {
        let got = evaluate(params);
        checks.push(CheckRecord {
            check: format!("golden {params}"),
            pass: got == expected,
            detail: if got == expected {
                String::new()
            } else {
                format!(
                    "got {}, expected {}",
                    render(&got, RenderFormat::Plain),
                    render(&expected, RenderFormat::Plain)
                )
            },
        });
    }
}

fn power_sum_checks(checks: &mut Vec<CheckRecord>) {
    for n in 2..=30u32 {
        for m in 2..=n {
            let value = alternating_power_sum(n, m);
            checks.push(CheckRecord {
                check: format!("power-sum n={n} m={m}"),
                pass: value.is_zero(),
                detail: if value.is_zero() {
                    String::new()
                } else {
                    format!("sum = {value}")
                },
            });
        }
    }
    for n in 1..=30u32 {
        let value = alternating_power_sum(n, 1);
        checks.push(CheckRecord {
            check: format!("binomial-sum n={n}"),
            pass: value.is_zero(),
            detail: if value.is_zero() {
                String::new()
            } else {
                format!("sum = {value}")
            },
        });
    }
}

fn parity_checks(checks: &mut Vec<CheckRecord>) {
    for n in 2..=20u32 {
        for m in 2..=n {
            let params = IntegralParams::new(m, n).expect("positive exponents");
            let value = match evaluate(params) {
                ClosedFormResult::Exact(value) => value,
                ClosedFormResult::Divergent(_) => unreachable!("n >= m >= 2 converges"),
            };
            let pass = if (n - m) % 2 == 0 {
                value.is_pi_multiple()
            } else {
                value.pi_coeff().is_zero()
            };
            checks.push(CheckRecord {
                check: format!("parity {params}"),
                pass,
                detail: if pass {
                    String::new()
                } else {
                    format!("value = {}", render(&ClosedFormResult::Exact(value), RenderFormat::Plain))
                },
            });
        }
    }
}

fn quadrature_checks(
    max_n: u32,
    abs_tol: Option<f64>,
    max_intervals: usize,
    checks: &mut Vec<CheckRecord>,
) {
    for n in 1..=max_n {
        for m in 1..=n {
            let params = IntegralParams::new(m, n).expect("positive exponents");
            if !matches!(
                classify(params),
                Convergence::Absolute | Convergence::Conditional
            ) {
                continue;
            }
            let mut config = QuadratureConfig::for_exponent(m);
            if let Some(tol) = abs_tol {
                config.abs_tol = tol;
            }
            config.max_intervals = max_intervals;

            let exact = evaluate(params)
                .exact_value()
                .expect("convergent case")
                .to_f64();
            let (pass, detail) = match integrate_sinc_power(params, &config) {
                Ok(estimate) => {
                    let diff = (estimate.value - exact).abs();
                    let pass = diff <= estimate.error_bound + 1e-9;
                    (
                        pass,
                        format!(
                            "diff = {diff:.3e}, error bound = {:.3e}",
                            estimate.error_bound
                        ),
                    )
                }
                Err(err) => (false, err.to_string()),
            };
            checks.push(CheckRecord {
                check: format!("quadrature {params}"),
                pass,
                detail,
            });
        }
    }
}

fn print_check(check: &CheckRecord, format: Format) {
    match format {
        Format::Text => {
            let status = if check.pass { "PASS" } else { "FAIL" };
            if check.detail.is_empty() {
                println!("{status} {}", check.check);
            } else {
                println!("{status} {} ({})", check.check, check.detail);
            }
        }
        Format::Json => {
            println!("{}", serde_json::to_string(check).expect("record serializes"));
        }
        Format::Latex => {
            let status = if check.pass { "PASS" } else { "FAIL" };
            println!("\\texttt{{{}}} & {status} \\\\", check.check);
        }
    }
}

fn print_summary(total: usize, failures: usize, format: Format) {
    match format {
        Format::Text => println!("summary: {total} checks, {failures} failures"),
        Format::Json => {
            let record = SummaryRecord {
                summary: true,
                checks: total,
                failures,
            };
            println!("{}", serde_json::to_string(&record).expect("record serializes"));
        }
        Format::Latex => println!("% {total} checks, {failures} failures"),
    }
}
