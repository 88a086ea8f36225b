//! Command dispatch for the `dirichlet` binary.
//!
//! Exit codes: 0 success (exact result), 1 usage error, 2 divergent result
//! (`eval` only), 3 verification failure, so scripts can tell mathematical
//! divergence apart from misuse.

pub mod output;

mod verify;

use std::process::ExitCode;

use clap::{error::ErrorKind, Parser, Subcommand, ValueEnum};

use dirichlet_core::closed_form::{
    evaluate, render, ClosedFormResult, IntegralParams, RenderFormat,
};
use dirichlet_core::kernel::eval_regularized;
use dirichlet_core::quadrature::{integrate_regularized, QuadratureConfig};
use output::{OutputRecord, RegRecord};

const EXIT_OK: u8 = 0;
const EXIT_USAGE: u8 = 1;
const EXIT_DIVERGENT: u8 = 2;
const EXIT_VERIFY_FAILED: u8 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "dirichlet",
    version,
    about = "Evaluate the integrals I(m,n) = \u{222b}\u{2080}^\u{221e} sin\u{207f}(x)/x\u{1d50} dx exactly and numerically"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Largest accepted sine exponent n.
    #[arg(long, global = true, default_value_t = 64)]
    cap: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate I(m,n) in closed form.
    Eval { m: u32, n: u32 },

    /// Print closed forms for every 1 <= m <= n <= max-n.
    Table {
        #[arg(long = "max-n")]
        max_n: u32,
    },

    /// Run the golden-value, identity, parity, and quadrature-agreement checks.
    Verify {
        #[arg(long = "max-n", default_value_t = 12)]
        max_n: u32,
        /// Override the quadrature tolerance of the agreement sweep.
        #[arg(long = "abs-tol")]
        abs_tol: Option<f64>,
        /// Interval budget for each adaptive quadrature.
        #[arg(long = "max-intervals", default_value_t = 1_000_000)]
        max_intervals: usize,
    },
    /// Evaluate the damped integral (sin^n x / x^m) e^(-eps*x) two ways and compare.
    Reg {
        m: u32,
        n: u32,
        #[arg(long, allow_negative_numbers = true)]
        eps: f64,
    },
}

pub fn run() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };

    match cli.command {
        Command::Eval { m, n } => cmd_eval(m, n, cli.format, cli.cap),
        Command::Table { max_n } => cmd_table(max_n, cli.format, cli.cap),
        Command::Verify {
            max_n,
            abs_tol,
            max_intervals,
        } => verify::cmd_verify(max_n, abs_tol, max_intervals, cli.format, cli.cap),
        Command::Reg { m, n, eps } => cmd_reg(m, n, eps, cli.format, cli.cap),
    }
}

fn usage_error(message: &str) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(EXIT_USAGE)
}

fn checked_params(m: u32, n: u32, cap: u32) -> Result<IntegralParams, ExitCode> {
    if n > cap {
        return Err(usage_error(&format!(
            "n = {n} exceeds the configured cap of {cap} (raise it with --cap)"
        )));
    }
    IntegralParams::new(m, n).map_err(|err| usage_error(&err.to_string()))
}

fn render_format(format: Format) -> RenderFormat {
    match format {
        Format::Latex => RenderFormat::Latex,
        _ => RenderFormat::Plain,
    }
}

fn cmd_eval(m: u32, n: u32, format: Format, cap: u32) -> ExitCode {
    let params = match checked_params(m, n, cap) {
        Ok(params) => params,
        Err(code) => return code,
    };
    let result = evaluate(params);
    match format {
        Format::Text | Format::Latex => {
            println!("{}", render(&result, render_format(format)));
        }
        Format::Json => {
            let record = OutputRecord::new(m, n, &result);
            println!("{}", serde_json::to_string(&record).expect("record serializes"));
        }
    }
    match result {
        ClosedFormResult::Exact(_) => ExitCode::from(EXIT_OK),
        ClosedFormResult::Divergent(_) => ExitCode::from(EXIT_DIVERGENT),
    }
}

fn cmd_table(max_n: u32, format: Format, cap: u32) -> ExitCode {
    if max_n < 1 || max_n > cap {
        return usage_error(&format!("max-n must be between 1 and the cap ({cap})"));
    }
    for m in 1..=max_n {
        for n in m..=max_n {
            let result = evaluate(IntegralParams::new(m, n).expect("positive exponents"));
            match format {
                Format::Text | Format::Latex => {
                    println!("I({m},{n}) = {}", render(&result, render_format(format)));
                }
                Format::Json => {
                    let record = OutputRecord::new(m, n, &result);
                    println!("{}", serde_json::to_string(&record).expect("record serializes"));
                }
            }
        }
    }
    ExitCode::from(EXIT_OK)
}

fn cmd_reg(m: u32, n: u32, eps: f64, format: Format, cap: u32) -> ExitCode {
    let params = match checked_params(m, n, cap) {
        Ok(params) => params,
        Err(code) => return code,
    };
    if !(eps > 0.0) {
        return usage_error(&format!("eps must be positive, got {eps}"));
    }

    let identity = match eval_regularized(params.m(), params.n(), eps) {
        Ok(value) => value,
        Err(err) => return usage_error(&err.to_string()),
    };
    let quadrature =
        match integrate_regularized(params.m(), params.n(), eps, &QuadratureConfig::default()) {
            Ok(estimate) => estimate,
            Err(err) => return usage_error(&err.to_string()),
        };
    let record = RegRecord {
        m,
        n,
        eps,
        identity_re: identity.re,
        identity_im: identity.im,
        quadrature: quadrature.value,
        quadrature_error_bound: quadrature.error_bound,
        difference: (identity.re - quadrature.value).abs(),
    };

    match format {
        Format::Text => {
            println!(
                "identity   = {:.17e} (imaginary part {:.3e})",
                record.identity_re, record.identity_im
            );
            println!(
                "quadrature = {:.17e} (error bound {:.3e})",
                record.quadrature, record.quadrature_error_bound
            );
            println!("difference = {:.3e}", record.difference);
        }
        Format::Json => {
            println!("{}", serde_json::to_string(&record).expect("record serializes"));
        }
        Format::Latex => {
            println!(
                "\\int_0^\\infty \\frac{{\\sin^{{{n}}}x}}{{x^{{{m}}}}}\\,e^{{-{eps}x}}\\,\\mathrm{{d}}x \\approx {:.15}",
                record.identity_re
            );
        }
    }
    ExitCode::from(EXIT_OK)
}
