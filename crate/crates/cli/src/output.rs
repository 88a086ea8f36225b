//! Machine-readable output records. Field order is fixed by declaration, so
//! serialized JSON round-trips byte-for-byte through these types.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use dirichlet_core::closed_form::{ClosedFormResult, DivergenceReason};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Exact,
    Divergent,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LogTerm {
    pub prime: u64,
    /// Rational coefficient as "p/q" in lowest terms ("p" when q = 1).
    pub coeff: String,
}

/// One evaluated I(m,n). Rational fields are exact lowest-terms strings;
/// fields that do not apply are omitted entirely.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub m: u32,
    pub n: u32,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pi_coeff: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub log_terms: Option<Vec<LogTerm>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub float_value: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub divergence_reason: Option<String>,
}

impl OutputRecord {
    pub fn new(m: u32, n: u32, result: &ClosedFormResult) -> Self {
        match result {
            ClosedFormResult::Exact(value) => OutputRecord {
                m,
                n,
                status: Status::Exact,
                pi_coeff: (!value.pi_coeff().is_zero()).then(|| value.pi_coeff().to_string()),
                log_terms: Some(
                    value
                        .log_terms()
                        .map(|(prime, coeff)| LogTerm {
                            prime,
                            coeff: coeff.to_string(),
                        })
                        .collect(),
                ),
                float_value: Some(value.to_f64()),
                divergence_reason: None,
            },
            ClosedFormResult::Divergent(reason) => OutputRecord {
                m,
                n,
                status: Status::Divergent,
                pi_coeff: None,
                log_terms: None,
                float_value: None,
                divergence_reason: Some(reason_slug(*reason).to_string()),
            },
        }
    }
}

pub fn reason_slug(reason: DivergenceReason) -> &'static str {
    match reason {
        DivergenceReason::EvenNWithM1 => "even_n_with_m1",
        DivergenceReason::OriginSingularity => "origin_singularity",
    }
}

/// Side-by-side result of the `reg` command.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RegRecord {
    pub m: u32,
    pub n: u32,
    pub eps: f64,
    pub identity_re: f64,
    pub identity_im: f64,
    pub quadrature: f64,
    pub quadrature_error_bound: f64,
    pub difference: f64,
}

/// One line of the `verify` report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub check: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "String::is_empty", default)]
    pub detail: String,
}

/// Trailing summary line of the `verify` report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SummaryRecord {
    pub summary: bool,
    pub checks: usize,
    pub failures: usize,
}
