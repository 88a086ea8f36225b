//! Closed-form evaluation of I(m,n) = ∫₀^∞ sinⁿ(x)/xᵐ dx.
//!
//! For n ≥ m ≥ 2 and for the conditionally convergent m = 1, odd-n cases the
//! integral reduces to the primed alternating sum
//!
//! ```text
//! I(m,n) = i^(m−n+1) / (2ⁿ (m−1)!) · Σ'ₗ (−1)ˡ C(n,l) (n−2l)^(m−1) ln[i(2l−n)]
//! ```
//!
//! over l = 0..n with the vanishing-frequency term 2l = n omitted. The sum is
//! assembled in exact arithmetic as a [`SymbolicComplex`]; its imaginary part
//! cancels identically and the real part is the value of the integral. The
//! cancellation that eliminates the Euler-constant and harmonic-number terms
//! is the alternating power-sum identity checked by [`alternating_power_sum`].

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::exact::{i_power, log_of_i_times, rat, Rational, SymbolicComplex, SymbolicReal};

/// Exponent pair of an integral I(m,n): `m` is the power of x, `n` the power
/// of the sine. Both are at least 1 by construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct IntegralParams {
    m: u32,
    n: u32,
}

impl IntegralParams {
    pub fn new(m: u32, n: u32) -> Result<Self, Error> {
        if m < 1 || n < 1 {
            return Err(Error::InvalidParams(format!(
                "m and n must be positive integers, got m={m}, n={n}"
            )));
        }
        Ok(IntegralParams { m, n })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> u32 {
        self.n
    }
}

impl fmt::Display for IntegralParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "I({},{})", self.m, self.n)
    }
}

/// Convergence class of I(m,n).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Convergence {
    /// n ≥ m ≥ 2: absolutely convergent.
    Absolute,
    /// m = 1, n odd: convergent but not absolutely.
    Conditional,
    /// m = 1, n even: the 1/x tail of sinⁿx/x does not decay.
    DivergentEvenN,
    /// m > n: the integrand grows like x^(n−m) at the origin.
    DivergentOrigin,
}

/// Why a divergent I(m,n) has no value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DivergenceReason {
    EvenNWithM1,
    OriginSingularity,
}

impl fmt::Display for DivergenceReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DivergenceReason::EvenNWithM1 => write!(f, "even n with m = 1"),
            DivergenceReason::OriginSingularity => write!(f, "non-integrable singularity at the origin"),
        }
    }
}

/// Outcome of closed-form evaluation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClosedFormResult {
    Exact(SymbolicReal),
    Divergent(DivergenceReason),
}

impl ClosedFormResult {
    pub fn exact_value(&self) -> Option<&SymbolicReal> {
        match self {
            ClosedFormResult::Exact(v) => Some(v),
            ClosedFormResult::Divergent(_) => None,
        }
    }
}

/// Classifies I(m,n) by convergence.
pub fn classify(params: IntegralParams) -> Convergence {
    let (m, n) = (params.m(), params.n());
    if m == 1 {
        if n % 2 == 0 {
            Convergence::DivergentEvenN
        } else {
            Convergence::Conditional
        }
    } else if n >= m {
        Convergence::Absolute
    } else {
        Convergence::DivergentOrigin
    }
}

/// Binomial coefficient C(n,l), exactly; zero for l outside 0..=n.
pub fn binomial(n: u64, l: i64) -> BigInt {
    if l < 0 || l as u64 > n {
        return BigInt::zero();
    }
    let l = (l as u64).min(n - l as u64);
    let mut acc = BigInt::one();
    for i in 0..l {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Harmonic number H_k = 1 + 1/2 + … + 1/k, with H_0 = 0 (empty sum).
pub fn harmonic(k: u32) -> Rational {
    (1..=k as i64).map(|l| rat(1, l)).sum()
}

fn factorial(k: u32) -> BigInt {
    (1..=k as u64).map(BigInt::from).product()
}

/// The alternating power sum Σₗ (−1)ˡ C(n,l) (n−2l)^(m−1) over l = 0..n,
/// with the convention 0⁰ = 1 for the central term when m = 1.
///
/// Equals zero exactly for n ≥ m ≥ 2 and, via (1−1)ⁿ, for m = 1; this is the
/// cancellation that removes the Euler-constant line from the closed form.
pub fn alternating_power_sum(n: u32, m: u32) -> BigInt {
    let mut total = BigInt::zero();
    for l in 0..=n {
        let base = BigInt::from(n as i64 - 2 * l as i64);
        let mut term = binomial(n as u64, l as i64) * base.pow(m - 1);
        if l % 2 == 1 {
            term = -term;
        }
        total += term;
    }
    total
}

/// Assembles the full prefactored sum for a convergent I(m,n) as an exact
/// complex value, before the imaginary part is discarded. Returns `None` for
/// divergent parameters.
///
/// Kept public so verification code can confirm that the imaginary part is
/// the exactly-zero combination rather than trusting [`evaluate`] to have
/// dropped it.
pub fn assemble(params: IntegralParams) -> Option<SymbolicComplex> {
    match classify(params) {
        Convergence::DivergentEvenN | Convergence::DivergentOrigin => None,
        Convergence::Absolute | Convergence::Conditional => {
            let (m, n) = (params.m(), params.n());
            let mut sum = SymbolicComplex::zero();
            for l in 0..=n {
                if 2 * l == n {
                    // primed sum: the 2l = n term is omitted
                    continue;
                }
                let freq = 2 * l as i64 - n as i64;
                let mut coeff = binomial(n as u64, l as i64) * BigInt::from(-freq).pow(m - 1);
                if l % 2 == 1 {
                    coeff = -coeff;
                }
                let log_term = log_of_i_times(freq).expect("freq is nonzero off the primed term");
                sum = sum + log_term.scale_rational(&Rational::from(coeff));
            }

            // The harmonic/Euler-constant line of the pre-limit identity is
            // proportional to this sum; it must vanish exactly rather than be
            // silently dropped.
            assert!(
                alternating_power_sum(n, m).is_zero(),
                "alternating power sum must vanish for convergent {params}"
            );

            let denom = BigInt::from(2).pow(n) * factorial(m - 1);
            let prefactor =
                i_power(m as i64 - n as i64 + 1).scale(&Rational::new(BigInt::one(), denom));
            Some(sum.scale(&prefactor))
        }
    }
}

/// Evaluates I(m,n) in closed form.
///
/// Divergent inputs yield [`ClosedFormResult::Divergent`] with the matching
/// reason. For convergent inputs the assembled imaginary part must cancel to
/// the exactly-zero combination; a nonzero imaginary part would be an
/// implementation bug, never an input error, and panics.
pub fn evaluate(params: IntegralParams) -> ClosedFormResult {
    match classify(params) {
        Convergence::DivergentEvenN => ClosedFormResult::Divergent(DivergenceReason::EvenNWithM1),
        Convergence::DivergentOrigin => {
            ClosedFormResult::Divergent(DivergenceReason::OriginSingularity)
        }
        Convergence::Absolute | Convergence::Conditional => {
            let total = assemble(params).expect("convergent parameters assemble");
            assert!(
                total.im.is_zero(),
                "imaginary part must cancel exactly for {params}, got {}",
                total.im
            );
            ClosedFormResult::Exact(total.re)
        }
    }
}

/// Output format for [`render`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderFormat {
    Plain,
    Latex,
}

/// Renders a result deterministically: the π term first, then log terms in
/// ascending prime order, all coefficients as exact fractions in lowest terms.
pub fn render(result: &ClosedFormResult, format: RenderFormat) -> String {
    match result {
        ClosedFormResult::Divergent(_) => match format {
            RenderFormat::Plain => "divergent".to_string(),
            RenderFormat::Latex => "\\text{divergent}".to_string(),
        },
        ClosedFormResult::Exact(value) => render_symbolic(value, format),
    }
}

fn render_symbolic(value: &SymbolicReal, format: RenderFormat) -> String {
    if value.is_zero() {
        return "0".to_string();
    }
    let mut terms: Vec<(bool, String)> = Vec::new();
    if !value.pi_coeff().is_zero() {
        terms.push(render_term(value.pi_coeff(), Basis::Pi, format));
    }
    for (prime, coeff) in value.log_terms() {
        terms.push(render_term(coeff, Basis::Log(prime), format));
    }

    let mut out = String::new();
    for (index, (negative, body)) in terms.iter().enumerate() {
        if index == 0 {
            if *negative {
                out.push('-');
            }
        } else {
            out.push_str(match (format, negative) {
                (RenderFormat::Plain, false) => " + ",
                (RenderFormat::Plain, true) => " - ",
                (RenderFormat::Latex, false) => "+",
                (RenderFormat::Latex, true) => "-",
            });
        }
        out.push_str(body);
    }
    out
}

enum Basis {
    Pi,
    Log(u64),
}

fn render_term(coeff: &Rational, basis: Basis, format: RenderFormat) -> (bool, String) {
    let negative = coeff.is_negative();
    let magnitude = coeff.abs();
    let body = match format {
        RenderFormat::Plain => {
            let basis = match basis {
                Basis::Pi => "pi".to_string(),
                Basis::Log(p) => format!("ln({p})"),
            };
            if magnitude.is_one() {
                basis
            } else {
                format!("{magnitude}*{basis}")
            }
        }
        RenderFormat::Latex => {
            let basis = match basis {
                Basis::Pi => "\\pi".to_string(),
                Basis::Log(p) => format!("\\ln {p}"),
            };
            if magnitude.is_one() {
                basis
            } else if magnitude.is_integer() {
                format!("{magnitude}{basis}")
            } else {
                format!(
                    "\\frac{{{}}}{{{}}}{}",
                    magnitude.numer(),
                    magnitude.denom(),
                    basis
                )
            }
        }
    };
    (negative, body)
}

/// The fifteen worked examples of I(m,n) with 1 ≤ m ≤ 5, used as golden
/// anchors by the verification suite and the `verify` command.
pub fn reference_values() -> Vec<(IntegralParams, ClosedFormResult)> {
    use ClosedFormResult::{Divergent, Exact};

    let p = |m, n| IntegralParams::new(m, n).unwrap();
    let pi = |num, den| Exact(SymbolicReal::pi_multiple(rat(num, den)));
    let ln = |p: u64, num, den| {
        crate::exact::factor_log(p)
            .unwrap()
            .scale(&rat(num, den))
    };

    vec![
        (p(1, 1), pi(1, 2)),
        (p(1, 2), Divergent(DivergenceReason::EvenNWithM1)),
        (p(1, 3), pi(1, 4)),
        (p(2, 2), pi(1, 2)),
        (p(2, 3), Exact(ln(3, 3, 4))),
        (p(2, 4), pi(1, 4)),
        (p(3, 3), pi(3, 8)),
        (p(3, 4), Exact(ln(2, 1, 1))),
        (p(3, 5), pi(5, 32)),
        (p(4, 4), pi(1, 3)),
        (p(4, 5), Exact(ln(5, 125, 96) - ln(3, 45, 32))),
        (p(4, 6), pi(1, 8)),
        (p(5, 5), pi(115, 384)),
        (p(5, 6), Exact(ln(3, 27, 16) - ln(2, 2, 1))),
        (p(5, 7), pi(77, 768)),
    ]
}
