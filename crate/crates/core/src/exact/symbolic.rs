use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{Signed, ToPrimitive, Zero};

use super::{rat, GaussianRational, Rational};
use crate::error::Error;

/// Exact linear combination `q·π + Σₚ qₚ·ln p` over primes p with rational
/// coefficients.
///
/// π and the logarithms of distinct primes are linearly independent over ℚ,
/// so structural equality of the stored coefficients decides equality of the
/// represented real numbers. Zero coefficients are never stored, which makes
/// the representation canonical: equality is a plain map comparison.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SymbolicReal {
    pi_coeff: Rational,
    log_coeffs: BTreeMap<u64, Rational>,
}

impl SymbolicReal {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The value `coeff · π`.
    pub fn pi_multiple(coeff: Rational) -> Self {
        SymbolicReal {
            pi_coeff: coeff,
            log_coeffs: BTreeMap::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.pi_coeff.is_zero() && self.log_coeffs.is_empty()
    }

    pub fn pi_coeff(&self) -> &Rational {
        &self.pi_coeff
    }

    /// True when the value is a pure rational multiple of π.
    pub fn is_pi_multiple(&self) -> bool {
        self.log_coeffs.is_empty()
    }

    /// Log-basis terms `(prime, coefficient)` in ascending prime order.
    /// Coefficients are always nonzero.
    pub fn log_terms(&self) -> impl Iterator<Item = (u64, &Rational)> {
        self.log_coeffs.iter().map(|(&p, c)| (p, c))
    }

    /// Coefficient of `ln prime`, zero when the term is absent.
    pub fn log_coeff(&self, prime: u64) -> Rational {
        self.log_coeffs.get(&prime).cloned().unwrap_or_default()
    }

    fn insert_log(&mut self, prime: u64, delta: Rational) {
        if delta.is_zero() {
            return;
        }
        let entry = self.log_coeffs.entry(prime).or_default();
        *entry += delta;
        if entry.is_zero() {
            self.log_coeffs.remove(&prime);
        }
    }

    /// Multiplies every coefficient by `factor`.
    pub fn scale(&self, factor: &Rational) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        SymbolicReal {
            pi_coeff: &self.pi_coeff * factor,
            log_coeffs: self
                .log_coeffs
                .iter()
                .map(|(&p, c)| (p, c * factor))
                .collect(),
        }
    }

    /// Evaluates the combination in double precision with compensated
    /// (Kahan) summation, using `std` π and `ln` of the prime bases.
    pub fn to_f64(&self) -> f64 {
        let mut sum = 0.0;
        let mut carry = 0.0;
        let mut push = |term: f64| {
            let y = term - carry;
            let t = sum + y;
            carry = (t - sum) - y;
            sum = t;
        };
        if !self.pi_coeff.is_zero() {
            push(rational_to_f64(&self.pi_coeff) * std::f64::consts::PI);
        }
        for (&p, c) in &self.log_coeffs {
            push(rational_to_f64(c) * (p as f64).ln());
        }
        sum
    }
}

fn rational_to_f64(r: &Rational) -> f64 {
    r.to_f64().expect("rational coefficient convertible to f64")
}

impl Add for SymbolicReal {
    type Output = SymbolicReal;

    fn add(self, rhs: SymbolicReal) -> SymbolicReal {
        let mut out = self;
        out.pi_coeff += rhs.pi_coeff;
        for (p, c) in rhs.log_coeffs {
            out.insert_log(p, c);
        }
        out
    }
}

impl Sub for SymbolicReal {
    type Output = SymbolicReal;

    fn sub(self, rhs: SymbolicReal) -> SymbolicReal {
        self + (-rhs)
    }
}

impl Neg for SymbolicReal {
    type Output = SymbolicReal;

    fn neg(self) -> SymbolicReal {
        SymbolicReal {
            pi_coeff: -self.pi_coeff,
            log_coeffs: self.log_coeffs.into_iter().map(|(p, c)| (p, -c)).collect(),
        }
    }
}

impl fmt::Display for SymbolicReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        if !self.pi_coeff.is_zero() {
            write!(f, "{}*pi", self.pi_coeff)?;
            first = false;
        }
        for (&p, c) in &self.log_coeffs {
            if first {
                write!(f, "{c}*ln({p})")?;
                first = false;
            } else if c.is_negative() {
                write!(f, " - {}*ln({p})", -c.clone())?;
            } else {
                write!(f, " + {c}*ln({p})")?;
            }
        }
        Ok(())
    }
}

/// Expands `ln k` over the prime-log basis by trial division.
///
/// Rejects `k = 0`; `factor_log(1)` is the empty combination.
pub fn factor_log(k: u64) -> Result<SymbolicReal, Error> {
    if k == 0 {
        return Err(Error::ZeroLogArgument);
    }
    let mut out = SymbolicReal::zero();
    let mut rest = k;
    let mut divisor = 2u64;
    while divisor * divisor <= rest {
        let mut exp = 0i64;
        while rest % divisor == 0 {
            rest /= divisor;
            exp += 1;
        }
        if exp > 0 {
            out.insert_log(divisor, rat(exp, 1));
        }
        divisor += if divisor == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        out.insert_log(rest, rat(1, 1));
    }
    Ok(out)
}

/// Complex value with [`SymbolicReal`] real and imaginary parts.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SymbolicComplex {
    pub re: SymbolicReal,
    pub im: SymbolicReal,
}

impl SymbolicComplex {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn new(re: SymbolicReal, im: SymbolicReal) -> Self {
        SymbolicComplex { re, im }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// Scales both parts by a rational factor.
    pub fn scale_rational(&self, factor: &Rational) -> Self {
        SymbolicComplex {
            re: self.re.scale(factor),
            im: self.im.scale(factor),
        }
    }

    /// Multiplies by an exact Gaussian rational:
    /// `(a + bi)(re + im·i) = (a·re − b·im) + (a·im + b·re)i`.
    pub fn scale(&self, factor: &GaussianRational) -> Self {
        SymbolicComplex {
            re: self.re.scale(&factor.re) - self.im.scale(&factor.im),
            im: self.im.scale(&factor.re) + self.re.scale(&factor.im),
        }
    }
}

impl Add for SymbolicComplex {
    type Output = SymbolicComplex;

    fn add(self, rhs: SymbolicComplex) -> SymbolicComplex {
        SymbolicComplex {
            re: self.re + rhs.re,
            im: self.im + rhs.im,
        }
    }
}

impl Neg for SymbolicComplex {
    type Output = SymbolicComplex;

    fn neg(self) -> SymbolicComplex {
        SymbolicComplex {
            re: -self.re,
            im: -self.im,
        }
    }
}

/// `ln[i·a] = ln|a| + i·(π/2)·sign(a)` for a nonzero integer `a`.
///
/// The real part is expanded over the prime-log basis; the imaginary part is
/// the π-multiple `sign(a)/2`. Rejects `a = 0`: the closed form's primed sum
/// must skip that term instead of evaluating it.
pub fn log_of_i_times(a: i64) -> Result<SymbolicComplex, Error> {
    if a == 0 {
        return Err(Error::ZeroLogArgument);
    }
    Ok(SymbolicComplex {
        re: factor_log(a.unsigned_abs())?,
        im: SymbolicReal::pi_multiple(rat(a.signum(), 2)),
    })
}
