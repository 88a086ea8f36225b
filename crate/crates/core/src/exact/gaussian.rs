use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{rat, Rational};

/// Complex number with exact rational real and imaginary parts.
///
/// Carries the i^(m−n+1) prefactors of the closed form exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn zero() -> Self {
        Self::new(Rational::zero(), Rational::zero())
    }

    pub fn one() -> Self {
        Self::new(Rational::one(), Rational::zero())
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Self::new(Rational::zero(), Rational::one())
    }

    pub fn from_rational(re: Rational) -> Self {
        Self::new(re, Rational::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// Multiplication by i: rotates (re, im) to (−im, re).
    pub fn mul_i(&self) -> Self {
        Self::new(-self.im.clone(), self.re.clone())
    }

    /// Scales both parts by a rational factor.
    pub fn scale(&self, factor: &Rational) -> Self {
        Self::new(&self.re * factor, &self.im * factor)
    }
}

impl Add for GaussianRational {
    type Output = GaussianRational;

    fn add(self, rhs: GaussianRational) -> GaussianRational {
        GaussianRational::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl Sub for GaussianRational {
    type Output = GaussianRational;

    fn sub(self, rhs: GaussianRational) -> GaussianRational {
        GaussianRational::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;

    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re, -self.im)
    }
}

impl Mul for GaussianRational {
    type Output = GaussianRational;

    fn mul(self, rhs: GaussianRational) -> GaussianRational {
        GaussianRational::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}i", self.re, self.im)
    }
}

/// i^e for any integer exponent; period 4 in `e`.
pub fn i_power(e: i64) -> GaussianRational {
    match e.rem_euclid(4) {
        0 => GaussianRational::one(),
        1 => GaussianRational::i(),
        2 => GaussianRational::from_rational(rat(-1, 1)),
        _ => GaussianRational::new(Rational::zero(), rat(-1, 1)),
    }
}
