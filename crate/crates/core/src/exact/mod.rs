//! Exact scalar arithmetic: arbitrary-precision rationals, Gaussian
//! rationals, and linear combinations over the basis {π, ln 2, ln 3, ln 5, …}.
//!
//! Everything here is an immutable value with exact operations; equality of
//! [`SymbolicReal`] is structural and decides equality of the represented
//! real numbers (π and the logarithms of distinct primes are linearly
//! independent over ℚ).

mod gaussian;
mod symbolic;

pub use gaussian::{i_power, GaussianRational};
pub use symbolic::{factor_log, log_of_i_times, SymbolicComplex, SymbolicReal};

use num_bigint::BigInt;

/// Arbitrary-precision signed rational, always in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand for building a rational from machine integers.
///
/// Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}
