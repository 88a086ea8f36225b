//! Floating-point evaluation of the distributional Fourier transform of
//! Θ(x)/xᵐ and of the ε-regularized integral identity.
//!
//! With F[Θ(x)/x](k) = −γ − ln(ik) as the base case, the transform of
//! Θ(x)/xᵐ follows by differentiation, and the damped integral
//! ∫₀^∞ sinⁿ(x)/xᵐ · e^(−εx) dx equals the alternating binomial sum of the
//! transform at the shifted frequencies 2l − n − iε. The left side is real,
//! so the imaginary part of the sum collapses to rounding noise; the real
//! part converges to the exact closed form as ε → 0.

use num_complex::Complex64;
use num_traits::ToPrimitive;

use crate::closed_form::{binomial, harmonic};
use crate::error::Error;

/// Euler's constant γ.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// F[Θ(x)/x](k) = −γ − ln(ik).
///
/// For real k this is −γ − ln|k| − i(π/2)·sign(k). For complex k with
/// Im k < 0 (the regularized frequencies k − iε), the argument ik has
/// positive real part, so the principal branch is smooth across every term
/// of the sum and no cut is crossed.
pub fn ft_theta_over_x(k: Complex64) -> Result<Complex64, Error> {
    if k.re == 0.0 && k.im == 0.0 {
        return Err(Error::ZeroFrequency);
    }
    Ok(-EULER_GAMMA - (Complex64::i() * k).ln())
}

/// F[Θ(x)/xᵐ](k) = (−ik)^(m−1)/(m−1)! · (F[Θ(x)/x](k) + H_(m−1)).
pub fn ft_theta_over_xm(m: u32, k: Complex64) -> Result<Complex64, Error> {
    if m < 1 {
        return Err(Error::InvalidParams(format!(
            "x-exponent must be at least 1, got {m}"
        )));
    }
    let base = ft_theta_over_x(k)?;
    if m == 1 {
        return Ok(base);
    }
    let h = harmonic(m - 1).to_f64().expect("harmonic number fits f64");
    let lead = (-Complex64::i() * k).powu(m - 1) / float_factorial(m - 1);
    Ok(lead * (base + h))
}

/// Evaluates the right-hand side of the ε-regularized identity,
///
/// ```text
/// ∫₀^∞ sinⁿ(x)/xᵐ e^(−εx) dx = 1/(2i)ⁿ Σₗ (−1)ˡ C(n,l) F[Θ/xᵐ](2l−n−iε),
/// ```
///
/// including the harmonic/Euler-constant contribution, which does not vanish
/// before the ε → 0 limit. The result approximates the damped integral; its
/// imaginary part is cancellation residue at roundoff level.
pub fn eval_regularized(m: u32, n: u32, epsilon: f64) -> Result<Complex64, Error> {
    if !(epsilon > 0.0) {
        return Err(Error::NonPositiveEpsilon(epsilon));
    }
    if m < 1 || n < 1 {
        return Err(Error::InvalidParams(format!(
            "m and n must be positive integers, got m={m}, n={n}"
        )));
    }
    let mut sum = Complex64::new(0.0, 0.0);
    for l in 0..=n {
        let k = Complex64::new((2 * l as i64 - n as i64) as f64, -epsilon);
        let mut coeff = binomial(n as u64, l as i64)
            .to_f64()
            .expect("binomial fits f64");
        if l % 2 == 1 {
            coeff = -coeff;
        }
        sum += coeff * ft_theta_over_xm(m, k)?;
    }
    Ok(sum / Complex64::new(0.0, 2.0).powu(n))
}

fn float_factorial(k: u32) -> f64 {
    (1..=k).map(f64::from).product()
}
