//! Evaluation of the generalized Dirichlet integrals
//!
//! ```text
//! I(m,n) = ∫₀^∞ sinⁿ(x) / xᵐ dx,    m, n positive integers
//! ```
//!
//! by two independent routes:
//!
//! * [`closed_form`]: exact evaluation over the basis {π, ln 2, ln 3, ln 5, …}
//!   with arbitrary-precision rational coefficients, including convergence
//!   classification and the combinatorial identities the closed form rests on;
//! * [`quadrature`]: a direct numerical oracle (adaptive Gauss–Kronrod with
//!   analytic oscillatory-tail handling, and Euler-style series acceleration
//!   for the conditionally convergent `m = 1` cases).
//!
//! The [`kernel`] module evaluates the distributional Fourier transform of
//! Θ(x)/xᵐ and the ε-regularized integral identity in complex floating point,
//! tying the exact and numerical sides together. [`exact`] holds the scalar
//! types everything else is built on.

pub mod closed_form;
pub mod error;
pub mod exact;
pub mod kernel;
pub mod quadrature;

pub use error::Error;
