//! Acceptance suite: one test per release criterion, each printing a
//! PASS/FAIL line (run with `cargo test --test acceptance -- --nocapture`
//! to see them). Tolerances are fixed here, not configurable.

use std::process::Command;
use std::time::Instant;

use dirichlet_core::closed_form::{
    alternating_power_sum, assemble, classify, evaluate, ClosedFormResult, Convergence,
    DivergenceReason, IntegralParams,
};
use dirichlet_core::exact::{factor_log, rat, SymbolicReal};
use dirichlet_core::kernel::eval_regularized;
use dirichlet_core::quadrature::{integrate_regularized, integrate_sinc_power, QuadratureConfig};
use num_traits::Zero;

fn params(m: u32, n: u32) -> IntegralParams {
    IntegralParams::new(m, n).unwrap()
}

fn pi_multiple(num: i64, den: i64) -> ClosedFormResult {
    ClosedFormResult::Exact(SymbolicReal::pi_multiple(rat(num, den)))
}

fn log_combination(terms: &[(u64, i64, i64)]) -> ClosedFormResult {
    let mut value = SymbolicReal::zero();
    for &(prime, num, den) in terms {
        value = value + factor_log(prime).unwrap().scale(&rat(num, den));
    }
    ClosedFormResult::Exact(value)
}

fn convergent_pairs(max_n: u32) -> Vec<IntegralParams> {
    let mut pairs = Vec::new();
    for n in 1..=max_n {
        for m in 1..=n {
            let p = params(m, n);
            if matches!(
                classify(p),
                Convergence::Absolute | Convergence::Conditional
            ) {
                pairs.push(p);
            }
        }
    }
    pairs
}

/// Criterion 1: the fifteen published example values are reproduced exactly
/// (structural equality, zero tolerance) in under a second.
#[test]
fn criterion_1_golden_values() {
    let started = Instant::now();
    let divergent = ClosedFormResult::Divergent(DivergenceReason::EvenNWithM1);
    let expected: Vec<(u32, u32, ClosedFormResult)> = vec![
        (1, 1, pi_multiple(1, 2)),
        (1, 2, divergent),
        (1, 3, pi_multiple(1, 4)),
        (2, 2, pi_multiple(1, 2)),
        (2, 3, log_combination(&[(3, 3, 4)])),
        (2, 4, pi_multiple(1, 4)),
        (3, 3, pi_multiple(3, 8)),
        (3, 4, log_combination(&[(2, 1, 1)])),
        (3, 5, pi_multiple(5, 32)),
        (4, 4, pi_multiple(1, 3)),
        (4, 5, log_combination(&[(5, 125, 96), (3, -45, 32)])),
        (4, 6, pi_multiple(1, 8)),
        (5, 5, pi_multiple(115, 384)),
        (5, 6, log_combination(&[(3, 27, 16), (2, -2, 1)])),
        (5, 7, pi_multiple(77, 768)),
    ];
    for (m, n, want) in &expected {
        let got = evaluate(params(*m, *n));
        assert_eq!(&got, want, "I({m},{n})");
    }
    let elapsed = started.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0, "took {elapsed:?}");
    println!("PASS criterion 1: 15 golden values exact in {elapsed:?}");
}

/// Criterion 2: for every convergent (m,n) with n <= 12 the quadrature
/// oracle agrees with the closed form within its reported error bound
/// (+1e-9 slack); bounds stay below 1e-8 (m >= 2) and 1e-5 (m = 1);
/// the whole sweep finishes in under a minute.
#[test]
fn criterion_2_oracle_agreement() {
    let started = Instant::now();
    let pairs = convergent_pairs(12);
    for p in &pairs {
        let cfg = QuadratureConfig::for_exponent(p.m());
        let estimate = integrate_sinc_power(*p, &cfg).unwrap();
        let exact = evaluate(*p).exact_value().unwrap().to_f64();
        let diff = (estimate.value - exact).abs();
        assert!(
            diff <= estimate.error_bound + 1e-9,
            "{p}: diff={diff:.3e} bound={:.3e}",
            estimate.error_bound
        );
        let ceiling = if p.m() == 1 { 1e-5 } else { 1e-8 };
        assert!(
            estimate.error_bound <= ceiling,
            "{p}: bound={:.3e} exceeds {ceiling:.0e}",
            estimate.error_bound
        );
    }
    let elapsed = started.elapsed();
    assert!(elapsed.as_secs_f64() < 60.0, "took {elapsed:?}");
    println!(
        "PASS criterion 2: quadrature agreement on {} cases in {elapsed:?}",
        pairs.len()
    );
}

/// Criterion 3: the alternating power sum vanishes exactly on all 435 pairs
/// 2 <= m <= n <= 30, and the plain alternating binomial sum vanishes for
/// n <= 30, in under a second.
#[test]
fn criterion_3_power_sum_identities() {
    let started = Instant::now();
    let mut cases = 0;
    for n in 2..=30u32 {
        for m in 2..=n {
            assert!(
                alternating_power_sum(n, m).is_zero(),
                "power sum nonzero at n={n}, m={m}"
            );
            cases += 1;
        }
    }
    assert_eq!(cases, 435);
    for n in 1..=30u32 {
        assert!(
            alternating_power_sum(n, 1).is_zero(),
            "binomial sum nonzero at n={n}"
        );
    }
    let elapsed = started.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0, "took {elapsed:?}");
    println!("PASS criterion 3: 435 + 30 power-sum identities exact in {elapsed:?}");
}

/// Criterion 4: for 2 <= m <= n <= 20, n−m even gives a pure rational
/// multiple of pi and n−m odd gives a pi-free log combination. Zero
/// tolerance.
#[test]
fn criterion_4_parity() {
    let mut cases = 0;
    for n in 2..=20u32 {
        for m in 2..=n {
            let value = match evaluate(params(m, n)) {
                ClosedFormResult::Exact(value) => value,
                ClosedFormResult::Divergent(_) => unreachable!("n >= m >= 2 converges"),
            };
            if (n - m) % 2 == 0 {
                assert!(value.is_pi_multiple(), "I({m},{n}) has log terms");
            } else {
                assert!(value.pi_coeff().is_zero(), "I({m},{n}) has a pi term");
            }
            cases += 1;
        }
    }
    println!("PASS criterion 4: parity on {cases} cases");
}

/// Criterion 5: the assembled imaginary part is the exactly-zero
/// combination for every convergent case with n <= 20.
#[test]
fn criterion_5_realness() {
    let pairs = convergent_pairs(20);
    for p in &pairs {
        let total = assemble(*p).unwrap();
        assert!(total.im.is_zero(), "{p} has nonzero imaginary part");
    }
    println!("PASS criterion 5: imaginary part vanished on {} cases", pairs.len());
}

/// Criterion 6: the Fourier-side regularized identity matches damped
/// quadrature within 1e-6 for all 1 <= m <= n <= 8 and eps in {1, 0.5, 0.1},
/// with imaginary residue below 1e-9 relative; and for (1,1) the identity
/// approaches pi/2 monotonically as eps shrinks, landing within 0.05 at
/// eps = 1e-3.
#[test]
fn criterion_6_regularized_consistency() {
    let cfg = QuadratureConfig::default();
    let mut cases = 0;
    for n in 1..=8u32 {
        for m in 1..=n {
            for eps in [1.0, 0.5, 0.1] {
                let identity = eval_regularized(m, n, eps).unwrap();
                let quadrature = integrate_regularized(m, n, eps, &cfg).unwrap();
                let diff = (identity.re - quadrature.value).abs();
                assert!(diff <= 1e-6, "I({m},{n}) eps={eps}: diff={diff:.3e}");
                assert!(
                    identity.im.abs() <= 1e-9 * (1.0 + identity.re.abs()),
                    "I({m},{n}) eps={eps}: im={:.3e}",
                    identity.im
                );
                cases += 1;
            }
        }
    }

    let gaps: Vec<f64> = [0.1, 0.01, 0.001]
        .iter()
        .map(|&eps| {
            (std::f64::consts::FRAC_PI_2 - eval_regularized(1, 1, eps).unwrap().re).abs()
        })
        .collect();
    assert!(gaps[0] > gaps[1] && gaps[1] > gaps[2], "gaps={gaps:?}");
    assert!(gaps[2] <= 0.05);
    println!("PASS criterion 6: regularized identity on {cases} cases, (1,1) limit gap {:.1e}", gaps[2]);
}

/// Criterion 7: `eval 1 n` exits with code 2 and a divergent record for even
/// n <= 20, and m > n is reported as an origin singularity.
#[test]
fn criterion_7_divergence_contract() {
    for n in (2..=20u32).step_by(2) {
        assert_eq!(
            evaluate(params(1, n)),
            ClosedFormResult::Divergent(DivergenceReason::EvenNWithM1)
        );
        let out = Command::new(env!("CARGO_BIN_EXE_dirichlet"))
            .args(["eval", "1", &n.to_string(), "--format", "json"])
            .output()
            .expect("binary launches");
        assert_eq!(out.status.code(), Some(2), "eval 1 {n}");
        let line = String::from_utf8(out.stdout).unwrap();
        assert!(line.contains("\"status\":\"divergent\""), "eval 1 {n}: {line}");
        assert!(line.contains("even_n_with_m1"), "eval 1 {n}: {line}");
    }

    for (m, n) in [(3u32, 2u32), (5, 1), (9, 4)] {
        assert_eq!(
            evaluate(params(m, n)),
            ClosedFormResult::Divergent(DivergenceReason::OriginSingularity)
        );
    }
    let out = Command::new(env!("CARGO_BIN_EXE_dirichlet"))
        .args(["eval", "3", "2", "--format", "json"])
        .output()
        .expect("binary launches");
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .contains("origin_singularity"));
    println!("PASS criterion 7: divergence contract (exit codes and reasons)");
}
