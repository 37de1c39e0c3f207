//! Special functions checked against exact integer arithmetic and against
//! direct quadrature.

use std::f64::consts::PI;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use proptest::prelude::*;

use wallis_rigidity::numerics::{
    integrate, log_double_factorial, log_gamma_half_ratio, sine_integral_closed,
    sine_integral_quadrature, Integrator,
};
use wallis_rigidity::rigidity::ratio_to_f64;

fn big_double_factorial(n: u64) -> BigUint {
    let mut acc = BigUint::one();
    let mut k = n;
    while k >= 2 {
        acc *= k;
        k -= 2;
    }
    acc
}

/// ln of an arbitrary big integer, via its leading 64 bits.
fn big_ln(x: &BigUint) -> f64 {
    let bits = x.bits();
    let shift = bits.saturating_sub(64);
    let top = (x >> shift as usize).to_f64().unwrap();
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

#[test]
fn log_double_factorial_matches_big_integers() {
    for n in 0..=60u64 {
        let exact = big_ln(&big_double_factorial(n));
        let got = log_double_factorial(n);
        if exact == 0.0 {
            assert_eq!(got, 0.0, "n = {n}");
        } else {
            assert!(((got - exact) / exact).abs() < 1e-13, "n = {n}: {got} vs {exact}");
        }
    }
    assert!((log_double_factorial(6) - 48f64.ln()).abs() < 1e-15);
}

#[test]
fn gamma_half_ratio_matches_half_integer_ladder() {
    // Γ(m+1)/Γ(m+½) = 2^m m! / ((2m−1)!! √π) = (2m)!! / ((2m−1)!! √π)
    let ln_sqrt_pi = 0.5 * PI.ln();
    for m in 0..=170u64 {
        let even = big_double_factorial(2 * m);
        let odd = if m == 0 { BigUint::one() } else { big_double_factorial(2 * m - 1) };
        let ratio = ratio_to_f64(&even, &odd);
        let first = ratio.ln() - ln_sqrt_pi;
        let second = first - (m as f64 + 0.5).ln();

        let (a, b) = log_gamma_half_ratio(m);
        let close = |x: f64, y: f64| (x - y).abs() <= 1e-13 * y.abs().max(1.0);
        assert!(close(a, first), "m = {m}: {a} vs {first}");
        assert!(close(b, second), "m = {m}: {b} vs {second}");
    }
}

#[test]
fn gamma_half_ratio_trivial_cases() {
    let s = PI.sqrt();
    let (a, b) = log_gamma_half_ratio(0);
    assert!((a - (1.0 / s).ln()).abs() < 1e-15);
    assert!((b - (2.0 / s).ln()).abs() < 1e-15);
    let (a, b) = log_gamma_half_ratio(1);
    assert!((a - (2.0 / s).ln()).abs() < 1e-15);
    assert!((b - (4.0 / (3.0 * s)).ln()).abs() < 1e-15);
}

#[test]
fn gamma_half_ratio_is_finite_at_a_million() {
    let (a, b) = log_gamma_half_ratio(1_000_000);
    // Γ(m+1)/Γ(m+½) ≈ √m (1 + 1/(8m))
    assert!((a - (0.5 * 1e6f64.ln() + (1.0 + 1.25e-7f64).ln())).abs() < 1e-12);
    assert!(b.is_finite());
}

#[test]
fn sine_integrals_match_quadrature() {
    let tol = Integrator::new(1e-12, 1e-14);
    for n in 0..=400u64 {
        let closed = sine_integral_closed(n).value;
        let quad = sine_integral_quadrature(n, &tol).unwrap().value;
        assert!(((quad - closed) / closed).abs() < 1e-10, "n = {n}: {quad} vs {closed}");
    }
}

#[test]
fn quadrature_examples() {
    let r = integrate(f64::sin, 0.0, PI, 1e-12, 1e-14).unwrap();
    assert!((r.value - 2.0).abs() < 1e-12);
    let r = integrate(|t: f64| t.sin().powi(2), 0.0, PI, 1e-12, 1e-14).unwrap();
    assert!((r.value - sine_integral_closed(2).value).abs() < 1e-12);
    let r = integrate(|_| 1.0, 0.0, 1.0, 1e-12, 1e-14).unwrap();
    assert!((r.value - 1.0).abs() < 1e-12);
}

#[test]
fn error_estimate_bounds_error_on_sine_powers() {
    let tol = Integrator::new(1e-9, 0.0);
    for n in [1u64, 2, 5, 17, 64, 201] {
        let closed = sine_integral_closed(n).value;
        let r = tol.integrate(|t: f64| t.sin().powi(n as i32), 0.0, PI).unwrap();
        assert!(
            (r.value - closed).abs() <= r.error_estimate + 8.0 * f64::EPSILON * closed,
            "n = {n}"
        );
    }
}

proptest! {
    #[test]
    fn sine_integral_recurrence(n in 2u64..2000) {
        let lhs = sine_integral_closed(n).value * n as f64;
        let rhs = sine_integral_closed(n - 2).value * (n - 1) as f64;
        prop_assert!((lhs / rhs - 1.0).abs() < 1e-12);
    }

    #[test]
    fn sine_integrals_decrease(n in 0u64..100_000) {
        prop_assert!(sine_integral_closed(n + 1).value < sine_integral_closed(n).value);
    }
}
