//! Double factorials, half-integer Gamma ratios and the sine integrals
//! `I_n = ∫₀^π sinⁿθ dθ`, all evaluated as sums of logarithms.

use std::f64::consts::{LN_2, PI};

use super::quadrature::Integrator;
use crate::error::Result;

/// `ln √π`
pub(crate) const LN_SQRT_PI: f64 = 0.572_364_942_924_700_087_071_713_675_676_529_355_824;
/// `ln π`
pub(crate) const LN_PI: f64 = 1.144_729_885_849_400_174_143_427_351_353_058_711_647;

/// Neumaier-compensated running sum.
#[derive(Debug, Default, Clone, Copy)]
pub(crate) struct CompensatedSum {
    sum: f64,
    carry: f64,
}

impl CompensatedSum {
    pub(crate) fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.carry += (self.sum - t) + x;
        } else {
            self.carry += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub(crate) fn value(&self) -> f64 {
        self.sum + self.carry
    }
}

/// `ln(n!!)`, with `0!! = 1!! = 1`.
pub fn log_double_factorial(n: u64) -> f64 {
    let mut acc = CompensatedSum::default();
    let mut k = n;
    while k >= 2 {
        acc.add((k as f64).ln());
        k -= 2;
    }
    acc.value()
}

/// `ln((2m)!! / (2m-1)!!) = Σ_{k=1}^{m} ln(1 + 1/(2k-1))`.
///
/// Pairing numerator and denominator terms keeps every summand small, so the
/// result stays accurate to a few ulps even for `m` in the millions where the
/// individual double-factorial logs are of order `10⁷`.
pub(crate) fn log_even_odd_double_factorial_ratio(m: u64) -> f64 {
    let mut acc = CompensatedSum::default();
    for k in 1..=m {
        acc.add((1.0 / (2 * k - 1) as f64).ln_1p());
    }
    acc.value()
}

/// How a [`SineIntegralValue`] was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IntegralRoute {
    ClosedForm,
    Quadrature,
}

/// `I_n = ∫₀^π sinⁿθ dθ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SineIntegralValue {
    pub n: u64,
    pub value: f64,
    pub route: IntegralRoute,
}

/// `ln I_n` from the closed forms
/// `I_{2m} = π (2m-1)!!/(2m)!!` and `I_{2m+1} = 2 (2m)!!/(2m+1)!!`.
pub fn log_sine_integral(n: u64) -> f64 {
    let m = n / 2;
    let ratio = log_even_odd_double_factorial_ratio(m);
    if n % 2 == 0 {
        LN_PI - ratio
    } else {
        LN_2 + ratio - ((2 * m + 1) as f64).ln()
    }
}

pub fn sine_integral_closed(n: u64) -> SineIntegralValue {
    let value = match n {
        0 => PI,
        1 => 2.0,
        _ => log_sine_integral(n).exp(),
    };
    SineIntegralValue {
        n,
        value,
        route: IntegralRoute::ClosedForm,
    }
}

/// `I_n` by direct adaptive quadrature of `sinⁿθ`.
pub fn sine_integral_quadrature(n: u64, integrator: &Integrator) -> Result<SineIntegralValue> {
    let power = i32::try_from(n).map_err(|_| {
        crate::Error::Domain(format!("sine power {n} too large for direct quadrature"))
    })?;
    let r = integrator.integrate(|t: f64| t.sin().powi(power), 0.0, PI)?;
    Ok(SineIntegralValue {
        n,
        value: r.value,
        route: IntegralRoute::Quadrature,
    })
}

/// `(ln Γ(m+1) − ln Γ(m+½), ln Γ(m+1) − ln Γ(m+3/2))`.
///
/// Uses the half-integer ladder `Γ(k+½) = (2k−1)!! √π / 2^k`, which makes
/// `Γ(m+1)/Γ(m+½) = (2m)!! / ((2m−1)!! √π)` and `Γ(m+3/2) = (m+½) Γ(m+½)`.
pub fn log_gamma_half_ratio(m: u64) -> (f64, f64) {
    let first = log_even_odd_double_factorial_ratio(m) - LN_SQRT_PI;
    let second = first - (m as f64 + 0.5).ln();
    (first, second)
}
