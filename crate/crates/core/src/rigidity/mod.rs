//! The equatorial rigidity index `R_m = ⟨cscθ⟩_m^{-1}` of the highest-weight
//! state, computed three independent ways:
//!
//! * **product** – `(2/π) W_m` from the exact rational Wallis product,
//! * **gamma** – `Γ(m+1)² / (Γ(m+½) Γ(m+3/2))` in log domain,
//! * **quadrature** – `I_{2m+1} / I_{2m}` with both sine integrals by
//!   adaptive quadrature.
//!
//! It also provides the defect `1 − R_m`, the two-term large-`m` expansion
//! `1 − 1/(4m) + 5/(32m²)` and the Wallis estimate `π ≈ 2 W_m`.

mod exact;
mod wallis;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::numerics::{log_gamma_half_ratio, sine_integral_quadrature, Integrator};
use crate::spherical::QuantumIndex;

pub use exact::{pi_reference, ratio_to_f64, rational_to_f64, PI_DECIMAL};
pub use wallis::{
    wallis_factor, wallis_partial, wallis_partial_capped, WallisPartial, WallisSequence,
    DEFAULT_EXACT_M_CAP,
};

/// Default `m` above which the table skips the quadrature route.
pub const DEFAULT_QUADRATURE_CUTOFF: u64 = 10_000;

/// `(2/π) W_m`, rounded once from the exact rational.
pub fn rigidity_product(m: QuantumIndex) -> Result<f64> {
    rigidity_product_capped(m, DEFAULT_EXACT_M_CAP)
}

pub fn rigidity_product_capped(m: QuantumIndex, cap: u64) -> Result<f64> {
    let w = wallis_partial_capped(m, cap)?;
    Ok(rigidity_from_wallis(&w.numerator, &w.denominator))
}

/// `2 W / π` for `W = numerator / denominator`, against the decimal π reference.
pub(crate) fn rigidity_from_wallis(numerator: &BigUint, denominator: &BigUint) -> f64 {
    let pi = pi_reference();
    let num = BigUint::from(2u32) * numerator * pi.denom().magnitude();
    let den = denominator * pi.numer().magnitude();
    ratio_to_f64(&num, &den)
}

pub fn rigidity_gamma(m: QuantumIndex) -> f64 {
    let (a, b) = log_gamma_half_ratio(m.get());
    (a + b).exp()
}

/// Ratio of two independent quadratures, `I_{2m+1} / I_{2m}`.
pub fn rigidity_quadrature(m: QuantumIndex, integrator: &Integrator) -> Result<f64> {
    let k = m.get();
    let odd = sine_integral_quadrature(2 * k + 1, integrator)?;
    let even = sine_integral_quadrature(2 * k, integrator)?;
    Ok(odd.value / even.value)
}

/// `1 − 1/(4m) + 5/(32m²)`; undefined at `m = 0`.
pub fn rigidity_asymptotic(m: QuantumIndex) -> Result<f64> {
    if m.get() == 0 {
        return Err(Error::Domain("asymptotic expansion needs m ≥ 1".into()));
    }
    let m = m.get() as f64;
    Ok(1.0 - 0.25 / m + 5.0 / (32.0 * m * m))
}

/// `1 − R_m` via the Gamma route.
pub fn defect(m: QuantumIndex) -> f64 {
    let (a, b) = log_gamma_half_ratio(m.get());
    -(a + b).exp_m1()
}

/// `2 W_m`, which tends to π from below.
pub fn pi_estimate(m: QuantumIndex) -> Result<f64> {
    let w = wallis_partial(m)?;
    Ok(2.0 * w.to_f64())
}

/// One row of the Wallis π sequence with its exactly computed error.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PiEstimate {
    pub m: QuantumIndex,
    /// `2 W_m`
    pub estimate: f64,
    /// `π − 2 W_m`, evaluated in rational arithmetic before rounding.
    pub error: f64,
    /// `m (π − 2 W_m)`, which tends to `π/4`.
    pub scaled_error: f64,
}

impl PiEstimate {
    fn from_parts(m: u64, numerator: &BigUint, denominator: &BigUint) -> Self {
        let two_w = BigRational::new_raw(
            BigInt::from(numerator * 2u32),
            BigInt::from(denominator.clone()),
        );
        let pi = pi_reference();
        // Cross-multiply without reducing; only the rounding needs the value.
        let diff_num = pi.numer() * two_w.denom() - two_w.numer() * pi.denom();
        let diff_den = pi.denom() * two_w.denom();
        let error = rational_to_f64(&BigRational::new_raw(diff_num, diff_den));
        Self {
            m: QuantumIndex::new(m),
            estimate: ratio_to_f64(&(numerator * 2u32), denominator),
            error,
            scaled_error: m as f64 * error,
        }
    }
}

/// Exact-error π estimates for `m = 0..=m_max`.
pub fn pi_sequence(m_max: QuantumIndex) -> Result<Vec<PiEstimate>> {
    wallis::check_cap(m_max, DEFAULT_EXACT_M_CAP)?;
    Ok(WallisSequence::new()
        .take(m_max.get() as usize + 1)
        .map(|(m, num, den)| PiEstimate::from_parts(m, &num, &den))
        .collect())
}

/// All routes for one `m`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RigidityReport {
    pub m: QuantumIndex,
    pub via_product: f64,
    pub via_gamma: f64,
    /// Absent above the configured quadrature cutoff.
    pub via_quadrature: Option<f64>,
    /// Absent at `m = 0`.
    pub asymptotic: Option<f64>,
    pub defect: f64,
    /// Largest pairwise difference among the available exact-intent routes.
    pub cross_route_spread: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TableConfig {
    pub integrator: Integrator,
    pub quadrature_cutoff: u64,
    pub exact_cap: u64,
}

impl Default for TableConfig {
    fn default() -> Self {
        Self {
            integrator: Integrator::default(),
            quadrature_cutoff: DEFAULT_QUADRATURE_CUTOFF,
            exact_cap: DEFAULT_EXACT_M_CAP,
        }
    }
}

pub fn rigidity_report(m: QuantumIndex, config: &TableConfig) -> Result<RigidityReport> {
    let via_product = rigidity_product_capped(m, config.exact_cap)?;
    let via_gamma = rigidity_gamma(m);
    let via_quadrature = if m.get() <= config.quadrature_cutoff {
        Some(rigidity_quadrature(m, &config.integrator)?)
    } else {
        None
    };

    let routes: Vec<f64> = [Some(via_product), Some(via_gamma), via_quadrature]
        .into_iter()
        .flatten()
        .collect();
    let hi = routes.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let lo = routes.iter().copied().fold(f64::INFINITY, f64::min);

    Ok(RigidityReport {
        m,
        via_product,
        via_gamma,
        via_quadrature,
        asymptotic: rigidity_asymptotic(m).ok(),
        defect: defect(m),
        cross_route_spread: hi - lo,
    })
}

/// One report per requested `m`, in input order. Rows are evaluated in
/// parallel on the current rayon pool; a failing row does not affect others.
pub fn convergence_table(
    m_values: &[QuantumIndex],
    config: &TableConfig,
) -> Result<Vec<Result<RigidityReport>>> {
    if m_values.is_empty() {
        return Err(Error::InvalidInput("convergence table needs at least one m".into()));
    }
    Ok(m_values
        .par_iter()
        .map(|&m| rigidity_report(m, config))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn q(m: u64) -> QuantumIndex {
        QuantumIndex::new(m)
    }

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn product_route_examples() {
        assert_eq!(rigidity_product(q(0)).unwrap(), 2.0 / PI);
        assert!(rel(rigidity_product(q(1)).unwrap(), 8.0 / (3.0 * PI)) < 1e-15);
        let r10 = rigidity_product(q(10)).unwrap();
        assert!(r10 > 0.97 && r10 < 0.98);
        assert!((r10 - 0.976_562_5).abs() < 2e-4);
        // 50-digit reference value of R_10
        assert!(rel(r10, 0.976_480_449_538_273_5) < 1e-15);
    }

    #[test]
    fn gamma_route_examples() {
        assert!(rel(rigidity_gamma(q(0)), 2.0 / PI) < 1e-15);
        assert!(rel(rigidity_gamma(q(1)), 8.0 / (3.0 * PI)) < 1e-15);
        assert!(rel(rigidity_gamma(q(500)), rigidity_product(q(500)).unwrap()) < 1e-12);
    }

    #[test]
    fn quadrature_route_examples() {
        let tol = Integrator::default();
        assert!((rigidity_quadrature(q(0), &tol).unwrap() - 2.0 / PI).abs() < 1e-10);
        assert!((rigidity_quadrature(q(2), &tol).unwrap() - 128.0 / (45.0 * PI)).abs() < 1e-10);
        assert!((rigidity_quadrature(q(200), &tol).unwrap() - rigidity_gamma(q(200))).abs() < 1e-9);
    }

    #[test]
    fn asymptotic_examples() {
        assert_eq!(rigidity_asymptotic(q(1)).unwrap(), 0.906_25);
        assert_eq!(rigidity_asymptotic(q(10)).unwrap(), 0.976_562_5);
        assert!((rigidity_asymptotic(q(1000)).unwrap() - rigidity_gamma(q(1000))).abs() < 5e-8);
        assert!(matches!(rigidity_asymptotic(q(0)), Err(Error::Domain(_))));
    }

    #[test]
    fn defect_examples() {
        assert!((defect(q(0)) - 0.363_380_227_632_418_6).abs() < 1e-15);
        assert!((defect(q(1)) - 0.151_173_636_843_224_9).abs() < 1e-15);
        let scaled = 400.0 * defect(q(100));
        assert!((scaled - 1.0).abs() < 7e-3);
        for m in [0, 1, 5, 77, 1000] {
            assert!((defect(q(m)) - (1.0 - rigidity_gamma(q(m)))).abs() < 2e-16);
        }
    }

    #[test]
    fn pi_estimate_examples() {
        assert_eq!(pi_estimate(q(0)).unwrap(), 2.0);
        assert!((pi_estimate(q(1)).unwrap() - 8.0 / 3.0).abs() < 1e-15);
        assert!((pi_estimate(q(10_000)).unwrap() - PI).abs() < 1e-4);
    }

    #[test]
    fn pi_sequence_rows() {
        let rows = pi_sequence(q(4)).unwrap();
        assert_eq!(rows.len(), 5);
        assert_eq!(rows[0].estimate, 2.0);
        // 2·(4/3)(16/15)(36/35)(64/63) = 32768/11025
        assert_eq!(rows[4].estimate, 32768.0 / 11025.0);
        assert!((rows[4].error - (PI - 32768.0 / 11025.0)).abs() < 1e-15);
        assert_eq!(rows[0].scaled_error, 0.0);
    }

    #[test]
    fn table_examples() {
        let cfg = TableConfig::default();
        let rows = convergence_table(&[q(0)], &cfg).unwrap();
        let r = rows[0].as_ref().unwrap();
        for v in [r.via_product, r.via_gamma, r.via_quadrature.unwrap()] {
            assert!((v - 2.0 / PI).abs() < 1e-10);
        }
        assert!(r.asymptotic.is_none());

        let rows = convergence_table(&[q(1), q(10), q(100)], &cfg).unwrap();
        let defects: Vec<f64> = rows.iter().map(|r| r.as_ref().unwrap().defect).collect();
        let expected = [0.151_173_636_843_224_9, 0.023_519_550_461_726_46, 0.002_484_460_533_962_701];
        for (d, e) in defects.iter().zip(expected) {
            assert!(rel(*d, e) < 1e-12);
        }
        assert!(defects.windows(2).all(|w| w[1] < w[0]));

        assert!(matches!(convergence_table(&[], &cfg), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn table_rows_fail_independently() {
        let cfg = TableConfig {
            exact_cap: 50,
            ..TableConfig::default()
        };
        let rows = convergence_table(&[q(3), q(60), q(4)], &cfg).unwrap();
        assert!(rows[0].is_ok() && rows[2].is_ok());
        assert!(matches!(rows[1], Err(Error::Resource(_))));
        assert_eq!(rows[2].as_ref().unwrap().m, q(4));
    }

    #[test]
    fn quadrature_skipped_above_cutoff() {
        let cfg = TableConfig {
            quadrature_cutoff: 5,
            ..TableConfig::default()
        };
        let r = rigidity_report(q(6), &cfg).unwrap();
        assert!(r.via_quadrature.is_none());
        assert!(r.cross_route_spread < 1e-15);
    }
}
