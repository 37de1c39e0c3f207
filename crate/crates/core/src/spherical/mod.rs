//! Highest-weight (`m = ℓ`) kinematics on the sphere.
//!
//! After integrating out the azimuth, the polar marginal of `|Y_mm|²` is
//! `P_m(θ) = sin^{2m+1}θ / I_{2m+1}`. Everything here is a functional of that
//! density; the azimuthal angle never appears.

mod sampler;

use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt;

use crate::error::{Error, Result};
use crate::numerics::{log_sine_integral, Integrator};

pub use sampler::{
    sample_polar, sample_polar_with, MomentEstimate, PolarSampler, SampleBatch, SampleSummary,
    SampleTargets, SamplerConfig, DEFAULT_GRID_CELLS, DEFAULT_MAX_SAMPLES,
};

/// Magnetic quantum number on the highest-weight branch, `m = ℓ ≥ 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
#[derive(serde::Serialize, serde::Deserialize)]
#[serde(transparent)]
pub struct QuantumIndex(u64);

impl QuantumIndex {
    pub const fn new(m: u64) -> Self {
        Self(m)
    }

    pub const fn get(self) -> u64 {
        self.0
    }

    /// Exponent `2m + 1` of the polar marginal.
    pub fn density_power(self) -> u64 {
        2 * self.0 + 1
    }
}

impl From<u64> for QuantumIndex {
    fn from(m: u64) -> Self {
        Self(m)
    }
}

impl TryFrom<i64> for QuantumIndex {
    type Error = Error;

    fn try_from(m: i64) -> Result<Self> {
        u64::try_from(m)
            .map(Self)
            .map_err(|_| Error::Domain(format!("quantum number m must be non-negative, got {m}")))
    }
}

impl fmt::Display for QuantumIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Radius `R_*` of the sphere carrying the state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SphereGeometry {
    radius: f64,
}

impl SphereGeometry {
    pub fn new(radius: f64) -> Result<Self> {
        if radius > 0.0 && radius.is_finite() {
            Ok(Self { radius })
        } else {
            Err(Error::Domain(format!("sphere radius must be positive, got {radius}")))
        }
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    /// Cylindrical radius `ρ = R sinθ`.
    pub fn cylindrical_radius(&self, theta: f64) -> f64 {
        self.radius * theta.sin()
    }

    /// Height above the equatorial plane, `z = R cosθ`.
    pub fn height(&self, theta: f64) -> f64 {
        self.radius * theta.cos()
    }
}

/// Normalized polar marginal `P_m(θ)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolarDensity {
    m: QuantumIndex,
    log_norm: f64,
}

impl PolarDensity {
    pub fn new(m: QuantumIndex) -> Self {
        Self {
            m,
            log_norm: -log_sine_integral(m.density_power()),
        }
    }

    pub fn m(&self) -> QuantumIndex {
        self.m
    }

    /// `−ln I_{2m+1}`.
    pub fn log_norm(&self) -> f64 {
        self.log_norm
    }

    /// `P_m(θ)` for `θ ∈ [0, π]`.
    pub fn density_at(&self, theta: f64) -> Result<f64> {
        if !(0.0..=PI).contains(&theta) {
            return Err(Error::Domain(format!("polar angle {theta} outside [0, π]")));
        }
        Ok(self.eval(theta))
    }

    /// Unchecked evaluation; callers guarantee `θ ∈ [0, π]`.
    pub(crate) fn eval(&self, theta: f64) -> f64 {
        if theta == 0.0 || theta == PI {
            return 0.0;
        }
        let log_p = self.m.density_power() as f64 * theta.sin().ln() + self.log_norm;
        if log_p < -745.0 {
            0.0
        } else {
            log_p.exp()
        }
    }
}

/// `⟨f⟩_m = ∫ f sin^{2m+1} dθ / I_{2m+1}` with the numerator by quadrature.
pub fn expectation<F: Fn(f64) -> f64>(
    m: QuantumIndex,
    f: F,
    integrator: &Integrator,
) -> Result<f64> {
    let power = i32::try_from(m.density_power())
        .map_err(|_| Error::Domain(format!("m = {m} too large for quadrature")))?;
    let r = integrator.integrate(|t: f64| f(t) * t.sin().powi(power), 0.0, PI)?;
    Ok(r.value * (-log_sine_integral(m.density_power())).exp())
}

/// `⟨cscθ⟩_m = I_{2m} / I_{2m+1}`, always `≥ 1`.
pub fn csc_expectation(m: QuantumIndex) -> f64 {
    let k = m.get();
    (log_sine_integral(2 * k) - log_sine_integral(2 * k + 1)).exp()
}

/// `⟨z²⟩ = R_*² / (2m + 3)`.
pub fn z_second_moment(m: QuantumIndex, geometry: SphereGeometry) -> f64 {
    geometry.radius.powi(2) / (2 * m.get() + 3) as f64
}

/// Equatorial Gaussian `P_m(π/2) · exp(−(2m+1) x² / 2)` at `θ = π/2 + x`.
pub fn gaussian_approx(m: QuantumIndex, x: f64) -> Result<f64> {
    if !(x.abs() <= FRAC_PI_2) {
        return Err(Error::Domain(format!("equatorial offset {x} outside [−π/2, π/2]")));
    }
    let peak = PolarDensity::new(m).eval(FRAC_PI_2);
    Ok(peak * (-0.5 * m.density_power() as f64 * x * x).exp())
}

/// Characteristic angular width `(2m+1)^{−1/2}`.
pub fn angular_width(m: QuantumIndex) -> f64 {
    (m.density_power() as f64).sqrt().recip()
}

/// `⟨L_z⟩ / √⟨L²⟩ = √(m / (m+1))`.
pub fn alignment_ratio(m: QuantumIndex) -> f64 {
    let m = m.get() as f64;
    (m / (m + 1.0)).sqrt()
}
