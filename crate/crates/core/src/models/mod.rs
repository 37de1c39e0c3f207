//! Physical realizations of the highest-weight kinematics: the rigid rotor
//! and the surface sector of a thin spherical shell.
//!
//! All energies use `ħ = 1`, i.e. they are in units of `ħ² / (mass·length²)`.

mod profile;

use serde::Serialize;

use crate::error::{Error, Result};

pub use profile::{
    load_radial_profile, tabulated_weights, RadialProfile, DEFAULT_NORM_TOL, ENDPOINT_DECAY_RATIO,
    MIN_GRID_POINTS,
};

pub const UNIT_CONVENTION: &str = "hbar = 1; energies in hbar^2/(mass*length^2)";

/// Moment of inertia of a rigid rotor, `I = M R²`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RotorConfig {
    moment_of_inertia: f64,
}

impl RotorConfig {
    pub fn new(moment_of_inertia: f64) -> Result<Self> {
        if moment_of_inertia > 0.0 && moment_of_inertia.is_finite() {
            Ok(Self { moment_of_inertia })
        } else {
            Err(Error::Domain(format!(
                "moment of inertia must be positive, got {moment_of_inertia}"
            )))
        }
    }

    pub fn from_mass_radius(mass: f64, radius: f64) -> Result<Self> {
        if !(mass > 0.0 && radius > 0.0) {
            return Err(Error::Domain(format!(
                "mass and radius must be positive, got M = {mass}, R = {radius}"
            )));
        }
        Self::new(mass * radius * radius)
    }

    pub fn moment_of_inertia(&self) -> f64 {
        self.moment_of_inertia
    }
}

/// One level of an angular spectrum. The energy does not depend on `m`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpectrumEntry {
    pub ell: u64,
    pub energy: f64,
    /// Whether the radial zero-point energy is part of `energy`.
    pub offset_included: bool,
}

/// `E_ℓ = ℓ(ℓ+1) / (2I)`.
pub fn rotor_energy(ell: u64, config: &RotorConfig) -> SpectrumEntry {
    SpectrumEntry {
        ell,
        energy: (ell * (ell + 1)) as f64 / (2.0 * config.moment_of_inertia),
        offset_included: false,
    }
}

/// Result of projecting onto a frozen radial mode.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ShellReduction {
    /// `⟨r⁻²⟩₀`
    pub r_minus2_expectation: f64,
    /// `R_eff = ⟨r⁻²⟩₀^{−1/2}`
    pub effective_radius: f64,
    /// `E_r⁽⁰⁾`, supplied by the caller.
    pub radial_ground_energy: f64,
}

/// `⟨r⁻²⟩₀ = ∫ r² |f₀|² r⁻² dr`, integrated as `∫ |f₀|² dr` on the profile grid.
pub fn r_minus2_expectation(profile: &RadialProfile) -> f64 {
    let w = tabulated_weights(profile.r_grid());
    w.iter()
        .zip(profile.f0_values())
        .map(|(w, f)| w * f * f)
        .sum()
}

pub fn shell_reduce(profile: &RadialProfile, radial_ground_energy: f64) -> ShellReduction {
    let r_minus2 = r_minus2_expectation(profile);
    ShellReduction {
        r_minus2_expectation: r_minus2,
        effective_radius: r_minus2.sqrt().recip(),
        radial_ground_energy,
    }
}

/// `E_ℓ^surf = E_r⁽⁰⁾ + ℓ(ℓ+1) / (2 M R_eff²)`.
pub fn shell_spectrum(ell: u64, mass: f64, reduction: &ShellReduction) -> Result<SpectrumEntry> {
    let rotor = RotorConfig::from_mass_radius(mass, reduction.effective_radius)?;
    let angular = rotor_energy(ell, &rotor);
    Ok(SpectrumEntry {
        ell,
        energy: reduction.radial_ground_energy + angular.energy,
        offset_included: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rotor_examples() {
        let unit = RotorConfig::new(1.0).unwrap();
        assert_eq!(rotor_energy(0, &unit).energy, 0.0);
        assert_eq!(rotor_energy(1, &unit).energy, 1.0);
        assert!(!rotor_energy(1, &unit).offset_included);
        assert_eq!(rotor_energy(5, &RotorConfig::new(2.5).unwrap()).energy, 6.0);
    }

    #[test]
    fn rotor_spacing() {
        let cfg = RotorConfig::new(1.7).unwrap();
        for ell in 0..200 {
            let gap = rotor_energy(ell + 1, &cfg).energy - rotor_energy(ell, &cfg).energy;
            assert!((gap - (ell + 1) as f64 / 1.7).abs() < 1e-12 * (ell + 1) as f64);
        }
    }

    #[test]
    fn rotor_config_validation() {
        assert!(RotorConfig::new(0.0).is_err());
        assert!(RotorConfig::new(f64::NAN).is_err());
        assert!(RotorConfig::from_mass_radius(-1.0, 2.0).is_err());
        assert_eq!(RotorConfig::from_mass_radius(2.0, 3.0).unwrap().moment_of_inertia(), 18.0);
    }

    #[test]
    fn shell_spectrum_examples() {
        let red = ShellReduction {
            r_minus2_expectation: 1.0,
            effective_radius: 1.0,
            radial_ground_energy: 0.0,
        };
        assert_eq!(shell_spectrum(1, 1.0, &red).unwrap().energy, 1.0);

        let red = ShellReduction {
            radial_ground_energy: 0.7,
            ..red
        };
        let e0 = shell_spectrum(0, 3.0, &red).unwrap();
        assert_eq!(e0.energy, 0.7);
        assert!(e0.offset_included);
        assert!(shell_spectrum(2, 0.0, &red).is_err());
    }
}
