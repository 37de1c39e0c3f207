//! Equatorial rigidity of highest-weight spherical states.
//!
//! For the spherical-harmonic branch `m = ℓ`, the polar marginal
//! `P_m(θ) ∝ sin^{2m+1}θ` concentrates on the equator as `m` grows. The
//! rigidity index `R_m = ⟨cscθ⟩_m^{-1}` measures that concentration and is
//! exactly `(2/π)` times the finite Wallis product `W_m`, so `R_m → 1`
//! reproduces `π = 2 lim W_m`.
//!
//! Modules:
//!
//! * [`numerics`] – double factorials, sine integrals, Gamma ratios, adaptive quadrature
//! * [`spherical`] – the polar density, its moments and an inverse-CDF sampler
//! * [`rigidity`] – `R_m` by three routes, its defect and asymptotics, exact `W_m`
//! * [`models`] – rigid rotor and thin-shell spectra
//! * [`cli_io`] – the table payloads behind the `wallis` binary

pub mod cli_io;
pub mod error;
pub mod models;
pub mod numerics;
pub mod rigidity;
pub mod spherical;

pub use error::{Error, Result};
pub use spherical::QuantumIndex;
