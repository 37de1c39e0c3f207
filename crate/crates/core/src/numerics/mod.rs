//! Special-function kernels and the adaptive quadrature engine used as the
//! independent numerical route throughout the crate.

mod quadrature;
mod special;

pub use quadrature::{
    integrate, Integrator, QuadratureResult, DEFAULT_ABS_TOL, DEFAULT_MAX_EVALUATIONS,
    DEFAULT_REL_TOL,
};
pub use special::{
    log_double_factorial, log_gamma_half_ratio, log_sine_integral, sine_integral_closed,
    sine_integral_quadrature, IntegralRoute, SineIntegralValue,
};

pub(crate) use quadrature::kronrod15;
