//! Globally adaptive 1-D quadrature on Gauss-Kronrod (7, 15) panels.
//!
//! Each panel is integrated with the 15-point Kronrod rule; the embedded
//! 7-point Gauss rule supplies the panel error estimate `|K15 - G7|`. The
//! panel with the largest error is bisected until the summed error drops
//! below `max(abs_tol, rel_tol * |value|)` or the evaluation budget runs out.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};

pub const DEFAULT_REL_TOL: f64 = 1e-12;
pub const DEFAULT_ABS_TOL: f64 = 1e-14;
pub const DEFAULT_MAX_EVALUATIONS: usize = 1_000_000;

const EVALS_PER_PANEL: usize = 15;

// Kronrod abscissae on [-1, 1]; odd indices are the Gauss nodes.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

/// Outcome of a converged integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult {
    pub value: f64,
    pub error_estimate: f64,
    pub evaluations: usize,
}

/// Tolerances and evaluation budget for [`Integrator::integrate`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Integrator {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_evaluations: usize,
}

impl Default for Integrator {
    fn default() -> Self {
        Self {
            rel_tol: DEFAULT_REL_TOL,
            abs_tol: DEFAULT_ABS_TOL,
            max_evaluations: DEFAULT_MAX_EVALUATIONS,
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.error.total_cmp(&other.error) == Ordering::Equal
    }
}

impl Eq for Panel {}

impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn gauss_kronrod<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Panel {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);

    let fc = f(center);
    let mut kronrod = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    for (j, (&x, &w)) in XGK.iter().zip(WGK.iter()).take(7).enumerate() {
        let dx = half * x;
        let pair = f(center - dx) + f(center + dx);
        kronrod += w * pair;
        if j % 2 == 1 {
            gauss += WG[j / 2] * pair;
        }
    }

    Panel {
        a,
        b,
        value: kronrod * half,
        error: ((kronrod - gauss) * half).abs(),
    }
}

/// Single 15-point Kronrod panel over `[a, b]` without adaptivity.
pub(crate) fn kronrod15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> f64 {
    gauss_kronrod(f, a, b).value
}

impl Integrator {
    pub fn new(rel_tol: f64, abs_tol: f64) -> Self {
        Self {
            rel_tol,
            abs_tol,
            ..Self::default()
        }
    }

    pub fn with_max_evaluations(mut self, max_evaluations: usize) -> Self {
        self.max_evaluations = max_evaluations;
        self
    }

    /// Integrate `f` over `[a, b]`.
    ///
    /// Returns [`Error::NonConvergence`] if the tolerance is not met within
    /// the evaluation budget, or if the integrand produces a non-finite value.
    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F, a: f64, b: f64) -> Result<QuadratureResult> {
        if !(a < b) || !a.is_finite() || !b.is_finite() {
            return Err(Error::Domain(format!(
                "integration interval [{a}, {b}] must be finite with a < b"
            )));
        }
        if !(self.rel_tol >= 0.0 && self.abs_tol >= 0.0) {
            return Err(Error::InvalidInput("tolerances must be non-negative".into()));
        }

        let first = gauss_kronrod(&f, a, b);
        let mut evaluations = EVALS_PER_PANEL;
        let mut value = first.value;
        let mut error = first.error;
        let mut heap = BinaryHeap::new();
        heap.push(first);

        loop {
            if !value.is_finite() || !error.is_finite() {
                return Err(Error::NonConvergence {
                    estimate: value,
                    error_estimate: error,
                    evaluations,
                });
            }
            if error <= self.abs_tol.max(self.rel_tol * value.abs()) {
                // Re-sum from the panels to shed drift in the running totals.
                let (v, e) = heap
                    .iter()
                    .fold((0.0, 0.0), |(v, e), p| (v + p.value, e + p.error));
                return Ok(QuadratureResult {
                    value: v,
                    error_estimate: e,
                    evaluations,
                });
            }
            if evaluations + 2 * EVALS_PER_PANEL > self.max_evaluations {
                return Err(Error::NonConvergence {
                    estimate: value,
                    error_estimate: error,
                    evaluations,
                });
            }

            let worst = heap.pop().expect("panel heap is never empty");
            let mid = 0.5 * (worst.a + worst.b);
            if !(worst.a < mid && mid < worst.b) {
                // Panel can no longer be split in floating point.
                return Err(Error::NonConvergence {
                    estimate: value,
                    error_estimate: error,
                    evaluations,
                });
            }
            let left = gauss_kronrod(&f, worst.a, mid);
            let right = gauss_kronrod(&f, mid, worst.b);
            evaluations += 2 * EVALS_PER_PANEL;

            value += left.value + right.value - worst.value;
            error += left.error + right.error - worst.error;
            if heap.len() % 64 == 0 {
                value = heap.iter().map(|p| p.value).sum::<f64>() + left.value + right.value;
                error = heap.iter().map(|p| p.error).sum::<f64>() + left.error + right.error;
            }
            heap.push(left);
            heap.push(right);
        }
    }
}

/// Integrate with the given tolerances and the default evaluation budget.
pub fn integrate<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    rel_tol: f64,
    abs_tol: f64,
) -> Result<QuadratureResult> {
    Integrator::new(rel_tol, abs_tol).integrate(f, a, b)
}
