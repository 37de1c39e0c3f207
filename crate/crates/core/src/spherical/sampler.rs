//! Inverse-CDF sampling of `P_m(θ)`.
//!
//! The cumulative integral is tabulated on a uniform θ-grid (one fixed
//! Kronrod panel per cell). A draw locates its cell by binary search, takes
//! a starting point from the monotone cubic Hermite interpolant of the table,
//! and is then polished by safeguarded Newton steps on the exact in-cell
//! cumulative integral.

use std::f64::consts::{FRAC_PI_2, PI};

use rand::distr::Open01;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{csc_expectation, expectation, PolarDensity, QuantumIndex};
use crate::error::{Error, Result};
use crate::numerics::{kronrod15, Integrator};

pub const DEFAULT_GRID_CELLS: usize = 4096;
pub const DEFAULT_MAX_SAMPLES: usize = 100_000_000;

const NEWTON_ITERATIONS: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SamplerConfig {
    pub grid_cells: usize,
    pub max_samples: usize,
}

impl Default for SamplerConfig {
    fn default() -> Self {
        Self {
            grid_cells: DEFAULT_GRID_CELLS,
            max_samples: DEFAULT_MAX_SAMPLES,
        }
    }
}

/// Precomputed cumulative table for one `m`.
#[derive(Debug, Clone)]
pub struct PolarSampler {
    density: PolarDensity,
    step: f64,
    // cdf[i] = ∫₀^{θ_i} P_m, unnormalized by the table total.
    cdf: Vec<f64>,
    slopes: Vec<f64>,
}

impl PolarSampler {
    pub fn new(m: QuantumIndex, grid_cells: usize) -> Result<Self> {
        if grid_cells < 2 {
            return Err(Error::InvalidInput("sampler grid needs at least 2 cells".into()));
        }
        let density = PolarDensity::new(m);
        let step = PI / grid_cells as f64;
        let node = |i: usize| if i == grid_cells { PI } else { i as f64 * step };
        let p = |t: f64| density.eval(t);

        let mut cdf = Vec::with_capacity(grid_cells + 1);
        cdf.push(0.0);
        let mut acc = 0.0;
        for i in 0..grid_cells {
            acc += kronrod15(&p, node(i), node(i + 1));
            cdf.push(acc);
        }
        let slopes = (0..=grid_cells).map(|i| p(node(i))).collect();
        Ok(Self {
            density,
            step,
            cdf,
            slopes,
        })
    }

    pub fn m(&self) -> QuantumIndex {
        self.density.m()
    }

    fn cells(&self) -> usize {
        self.cdf.len() - 1
    }

    fn node(&self, i: usize) -> f64 {
        if i == self.cells() {
            PI
        } else {
            i as f64 * self.step
        }
    }

    /// θ with `F(θ) = u` for `u ∈ (0, 1)`.
    pub fn quantile(&self, u: f64) -> f64 {
        let total = self.cdf[self.cells()];
        let target = u * total;

        // First i with cdf[i+1] > target.
        let i = self.cdf[1..]
            .partition_point(|&c| c <= target)
            .min(self.cells() - 1);
        let (lo, hi) = (self.node(i), self.node(i + 1));
        let (f_lo, f_hi) = (self.cdf[i], self.cdf[i + 1]);
        let mass = f_hi - f_lo;
        if !(mass > 0.0) {
            return 0.5 * (lo + hi);
        }

        let t0 = self.hermite_inverse(i, (target - f_lo) / mass);
        let mut theta = lo + t0 * (hi - lo);
        let (mut a, mut b) = (lo, hi);
        let p = |t: f64| self.density.eval(t);
        for _ in 0..NEWTON_ITERATIONS {
            let residual = f_lo + kronrod15(&p, lo, theta) - target;
            if residual > 0.0 {
                b = theta;
            } else {
                a = theta;
            }
            let step = residual / p(theta);
            if step.abs() <= 2.0 * f64::EPSILON * theta {
                break;
            }
            let next = theta - step;
            theta = if next >= a && next <= b { next } else { 0.5 * (a + b) };
        }
        theta.clamp(f64::MIN_POSITIVE, PI - f64::EPSILON)
    }

    /// Solve the monotone cubic Hermite interpolant of cell `i` for the
    /// normalized in-cell fraction `y ∈ [0, 1]`; returns `t ∈ [0, 1]`.
    fn hermite_inverse(&self, i: usize, y: f64) -> f64 {
        let mass = self.cdf[i + 1] - self.cdf[i];
        let secant = mass / self.step;
        let (mut d0, mut d1) = (self.slopes[i] / secant, self.slopes[i + 1] / secant);
        // Fritsch-Carlson limiter in secant-normalized units.
        let r = d0.hypot(d1);
        if r > 3.0 {
            d0 *= 3.0 / r;
            d1 *= 3.0 / r;
        }
        let h = |t: f64| {
            let t2 = t * t;
            let t3 = t2 * t;
            (-2.0 * t3 + 3.0 * t2) + d0 * (t3 - 2.0 * t2 + t) + d1 * (t3 - t2)
        };
        let dh = |t: f64| {
            let t2 = t * t;
            (-6.0 * t2 + 6.0 * t) + d0 * (3.0 * t2 - 4.0 * t + 1.0) + d1 * (3.0 * t2 - 2.0 * t)
        };
        let (mut a, mut b, mut t) = (0.0, 1.0, y);
        for _ in 0..20 {
            let r = h(t) - y;
            if r > 0.0 {
                b = t;
            } else {
                a = t;
            }
            let s = dh(t);
            if s > 0.0 && (r / s).abs() < 1e-12 {
                return t - r / s;
            }
            let next = if s > 0.0 { t - r / s } else { f64::NAN };
            t = if next >= a && next <= b { next } else { 0.5 * (a + b) };
        }
        t
    }

    /// Draw `count` samples from a ChaCha8 stream seeded with `seed`.
    pub fn sample(&self, count: usize, seed: u64) -> Vec<f64> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..count)
            .map(|_| {
                let u: f64 = rng.sample(Open01);
                self.quantile(u)
            })
            .collect()
    }
}

/// Reproducible batch of polar angles drawn from `P_m`.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleBatch {
    pub m: QuantumIndex,
    pub seed: u64,
    pub thetas: Vec<f64>,
}

pub fn sample_polar(m: QuantumIndex, count: usize, seed: u64) -> Result<SampleBatch> {
    sample_polar_with(m, count, seed, &SamplerConfig::default())
}

pub fn sample_polar_with(
    m: QuantumIndex,
    count: usize,
    seed: u64,
    config: &SamplerConfig,
) -> Result<SampleBatch> {
    if count == 0 {
        return Err(Error::InvalidInput("sample count must be at least 1".into()));
    }
    if count > config.max_samples {
        return Err(Error::Resource(format!(
            "sample count {count} exceeds cap {}",
            config.max_samples
        )));
    }
    let sampler = PolarSampler::new(m, config.grid_cells)?;
    Ok(SampleBatch {
        m,
        seed,
        thetas: sampler.sample(count, seed),
    })
}

/// Sample mean of some statistic together with its standard error.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MomentEstimate {
    pub value: f64,
    pub standard_error: f64,
}

impl MomentEstimate {
    fn of<I: Iterator<Item = f64> + Clone>(values: I) -> Self {
        let n = values.clone().count() as f64;
        let mean = values.clone().sum::<f64>() / n;
        let var = values.map(|v| (v - mean).powi(2)).sum::<f64>() / (n - 1.0).max(1.0);
        Self {
            value: mean,
            standard_error: (var / n).sqrt(),
        }
    }

    /// Distance from `target` in units of the standard error.
    pub fn z_score(&self, target: f64) -> f64 {
        (self.value - target).abs() / self.standard_error
    }
}

/// Empirical moments of a [`SampleBatch`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SampleSummary {
    pub count: usize,
    pub mean_theta: MomentEstimate,
    pub cos_squared: MomentEstimate,
    /// Only reported for `m ≥ 1`; the variance of cscθ is infinite at `m = 0`.
    pub csc: Option<MomentEstimate>,
    /// Standard deviation of `θ − π/2` with a delta-method standard error.
    pub equatorial_spread: MomentEstimate,
}

impl SampleBatch {
    pub fn summary(&self) -> SampleSummary {
        let th = self.thetas.iter().copied();
        let n = self.thetas.len() as f64;

        let second = th.clone().map(|t| (t - FRAC_PI_2).powi(2)).sum::<f64>() / n;
        let fourth = th.clone().map(|t| (t - FRAC_PI_2).powi(4)).sum::<f64>() / n;
        let spread = second.sqrt();
        let spread_se = if spread > 0.0 {
            ((fourth - second * second).max(0.0) / n).sqrt() / (2.0 * spread)
        } else {
            0.0
        };

        SampleSummary {
            count: self.thetas.len(),
            mean_theta: MomentEstimate::of(th.clone()),
            cos_squared: MomentEstimate::of(th.clone().map(|t| t.cos().powi(2))),
            csc: (self.m.get() >= 1).then(|| MomentEstimate::of(th.map(|t| t.sin().recip()))),
            equatorial_spread: MomentEstimate {
                value: spread,
                standard_error: spread_se,
            },
        }
    }
}

/// Exact values the sample moments should approach.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SampleTargets {
    pub mean_theta: f64,
    pub cos_squared: f64,
    pub csc: Option<f64>,
    pub equatorial_spread: f64,
}

impl SampleTargets {
    pub fn for_index(m: QuantumIndex, integrator: &Integrator) -> Result<Self> {
        let second = expectation(m, |t| (t - FRAC_PI_2).powi(2), integrator)?;
        Ok(Self {
            mean_theta: FRAC_PI_2,
            cos_squared: 1.0 / (2 * m.get() + 3) as f64,
            csc: (m.get() >= 1).then(|| csc_expectation(m)),
            equatorial_spread: second.sqrt(),
        })
    }
}
