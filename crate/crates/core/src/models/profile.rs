use std::io::Read;

use serde::Serialize;

use crate::error::{Error, Result};

pub const MIN_GRID_POINTS: usize = 4;
pub const DEFAULT_NORM_TOL: f64 = 1e-10;
/// Endpoint amplitudes above this fraction of the peak raise a warning.
pub const ENDPOINT_DECAY_RATIO: f64 = 1e-3;

/// Tabulated real radial ground mode `f₀(r)`, normalized so that
/// `∫ r² |f₀|² dr = 1` under [`tabulated_weights`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RadialProfile {
    r_grid: Vec<f64>,
    f0_values: Vec<f64>,
    declared_norm_tol: f64,
    scale_factor: f64,
    endpoint_warning: bool,
}

impl RadialProfile {
    /// Accepts an already normalized profile.
    pub fn new(r_grid: Vec<f64>, f0_values: Vec<f64>, declared_norm_tol: f64) -> Result<Self> {
        validate_grid(&r_grid, &f0_values)?;
        let norm = radial_norm(&r_grid, &f0_values);
        if !((norm - 1.0).abs() <= declared_norm_tol) {
            return Err(Error::Profile(format!(
                "∫ r²|f₀|² dr = {norm}, not 1 within {declared_norm_tol}"
            )));
        }
        let endpoint_warning = endpoints_not_decayed(&f0_values);
        Ok(Self {
            r_grid,
            f0_values,
            declared_norm_tol,
            scale_factor: 1.0,
            endpoint_warning,
        })
    }

    /// Rescales `f0_values` to unit norm and records the applied factor.
    pub fn normalized(r_grid: Vec<f64>, f0_values: Vec<f64>, declared_norm_tol: f64) -> Result<Self> {
        validate_grid(&r_grid, &f0_values)?;
        let norm = radial_norm(&r_grid, &f0_values);
        if !(norm > 0.0 && norm.is_finite()) {
            return Err(Error::Profile(format!("profile norm {norm} cannot be normalized")));
        }
        let scale = norm.sqrt().recip();
        let f0_values: Vec<f64> = f0_values.iter().map(|f| f * scale).collect();
        let mut profile = Self::new(r_grid, f0_values, declared_norm_tol)?;
        profile.scale_factor = scale;
        Ok(profile)
    }

    pub fn r_grid(&self) -> &[f64] {
        &self.r_grid
    }

    pub fn f0_values(&self) -> &[f64] {
        &self.f0_values
    }

    pub fn declared_norm_tol(&self) -> f64 {
        self.declared_norm_tol
    }

    /// Factor multiplied into the raw amplitudes (1 when none was applied).
    pub fn scale_factor(&self) -> f64 {
        self.scale_factor
    }

    /// `|f₀|` at a grid end exceeds [`ENDPOINT_DECAY_RATIO`] of its maximum.
    pub fn endpoint_warning(&self) -> bool {
        self.endpoint_warning
    }

    /// `∫ r² |f₀|² dr` on the grid.
    pub fn norm(&self) -> f64 {
        radial_norm(&self.r_grid, &self.f0_values)
    }
}

fn validate_grid(r: &[f64], f: &[f64]) -> Result<()> {
    if r.len() != f.len() {
        return Err(Error::Profile(format!(
            "grid has {} radii but {} amplitudes",
            r.len(),
            f.len()
        )));
    }
    if r.len() < MIN_GRID_POINTS {
        return Err(Error::Profile(format!(
            "need at least {MIN_GRID_POINTS} grid points, got {}",
            r.len()
        )));
    }
    if let Some(i) = r.iter().chain(f).position(|v| !v.is_finite()) {
        return Err(Error::Profile(format!("non-finite value at index {}", i % r.len())));
    }
    if r[0] < 0.0 {
        return Err(Error::Profile(format!("negative radius {}", r[0])));
    }
    if let Some(i) = r.windows(2).position(|w| !(w[1] > w[0])) {
        return Err(Error::Profile(format!(
            "radius grid not strictly increasing at index {}",
            i + 1
        )));
    }
    Ok(())
}

fn radial_norm(r: &[f64], f: &[f64]) -> f64 {
    tabulated_weights(r)
        .iter()
        .zip(r.iter().zip(f))
        .map(|(w, (r, f))| w * r * r * f * f)
        .sum()
}

fn endpoints_not_decayed(f: &[f64]) -> bool {
    let peak = f.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let limit = ENDPOINT_DECAY_RATIO * peak;
    f[0].abs() > limit || f[f.len() - 1].abs() > limit
}

/// Node weights of the composite piecewise-cubic rule on an arbitrary
/// strictly increasing grid (at least four points).
///
/// Each interval is integrated exactly for the cubic through the four
/// nearest nodes (shifted inward at the ends), which is fourth-order accurate
/// and exact for cubics on any grid.
pub fn tabulated_weights(x: &[f64]) -> Vec<f64> {
    let n = x.len();
    assert!(n >= MIN_GRID_POINTS, "tabulated rule needs {MIN_GRID_POINTS} points");
    // Two-point Gauss-Legendre is exact for the cubic on each interval.
    let g = 0.5 / 3f64.sqrt();
    let mut weights = vec![0.0; n];
    for i in 0..n - 1 {
        let start = i.saturating_sub(1).min(n - 4);
        let stencil = &x[start..start + 4];
        let (a, b) = (x[i], x[i + 1]);
        let half_width = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        for t in [mid - g * (b - a), mid + g * (b - a)] {
            for (j, &xj) in stencil.iter().enumerate() {
                let basis: f64 = stencil
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != j)
                    .map(|(_, &xk)| (t - xk) / (xj - xk))
                    .product();
                weights[start + j] += half_width * basis;
            }
        }
    }
    weights
}

/// Parse the `r,f0` CSV format and normalize the result.
///
/// Lines starting with `#` are skipped. Errors name the offending line.
pub fn load_radial_profile<R: Read>(source: R) -> Result<RadialProfile> {
    let mut reader = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .from_reader(source);

    let headers = reader.headers().map_err(csv_error)?.clone();
    if headers.iter().collect::<Vec<_>>() != ["r", "f0"] {
        return Err(Error::Parse {
            line: 1,
            message: format!("expected header `r,f0`, found `{}`", headers.iter().collect::<Vec<_>>().join(",")),
        });
    }

    let mut r_grid = Vec::new();
    let mut f0 = Vec::new();
    for record in reader.records() {
        let record = record.map_err(csv_error)?;
        let line = record.position().map_or(0, |p| p.line());
        let parse = |idx: usize, name: &str| -> Result<f64> {
            let cell = record.get(idx).unwrap_or_default();
            cell.parse::<f64>().map_err(|_| Error::Parse {
                line,
                message: format!("column `{name}` is not a number: `{cell}`"),
            })
        };
        r_grid.push(parse(0, "r")?);
        f0.push(parse(1, "f0")?);
    }

    RadialProfile::normalized(r_grid, f0, DEFAULT_NORM_TOL)
}

fn csv_error(e: csv::Error) -> Error {
    Error::Parse {
        line: e.position().map_or(0, |p| p.line()),
        message: e.to_string(),
    }
}
