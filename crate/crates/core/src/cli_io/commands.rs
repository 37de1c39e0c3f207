use std::f64::consts::{FRAC_PI_2, PI};

use serde_json::json;

use super::{Cell, Payload, RunManifest};
use crate::error::{Error, Result};
use crate::models::{shell_reduce, shell_spectrum, RadialProfile, UNIT_CONVENTION};
use crate::numerics::Integrator;
use crate::rigidity::{convergence_table, pi_sequence, TableConfig};
use crate::spherical::{
    gaussian_approx, sample_polar, PolarDensity, QuantumIndex, SampleTargets,
};

pub const RIGIDITY_COLUMNS: [&str; 7] = [
    "m",
    "R_product",
    "R_gamma",
    "R_quadrature",
    "R_asymptotic",
    "defect",
    "spread",
];

/// Which `m` values a command covers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MSpec {
    List(Vec<QuantumIndex>),
    /// `0, stride, 2·stride, …` up to and including `max` when it is reached.
    Range { max: u64, stride: u64 },
}

impl MSpec {
    pub fn values(&self) -> Result<Vec<QuantumIndex>> {
        match self {
            MSpec::List(v) if v.is_empty() => Err(Error::InvalidInput("empty m list".into())),
            MSpec::List(v) => Ok(v.clone()),
            MSpec::Range { stride: 0, .. } => Err(Error::InvalidInput("stride must be positive".into())),
            MSpec::Range { max, stride } => Ok((0..=*max)
                .step_by(*stride as usize)
                .map(QuantumIndex::new)
                .collect()),
        }
    }

    fn record(&self, manifest: RunManifest) -> RunManifest {
        match self {
            MSpec::List(v) => manifest.param("m", v.iter().map(|m| m.get()).collect::<Vec<_>>()),
            MSpec::Range { max, stride } => manifest.param("m_max", *max).param("stride", *stride),
        }
    }
}

/// Convergence table; rows that fail keep only their `m` and are returned
/// alongside the payload.
pub fn rigidity_payload(
    spec: &MSpec,
    config: &TableConfig,
) -> Result<(Payload, Vec<(QuantumIndex, Error)>)> {
    let ms = spec.values()?;
    let reports = convergence_table(&ms, config)?;

    let mut failures = Vec::new();
    let rows = ms
        .iter()
        .zip(reports)
        .map(|(&m, r)| match r {
            Ok(r) => vec![
                Cell::Int(m.get()),
                r.via_product.into(),
                r.via_gamma.into(),
                r.via_quadrature.into(),
                r.asymptotic.into(),
                r.defect.into(),
                r.cross_route_spread.into(),
            ],
            Err(e) => {
                failures.push((m, e));
                let mut row = vec![Cell::Empty; RIGIDITY_COLUMNS.len()];
                row[0] = Cell::Int(m.get());
                row
            }
        })
        .collect();

    let manifest = spec
        .record(RunManifest::new("rigidity"))
        .param("rel_tol", config.integrator.rel_tol)
        .param("abs_tol", config.integrator.abs_tol)
        .param("quadrature_cutoff", config.quadrature_cutoff);

    Ok((
        Payload {
            manifest,
            summary: Vec::new(),
            columns: RIGIDITY_COLUMNS.iter().map(|s| s.to_string()).collect(),
            rows,
        },
        failures,
    ))
}

/// `P_m(θ)` on a uniform grid over `[0, π]` including both ends.
pub fn density_payload(ms: &[QuantumIndex], points: usize, gaussian: bool) -> Result<Payload> {
    if ms.is_empty() {
        return Err(Error::InvalidInput("empty m list".into()));
    }
    if points < 2 {
        return Err(Error::InvalidInput(format!("need at least 2 θ points, got {points}")));
    }
    let densities: Vec<PolarDensity> = ms.iter().map(|&m| PolarDensity::new(m)).collect();

    let mut columns = vec!["theta".to_owned()];
    for m in ms {
        columns.push(format!("P_{m}"));
        if gaussian {
            columns.push(format!("gauss_{m}"));
        }
    }

    let last = points - 1;
    let mut rows = Vec::with_capacity(points);
    for i in 0..points {
        let theta = if i == last { PI } else { PI * i as f64 / last as f64 };
        let mut row = vec![Cell::Float(theta)];
        for d in &densities {
            row.push(d.density_at(theta)?.into());
            if gaussian {
                row.push(gaussian_approx(d.m(), theta - FRAC_PI_2)?.into());
            }
        }
        rows.push(row);
    }

    let manifest = RunManifest::new("density")
        .param("m", ms.iter().map(|m| m.get()).collect::<Vec<_>>())
        .param("points", points)
        .param("gaussian", gaussian);
    Ok(Payload {
        manifest,
        summary: Vec::new(),
        columns,
        rows,
    })
}

/// `2 W_m`, `π − 2 W_m` and `m (π − 2 W_m)` for `m = 0..=m_max`.
pub fn pi_payload(m_max: QuantumIndex) -> Result<Payload> {
    let rows = pi_sequence(m_max)?
        .into_iter()
        .map(|p| {
            vec![
                Cell::Int(p.m.get()),
                p.estimate.into(),
                p.error.into(),
                p.scaled_error.into(),
            ]
        })
        .collect();
    Ok(Payload {
        manifest: RunManifest::new("pi").param("m_max", m_max.get()),
        summary: Vec::new(),
        columns: ["m", "two_W", "error", "scaled_error"].map(String::from).to_vec(),
        rows,
    })
}

/// Sampled angles plus empirical moments, their standard errors and targets.
pub fn sample_payload(
    m: QuantumIndex,
    count: usize,
    seed: u64,
    integrator: &Integrator,
) -> Result<Payload> {
    let batch = sample_polar(m, count, seed)?;
    let s = batch.summary();
    let t = SampleTargets::for_index(m, integrator)?;

    let mut summary: Vec<(String, Cell)> = vec![("count".into(), Cell::Int(count as u64))];
    let mut push = |name: &str, est: crate::spherical::MomentEstimate, target: f64| {
        summary.push((name.to_owned(), est.value.into()));
        summary.push((format!("{name}_se"), est.standard_error.into()));
        summary.push((format!("{name}_target"), target.into()));
    };
    push("mean_theta", s.mean_theta, t.mean_theta);
    push("cos2", s.cos_squared, t.cos_squared);
    if let (Some(est), Some(target)) = (s.csc, t.csc) {
        push("csc", est, target);
    }
    push("equatorial_spread", s.equatorial_spread, t.equatorial_spread);

    Ok(Payload {
        manifest: RunManifest::new("sample")
            .param("m", m.get())
            .param("count", count)
            .seed(seed),
        summary,
        columns: vec!["theta".into()],
        rows: batch.thetas.iter().map(|&t| vec![Cell::Float(t)]).collect(),
    })
}

/// Effective radius and surface spectrum `ℓ = 0..=ell_max` of a shell profile.
pub fn shell_payload(
    profile: &RadialProfile,
    source: &str,
    mass: f64,
    radial_energy: f64,
    ell_max: u64,
) -> Result<Payload> {
    if !(mass > 0.0 && mass.is_finite()) {
        return Err(Error::InvalidInput(format!("mass must be positive, got {mass}")));
    }
    let reduction = shell_reduce(profile, radial_energy);
    let rows = (0..=ell_max)
        .map(|ell| {
            shell_spectrum(ell, mass, &reduction).map(|e| vec![Cell::Int(ell), e.energy.into()])
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(Payload {
        manifest: RunManifest::new("shell")
            .param("profile", source)
            .param("mass", mass)
            .param("radial_energy", radial_energy)
            .param("ell_max", ell_max)
            .param("units", json!(UNIT_CONVENTION)),
        summary: vec![
            ("effective_radius".into(), reduction.effective_radius.into()),
            ("r_minus2_expectation".into(), reduction.r_minus2_expectation.into()),
            ("scale_factor".into(), profile.scale_factor().into()),
            ("endpoint_warning".into(), profile.endpoint_warning().into()),
        ],
        columns: vec!["ell".into(), "energy".into()],
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(m: u64) -> QuantumIndex {
        QuantumIndex::new(m)
    }

    #[test]
    fn m_spec_expansion() {
        let r = MSpec::Range { max: 100, stride: 10 }.values().unwrap();
        assert_eq!(r.len(), 11);
        assert_eq!(r[10], q(100));
        assert_eq!(MSpec::Range { max: 7, stride: 3 }.values().unwrap(), vec![q(0), q(3), q(6)]);
        assert!(MSpec::Range { max: 7, stride: 0 }.values().is_err());
        assert!(MSpec::List(vec![]).values().is_err());
    }

    #[test]
    fn density_two_points_are_zero() {
        let p = density_payload(&[q(8)], 2, false).unwrap();
        assert_eq!(p.rows.len(), 2);
        assert_eq!(p.rows[0][1], Cell::Float(0.0));
        assert_eq!(p.rows[1][1], Cell::Float(0.0));
        assert_eq!(p.rows[1][0], Cell::Float(PI));
    }

    #[test]
    fn density_rejects_single_point() {
        assert!(density_payload(&[q(1)], 1, false).is_err());
    }

    #[test]
    fn rigidity_failed_rows_keep_m() {
        let cfg = TableConfig {
            exact_cap: 5,
            ..TableConfig::default()
        };
        let (p, failures) = rigidity_payload(&MSpec::List(vec![q(2), q(9)]), &cfg).unwrap();
        assert_eq!(failures.len(), 1);
        assert_eq!(failures[0].0, q(9));
        assert_eq!(p.rows[1][0], Cell::Int(9));
        assert!(p.rows[1][1..].iter().all(|c| *c == Cell::Empty));
    }
}
