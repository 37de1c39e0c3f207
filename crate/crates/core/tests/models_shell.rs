use proptest::prelude::*;

use wallis_rigidity::models::{
    load_radial_profile, r_minus2_expectation, rotor_energy, shell_reduce, shell_spectrum,
    RadialProfile, RotorConfig, DEFAULT_NORM_TOL,
};
use wallis_rigidity::Error;

/// `r f₀` is a Gaussian of width `w` centred on `center`, sampled on ±10 w.
fn bump(center: f64, w: f64, points: usize) -> RadialProfile {
    let (lo, hi) = (center - 10.0 * w, center + 10.0 * w);
    let r: Vec<f64> = (0..points)
        .map(|i| lo + (hi - lo) * i as f64 / (points - 1) as f64)
        .collect();
    let f = r
        .iter()
        .map(|&r| (-(r - center).powi(2) / (4.0 * w * w)).exp() / r)
        .collect();
    RadialProfile::normalized(r, f, DEFAULT_NORM_TOL).unwrap()
}

/// `⟨r⁻²⟩` of a narrow Gaussian in `r`: `R₀⁻² (1 + 3 (w/R₀)²)` plus `O((w/R₀)⁴)`.
fn bump_oracle(center: f64, w: f64) -> f64 {
    let s = w / center;
    (1.0 + 3.0 * s * s + 15.0 * s.powi(4)) / (center * center)
}

#[test]
fn thin_bump_effective_radius() {
    let (center, w) = (5.0, 0.01);
    let p = bump(center, w, 801);
    let got = r_minus2_expectation(&p);
    assert!((got / bump_oracle(center, w) - 1.0).abs() < 1e-4, "{got}");
    let red = shell_reduce(&p, 0.0);
    assert!((red.effective_radius - center).abs() < 1e-3);
    assert!(!p.endpoint_warning());
    assert!((red.effective_radius.powi(2) * red.r_minus2_expectation - 1.0).abs() < 1e-14);
}

#[test]
fn shrinking_width_converges_to_center() {
    let center = 3.0;
    let mut prev = f64::INFINITY;
    for w in [0.1, 0.05, 0.01] {
        let red = shell_reduce(&bump(center, w, 1001), 0.0);
        let gap = (red.effective_radius / center - 1.0).abs();
        assert!(gap < prev, "w = {w}");
        prev = gap;
    }
    assert!(prev < 1e-4);
}

#[test]
fn constant_shell() {
    // f₀ constant on [1, 3]: ⟨r⁻²⟩ = 2 / (26/3) = 3/13
    let r: Vec<f64> = (0..=200).map(|i| 1.0 + 2.0 * i as f64 / 200.0).collect();
    let f = vec![1.0; r.len()];
    let p = RadialProfile::normalized(r, f, DEFAULT_NORM_TOL).unwrap();
    let red = shell_reduce(&p, 0.0);
    assert!((red.r_minus2_expectation - 3.0 / 13.0).abs() < 1e-13);
    assert!((red.effective_radius - (13.0f64 / 3.0).sqrt()).abs() < 1e-13);
    assert!(p.endpoint_warning());
}

#[test]
fn rotor_and_shell_agree_exactly() {
    let p = bump(2.0, 0.02, 401);
    let red = shell_reduce(&p, 0.0);
    let mass = 1.7;
    let rotor = RotorConfig::from_mass_radius(mass, red.effective_radius).unwrap();
    for ell in 0..=100 {
        let a = rotor_energy(ell, &rotor).energy;
        let b = shell_spectrum(ell, mass, &red).unwrap().energy;
        assert_eq!(a, b, "ell = {ell}");
    }
}

#[test]
fn spectrum_with_offset() {
    let p = bump(5.0, 0.01, 801);
    let red = shell_reduce(&p, 0.7);
    let e2 = shell_spectrum(2, 1.0, &red).unwrap();
    assert!(e2.offset_included);
    assert!((e2.energy - (0.7 + 6.0 / (2.0 * red.effective_radius.powi(2)))).abs() < 1e-15);
    assert!((e2.energy - 0.82).abs() < 1e-3);
    assert_eq!(shell_spectrum(0, 1.0, &red).unwrap().energy, 0.7);
    assert!(shell_spectrum(1, -1.0, &red).is_err());
}

#[test]
fn csv_loading() {
    let (center, w) = (4.0, 0.05);
    let mut text = String::from("# thin bump\nr,f0\n");
    for i in 0..1000 {
        let r = center - 10.0 * w + 20.0 * w * i as f64 / 999.0;
        let f = 3.0 * (-(r - center).powi(2) / (4.0 * w * w)).exp() / r;
        text.push_str(&format!("{r},{f}\n"));
    }
    let p = load_radial_profile(text.as_bytes()).unwrap();
    assert_eq!(p.r_grid().len(), 1000);
    assert!((p.norm() - 1.0).abs() < 1e-12);
    assert!(p.scale_factor() != 1.0);
    assert!((r_minus2_expectation(&p) / bump_oracle(center, w) - 1.0).abs() < 1e-5);
}

#[test]
fn csv_errors_name_the_line() {
    let bad = "r,f0\n1.0,1\n1.5,x\n2.0,1\n2.5,1\n";
    match load_radial_profile(bad.as_bytes()) {
        Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
        other => panic!("{other:?}"),
    }
    assert!(matches!(
        load_radial_profile("radius,f\n1,1\n".as_bytes()),
        Err(Error::Parse { line: 1, .. })
    ));
    let unsorted = "r,f0\n1,1\n3,1\n2,1\n4,1\n";
    assert!(matches!(load_radial_profile(unsorted.as_bytes()), Err(Error::Profile(_))));
}

proptest! {
    #[test]
    fn effective_radius_inside_support(
        lo in 0.2f64..5.0,
        width in 0.05f64..3.0,
        amps in proptest::collection::vec(0.01f64..2.0, 8..40),
    ) {
        let n = amps.len();
        let r: Vec<f64> = (0..n).map(|i| lo + width * i as f64 / (n - 1) as f64).collect();
        let p = RadialProfile::normalized(r, amps, 1e-9).unwrap();
        let red = shell_reduce(&p, 0.0);
        let slack = 1e-12 * (lo + width);
        prop_assert!(red.effective_radius >= lo - slack);
        prop_assert!(red.effective_radius <= lo + width + slack);
    }
}
