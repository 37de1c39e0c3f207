//! Effective radius of a thin spherical shell and its surface spectrum,
//! compared with a rigid rotor of the same moment of inertia.

use wallis_rigidity::models::{
    rotor_energy, shell_reduce, shell_spectrum, RadialProfile, RotorConfig, DEFAULT_NORM_TOL,
};

fn main() -> wallis_rigidity::Result<()> {
    let (center, mass, radial_energy) = (5.0, 1.0, 0.7);
    for width in [0.3, 0.1, 0.01] {
        let r: Vec<f64> = (0..1001)
            .map(|i| center - 10.0 * width + 20.0 * width * i as f64 / 1000.0)
            .collect();
        let f = r
            .iter()
            .map(|&r| (-(r - center).powi(2) / (4.0 * width * width)).exp() / r)
            .collect();
        let profile = RadialProfile::normalized(r, f, DEFAULT_NORM_TOL)?;
        let red = shell_reduce(&profile, radial_energy);
        println!(
            "width {width:<5} R_eff = {:.8}  ⟨r⁻²⟩ = {:.8}",
            red.effective_radius, red.r_minus2_expectation
        );
        if width == 0.01 {
            let rotor = RotorConfig::from_mass_radius(mass, red.effective_radius)?;
            println!("\n  ell   shell energy   rotor + offset");
            for ell in 0..=4 {
                let shell = shell_spectrum(ell, mass, &red)?.energy;
                let rotor = rotor_energy(ell, &rotor).energy + radial_energy;
                println!("  {ell:>3}   {shell:<13.9}  {rotor:.9}");
            }
        }
    }
    Ok(())
}
