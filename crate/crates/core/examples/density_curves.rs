//! Polar densities `P_m(θ)` for a few `m`, with the equatorial Gaussian next
//! to the exact curve. Prints a coarse ASCII profile and a few sample values.

use std::f64::consts::{FRAC_PI_2, PI};

use wallis_rigidity::spherical::{angular_width, gaussian_approx, PolarDensity};
use wallis_rigidity::QuantumIndex;

fn main() -> wallis_rigidity::Result<()> {
    let ms = [0u64, 2, 8, 32];
    let densities: Vec<_> = ms.iter().map(|&m| PolarDensity::new(QuantumIndex::new(m))).collect();
    let peak = densities.last().unwrap().density_at(FRAC_PI_2)?;

    print!("{:>7}", "θ");
    for m in ms {
        print!("  {:<12}", format!("m = {m}"));
    }
    println!();
    for i in 0..=36 {
        let theta = PI * i as f64 / 36.0;
        print!("{:>6.1}°", theta.to_degrees());
        for d in &densities {
            let bar = (d.density_at(theta)? / peak * 12.0).round() as usize;
            print!("  {:<12}", "#".repeat(bar));
        }
        println!();
    }

    println!();
    for &m in &[8u64, 32, 200] {
        let m = QuantumIndex::new(m);
        let x = angular_width(m);
        let exact = PolarDensity::new(m).density_at(FRAC_PI_2 + x)?;
        let approx = gaussian_approx(m, x)?;
        println!(
            "m = {m:>3}: width {x:.4}, P(π/2 + width) = {exact:.6}, Gaussian {approx:.6}, rel. error {:.2e}",
            (approx - exact).abs() / exact
        );
    }
    Ok(())
}
