//! Draw polar angles from `P_m` and compare Monte Carlo moments with their
//! quadrature targets.

use wallis_rigidity::numerics::Integrator;
use wallis_rigidity::spherical::{sample_polar, SampleTargets};
use wallis_rigidity::QuantumIndex;

fn main() -> wallis_rigidity::Result<()> {
    let count = 200_000;
    for m in [0u64, 1, 5, 20, 100] {
        let m = QuantumIndex::new(m);
        let s = sample_polar(m, count, 42)?.summary();
        let t = SampleTargets::for_index(m, &Integrator::default())?;
        println!("m = {m} ({count} samples, seed 42)");
        println!("  ⟨cos²θ⟩      {:.6} ± {:.6}  target {:.6}", s.cos_squared.value, s.cos_squared.standard_error, t.cos_squared);
        if let (Some(est), Some(target)) = (s.csc, t.csc) {
            println!("  ⟨cscθ⟩       {:.6} ± {:.6}  target {:.6}", est.value, est.standard_error, target);
        }
        println!(
            "  sd(θ − π/2)  {:.6} ± {:.6}  target {:.6}",
            s.equatorial_spread.value, s.equatorial_spread.standard_error, t.equatorial_spread
        );
    }
    Ok(())
}
