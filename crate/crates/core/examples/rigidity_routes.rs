//! The rigidity index `R_m = 1/⟨cscθ⟩` computed three independent ways.

use wallis_rigidity::numerics::Integrator;
use wallis_rigidity::rigidity::{rigidity_gamma, rigidity_product, rigidity_quadrature};
use wallis_rigidity::QuantumIndex;

fn main() -> wallis_rigidity::Result<()> {
    let integrator = Integrator::default();
    println!("{:>5}  {:>20}  {:>20}  {:>20}", "m", "exact product", "gamma ratio", "quadrature");
    for m in [0u64, 1, 2, 5, 10, 50, 200, 1000] {
        let m = QuantumIndex::new(m);
        println!(
            "{:>5}  {:>20.17}  {:>20.17}  {:>20.17}",
            m,
            rigidity_product(m)?,
            rigidity_gamma(m),
            rigidity_quadrature(m, &integrator)?,
        );
    }
    Ok(())
}
