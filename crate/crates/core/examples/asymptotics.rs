//! Large-m behaviour: the defect `1 − R_m` against `1/(4m)` and the
//! remainder of the two-term expansion.

use wallis_rigidity::rigidity::{defect, rigidity_asymptotic, rigidity_gamma};
use wallis_rigidity::spherical::alignment_ratio;
use wallis_rigidity::QuantumIndex;

fn main() -> wallis_rigidity::Result<()> {
    println!("{:>8}  {:>14}  {:>10}  {:>14}  {:>12}", "m", "1 − R_m", "4m·defect", "remainder·m³", "alignment");
    for m in [1u64, 10, 50, 100, 400, 1000, 10_000, 1_000_000] {
        let q = QuantumIndex::new(m);
        // beyond m ~ 10³ the remainder is below double-precision resolution of R_m
        let remainder = if m <= 1000 {
            let r = (rigidity_gamma(q) - rigidity_asymptotic(q)?) * (m as f64).powi(3);
            format!("{r:.6}")
        } else {
            "-".to_owned()
        };
        println!(
            "{m:>8}  {:>14.6e}  {:>10.7}  {:>14}  {:>12.9}",
            defect(q),
            4.0 * m as f64 * defect(q),
            remainder,
            alignment_ratio(q),
        );
    }
    Ok(())
}
