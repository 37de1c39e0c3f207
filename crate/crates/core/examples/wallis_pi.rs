//! Exact Wallis partial products and the π estimates they give.

use wallis_rigidity::rigidity::{pi_sequence, wallis_partial};
use wallis_rigidity::QuantumIndex;

fn main() -> wallis_rigidity::Result<()> {
    let w4 = wallis_partial(QuantumIndex::new(4))?;
    println!("W_4 = {}/{} ≈ {}", w4.numerator, w4.denominator, w4.to_f64());
    let factors: Vec<String> = w4.factors.iter().map(|f| f.to_string()).collect();
    println!("    = {}", factors.join(" · "));
    println!();

    println!("{:>6}  {:>18}  {:>12}  {:>10}", "m", "2 W_m", "π − 2 W_m", "m·error");
    let rows = pi_sequence(QuantumIndex::new(10_000))?;
    for m in [1usize, 10, 100, 1000, 10_000] {
        let p = &rows[m];
        println!("{:>6}  {:>18.15}  {:>12.4e}  {:>10.6}", p.m, p.estimate, p.error, p.scaled_error);
    }
    println!("π/4 = {:.6}", std::f64::consts::FRAC_PI_4);
    Ok(())
}
