//! Analyticity of D⁻¹ against geometric decay of the Verblunsky
//! coefficients, and one update of D⁻¹ on a circle outside the disk.

use jacobi_jost::numerics::{radius_estimate, CircleGrid, TaylorSeries};
use jacobi_jost::opuc::{
    bernstein_szego_weight, dinv_update, szego_inverse_coefficients, szego_recursion, verblunsky_decay_check,
    SchurEvaluator, VerblunskySeq,
};
use jacobi_jost::Result;

fn main() -> Result<()> {
    let alphas: Vec<f64> = (0..25).map(|n| 0.4 * 3f64.powi(-n)).collect();
    let seq = VerblunskySeq::real(&alphas)?;
    let coeffs: Vec<f64> =
        szego_inverse_coefficients(bernstein_szego_weight(&seq), 1024, 24)?.iter().map(|c| c.re).collect();
    let radius = radius_estimate(&coeffs)?;
    let check = verblunsky_decay_check(&TaylorSeries::new(coeffs, radius)?, &seq)?;
    println!("D⁻¹ radius {:.4}, αₙ decay rate {:.4}, pass {}", check.radius, check.r_est, check.pass);

    let rho: f64 = (0..seq.len()).map(|k| seq.rho(k)).product();
    let pair = szego_recursion(&seq, seq.len());
    let grid = CircleGrid::sample(1.5, 128, |z| pair.eval_phi_star(z) / rho)?;
    let step = dinv_update(&grid, &SchurEvaluator::of_sequence(&seq, 0), seq.alpha(0))?;
    println!(
        "one update at R = 1.5: seminorm {:.3e} → {:.3e} (bound {:.3e}, sup|A| = {:.4})",
        step.seminorm_before, step.seminorm_after, step.bound, step.sup_a
    );
    Ok(())
}
