//! Szegő recursion, Schur algorithm and the relative Szegő function for a
//! finite list of Verblunsky coefficients.

use jacobi_jost::opuc::{
    bernstein_szego_weight, relative_szego, relative_szego_cross_check, schur_inverse, szego_function,
    szego_recursion, SchurEvaluator, VerblunskySeq,
};
use jacobi_jost::{Complex64, Result};

fn main() -> Result<()> {
    let seq = VerblunskySeq::new(vec![
        Complex64::new(0.5, 0.2),
        Complex64::new(-0.3, 0.4),
        Complex64::new(0.1, 0.0),
    ])?;
    let pair = szego_recursion(&seq, seq.len());
    println!("Φ₃ coefficients: {:?}", pair.phi);

    let f = SchurEvaluator::of_sequence(&seq, 0);
    let back = schur_inverse(&f, seq.len() - 1)?;
    println!("Schur algorithm recovers {:?}", back.values());

    let z = Complex64::new(0.3, -0.4);
    let mut prod = Complex64::new(1.0, 0.0);
    for n in 0..seq.len() {
        let (fn_, fnext) = (SchurEvaluator::of_sequence(&seq, n), SchurEvaluator::of_sequence(&seq, n + 1));
        let (direct, via_f, dev) = relative_szego_cross_check(seq.alpha(n), &fn_, &fnext, z)?;
        println!("δ{n}D(z) = {direct:.12} (from F: {via_f:.12}, |Δ| = {dev:.1e})");
        prod *= relative_szego(seq.alpha(n), &fn_, &fnext, z)?;
    }
    let d = szego_function(bernstein_szego_weight(&seq), z, 512)?;
    let rho: f64 = (0..seq.len()).map(|k| seq.rho(k)).product();
    println!("∏ δₙD  = {prod:.12}");
    println!("D(z)   = {d:.12}");
    println!("Πρ/Φ*  = {:.12}", rho / pair.eval_phi_star(z));
    Ok(())
}
