//! Eigenvalues outside [−2, 2] counted three ways: Sturm sign changes, zeros
//! of the Jost function and a dense eigensolve of the truncated matrix.

use jacobi_jost::forward::{bound_states, sturm_count, JacobiParams};
use jacobi_jost::Result;
use nalgebra::{DMatrix, SymmetricEigen};

fn main() -> Result<()> {
    let j = JacobiParams::finite(vec![1.8, 0.6, 1.4], vec![1.2, -1.5, 0.3])?;
    let size = j.support() + 60;
    let (above, below) = sturm_count(&j, size)?;
    println!("Sturm: {above} above 2, {below} below −2");

    let states = bound_states(&j)?;
    let zeros_above = states.iter().filter(|s| s.z > 0.0).count();
    println!("Jost zeros: {zeros_above} above, {} below", states.len() - zeros_above);

    let (diag, off) = j.truncated(size);
    let m = DMatrix::from_fn(size, size, |r, c| match r.abs_diff(c) {
        0 => diag[r],
        1 => off[r.min(c)],
        _ => 0.0,
    });
    let eig = SymmetricEigen::new(m).eigenvalues;
    let mut outside: Vec<f64> = eig.iter().copied().filter(|e| e.abs() > 2.0).collect();
    outside.sort_by(f64::total_cmp);
    println!("dense eigensolve: {outside:?}");
    Ok(())
}
