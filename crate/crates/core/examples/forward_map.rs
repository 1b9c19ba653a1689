//! Jost function, bound states, M-function and perturbation determinant of
//! a finitely supported Jacobi matrix.

use jacobi_jost::forward::{
    bound_states, jost_function, m_continued_fraction, m_from_jost, perturbation_determinant, JacobiParams,
};
use jacobi_jost::{Complex64, Result};

fn main() -> Result<()> {
    let j = JacobiParams::finite(vec![1.5, 0.8, 1.2], vec![0.4, -0.7, 0.2])?;
    let u = jost_function(&j);
    println!("u(z) coefficients: {:?}", u.coeffs());
    println!("degree {} leading {:.6}", u.degree(), u.leading_coefficient());

    for s in bound_states(&j)? {
        println!("bound state z = {:+.6}  E = {:+.6}  w = {:.6}", s.z, s.energy, s.weight);
    }

    let z = Complex64::new(0.3, 0.2);
    println!("M(z) from u:        {:.12}", m_from_jost(&j, z)?);
    println!("M(z) from fraction: {:.12}", m_continued_fraction(&j, z, j.len())?);
    println!("u(z)/u(0):          {:.12}", u.eval(z) / u.eval(Complex64::default()));
    println!("det(1 + δJ G₀):     {:.12}", perturbation_determinant(&j, z)?);
    Ok(())
}
