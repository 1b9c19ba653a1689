//! Radius of convergence from Taylor coefficients, and coefficient
//! extraction from samples on a circle.

use jacobi_jost::numerics::{coefficients_from_grid, radius_estimate, CircleGrid};
use jacobi_jost::{Complex64, Result};

fn main() -> Result<()> {
    // 1/(1 − z/1.7) has radius 1.7.
    let grid = CircleGrid::sample(1.2, 128, |z| (Complex64::new(1.0, 0.0) - z / 1.7).inv())?;
    let c: Vec<f64> = coefficients_from_grid(&grid, 40)?.iter().map(|c| c.re).collect();
    println!("first coefficients {:?}", &c[..5]);
    println!("radius estimate {:.6}", radius_estimate(&c)?);
    Ok(())
}
