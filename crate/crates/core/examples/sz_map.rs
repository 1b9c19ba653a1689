//! The map from a Jacobi spectral measure to a circle measure: a Jost
//! function vanishing at ±1 gives D⁻¹ = √2·u/(1 − z²) after normalization.

use jacobi_jost::inverse::ac_mass;
use jacobi_jost::numerics::TaylorSeries;
use jacobi_jost::opuc::{
    sz_image_weight, szego_inverse_coefficients, szego_map_best_fit, szego_map_identity_check, SZ_CONSTANT,
};
use jacobi_jost::Result;

fn main() -> Result<()> {
    // u = (1 − z²)(1 − z/3)
    let u = TaylorSeries::polynomial(vec![1.0, -1.0 / 3.0, -1.0, 1.0 / 3.0]);
    // Unit mass: the a.c. mass scales like 1/|u|².
    let u = u.scale(ac_mass(&u, 512)?.sqrt());
    let coeffs = szego_inverse_coefficients(sz_image_weight(&u), 1024, 8)?;
    println!("D⁻¹ Taylor coefficients: {:?}", coeffs.iter().map(|c| c.re).collect::<Vec<_>>());
    let dinv = TaylorSeries::polynomial(coeffs.iter().map(|c| c.re).collect());
    println!("sup |D⁻¹ − {SZ_CONSTANT:.6}·u/(1 − z²)| = {:.2e}", szego_map_identity_check(&u, &dinv)?);
    let fit = szego_map_best_fit(&u, &dinv)?;
    println!("best-fit constant {:.12} (deviation {:.2e})", fit.constant, fit.deviation);
    Ok(())
}
