//! Geometric decay: the radius of the Jost function matches the decay rate
//! of the parameters recovered by stripping.

use jacobi_jost::forward::{jost_function, JacobiParams, Tail};
use jacobi_jost::inverse::{decay_rate_estimate, recover_jacobi, SpectralData, StripConfig};
use jacobi_jost::numerics::radius_estimate;
use jacobi_jost::Result;

fn main() -> Result<()> {
    // bₙ = (−1)ⁿ 2.25⁻ⁿ decays like R⁻²ⁿ with R = 1.5.
    let j =
        JacobiParams::from_fn(25, Tail::Free, |n| (1.0, (-1f64).powi(n as i32) * 2.25f64.powi(-(n as i32))))?;
    let u = jost_function(&j);
    println!("radius estimate of u: {:.4}", radius_estimate(u.coeffs())?);
    println!("decay rate of the input: {:.4}", decay_rate_estimate(&j)?);

    let rec = recover_jacobi(&SpectralData::from_jacobi(&j)?, 30, &StripConfig::default())?;
    println!("decay rate after stripping: {:.4}", decay_rate_estimate(&rec.params)?);
    Ok(())
}
