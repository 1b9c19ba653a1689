//! Spectral measure from a Jost function and its bound-state weights.

use jacobi_jost::forward::JacobiParams;
use jacobi_jost::inverse::{measure_from_jost, normalization_check, SpectralData};
use jacobi_jost::Result;

fn main() -> Result<()> {
    let j = JacobiParams::finite(vec![2.0_f64.sqrt()], vec![1.0])?;
    let data = SpectralData::from_jacobi(&j)?;
    let m = measure_from_jost(&data, 256)?;
    println!("θ nodes {}  a.c. mass {:.12}", m.thetas.len(), m.ac_mass);
    for (e, w) in &m.point_masses {
        println!("point mass at E = {e:+.6}: {w:.12}");
    }
    println!("total mass {:.15}", m.total_mass);
    println!("normalization defect {:.2e}", normalization_check(&data, 256)?);
    let step = m.thetas.len() / 8;
    for k in (0..m.thetas.len()).step_by(step.max(1)) {
        println!("  f(2cos {:.4}) = {:.6}", m.thetas[k], m.density[k]);
    }
    Ok(())
}
