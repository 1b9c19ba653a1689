//! Coefficient stripping: recover Jacobi parameters from spectral data and
//! watch the seminorm of the stripped Jost functions shrink.

use jacobi_jost::forward::JacobiParams;
use jacobi_jost::inverse::{recover_jacobi, SpectralData, StripConfig};
use jacobi_jost::Result;

fn main() -> Result<()> {
    let j = JacobiParams::finite(vec![0.7, 1.6, 1.1, 0.9], vec![-0.5, 0.8, 0.0, 0.3])?;
    let data = SpectralData::from_jacobi(&j)?;
    println!("deg u = {}, {} bound states", data.u().degree(), data.states().len());

    let rec = recover_jacobi(&data, 8, &StripConfig::default())?;
    println!(" n   a (true)   a (stripped)   b (true)   b (stripped)");
    for n in 1..=8 {
        println!(
            "{n:2}  {:9.6}  {:13.10}  {:9.6}  {:13.10}",
            j.a(n),
            rec.params.a(n),
            j.b(n),
            rec.params.b(n)
        );
    }
    let d = &rec.diagnostics;
    println!("terminated at level {:?}", d.terminated_at);
    for s in &d.steps {
        println!(
            "step {}: R = {:.3}  |||u||| {:.3e} → {:.3e}  (bound {:.3e})  states after {}",
            s.step, s.work_radius, s.seminorm_before, s.seminorm_after, s.contraction_bound, s.states_after
        );
    }
    Ok(())
}
