//! Canonical weights: which bound-state weights keep the stripped Jost
//! function analytic, and what happens with the wrong ones.

use jacobi_jost::forward::{residue_to_weight, BoundState};
use jacobi_jost::inverse::{canonical_weight, canonicity_check, recover_jacobi, SpectralData, StripConfig};
use jacobi_jost::numerics::TaylorSeries;
use jacobi_jost::Result;

fn main() -> Result<()> {
    // u = 1 − 2z: one bound state at z = 1/2.
    let u = TaylorSeries::polynomial(vec![1.0, -2.0]);
    let w = residue_to_weight(0.5, canonical_weight(&u, 0.5)?);
    println!("canonical weight at z = 1/2: {w}");

    let config = StripConfig::default().with_work_radius(3.0);
    for weight in [0.75, 0.8] {
        let data = SpectralData::new(u.clone(), vec![BoundState::from_weight(0.5, weight)?])?;
        let report = canonicity_check(&data, 3.0, 1e-8)?;
        let rec = recover_jacobi(&data, 5, &config)?;
        println!(
            "w = {weight}: canonical {:?}, analyticity loss {:?}, b recovered {:?}",
            report.iter().map(|r| r.is_canonical).collect::<Vec<_>>(),
            rec.diagnostics.analyticity_loss,
            rec.params.b_values()
        );
    }

    // (1 − 2z)(1 − z/2) vanishes at both 1/2 and 2: no weight works.
    let u = TaylorSeries::polynomial(vec![1.0, -2.5, 1.0]);
    match canonical_weight(&u, 0.5) {
        Ok(w) => println!("unexpected canonical residue {w}"),
        Err(e) => println!("(1 − 2z)(1 − z/2): {e}"),
    }
    Ok(())
}
