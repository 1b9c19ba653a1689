use crate::error::{Error, Result};
use crate::inverse::SpectralData;
use crate::numerics::TaylorSeries;

/// Canonical residue `w̃ = −(zⱼ − 1/zⱼ) / (u'(zⱼ) · u(1/zⱼ))` at a simple
/// zero `zⱼ` of `u`: the only residue for which `M` continues analytically
/// through `1/zⱼ`.
///
/// Convert to a weight with [`crate::forward::residue_to_weight`].
pub fn canonical_weight(u: &TaylorSeries, zj: f64) -> Result<f64> {
    if !(zj.abs() < 1.0 && zj != 0.0) {
        return Err(Error::InvalidArgument(format!("z = {zj} outside (−1, 1) \\ {{0}}")));
    }
    let reflected = 1.0 / zj;
    if reflected.abs() >= u.radius() {
        return Err(Error::InsufficientAnalyticity { needed: reflected.abs(), radius: u.radius() });
    }
    let (v, d) = u.eval_real_with_derivative(zj);
    if v.abs() > 1e-8 * u.majorant(zj.abs()) {
        return Err(Error::InvalidArgument(format!("u({zj}) = {v} is not a zero")));
    }
    if d == 0.0 {
        return Err(Error::DegenerateZero { at: zj });
    }
    let far = u.eval_real(reflected);
    if far.abs() <= 1e-12 * u.majorant(reflected.abs()) {
        return Err(Error::NoCanonicalWeight { z: zj });
    }
    Ok(-(zj - reflected) / (d * far))
}

/// Comparison of one bound state against its canonical residue.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CanonicityReport {
    pub z: f64,
    pub is_canonical: bool,
    /// `|w̃ − w̃_canonical|`.
    pub deviation: f64,
    pub canonical_residue: f64,
}

/// Canonicity of every state with `|zⱼ| > 1/work_radius`; states closer to 0
/// are left out because their reflections lie beyond the working disk.
pub fn canonicity_check(
    data: &SpectralData,
    work_radius: f64,
    residue_tol: f64,
) -> Result<Vec<CanonicityReport>> {
    if data.u().radius() < work_radius {
        return Err(Error::InsufficientAnalyticity { needed: work_radius, radius: data.u().radius() });
    }
    data.states()
        .iter()
        .filter(|s| s.z.abs() > 1.0 / work_radius)
        .map(|s| {
            let c = canonical_weight(data.u(), s.z)?;
            let deviation = (s.residue - c).abs();
            Ok(CanonicityReport {
                z: s.z,
                is_canonical: deviation <= residue_tol,
                deviation,
                canonical_residue: c,
            })
        })
        .collect()
}
