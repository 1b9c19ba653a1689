use crate::error::{Error, Result};
use crate::numerics::{least_squares_slope, TaylorSeries};
use crate::opuc::VerblunskySeq;

/// Entries below this are treated as zero in the regression.
const ALPHA_FLOOR: f64 = 1e-14;
/// The list is padded with its zero tail to at least this many entries.
const MIN_ENTRIES: usize = 8;
/// Relative slack on `1/R` in the pass criterion.
const SLACK: f64 = 1.05;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerblunskyDecay {
    /// `1 / limsup |αₙ|^{1/n}` from the regression, `∞` for a zero tail.
    pub r_est: f64,
    /// Declared radius of analyticity of `D⁻¹`.
    pub radius: f64,
    pub pass: bool,
}

/// Compares the geometric decay rate of the `αₙ` with the declared radius
/// of `D⁻¹`: passes iff `1/r_est ≤ 1.05/radius`.
///
/// `log|αₙ|` is regressed against `n` over the trailing half of the list.
pub fn verblunsky_decay_check(dinv: &TaylorSeries, alphas: &VerblunskySeq) -> Result<VerblunskyDecay> {
    let len = alphas.len().max(MIN_ENTRIES);
    let start = len / 2;
    let points: Vec<(f64, f64)> = (start..len)
        .map(|n| (n as f64, alphas.alpha(n).norm()))
        .filter(|&(_, a)| a >= ALPHA_FLOOR)
        .map(|(n, a)| (n, a.ln()))
        .collect();
    let r_est = match points.len() {
        0 => f64::INFINITY,
        1 => return Err(Error::TooFewCoefficients { needed: 2, got: 1 }),
        _ => (-least_squares_slope(&points)).exp(),
    };
    let radius = dinv.radius();
    let pass = 1.0 / r_est <= SLACK / radius;
    Ok(VerblunskyDecay { r_est, radius, pass })
}
