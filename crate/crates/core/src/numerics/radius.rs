use crate::error::{Error, Result};

const MIN_COEFFICIENTS: usize = 8;

/// Estimates the radius of convergence `1 / limsup |c_k|^{1/k}` of a power
/// series from finitely many coefficients.
///
/// Fits `log|c_k| ≈ α + βk` by least squares over the trailing half of the
/// list, skipping coefficients that are exactly zero, and returns `e^{−β}`.
/// A trailing half with no nonzero entry yields `+∞`.
pub fn radius_estimate(coeffs: &[f64]) -> Result<f64> {
    if coeffs.len() < MIN_COEFFICIENTS {
        return Err(Error::TooFewCoefficients { needed: MIN_COEFFICIENTS, got: coeffs.len() });
    }
    let start = coeffs.len() / 2;
    let points: Vec<(f64, f64)> = coeffs[start..]
        .iter()
        .enumerate()
        .filter(|(_, c)| **c != 0.0)
        .map(|(i, c)| ((start + i) as f64, c.abs().ln()))
        .collect();
    match points.len() {
        0 => Ok(f64::INFINITY),
        1 => Err(Error::TooFewCoefficients { needed: 2, got: 1 }),
        _ => Ok((-least_squares_slope(&points)).exp()),
    }
}

pub(crate) fn least_squares_slope(points: &[(f64, f64)]) -> f64 {
    let n = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / n;
    let my = points.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = points.iter().map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = points.iter().map(|(x, _)| (x - mx) * (x - mx)).sum();
    sxy / sxx
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometric_half() {
        let c: Vec<f64> = (0..=40).map(|k| 0.5f64.powi(k)).collect();
        let r = radius_estimate(&c).unwrap();
        assert!((r - 2.0).abs() < 0.1);
    }

    #[test]
    fn polynomial_tail_is_infinite() {
        let mut c = vec![1.0, -2.0, 0.5];
        c.resize(12, 0.0);
        assert_eq!(radius_estimate(&c).unwrap(), f64::INFINITY);
    }

    #[test]
    fn even_subsequence_sets_the_limsup() {
        let c: Vec<f64> = (0..=40).map(|k| 3f64.powi(-k) * (1.0 + (-1f64).powi(k))).collect();
        let r = radius_estimate(&c).unwrap();
        assert!((r - 3.0).abs() < 0.15);
    }

    #[test]
    fn too_short() {
        assert!(matches!(radius_estimate(&[1.0, 0.5, 0.25]), Err(Error::TooFewCoefficients { .. })));
    }
}
