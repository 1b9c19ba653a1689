use crate::error::{Error, Result};
use crate::forward::{JacobiParams, Tail};
use crate::numerics::least_squares_slope;

const MIN_ENTRIES: usize = 10;
const FLOOR: f64 = 1e-14;

/// Estimates `R` in `|aₙ − 1| + |bₙ| ~ R^{−2n}`.
///
/// Fits `log(|aₙ − 1| + |bₙ|)` against `2n` by least squares over the
/// trailing half of the stored entries, skipping entries below `1e−14`, and
/// returns `e^{−slope}`. Returns `+∞` when nothing in the trailing half is
/// above the floor. A free tail is read as stored `(1, 0)` entries, so short
/// finitely supported parameters give `+∞`.
pub fn decay_rate_estimate(j: &JacobiParams) -> Result<f64> {
    let k = match j.tail() {
        Tail::Free => j.len().max(MIN_ENTRIES),
        Tail::Envelope { .. } => j.len(),
    };
    if k < MIN_ENTRIES {
        return Err(Error::TooFewCoefficients { needed: MIN_ENTRIES, got: k });
    }
    let points: Vec<(f64, f64)> = (k / 2 + 1..=k)
        .filter_map(|n| {
            let e = (j.a(n) - 1.0).abs() + j.b(n).abs();
            (e >= FLOOR).then(|| (2.0 * n as f64, e.ln()))
        })
        .collect();
    match points.len() {
        0 => Ok(f64::INFINITY),
        1 => Err(Error::TooFewCoefficients { needed: 2, got: 1 }),
        _ => Ok((-least_squares_slope(&points)).exp()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forward::Tail;

    #[test]
    fn geometric_decay() {
        let j = JacobiParams::from_fn(30, Tail::Free, |n| (1.0, 4f64.powi(-(n as i32)))).unwrap();
        assert!((decay_rate_estimate(&j).unwrap() - 2.0).abs() < 0.1);
        let j = JacobiParams::from_fn(30, Tail::Free, |n| {
            (1.0, (-1f64).powi(n as i32) * 2.25f64.powi(-(n as i32)))
        })
        .unwrap();
        assert!((decay_rate_estimate(&j).unwrap() - 1.5).abs() < 0.075);
    }

    #[test]
    fn free_tail_is_infinite() {
        let j = JacobiParams::from_fn(12, Tail::Free, |_| (1.0, 0.0)).unwrap();
        assert_eq!(decay_rate_estimate(&j).unwrap(), f64::INFINITY);
    }

    #[test]
    fn short_free_tail_is_infinite() {
        assert_eq!(decay_rate_estimate(&JacobiParams::free()).unwrap(), f64::INFINITY);
        let j = JacobiParams::finite(vec![1.0], vec![2.0]).unwrap();
        assert_eq!(decay_rate_estimate(&j).unwrap(), f64::INFINITY);
    }

    #[test]
    fn short_envelope_is_rejected() {
        let j = JacobiParams::new(vec![1.0; 4], vec![0.0; 4], Tail::Envelope { c: 1.0, r: 1.5 }).unwrap();
        assert!(matches!(decay_rate_estimate(&j), Err(Error::TooFewCoefficients { .. })));
    }
}
