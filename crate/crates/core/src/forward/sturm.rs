use crate::error::{Error, Result};
use crate::forward::JacobiParams;

fn sign_changes(values: impl Iterator<Item = f64>) -> usize {
    let mut last = 0.0f64;
    let mut count = 0;
    for v in values {
        if v == 0.0 {
            continue;
        }
        if last != 0.0 && v.signum() != last.signum() {
            count += 1;
        }
        last = v;
    }
    count
}

/// Eigenvalue counts `(above 2, below −2)` from sign changes of `pₙ(2)` and
/// `(−1)ⁿ pₙ(−2)`, `n = 0..=n_max`.
///
/// Exact zeros are skipped, so a zero counts as a flip only when its
/// neighbours disagree in sign. The counts are those of the
/// `n_max × n_max` truncation, which equal the counts of `J` once `n_max`
/// is far enough past the support for the eigenvectors to have decayed.
pub fn sturm_count(j: &JacobiParams, n_max: usize) -> Result<(usize, usize)> {
    if n_max < j.support() {
        return Err(Error::InvalidArgument(format!("n_max = {n_max} is below the support {}", j.support())));
    }
    let above = sign_changes(j.orthonormal_values(2.0, n_max).into_iter());
    let below = sign_changes(j.orthonormal_values(-2.0, n_max).into_iter().enumerate().map(|(n, p)| {
        if n % 2 == 0 {
            p
        } else {
            -p
        }
    }));
    Ok((above, below))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(sturm_count(&JacobiParams::free(), 20).unwrap(), (0, 0));
        let j = JacobiParams::finite(vec![1.0], vec![2.0]).unwrap();
        assert_eq!(sturm_count(&j, 20).unwrap(), (1, 0));
        let j = JacobiParams::finite(vec![5f64.sqrt()], vec![0.0]).unwrap();
        assert_eq!(sturm_count(&j, 20).unwrap(), (1, 1));
    }

    #[test]
    fn zero_skipped() {
        assert_eq!(sign_changes([1.0, 0.0, -1.0].into_iter()), 1);
        assert_eq!(sign_changes([1.0, 0.0, 1.0].into_iter()), 0);
    }

    #[test]
    fn n_max_below_support() {
        let j = JacobiParams::finite(vec![1.0, 1.0, 2.0], vec![0.0; 3]).unwrap();
        assert!(sturm_count(&j, 2).is_err());
    }
}
