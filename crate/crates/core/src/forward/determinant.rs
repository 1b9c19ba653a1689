use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::forward::{JacobiParams, Tail};

/// `L(z) = det(1 + (J − J₀)(J₀ − z − 1/z)⁻¹)` for finitely supported `J`.
///
/// `J − J₀` lives on the `(K+1) × (K+1)` leading block, and on that block
/// the free resolvent is `(z^{|n−m|} − z^{n+m})/(z − 1/z)`. The result is an
/// independent evaluation of `u(z)/u(0)`.
pub fn perturbation_determinant(j: &JacobiParams, z: Complex64) -> Result<Complex64> {
    if j.tail() != Tail::Free {
        return Err(Error::InvalidArgument("determinant needs a free tail".into()));
    }
    let r = z.norm();
    if r == 0.0 || r >= 1.0 {
        return Err(Error::Domain(z.to_string(), "need 0 < |z| < 1".into()));
    }
    let k = j.support();
    if k == 0 {
        return Ok(Complex64::new(1.0, 0.0));
    }
    let size = k + 1;
    let wr = z - z.inv();
    let green = DMatrix::from_fn(size, size, |n, m| {
        let (n, m) = (n as i32 + 1, m as i32 + 1);
        (z.powi((n - m).abs()) - z.powi(n + m)) / wr
    });
    let pert = DMatrix::from_fn(size, size, |n, m| {
        let (n, m) = (n + 1, m + 1);
        let v = if n == m {
            j.b(n)
        } else if n + 1 == m {
            j.a(n) - 1.0
        } else if m + 1 == n {
            j.a(m) - 1.0
        } else {
            0.0
        };
        Complex64::new(v, 0.0)
    });
    let mat = DMatrix::<Complex64>::identity(size, size) + pert * green;
    Ok(mat.determinant())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cz(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn free_determinant_is_one() {
        let l = perturbation_determinant(&JacobiParams::free(), Complex64::new(0.2, 0.3)).unwrap();
        assert_eq!(l, cz(1.0));
    }

    #[test]
    fn single_site() {
        let j = JacobiParams::finite(vec![1.0], vec![2.0]).unwrap();
        let l = perturbation_determinant(&j, cz(0.25)).unwrap();
        assert!((l - cz(0.5)).norm() < 1e-14);
    }

    #[test]
    fn off_diagonal_perturbation() {
        let j = JacobiParams::finite(vec![5f64.sqrt()], vec![0.0]).unwrap();
        let l = perturbation_determinant(&j, cz(0.3)).unwrap();
        assert!((l - cz(0.64)).norm() < 1e-12);
    }

    #[test]
    fn domain_errors() {
        let j = JacobiParams::finite(vec![1.0], vec![2.0]).unwrap();
        for z in [cz(0.0), cz(1.0), cz(-1.0), cz(1.5)] {
            assert!(matches!(perturbation_determinant(&j, z), Err(Error::Domain(..))));
        }
    }
}
