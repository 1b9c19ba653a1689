use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::forward::gc::jost_function;
use crate::forward::{JacobiParams, Tail};

fn check_region(j: &JacobiParams, z: Complex64) -> Result<()> {
    if let Tail::Envelope { r, .. } = j.tail() {
        if z.norm() >= r {
            return Err(Error::Domain(z.to_string(), format!("outside the envelope disk |z| < {r}")));
        }
    }
    Ok(())
}

/// `u(z; J)`, the Jost function evaluated at `z`.
pub fn jost_value(j: &JacobiParams, z: Complex64) -> Result<Complex64> {
    check_region(j, z)?;
    Ok(jost_function(j).eval(z))
}

/// Jost solution `uₙ(z) = aₙ⁻¹ zⁿ u(z; J⁽ⁿ⁾)` with `a₀ = 1`.
///
/// Solves `aₙ u_{n+1} + (bₙ − z − 1/z) uₙ + a_{n−1} u_{n−1} = 0` for `n ≥ 1`
/// and behaves like `zⁿ` as `n → ∞`.
pub fn jost_solution(j: &JacobiParams, n: usize, z: Complex64) -> Result<Complex64> {
    check_region(j, z)?;
    let shifted = j.shifted(n);
    let tail = jost_function(&shifted).eval(z);
    Ok(z.powi(n as i32) * tail / j.a(n))
}

/// `u₀(z), …, u_{n_max}(z)`.
pub fn jost_solution_sequence(j: &JacobiParams, z: Complex64, n_max: usize) -> Result<Vec<Complex64>> {
    (0..=n_max).map(|n| jost_solution(j, n, z)).collect()
}

/// `fₙ = p_{n−1}(z + 1/z)` for `n = 0..=n_max` (so `f₀ = 0`, `f₁ = 1`).
pub fn polynomial_solution(j: &JacobiParams, z: Complex64, n_max: usize) -> Vec<Complex64> {
    let e = z + z.inv();
    let mut f = Vec::with_capacity(n_max + 1);
    f.push(Complex64::new(0.0, 0.0));
    if n_max == 0 {
        return f;
    }
    f.push(Complex64::new(1.0, 0.0));
    for n in 1..n_max {
        let next = ((e - j.b(n)) * f[n] - j.a(n - 1) * f[n - 1]) / j.a(n);
        f.push(next);
    }
    f
}

/// `W(f, k)(n) = aₙ (f_{n+1} kₙ − fₙ k_{n+1})`; sequences are indexed from 0.
pub fn wronskian(f: &[Complex64], k: &[Complex64], j: &JacobiParams, n: usize) -> Result<Complex64> {
    if n + 1 >= f.len() || n + 1 >= k.len() {
        return Err(Error::InvalidArgument(format!(
            "sequences of length {} and {} do not reach index {}",
            f.len(),
            k.len(),
            n + 1
        )));
    }
    Ok(j.a(n) * (f[n + 1] * k[n] - f[n] * k[n + 1]))
}

/// `max_θ |Im(u₁(e^{iθ}) · conj(u₀(e^{iθ}))) − sin θ|`.
pub fn boundary_identity_check(j: &JacobiParams, thetas: &[f64]) -> Result<f64> {
    let u0 = jost_function(j);
    let u1 = jost_function(&j.shifted(1));
    let a1 = j.a(1);
    Ok(thetas
        .iter()
        .map(|&t| {
            let z = Complex64::from_polar(1.0, t);
            let first = z * u1.eval(z) / a1;
            ((first * u0.eval(z).conj()).im - t.sin()).abs()
        })
        .fold(0.0, f64::max))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cz(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn free_jost_solution_is_power() {
        let z = cz(0.3, 0.4);
        for n in 0..6 {
            let v = jost_solution(&JacobiParams::free(), n, z).unwrap();
            assert!((v - z.powi(n as i32)).norm() < 1e-15);
        }
    }

    #[test]
    fn shift_kills_single_site_perturbation() {
        let j = JacobiParams::finite(vec![1.0], vec![2.0]).unwrap();
        let z = cz(0.25, 0.1);
        assert!((jost_solution(&j, 0, z).unwrap() - (1.0 - 2.0 * z)).norm() < 1e-15);
        for n in 1..5 {
            assert!((jost_solution(&j, n, z).unwrap() - z.powi(n as i32)).norm() < 1e-15);
        }
    }

    #[test]
    fn difference_equation_residual() {
        let j = JacobiParams::finite(vec![1.4, 0.7, 1.1], vec![0.3, -0.5, 0.9]).unwrap();
        let z = cz(0.0, 0.3);
        let u = jost_solution_sequence(&j, z, 8).unwrap();
        for n in 1..8 {
            let r = j.a(n) * u[n + 1] + (j.b(n) - z - z.inv()) * u[n] + j.a(n - 1) * u[n - 1];
            assert!(r.norm() < 1e-12, "n = {n}: {r}");
        }
    }

    #[test]
    fn wronskian_examples() {
        let j0 = JacobiParams::free();
        let z = cz(0.4, -0.2);
        let f: Vec<_> = (0..5).map(|n| z.powi(n)).collect();
        assert!(wronskian(&f, &f, &j0, 2).unwrap().norm() == 0.0);
        let k: Vec<_> = (0..5).map(|n| z.powi(-n)).collect();
        for n in 0..4 {
            let w = wronskian(&f, &k, &j0, n).unwrap();
            assert!((w - (z - z.inv())).norm() < 1e-13);
        }

        let j = JacobiParams::finite(vec![1.0], vec![2.0]).unwrap();
        let z = cz(0.25, 0.0);
        let p = polynomial_solution(&j, z, 4);
        let u = jost_solution_sequence(&j, z, 4).unwrap();
        let w = wronskian(&p, &u, &j, 1).unwrap();
        assert!((w - cz(0.5, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn boundary_identity_examples() {
        let thetas: Vec<f64> = (0..64).map(|k| std::f64::consts::PI * k as f64 / 64.0).collect();
        for j in [
            JacobiParams::free(),
            JacobiParams::finite(vec![1.0], vec![0.5]).unwrap(),
            JacobiParams::finite(vec![5f64.sqrt()], vec![0.0]).unwrap(),
        ] {
            assert!(boundary_identity_check(&j, &thetas).unwrap() < 1e-12);
        }
    }
}
