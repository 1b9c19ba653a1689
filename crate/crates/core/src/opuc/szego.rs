use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::inverse::{ac_mass, jost_zeros};
use crate::numerics::{circle_points, coefficients_from_grid, seminorm_triple, CircleGrid, TaylorSeries};
use crate::opuc::schur::{caratheodory_from_schur, SchurEvaluator};
use crate::opuc::verblunsky::horner;

fn check_disk(z: Complex64) -> Result<()> {
    if z.norm() >= 1.0 {
        return Err(Error::Domain(z.to_string(), "need |z| < 1".into()));
    }
    Ok(())
}

fn log_weight_samples<W: Fn(f64) -> f64>(w: &W, n: usize) -> Result<Vec<f64>> {
    (0..n)
        .map(|k| {
            let theta = 2.0 * PI * k as f64 / n as f64;
            let v = w(theta);
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::Domain(format!("θ = {theta}"), format!("weight {v} must be positive")));
            }
            Ok(v.ln())
        })
        .collect()
}

/// Relative change between successive grids at which [`szego_function`]
/// stops refining.
const SZEGO_CONVERGENCE: f64 = 1e-14;
const MAX_SZEGO_POINTS: usize = 1 << 22;

/// `D(z) = exp(∫ (e^{iθ}+z)/(e^{iθ}−z) log w(θ) dθ/4π)` by the trapezoid
/// rule on the full circle.
///
/// Starts at `quad_points` nodes and doubles the grid, reusing the old
/// nodes, until the exponent changes by less than `1e−14` relative. Zeros of
/// the weight's analytic factors close to the circle need fine grids.
pub fn szego_function<W: Fn(f64) -> f64>(w: W, z: Complex64, quad_points: usize) -> Result<Complex64> {
    check_disk(z)?;
    if quad_points < 2 {
        return Err(Error::InvalidArgument(format!("need at least two nodes, got {quad_points}")));
    }
    let term = |theta: f64| -> Result<Complex64> {
        let v = w(theta);
        if !(v > 0.0 && v.is_finite()) {
            return Err(Error::Domain(format!("θ = {theta}"), format!("weight {v} must be positive")));
        }
        let e = Complex64::from_polar(1.0, theta);
        Ok((e + z) / (e - z) * v.ln())
    };
    let mut n = quad_points;
    let mut sum = (0..n).map(|k| term(2.0 * PI * k as f64 / n as f64)).sum::<Result<Complex64>>()?;
    let mut mean = sum / n as f64;
    loop {
        if 2 * n > MAX_SZEGO_POINTS {
            return Err(Error::InternalConsistency(format!(
                "Szegő integral at z = {z} not converged on {n} nodes"
            )));
        }
        sum += (0..n).map(|k| term(PI * (2 * k + 1) as f64 / n as f64)).sum::<Result<Complex64>>()?;
        n *= 2;
        let next = sum / n as f64;
        let done = (next - mean).norm() <= SZEGO_CONVERGENCE * next.norm().max(1.0);
        mean = next;
        if done {
            return Ok((0.5 * mean).exp());
        }
    }
}

/// Taylor coefficients `0..=max_k` of `D⁻¹`, from the Fourier coefficients
/// of `log w`: `log D = ĉ₀/2 + Σ_{m≥1} ĉ_m z^m`.
pub fn szego_inverse_coefficients<W: Fn(f64) -> f64>(
    w: W,
    quad_points: usize,
    max_k: usize,
) -> Result<Vec<Complex64>> {
    let logs = log_weight_samples(&w, quad_points)?;
    let values: Vec<Complex64> = logs.into_iter().map(|v| Complex64::new(v, 0.0)).collect();
    let grid = CircleGrid::from_values(1.0, values)?;
    let c = coefficients_from_grid(&grid, max_k)?;
    // h = −log D; D⁻¹ = exp(h) via n g_n = Σ_{k=1}^{n} k h_k g_{n−k}.
    let h: Vec<Complex64> = c.iter().enumerate().map(|(m, &v)| if m == 0 { -0.5 * v } else { -v }).collect();
    let mut g = vec![h[0].exp()];
    for n in 1..=max_k {
        let s: Complex64 = (1..=n).map(|k| k as f64 * h[k] * g[n - k]).sum();
        g.push(s / n as f64);
    }
    Ok(g)
}

/// `(δₙD)(z) = [(1 − ᾱₙ f⁽ⁿ⁾)/ρₙ]·[(1 − z f⁽ⁿ⁺¹⁾)/(1 − z f⁽ⁿ⁾)]`, which equals
/// `D⁽ⁿ⁾(z)/D⁽ⁿ⁺¹⁾(z)`.
pub fn relative_szego(
    alpha: Complex64,
    f_n: &SchurEvaluator,
    f_next: &SchurEvaluator,
    z: Complex64,
) -> Result<Complex64> {
    check_disk(z)?;
    let fz = f_n.eval(z);
    let den = 1.0 - z * fz;
    if den.norm() == 0.0 {
        return Err(Error::Pole(z.to_string()));
    }
    let rho = (1.0 - alpha.norm_sqr()).sqrt();
    Ok((1.0 - alpha.conj() * fz) / rho * (1.0 - z * f_next.eval(z)) / den)
}

/// The same quantity from the Carathéodory function alone:
/// `δₙD = M⁽ⁿ⁾/(2ρₙ z)` with `M⁽ⁿ⁾ = z(1 + αₙ)(F⁽ⁿ⁾ + 1) − (1 + ᾱₙ)(F⁽ⁿ⁾ − 1)`.
pub fn relative_szego_caratheodory(alpha: Complex64, big_f: Complex64, z: Complex64) -> Result<Complex64> {
    check_disk(z)?;
    if z == Complex64::default() {
        return Err(Error::Domain(z.to_string(), "z = 0 is a removable point".into()));
    }
    let rho = (1.0 - alpha.norm_sqr()).sqrt();
    let m = z * (1.0 + alpha) * (big_f + 1.0) - (1.0 + alpha.conj()) * (big_f - 1.0);
    Ok(m / (2.0 * rho * z))
}

/// Both evaluations of `δₙD` and their distance.
pub fn relative_szego_cross_check(
    alpha: Complex64,
    f_n: &SchurEvaluator,
    f_next: &SchurEvaluator,
    z: Complex64,
) -> Result<(Complex64, Complex64, f64)> {
    let direct = relative_szego(alpha, f_n, f_next, z)?;
    let via_f = relative_szego_caratheodory(alpha, caratheodory_from_schur(f_n, z)?, z)?;
    Ok((direct, via_f, (direct - via_f).norm()))
}

/// One update of `D⁻¹` on a circle `|z| = R > 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct DinvStep {
    pub grid: CircleGrid,
    /// `sup |A|` on the circle.
    pub sup_a: f64,
    pub seminorm_before: f64,
    pub seminorm_after: f64,
    /// `R⁻¹ · sup|A| · seminorm_before`.
    pub bound: f64,
}

/// `(D⁽ⁿ⁺¹⁾)⁻¹ = z⁻¹ A (D⁽ⁿ⁾)⁻¹ + B` on `|z| = R > 1`, with
///
/// ```text
/// A = [z(1 + α)(1 − F♯) + (1 + ᾱ)(1 + F♯)] / (2ρ)
/// B = D♯ · [(1 + α) − (1 + ᾱ)/z] / ρ
/// ```
///
/// where `g♯(z) = conj(g(1/z̄))`. `D♯` is read from the Taylor coefficients
/// of the input grid, `F♯` from the Schur evaluator of level `n`.
pub fn dinv_update(dinv: &CircleGrid, f_n: &SchurEvaluator, alpha: Complex64) -> Result<DinvStep> {
    let r = dinv.radius();
    if r <= 1.0 {
        return Err(Error::InvalidArgument(format!("grid radius {r} must exceed 1")));
    }
    let coeffs = coefficients_from_grid(dinv, dinv.size() / 2 - 1)?;
    let rho = (1.0 - alpha.norm_sqr()).sqrt();
    let (p, q) = (1.0 + alpha, 1.0 + alpha.conj());
    let mut sup_a = 0.0f64;
    let mut values = Vec::with_capacity(dinv.size());
    for (z, &v) in dinv.points().into_iter().zip(dinv.values()) {
        let inner = z.conj().inv();
        let d_sharp = horner(&coeffs, inner).inv().conj();
        let f_sharp = caratheodory_from_schur(f_n, inner)?.conj();
        let a = (z * p * (1.0 - f_sharp) + q * (1.0 + f_sharp)) / (2.0 * rho);
        let b = d_sharp * (p - q / z) / rho;
        sup_a = sup_a.max(a.norm());
        values.push(a * v / z + b);
    }
    let grid = CircleGrid::from_values(r, values)?;
    let seminorm_before = seminorm_triple(dinv);
    let seminorm_after = seminorm_triple(&grid);
    Ok(DinvStep { grid, sup_a, seminorm_before, seminorm_after, bound: sup_a / r * seminorm_before })
}

/// Constant in `D⁻¹ = c·u/(1 − z²)` relating a Jost function with
/// `u(±1) = 0` to the Szegő function of its image measure on the circle.
pub const SZ_CONSTANT: f64 = std::f64::consts::SQRT_2;

/// Weight (in `dθ/2π`) of the circle measure whose even pushforward under
/// `θ ↦ 2cos θ` is the a.c. measure of `u`: `w(θ) = 2 sin²θ / |u(e^{iθ})|²`.
pub fn sz_image_weight(u: &TaylorSeries) -> impl Fn(f64) -> f64 + Send + Sync {
    let u = u.clone();
    let du = u.derivative();
    move |theta| {
        let s = theta.sin();
        if s.abs() < 1e-12 {
            let d = du.eval_real(theta.cos().signum());
            return 2.0 / (d * d);
        }
        2.0 * s * s / u.eval(Complex64::from_polar(1.0, theta)).norm_sqr()
    }
}

/// Points on `|z| = 1/2` used by [`szego_map_identity_check`].
const SZ_GRID: usize = 64;
const SZ_THETA_POINTS: usize = 512;

/// `u` rescaled to unit mass, after checking `u(±1) = 0` and that `u` has
/// no zeros in the disk.
fn sz_normalized(u: &TaylorSeries) -> Result<TaylorSeries> {
    let scale = u.majorant(1.0);
    for x in [1.0, -1.0] {
        if u.eval_real(x).abs() > 1e-10 * scale {
            return Err(Error::Inapplicable(format!("u({x}) = {} is not zero", u.eval_real(x))));
        }
    }
    if !jost_zeros(u, 1e-12)?.is_empty() {
        return Err(Error::Inapplicable("u has zeros inside the disk".into()));
    }
    Ok(u.scale(ac_mass(u, SZ_THETA_POINTS)?.sqrt()))
}

/// `(D⁻¹(z), u(z)/(1 − z²))` on `|z| = 1/2`, with `u` at unit mass.
fn sz_samples(u: &TaylorSeries, dinv: &TaylorSeries) -> Result<Vec<(Complex64, Complex64)>> {
    let u = sz_normalized(u)?;
    Ok(circle_points(0.5, SZ_GRID).into_iter().map(|z| (dinv.eval(z), u.eval(z) / (1.0 - z * z))).collect())
}

fn sup_deviation(samples: &[(Complex64, Complex64)], c: f64) -> f64 {
    samples.iter().map(|(d, g)| (d - c * g).norm()).fold(0.0, f64::max)
}

/// `sup_{|z| = 1/2} |D⁻¹(z) − √2·u(z)/(1 − z²)|` with `u` first rescaled to
/// unit mass. Needs `u(±1) = 0` and no zeros of `u` in the disk.
pub fn szego_map_identity_check(u: &TaylorSeries, dinv: &TaylorSeries) -> Result<f64> {
    Ok(sup_deviation(&sz_samples(u, dinv)?, SZ_CONSTANT))
}

/// Least-squares constant `c` in `D⁻¹ ≈ c·u/(1 − z²)` on `|z| = 1/2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SzFit {
    pub constant: f64,
    /// Sup deviation at the fitted constant.
    pub deviation: f64,
    /// Sup deviation at [`SZ_CONSTANT`].
    pub deviation_at_default: f64,
}

/// Fits the constant relating `D⁻¹` to `u/(1 − z²)` instead of assuming
/// [`SZ_CONSTANT`]. Same preconditions as [`szego_map_identity_check`].
pub fn szego_map_best_fit(u: &TaylorSeries, dinv: &TaylorSeries) -> Result<SzFit> {
    let samples = sz_samples(u, dinv)?;
    let num: f64 = samples.iter().map(|(d, g)| (g.conj() * d).re).sum();
    let den: f64 = samples.iter().map(|(_, g)| g.norm_sqr()).sum();
    if !(den > 0.0) {
        return Err(Error::Inapplicable("u vanishes on |z| = 1/2".into()));
    }
    let constant = num / den;
    Ok(SzFit {
        constant,
        deviation: sup_deviation(&samples, constant),
        deviation_at_default: sup_deviation(&samples, SZ_CONSTANT),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::opuc::{bernstein_szego_weight, VerblunskySeq};

    fn c(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn constant_weight() {
        let d = szego_function(|_| 1.0, c(0.3), 64).unwrap();
        assert!((d - c(1.0)).norm() < 1e-15);
    }

    #[test]
    fn bernstein_szego_single_alpha() {
        let rho = 0.75f64.sqrt();
        let w = bernstein_szego_weight(&VerblunskySeq::real(&[0.5]).unwrap());
        for z in [c(0.0), c(0.4), Complex64::new(-0.2, 0.5)] {
            let d = szego_function(&w, z, 512).unwrap();
            assert!((d - rho / (1.0 - z / 2.0)).norm() < 1e-13);
        }
        let g = szego_inverse_coefficients(&w, 512, 4).unwrap();
        assert!((g[0] - c(1.0 / rho)).norm() < 1e-13);
        assert!((g[1] - c(-0.5 / rho)).norm() < 1e-13);
        assert!(g[2].norm() < 1e-13);
    }

    #[test]
    fn reciprocal_weight_inverts_d() {
        let w = bernstein_szego_weight(&VerblunskySeq::real(&[0.5]).unwrap());
        let z = c(0.35);
        let d = szego_function(&w, z, 512).unwrap();
        let d_inv = szego_function(|t| 1.0 / w(t), z, 512).unwrap();
        assert!((d * d_inv - c(1.0)).norm() < 1e-13);
    }

    #[test]
    fn rejects_nonpositive_weight() {
        assert!(matches!(szego_function(|_| 0.0, c(0.1), 16), Err(Error::Domain(..))));
    }

    #[test]
    fn free_relative_szego_is_one() {
        let f = SchurEvaluator::zero(0);
        assert_eq!(relative_szego(c(0.0), &f, &f, c(0.4)).unwrap(), c(1.0));
    }

    #[test]
    fn two_formulas_agree() {
        let a = VerblunskySeq::real(&[0.5]).unwrap();
        let f0 = SchurEvaluator::of_sequence(&a, 0);
        let f1 = SchurEvaluator::of_sequence(&a, 1);
        let (x, y, dev) = relative_szego_cross_check(a.alpha(0), &f0, &f1, c(0.3)).unwrap();
        assert!(dev < 1e-13, "{x} vs {y}");
        assert!((x - 0.75f64.sqrt() / (1.0 - 0.15)).norm() < 1e-14);
    }

    #[test]
    fn bernstein_szego_update_frees() {
        let a = VerblunskySeq::real(&[0.5]).unwrap();
        let rho = a.rho(0);
        let grid = CircleGrid::sample(1.2, 64, |z| (1.0 - z / 2.0) / rho).unwrap();
        let step = dinv_update(&grid, &SchurEvaluator::of_sequence(&a, 0), a.alpha(0)).unwrap();
        assert!(step.grid.values().iter().all(|v| (v - c(1.0)).norm() < 1e-10));
        assert!(step.seminorm_after <= step.bound + 1e-10);
    }

    #[test]
    fn free_update_is_fixed_point() {
        let grid = CircleGrid::sample(1.5, 32, |_| c(1.0)).unwrap();
        let step = dinv_update(&grid, &SchurEvaluator::zero(0), c(0.0)).unwrap();
        assert!((step.sup_a - 1.0).abs() < 1e-15);
        assert!(step.grid.values().iter().all(|v| (v - c(1.0)).norm() < 1e-15));
    }

    #[test]
    fn sz_identity_for_root_two() {
        let u = TaylorSeries::polynomial(vec![0.5f64.sqrt(), 0.0, -(0.5f64.sqrt())]);
        let w = sz_image_weight(&u);
        let g = szego_inverse_coefficients(&w, 512, 8).unwrap();
        let dinv = TaylorSeries::polynomial(g.iter().map(|v| v.re).collect());
        assert!(szego_map_identity_check(&u, &dinv).unwrap() < 1e-12);
        let dev_scaled = szego_map_identity_check(&u.scale(3.0), &dinv).unwrap();
        assert!(dev_scaled < 1e-12);
        let fit = szego_map_best_fit(&u, &dinv).unwrap();
        assert!((fit.constant - SZ_CONSTANT).abs() < 1e-12);
        assert!(fit.deviation < 1e-12 && fit.deviation_at_default < 1e-12);
    }

    #[test]
    fn sz_identity_needs_boundary_zeros() {
        let u = TaylorSeries::polynomial(vec![1.0, -0.5]);
        assert!(matches!(
            szego_map_identity_check(&u, &TaylorSeries::constant(1.0)),
            Err(Error::Inapplicable(_))
        ));
    }
}
