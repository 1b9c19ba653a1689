use std::f64::consts::PI;

use num_complex::Complex64;
use rustfft::FftPlanner;

use crate::error::{Error, Result};
use crate::forward::{bound_states, jost_function, BoundState, JacobiParams};
use crate::numerics::{find_real_zeros, trapezoid_nodes, TaylorSeries, ToleranceConfig};

/// Largest total-mass defect accepted as a normalized measure.
pub const MASS_TOL: f64 = 1e-10;

/// Two nested trapezoid rules agreeing to this many units of mass are
/// taken as converged.
const QUAD_CONVERGENCE: f64 = 1e-13;

/// Upper limit for adaptive refinement of the `θ` grid.
const MAX_QUAD_POINTS: usize = 1 << 18;

/// Zeros and states closer than this to `±1` or `0` are not searched for.
const EDGE: f64 = 1e-9;

/// A Jost function together with its bound states: the spectral side of
/// the correspondence.
///
/// The spectral measure is
/// `dγ = Σ wⱼ δ_{Eⱼ} + f(E) dE` with `f(2 cos θ) = sin θ / (π |u(e^{iθ})|²)`,
/// so validity requires `Σ wⱼ + (2/π) ∫₀^π sin²θ / |u(e^{iθ})|² dθ = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralData {
    u: TaylorSeries,
    states: Vec<BoundState>,
}

impl SpectralData {
    /// Checks that the states are exactly the zeros of `u` in `(−1, 1) \ {0}`
    /// (to within `1e3 · root_tol`) and carry positive weights.
    pub fn new(u: TaylorSeries, states: Vec<BoundState>) -> Result<Self> {
        Self::with_root_tol(u, states, ToleranceConfig::default().root_tol)
    }

    pub fn with_root_tol(u: TaylorSeries, mut states: Vec<BoundState>, root_tol: f64) -> Result<Self> {
        if u.coeffs()[0] == 0.0 {
            return Err(Error::InvalidSpectralData("u(0) must be nonzero".into()));
        }
        for s in &states {
            if !(s.weight > 0.0 && s.weight.is_finite()) {
                return Err(Error::InvalidSpectralData(format!(
                    "weight {} at z = {} must be positive",
                    s.weight, s.z
                )));
            }
            if !(s.z.abs() < 1.0 && s.z != 0.0) {
                return Err(Error::InvalidSpectralData(format!(
                    "bound state z = {} outside (−1, 1) \\ {{0}}",
                    s.z
                )));
            }
        }
        states.sort_by(|a, b| a.z.total_cmp(&b.z));
        let zeros = interior_zeros(&u, root_tol)?;
        let match_tol = 1e3 * root_tol;
        let matched = zeros.len() == states.len()
            && zeros.iter().zip(&states).all(|(z, s)| (z - s.z).abs() <= match_tol);
        if !matched {
            return Err(Error::InvalidSpectralData(format!(
                "bound states {:?} do not match the zeros {:?} of u in (−1, 1)",
                states.iter().map(|s| s.z).collect::<Vec<_>>(),
                zeros
            )));
        }
        Ok(Self { u, states })
    }

    /// Spectral data of a Jacobi matrix: its Jost function and bound states.
    pub fn from_jacobi(j: &JacobiParams) -> Result<Self> {
        let u = jost_function(j);
        let states = bound_states(j)?;
        Ok(Self { u, states })
    }

    /// Builds data without the zero/state correspondence check.
    pub(crate) fn unchecked(u: TaylorSeries, states: Vec<BoundState>) -> Self {
        Self { u, states }
    }

    pub fn u(&self) -> &TaylorSeries {
        &self.u
    }

    pub fn states(&self) -> &[BoundState] {
        &self.states
    }

    /// Replaces `u` by `c·u` and rescales every weight by one common factor
    /// so that the total mass stays 1. The associated Jacobi parameters are
    /// unchanged when the original data were normalized.
    pub fn rescaled(&self, c: f64, theta_points: usize) -> Result<Self> {
        if !(c > 0.0 && c.is_finite()) {
            return Err(Error::InvalidArgument(format!("scale {c} must be positive")));
        }
        let u = self.u.scale(c);
        let ac = ac_mass(&u, theta_points)?;
        let states = if self.states.is_empty() {
            Vec::new()
        } else {
            let total: f64 = self.states.iter().map(|s| s.weight).sum();
            let factor = (1.0 - ac) / total;
            if !(factor > 0.0) {
                return Err(Error::InvalidSpectralData(format!(
                    "scale {c} leaves no room for positive weights"
                )));
            }
            self.states
                .iter()
                .map(|s| BoundState::from_weight(s.z, s.weight * factor))
                .collect::<Result<Vec<_>>>()?
        };
        Ok(Self { u, states })
    }
}

fn interior_zeros(u: &TaylorSeries, root_tol: f64) -> Result<Vec<f64>> {
    Ok(find_real_zeros(u, (-1.0 + EDGE, 1.0 - EDGE), root_tol)?
        .into_iter()
        .filter(|z| z.abs() > EDGE)
        .collect())
}

/// Zeros of `u` in `(−1, 1) \ {0}`.
pub fn jost_zeros(u: &TaylorSeries, root_tol: f64) -> Result<Vec<f64>> {
    interior_zeros(u, root_tol)
}

/// `sin²θ / |u(e^{iθ})|²` at the endpoint `θ ∈ {0, π}`: zero unless `u`
/// vanishes there, in which case the limit is `1/u'(±1)²`.
fn edge_ratio(u: &TaylorSeries, x: f64) -> Result<f64> {
    let v = u.eval_real(x);
    if v.abs() > 1e-12 * u.majorant(1.0) {
        return Ok(0.0);
    }
    let d = u.derivative().eval_real(x);
    if d == 0.0 {
        return Err(Error::InvalidSpectralData(format!("u has a multiple zero at z = {x}")));
    }
    Ok(1.0 / (d * d))
}

/// `sin²θ_k / |u(e^{iθ_k})|²` on the `n`-point trapezoid grid of `[0, π]`.
/// The circle values come from one FFT of the folded coefficients.
fn ac_ratios(u: &TaylorSeries, n: usize) -> Result<Vec<f64>> {
    let len = 2 * (n - 1);
    let mut buf = vec![Complex64::new(0.0, 0.0); len];
    for (j, &c) in u.coeffs().iter().enumerate() {
        buf[j % len].re += c;
    }
    FftPlanner::new().plan_fft_inverse(len).process(&mut buf);
    let h = PI / (n - 1) as f64;
    let mut out = Vec::with_capacity(n);
    out.push(edge_ratio(u, 1.0)?);
    for (k, v) in buf.iter().enumerate().take(n - 1).skip(1) {
        let v = v.norm_sqr();
        if v == 0.0 {
            return Err(Error::InvalidSpectralData(format!(
                "u vanishes on the unit circle at θ = {}",
                k as f64 * h
            )));
        }
        out.push((k as f64 * h).sin().powi(2) / v);
    }
    out.push(edge_ratio(u, -1.0)?);
    Ok(out)
}

/// Trapezoid samples of `2 sin²θ / (π |u|²)` on `[0, π]` with `n` points:
/// nodes, quadrature masses.
fn ac_samples(u: &TaylorSeries, n: usize) -> Result<(Vec<f64>, Vec<f64>)> {
    let (nodes, weights) = trapezoid_nodes(n);
    let masses = ac_ratios(u, n)?.iter().zip(&weights).map(|(r, w)| w * 2.0 / PI * r).collect();
    Ok((nodes, masses))
}

/// Smallest `n ≥ min_points` of the form `2^j + 1` at which the a.c. mass
/// has converged under halving of the step.
fn converged_points(u: &TaylorSeries, min_points: usize) -> Result<usize> {
    let mut n = (min_points.max(3) - 1).next_power_of_two() + 1;
    let mut prev: f64 = ac_samples(u, n)?.1.iter().sum();
    loop {
        let next_n = 2 * n - 1;
        if next_n > MAX_QUAD_POINTS {
            return Ok(n);
        }
        let next: f64 = ac_samples(u, next_n)?.1.iter().sum();
        if (next - prev).abs() <= QUAD_CONVERGENCE * next.abs().max(1.0) {
            return Ok(n);
        }
        n = next_n;
        prev = next;
    }
}

/// `(2/π) ∫₀^π sin²θ / |u(e^{iθ})|² dθ`.
pub fn ac_mass(u: &TaylorSeries, theta_points: usize) -> Result<f64> {
    let n = converged_points(u, theta_points)?;
    Ok(ac_samples(u, n)?.1.iter().sum())
}

/// The spectral measure on a `θ` grid plus its point masses.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledMeasure {
    /// `θ_k ∈ [0, π]`.
    pub thetas: Vec<f64>,
    /// `f(2 cos θ_k)`.
    pub density: Vec<f64>,
    /// Quadrature mass carried by node `k` (in `dE`).
    pub masses: Vec<f64>,
    /// `(Eⱼ, wⱼ)`.
    pub point_masses: Vec<(f64, f64)>,
    pub ac_mass: f64,
    pub total_mass: f64,
}

/// Samples the spectral measure. The `θ` grid starts at `theta_points` and
/// is refined until the absolutely continuous mass has converged.
pub fn measure_from_jost(data: &SpectralData, theta_points: usize) -> Result<SampledMeasure> {
    let m = sample_measure(data, theta_points)?;
    if (m.total_mass - 1.0).abs() > MASS_TOL {
        return Err(Error::InvalidSpectralData(format!("total mass {} differs from 1", m.total_mass)));
    }
    Ok(m)
}

pub(crate) fn sample_measure(data: &SpectralData, theta_points: usize) -> Result<SampledMeasure> {
    let n = converged_points(&data.u, theta_points)?;
    let ratios = ac_ratios(&data.u, n)?;
    let (thetas, weights) = trapezoid_nodes(n);
    let masses: Vec<f64> = ratios.iter().zip(&weights).map(|(r, w)| w * 2.0 / PI * r).collect();
    let density = thetas
        .iter()
        .zip(&ratios)
        .enumerate()
        .map(|(k, (&t, &r))| match (k == 0 || k == n - 1, r == 0.0) {
            (true, true) => 0.0,
            (true, false) => f64::INFINITY,
            _ => r / (PI * t.sin()),
        })
        .collect();
    let ac_mass: f64 = masses.iter().sum();
    let point_masses: Vec<(f64, f64)> = data.states.iter().map(|s| (s.energy, s.weight)).collect();
    let total_mass = ac_mass + point_masses.iter().map(|p| p.1).sum::<f64>();
    Ok(SampledMeasure { thetas, density, masses, point_masses, ac_mass, total_mass })
}

/// `|Σ wⱼ + (2/π) ∫₀^π sin²θ / |u(e^{iθ})|² dθ − 1|`.
pub fn normalization_check(data: &SpectralData, theta_points: usize) -> Result<f64> {
    let m = sample_measure(data, theta_points)?;
    Ok((m.total_mass - 1.0).abs())
}

/// `M(z) = ∫ dγ(x) / (z + 1/z − x)` on the open unit disk, from a sampled
/// measure.
#[derive(Debug, Clone)]
pub struct MEvaluator {
    nodes: Vec<f64>,
    masses: Vec<f64>,
    /// Taylor coefficients of the a.c. part: `Σ_k μ_k U_n(x_k/2)` multiplies
    /// `z^{n+1}`.
    taylor: Vec<f64>,
    states: Vec<BoundState>,
}

/// Inside this radius the a.c. part is summed from its Taylor series.
const SERIES_RADIUS: f64 = 0.9;
/// Enough terms that `0.9^n/(1 − 0.9)` drops below `1e−17`.
const SERIES_TERMS: usize = 400;

impl MEvaluator {
    pub fn new(data: &SpectralData, theta_points: usize) -> Result<Self> {
        Ok(Self::from_measure(&sample_measure(data, theta_points)?, data.states()))
    }

    fn from_measure(m: &SampledMeasure, states: &[BoundState]) -> Self {
        let mut nodes = Vec::with_capacity(m.thetas.len());
        let mut masses = Vec::with_capacity(m.thetas.len());
        for (&t, &w) in m.thetas.iter().zip(&m.masses) {
            if w != 0.0 {
                nodes.push(2.0 * t.cos());
                masses.push(w);
            }
        }
        let taylor = chebyshev_moments(&m.masses, SERIES_TERMS);
        Self { nodes, masses, taylor, states: states.to_vec() }
    }

    fn check(&self, z: Complex64) -> Result<()> {
        let r = z.norm();
        if r == 0.0 || r >= 1.0 {
            return Err(Error::Domain(z.to_string(), "need 0 < |z| < 1".into()));
        }
        if self.states.iter().any(|s| (z - s.z).norm() < 1e-13) {
            return Err(Error::Pole(z.to_string()));
        }
        Ok(())
    }

    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        self.check(z)?;
        let e = z + z.inv();
        let ac: Complex64 = if z.norm() <= SERIES_RADIUS {
            self.taylor.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c) * z
        } else {
            self.nodes.iter().zip(&self.masses).map(|(&x, &w)| w / (e - x)).sum()
        };
        let pp: Complex64 = self.states.iter().map(|s| s.weight / (e - s.energy)).sum();
        Ok(ac + pp)
    }

    /// `(M(z), M'(z))`.
    pub fn eval_with_derivative(&self, z: Complex64) -> Result<(Complex64, Complex64)> {
        self.check(z)?;
        let e = z + z.inv();
        let de = 1.0 - (z * z).inv();
        let mut m = Complex64::new(0.0, 0.0);
        let mut dm = Complex64::new(0.0, 0.0);
        let terms = self
            .nodes
            .iter()
            .zip(&self.masses)
            .map(|(&x, &w)| (x, w))
            .chain(self.states.iter().map(|s| (s.energy, s.weight)));
        for (x, w) in terms {
            let inv = (e - x).inv();
            m += w * inv;
            dm -= w * inv * inv;
        }
        Ok((m, dm * de))
    }

    pub fn states(&self) -> &[BoundState] {
        &self.states
    }
}

/// `Σ_k μ_k U_n(cos θ_k)` for `n < count` on the uniform trapezoid grid,
/// with `U_n` the Chebyshev polynomials of the second kind, using
/// `1/(z + 1/z − 2cos θ) = Σ U_n(cos θ) z^{n+1}` and
/// `U_n(cos θ) = sin((n+1)θ)/sin θ`. The interior sum is one FFT.
fn chebyshev_moments(masses: &[f64], count: usize) -> Vec<f64> {
    let n = masses.len();
    let len = 2 * (n - 1);
    let h = PI / (n - 1) as f64;
    let mut buf = vec![Complex64::new(0.0, 0.0); len];
    for k in 1..n - 1 {
        buf[k] = Complex64::new(masses[k] / (k as f64 * h).sin(), 0.0);
    }
    FftPlanner::new().plan_fft_forward(len).process(&mut buf);
    (0..count)
        .map(|m| {
            let deg = (m + 1) as f64;
            let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
            -buf[(m + 1) % len].im + deg * (masses[0] + sign * masses[n - 1])
        })
        .collect()
}

/// `M(z)` for `z` in the open unit disk.
pub fn m_evaluate(data: &SpectralData, z: Complex64, theta_points: usize) -> Result<Complex64> {
    MEvaluator::new(data, theta_points)?.eval(z)
}

/// Meromorphic continuation of `M` to `1 < |z| < radius(u)`:
/// `M(z) = M(1/z) + (z − 1/z) / (u(z) u(1/z))` (real coefficients make
/// `g♯(z) = conj g(1/z̄)` the same as `g(1/z)`).
pub fn m_reflection_extend(data: &SpectralData, z: Complex64, theta_points: usize) -> Result<Complex64> {
    MEvaluator::new(data, theta_points).and_then(|m| reflect(&m, data.u(), z))
}

pub(crate) fn reflect(m: &MEvaluator, u: &TaylorSeries, z: Complex64) -> Result<Complex64> {
    let r = z.norm();
    if !(r > 1.0) || r >= u.radius() {
        return Err(Error::Domain(z.to_string(), format!("need 1 < |z| < {}", u.radius())));
    }
    let zi = z.inv();
    let den = u.eval(z) * u.eval(zi);
    if den.norm() == 0.0 {
        return Err(Error::Pole(z.to_string()));
    }
    Ok(m.eval(zi)? + (z - zi) / den)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn single_site(w: f64) -> SpectralData {
        let u = TaylorSeries::polynomial(vec![1.0, -2.0]);
        SpectralData::new(u, vec![BoundState::from_weight(0.5, w).unwrap()]).unwrap()
    }

    #[test]
    fn free_measure() {
        let d = SpectralData::new(TaylorSeries::constant(1.0), vec![]).unwrap();
        let m = measure_from_jost(&d, 64).unwrap();
        for (t, f) in m.thetas.iter().zip(&m.density) {
            assert!((f - t.sin() / PI).abs() < 1e-15);
        }
        assert!((m.total_mass - 1.0).abs() < 1e-12);
        assert!(normalization_check(&d, 64).unwrap() < 1e-12);
    }

    #[test]
    fn single_site_masses() {
        let d = single_site(0.75);
        let m = measure_from_jost(&d, 512).unwrap();
        assert!((m.ac_mass - 0.25).abs() < 1e-12);
        assert!(normalization_check(&d, 512).unwrap() < 1e-10);
        assert!((normalization_check(&single_site(0.8), 512).unwrap() - 0.05).abs() < 1e-12);
        assert!(matches!(measure_from_jost(&single_site(0.8), 512), Err(Error::InvalidSpectralData(_))));
    }

    #[test]
    fn mismatched_states_rejected() {
        let u = TaylorSeries::polynomial(vec![1.0, -2.0]);
        assert!(SpectralData::new(u.clone(), vec![]).is_err());
        let s = BoundState::from_weight(0.4, 0.75).unwrap();
        assert!(SpectralData::new(u, vec![s]).is_err());
    }

    #[test]
    fn m_values() {
        let free = SpectralData::new(TaylorSeries::constant(1.0), vec![]).unwrap();
        let z = Complex64::new(0.3, 0.0);
        assert!((m_evaluate(&free, z, 512).unwrap() - z).norm() < 1e-12);

        let d = single_site(0.75);
        let v = m_evaluate(&d, Complex64::new(0.25, 0.0), 512).unwrap();
        assert!((v - 0.5).norm() < 1e-10);

        // (z_j − z) M(z) → w̃ = 1/4 as z → 1/2.
        let m = MEvaluator::new(&d, 512).unwrap();
        let h = 1e-5;
        let r = (-h * m.eval(Complex64::new(0.5 + h, 0.0)).unwrap().re
            + h * m.eval(Complex64::new(0.5 - h, 0.0)).unwrap().re)
            / 2.0;
        assert!((r - 0.25).abs() < 1e-8);
    }

    #[test]
    fn derivative_matches_difference_quotient() {
        let d = single_site(0.75);
        let m = MEvaluator::new(&d, 512).unwrap();
        let z = Complex64::new(0.2, 0.1);
        let h = 1e-6;
        let (_, dm) = m.eval_with_derivative(z).unwrap();
        let fd = (m.eval(z + h).unwrap() - m.eval(z - h).unwrap()) / (2.0 * h);
        assert!((dm - fd).norm() < 1e-8);
    }

    #[test]
    fn reflection_examples() {
        let free = SpectralData::new(TaylorSeries::constant(1.0), vec![]).unwrap();
        let v = m_reflection_extend(&free, Complex64::new(1.5, 0.0), 512).unwrap();
        assert!((v - 1.5).norm() < 1e-12);

        let h = 1e-6;
        let z = Complex64::new(2.0 + h, 0.0);
        let canonical = m_reflection_extend(&single_site(0.75), z, 512).unwrap();
        assert!(canonical.norm() < 10.0);
        let u = TaylorSeries::polynomial(vec![1.0, -2.0]);
        let off = SpectralData::unchecked(u, vec![BoundState::from_weight(0.5, 0.8).unwrap()]);
        let v = m_reflection_extend(&off, z, 512).unwrap();
        assert!(v.norm() > 1e3);
    }
}
