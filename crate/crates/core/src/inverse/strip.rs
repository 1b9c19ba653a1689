//! Coefficient stripping: recovering `(a₁, b₁), (a₂, b₂), …` one pair at a
//! time from a Jost function and its bound states.
//!
//! One step at level `n`:
//!
//! 1. `M⁽ⁿ⁾` is evaluated from the spectral measure of `(u⁽ⁿ⁾, states)`.
//! 2. From `M⁽ⁿ⁾(z)/z = 1 + b z + (a² − 1 + b²) z² + O(z³)`, read off on a
//!    small circle around 0, come `b_{n+1}` and `a_{n+1}`.
//! 3. `u⁽ⁿ⁺¹⁾(z) = a z⁻¹ u⁽ⁿ⁾(z) M⁽ⁿ⁾(z)` is sampled on a circle `|z| = R > 1`,
//!    where `M⁽ⁿ⁾` is continued by reflection, and its Taylor coefficients
//!    are read off. Negative Fourier modes there mean the continuation has a
//!    pole inside the circle, which happens exactly when some weight is not
//!    canonical.
//! 4. The bound states of the stripped matrix are the zeros of `u⁽ⁿ⁺¹⁾` in
//!    `(−1, 1)`; their residues come from the zeros of `M⁽ⁿ⁾` through
//!    `1/M⁽ⁿ⁾ = z + 1/z − b − a² M⁽ⁿ⁺¹⁾`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::forward::{BoundState, JacobiParams, Tail};
use crate::inverse::canonical::canonical_weight;
use crate::inverse::spectral::{jost_zeros, normalization_check, MEvaluator, SpectralData};
use crate::numerics::{
    real_coefficients_from_grid, seminorm_triple, CircleGrid, TaylorSeries, ToleranceConfig,
};

/// Settings for [`strip_once`] and [`recover_jacobi`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StripConfig {
    /// Minimum `θ` points for the measure; refined adaptively.
    pub theta_points: usize,
    /// Circle for reading `a`, `b` off `M(z)/z`. Shrunk to half the
    /// smallest `|zⱼ|` when a bound state sits inside it.
    pub r0: f64,
    /// Working circle `|z| = R` for the stripped Jost function; `None`
    /// picks `min(1.2, (1 + radius(u))/2)`.
    pub work_radius: Option<f64>,
    /// Samples on the working circle.
    pub work_grid: usize,
    /// Samples on the `r0` circle.
    pub extraction_grid: usize,
    /// Relative negative-mode energy that signals a lost continuation.
    pub analyticity_floor: f64,
    /// Seminorm below which a state without bound states counts as free.
    pub free_tol: f64,
    /// Emit `(1, 0)` for every remaining step once the data are free.
    pub stop_when_free: bool,
    pub root_tol: f64,
}

impl Default for StripConfig {
    fn default() -> Self {
        Self::from_tolerances(&ToleranceConfig::default())
    }
}

impl StripConfig {
    pub fn from_tolerances(t: &ToleranceConfig) -> Self {
        Self {
            theta_points: t.quad_points,
            r0: 0.25,
            work_radius: None,
            work_grid: 256,
            extraction_grid: 64,
            analyticity_floor: 1e-8,
            free_tol: 1e-9,
            stop_when_free: true,
            root_tol: t.root_tol,
        }
    }

    pub fn with_work_radius(mut self, r: f64) -> Self {
        self.work_radius = Some(r);
        self
    }

    fn validate(&self) -> Result<()> {
        if !(self.r0 > 0.0 && self.r0 < 1.0) {
            return Err(Error::InvalidArgument(format!("r0 = {} must lie in (0, 1)", self.r0)));
        }
        for (name, n) in [("work_grid", self.work_grid), ("extraction_grid", self.extraction_grid)] {
            if n < 8 || !n.is_power_of_two() {
                return Err(Error::InvalidArgument(format!("{name} = {n} must be a power of two ≥ 8")));
            }
        }
        if let Some(r) = self.work_radius {
            if !(r > 1.0 && r.is_finite()) {
                return Err(Error::InvalidArgument(format!("working radius {r} must exceed 1")));
            }
        }
        Ok(())
    }
}

/// `min(1.2, (1 + radius)/2)`.
pub fn default_work_radius(u_radius: f64) -> f64 {
    1.2f64.min(0.5 * (1.0 + u_radius))
}

/// Stripping state at level `n`: the Jost function and bound states of
/// `J⁽ⁿ⁾` plus the pairs recovered so far.
#[derive(Debug, Clone, PartialEq)]
pub struct StripState {
    n: usize,
    u: TaylorSeries,
    states: Vec<BoundState>,
    a: Vec<f64>,
    b: Vec<f64>,
}

impl StripState {
    pub fn new(data: &SpectralData) -> Self {
        Self { n: 0, u: data.u().clone(), states: data.states().to_vec(), a: Vec::new(), b: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn u(&self) -> &TaylorSeries {
        &self.u
    }

    pub fn states(&self) -> &[BoundState] {
        &self.states
    }

    pub fn recovered_a(&self) -> &[f64] {
        &self.a
    }

    pub fn recovered_b(&self) -> &[f64] {
        &self.b
    }

    /// Spectral data of `J⁽ⁿ⁾`.
    pub fn data(&self) -> SpectralData {
        SpectralData::unchecked(self.u.clone(), self.states.clone())
    }
}

/// What one step measured.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StepDiagnostics {
    /// Index of the recovered pair.
    pub step: usize,
    pub a: f64,
    pub b: f64,
    pub work_radius: f64,
    /// `|||u⁽ⁿ⁾|||_R`.
    pub seminorm_before: f64,
    /// `|||u⁽ⁿ⁺¹⁾|||_R`.
    pub seminorm_after: f64,
    /// `sup_{|ζ| = 1/R} |M⁽ⁿ⁾(ζ)/ζ|`.
    pub sup_n_sharp: f64,
    /// `a R⁻² · sup|N♯| · |||u⁽ⁿ⁾|||_R`.
    pub contraction_bound: f64,
    pub u0_after: f64,
    /// Negative-mode energy of the sampled `u⁽ⁿ⁺¹⁾`, relative to its L² norm.
    pub negative_energy: f64,
    pub states_after: usize,
}

fn pick_work_radius(config: &StripConfig, u: &TaylorSeries, states: &[BoundState]) -> Result<f64> {
    let base = config.work_radius.unwrap_or_else(|| default_work_radius(u.radius()));
    if base >= u.radius() {
        return Err(Error::InsufficientAnalyticity { needed: base, radius: u.radius() });
    }
    let clear = |r: f64| states.iter().all(|s| (r * s.z.abs() - 1.0).abs() >= 0.02);
    for k in 0..20 {
        let f = 1.0 + 0.03 * ((k + 1) / 2) as f64;
        let r = if k % 2 == 0 { base * f } else { base / f };
        let r = if k == 0 { base } else { r };
        if r > 1.0 && r < u.radius() && clear(r) {
            return Ok(r);
        }
    }
    Err(Error::InternalConsistency(format!(
        "no working circle near {base} avoids the reflected bound states"
    )))
}

/// One stripping step with its measurements.
pub fn strip_step(state: &StripState, config: &StripConfig) -> Result<(StripState, StepDiagnostics)> {
    config.validate()?;
    let step = state.n + 1;
    let u = &state.u;
    let m = MEvaluator::new(&state.data(), config.theta_points)?;

    // (a, b) from M(z)/z near 0.
    let r0 = state.states.iter().map(|s| 0.5 * s.z.abs()).fold(config.r0, f64::min);
    let grid = CircleGrid::try_sample(r0, config.extraction_grid, |z| Ok(m.eval(z)? / z))?;
    let n = real_coefficients_from_grid(&grid, 2)?;
    let b = n[1] / n[0];
    let radicand = 1.0 + n[2] / n[0] - b * b;
    if !(radicand > 0.0) {
        return Err(Error::NonphysicalData { step, radicand });
    }
    let a = radicand.sqrt();

    // u⁽ⁿ⁺¹⁾ on the working circle.
    let work = pick_work_radius(config, u, &state.states)?;
    let before = CircleGrid::sample(work, config.work_grid, |z| u.eval(z));
    let seminorm_before = seminorm_triple(&before?);
    let points = crate::numerics::circle_points(work, config.work_grid);
    let mut values = Vec::with_capacity(points.len());
    let mut sup_n = 0.0f64;
    for &z in &points {
        let zeta = z.inv();
        let m_zeta = m.eval(zeta)?;
        sup_n = sup_n.max((m_zeta * z).norm());
        let u_zeta = u.eval(zeta);
        if u_zeta.norm() == 0.0 {
            return Err(Error::Pole(zeta.to_string()));
        }
        values.push(a * zeta * (u.eval(z) * m_zeta + (z - zeta) / u_zeta));
    }
    let grid = CircleGrid::from_values(work, values)?;
    let l2 = grid.l2_norm();
    let negative_energy = if l2 > 0.0 { grid.negative_mode_energy() / l2 } else { 0.0 };
    if negative_energy > config.analyticity_floor {
        return Err(Error::AnalyticityLoss { step, energy: negative_energy });
    }
    let seminorm_after = seminorm_triple(&grid);
    let u_next = denoised_series(&grid, u.radius())?;

    // Bound states of the stripped matrix.
    let mut states = Vec::new();
    for z in jost_zeros(&u_next, config.root_tol)? {
        // Reflections inside the working disk: the stripped weights are
        // canonical, and u⁽ⁿ⁺¹⁾ is accurate there. Elsewhere the residue
        // comes from M⁽ⁿ⁾ itself at its zero.
        let (z, residue) = if z.abs() * work > 1.0 {
            (z, canonical_weight(&u_next, z)?)
        } else {
            let z = polish_zero(&m, z)?;
            let (_, dm) = m.eval_with_derivative(Complex64::new(z, 0.0))?;
            (z, 1.0 / (a * a * dm.re))
        };
        let s = BoundState::from_residue(z, residue)?;
        if !(s.weight > 0.0) {
            return Err(Error::InternalConsistency(format!(
                "stripped bound state at z = {z} has weight {}",
                s.weight
            )));
        }
        states.push(s);
    }

    let diag = StepDiagnostics {
        step,
        a,
        b,
        work_radius: work,
        seminorm_before,
        seminorm_after,
        sup_n_sharp: sup_n,
        contraction_bound: a * work.powi(-2) * sup_n * seminorm_before,
        u0_after: u_next.coeffs()[0],
        negative_energy,
        states_after: states.len(),
    };
    let mut next = StripState { n: step, u: u_next, states, a: state.a.clone(), b: state.b.clone() };
    next.a.push(a);
    next.b.push(b);
    Ok((next, diag))
}

/// Newton steps on the real function `M` starting at an approximate zero.
fn polish_zero(m: &MEvaluator, z0: f64) -> Result<f64> {
    let mut z = z0;
    let mut best = m.eval(Complex64::new(z, 0.0))?.re.abs();
    for _ in 0..8 {
        let (v, dv) = m.eval_with_derivative(Complex64::new(z, 0.0))?;
        if v.re == 0.0 || dv.re == 0.0 {
            break;
        }
        let next = z - v.re / dv.re;
        let val = m.eval(Complex64::new(next, 0.0))?.re.abs();
        if !(val < best) || (next - z0).abs() > 1e-6 {
            break;
        }
        z = next;
        best = val;
    }
    Ok(z)
}

/// Taylor coefficients of a grid, dropping the trailing ones that sit
/// below roundoff of the sampled values.
fn denoised_series(grid: &CircleGrid, radius: f64) -> Result<TaylorSeries> {
    let max_k = grid.size() / 2 - 1;
    let coeffs = real_coefficients_from_grid(grid, max_k)?;
    let floor = 1e-13 * grid.max_abs();
    let r = grid.radius();
    let last = (0..coeffs.len()).rev().find(|&k| coeffs[k].abs() * r.powi(k as i32) > floor).unwrap_or(0);
    TaylorSeries::new(coeffs[..=last].to_vec(), radius)
}

/// Removes `(a_{n+1}, b_{n+1})` and advances to level `n + 1`.
pub fn strip_once(state: &StripState, config: &StripConfig) -> Result<StripState> {
    strip_step(state, config).map(|(s, _)| s)
}

fn is_free(state: &StripState, work: f64, tol: f64) -> Result<bool> {
    if !state.states.is_empty() {
        return Ok(false);
    }
    let g = CircleGrid::sample(work, 64.max(2 * (state.u.degree() + 1).next_power_of_two()), |z| {
        state.u.eval(z)
    })?;
    Ok(seminorm_triple(&g) <= tol)
}

/// Everything measured while recovering Jacobi parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct RecoveryDiagnostics {
    pub steps: Vec<StepDiagnostics>,
    /// Level `n` at which `u⁽ⁿ⁾` was recognised as the free Jost function.
    pub terminated_at: Option<usize>,
    /// `(step, relative negative-mode energy)` if stripping stopped because
    /// the continuation acquired a pole.
    pub analyticity_loss: Option<(usize, f64)>,
    /// `|total mass − 1|` of the input.
    pub mass_defect: f64,
    /// `|||u⁽ᴺ⁾|||` at the last level reached.
    pub residual_seminorm: f64,
}

impl RecoveryDiagnostics {
    /// `|||u⁽ⁿ⁾|||_R` for `n = 0, 1, …` over the steps actually taken.
    pub fn seminorms(&self) -> Vec<f64> {
        let mut v: Vec<f64> = self.steps.iter().map(|s| s.seminorm_before).collect();
        if let Some(last) = self.steps.last() {
            v.push(last.seminorm_after);
        }
        v
    }

    /// `u⁽ⁿ⁾(0) − 1` after each step.
    pub fn u0_drift(&self) -> Vec<f64> {
        self.steps.iter().map(|s| s.u0_after - 1.0).collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Recovery {
    pub params: JacobiParams,
    pub diagnostics: RecoveryDiagnostics,
}

/// Strips `count` pairs off the spectral data.
///
/// Stops early, with the pairs found so far, if the continuation of `M`
/// acquires a pole (noncanonical weights). Once the stripped data are free
/// the remaining pairs are `(1, 0)` exactly (unless
/// `config.stop_when_free` is off).
pub fn recover_jacobi(data: &SpectralData, count: usize, config: &StripConfig) -> Result<Recovery> {
    config.validate()?;
    let mass_defect = normalization_check(data, config.theta_points)?;
    let mut state = StripState::new(data);
    let mut steps = Vec::new();
    let mut terminated_at = None;
    let mut analyticity_loss = None;
    while state.n < count {
        if config.stop_when_free && terminated_at.is_none() {
            let work = config.work_radius.unwrap_or_else(|| default_work_radius(state.u.radius()));
            if is_free(&state, work, config.free_tol)? {
                terminated_at = Some(state.n);
            }
        }
        if terminated_at.is_some() {
            state.a.push(1.0);
            state.b.push(0.0);
            state.n += 1;
            continue;
        }
        match strip_step(&state, config) {
            Ok((next, diag)) => {
                steps.push(diag);
                state = next;
            }
            Err(Error::AnalyticityLoss { step, energy }) => {
                analyticity_loss = Some((step, energy));
                break;
            }
            Err(e) => return Err(e),
        }
    }
    if config.stop_when_free && terminated_at.is_none() && analyticity_loss.is_none() {
        let work = config.work_radius.unwrap_or_else(|| default_work_radius(state.u.radius()));
        if is_free(&state, work, config.free_tol)? {
            terminated_at = Some(state.n.min(steps.len()));
        }
    }
    let residual_seminorm = steps.last().map(|s| s.seminorm_after).unwrap_or(0.0);
    let params = JacobiParams::new(state.a, state.b, Tail::Free)?;
    Ok(Recovery {
        params,
        diagnostics: RecoveryDiagnostics {
            steps,
            terminated_at,
            analyticity_loss,
            mass_defect,
            residual_seminorm,
        },
    })
}
