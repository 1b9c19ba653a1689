//! Geronimo–Case recursion for the Jost function.
//!
//! With `cₙ(z) = zⁿ pₙ(z + 1/z)` and `gₙ` the Jost function of the matrix
//! obtained by freeing every parameter past `n`, one step reads
//!
//! ```text
//! a·c' = (z² − b z)·c + g
//! a·g' = ((1 − a²) z² − b z)·c + g
//! ```
//!
//! starting from `c₀ = g₀ = 1`. All arithmetic is on exact coefficient
//! lists, so for finitely supported parameters `g_K` *is* the Jost function.

use crate::error::{Error, Result};
use crate::forward::{JacobiParams, Tail};
use crate::numerics::TaylorSeries;

#[derive(Debug, Clone, PartialEq)]
pub struct GCState {
    n: usize,
    c: Vec<f64>,
    g: Vec<f64>,
    prefactor: f64,
}

impl GCState {
    pub fn initial() -> Self {
        Self { n: 0, c: vec![1.0], g: vec![1.0], prefactor: 1.0 }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `a₁⋯aₙ`.
    pub fn prefactor(&self) -> f64 {
        self.prefactor
    }

    pub fn c(&self) -> TaylorSeries {
        TaylorSeries::polynomial(self.c.clone())
    }

    pub fn g(&self) -> TaylorSeries {
        TaylorSeries::polynomial(self.g.clone())
    }

    pub fn c_coeffs(&self) -> &[f64] {
        &self.c
    }

    pub fn g_coeffs(&self) -> &[f64] {
        &self.g
    }
}

pub fn gc_step(state: &GCState, a_next: f64, b_next: f64) -> Result<GCState> {
    if !(a_next > 0.0 && a_next.is_finite()) {
        return Err(Error::InvalidArgument(format!("a = {a_next} must be positive")));
    }
    let len = state.c.len() + 2;
    let quad = 1.0 - a_next * a_next;
    let mut c = vec![0.0; len];
    let mut g = vec![0.0; len];
    for (k, &ck) in state.c.iter().enumerate() {
        c[k + 2] += ck;
        c[k + 1] -= b_next * ck;
        g[k + 2] += quad * ck;
        g[k + 1] -= b_next * ck;
    }
    for (k, &gk) in state.g.iter().enumerate() {
        c[k] += gk;
        g[k] += gk;
    }
    let inv = 1.0 / a_next;
    c.iter_mut().for_each(|v| *v *= inv);
    g.iter_mut().for_each(|v| *v *= inv);
    Ok(GCState { n: state.n + 1, c, g, prefactor: state.prefactor * a_next })
}

/// Runs `m` steps over the stored parameters.
pub(crate) fn run_gc(j: &JacobiParams, m: usize) -> GCState {
    let mut state = GCState::initial();
    for n in 1..=m {
        state = gc_step(&state, j.a(n), j.b(n)).expect("JacobiParams holds positive a");
    }
    state
}

/// Exact Jost function of finitely supported parameters.
///
/// If the last stored entry has `a_K ≠ 1` the polynomial has degree `2K`
/// with leading coefficient `(1 − a_K²)/(a₁⋯a_K)`; if `a_K = 1, b_K ≠ 0` it
/// has degree `2K − 1` with leading coefficient `−b_K/(a₁⋯a_K)`.
pub fn jost_from_finite(j: &JacobiParams) -> Result<TaylorSeries> {
    if j.tail() != Tail::Free {
        return Err(Error::InvalidArgument("exact Jost polynomial needs a free tail".into()));
    }
    let state = run_gc(j, j.len());
    Ok(TaylorSeries::polynomial(state.g).trimmed())
}

/// Jost function as a Taylor series: exact for free tails, the
/// Geronimo–Case polynomial over every stored entry for envelope tails
/// (carrying the envelope radius).
pub fn jost_function(j: &JacobiParams) -> TaylorSeries {
    let state = run_gc(j, j.len());
    let poly = TaylorSeries::polynomial(state.g).trimmed();
    match j.tail() {
        Tail::Free => poly,
        Tail::Envelope { r, .. } => poly.with_radius(r),
    }
}

/// Truncated Geronimo–Case approximation of the Jost function under an
/// envelope tail, with a certified bound on `sup_{|z| ≤ ρ} |u(z) − g_m(z)|`,
/// `ρ = max(1, working_radius)`.
///
/// Uses `m = min(n_terms, K)` stored entries; everything past `m` is only
/// known through the envelope `|bⱼ| + |aⱼ² − 1| ≤ C R^{−2j}`. With
/// `q = ρ²/R²`, the bound follows from the majorant recursion
/// `X_{j+1} ≤ (1 + δ_{j+1}) X_j + Y_j`, `Y_{j+1} ≤ Y_j + C q^{j+1} X_j` for
/// `X_j = sup|C_j|/ρ^{2j}`, `Y_j = sup|G_j|`, summed in closed form, plus the
/// uncertainty of the tail product `∏_{j>m} aⱼ`. An infinite bound means the
/// envelope is too weak for the closed form to apply at this `m`.
pub fn jost_tail_limit(j: &JacobiParams, n_terms: usize, working_radius: f64) -> Result<(TaylorSeries, f64)> {
    match j.tail() {
        Tail::Free => {
            if n_terms < j.len() {
                return Err(Error::InvalidArgument(format!(
                    "n_terms = {n_terms} is below the {} stored entries",
                    j.len()
                )));
            }
            Ok((jost_from_finite(j)?, 0.0))
        }
        Tail::Envelope { c, r } => {
            if r <= working_radius {
                return Err(Error::EnvelopeTooWeak { envelope: r, working: working_radius });
            }
            let m = n_terms.min(j.len());
            let state = run_gc(j, m);
            let rho = working_radius.max(1.0);
            let g = TaylorSeries::polynomial(state.g.clone());
            let bound = tail_bound(&state, c, r, rho);
            Ok((g.trimmed().with_radius(r), bound))
        }
    }
}

fn tail_bound(state: &GCState, c_env: f64, r_env: f64, rho: f64) -> f64 {
    if c_env == 0.0 {
        return 0.0;
    }
    let m = state.n as i32;
    let pref = state.prefactor;
    let big_c = TaylorSeries::polynomial(state.c.clone()).majorant(rho) * pref;
    let big_g = TaylorSeries::polynomial(state.g.clone()).majorant(rho) * pref;
    let x = big_c / rho.powi(2 * m);
    let y = big_g;

    let q = (rho / r_env).powi(2);
    let lead = c_env * q.powi(m + 1);
    let s0 = lead / (1.0 - q);
    let s1 = lead * q / (1.0 - q).powi(2);
    let delta_sum = c_env * r_env.powi(-2 * (m + 1)) / (1.0 - r_env.powi(-2));
    let delta_max = c_env * r_env.powi(-2 * (m + 1));
    let growth = delta_sum.exp();
    if growth * s1 >= 1.0 || delta_max >= 1.0 {
        return f64::INFINITY;
    }
    let y_bar = (y + growth * s0 * x) / (1.0 - growth * s1);
    let g_err = y_bar - y;

    let p_lo = (-delta_sum / (2.0 * (1.0 - delta_max))).exp();
    let p_hi = (delta_sum / 2.0).exp();
    let g_sup = big_g / pref;
    g_err / (pref * p_lo) + g_sup * (1.0 / p_lo - 1.0).max(1.0 - 1.0 / p_hi)
}
