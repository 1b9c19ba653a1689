//! Uniform samples of a function on a circle `|z| = r` and the discrete
//! Fourier machinery built on them: Taylor/Laurent coefficient extraction,
//! the projection onto strictly positive modes, and the seminorm
//! `(Σ_{k≥1} |â_k|² r^{2k})^{1/2}`.
//!
//! Mode `k` of an `N`-point grid is read as `+k` for `k < N/2` and as
//! `k − N` for `k > N/2`; the Nyquist mode `N/2` is ambiguous and is
//! treated as belonging to neither half.

use std::f64::consts::PI;

use num_complex::Complex64;
use rustfft::FftPlanner;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct CircleGrid {
    radius: f64,
    values: Vec<Complex64>,
}

impl CircleGrid {
    pub fn from_values(radius: f64, values: Vec<Complex64>) -> Result<Self> {
        if !(radius > 0.0 && radius.is_finite()) {
            return Err(Error::InvalidArgument(format!(
                "grid radius must be positive and finite, got {radius}"
            )));
        }
        let n = values.len();
        if n < 2 || !n.is_power_of_two() {
            return Err(Error::InvalidArgument(format!("grid size must be a power of two ≥ 2, got {n}")));
        }
        Ok(Self { radius, values })
    }

    /// Samples `f` at `r·e^{2πik/N}`, `k = 0..N`.
    pub fn sample<F>(radius: f64, size: usize, f: F) -> Result<Self>
    where
        F: Fn(Complex64) -> Complex64,
    {
        let values = circle_points(radius, size).into_iter().map(f).collect();
        Self::from_values(radius, values)
    }

    /// Fallible sampling; the first error aborts.
    pub fn try_sample<F>(radius: f64, size: usize, f: F) -> Result<Self>
    where
        F: Fn(Complex64) -> Result<Complex64>,
    {
        let values = circle_points(radius, size).into_iter().map(f).collect::<Result<Vec<_>>>()?;
        Self::from_values(radius, values)
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn size(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn points(&self) -> Vec<Complex64> {
        circle_points(self.radius, self.size())
    }

    /// Raw DFT `(1/N) Σ_j v_j e^{−2πijk/N}` for `k = 0..N`.
    pub fn fourier_modes(&self) -> Vec<Complex64> {
        let n = self.size();
        let mut buf = self.values.clone();
        FftPlanner::new().plan_fft_forward(n).process(&mut buf);
        let scale = 1.0 / n as f64;
        buf.iter_mut().for_each(|c| *c *= scale);
        buf
    }

    /// `sqrt(Σ |mode_k|²)` over the strictly negative modes.
    pub fn negative_mode_energy(&self) -> f64 {
        let n = self.size();
        let modes = self.fourier_modes();
        modes[n / 2 + 1..].iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    /// `sqrt(Σ |mode_k|²)` over every mode (the L² norm on the circle).
    pub fn l2_norm(&self) -> f64 {
        let n = self.size() as f64;
        (self.values.iter().map(|v| v.norm_sqr()).sum::<f64>() / n).sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    fn from_modes(radius: f64, mut modes: Vec<Complex64>) -> Self {
        let n = modes.len();
        FftPlanner::new().plan_fft_inverse(n).process(&mut modes);
        Self { radius, values: modes }
    }
}

pub(crate) fn circle_points(radius: f64, size: usize) -> Vec<Complex64> {
    (0..size).map(|k| Complex64::from_polar(radius, 2.0 * PI * k as f64 / size as f64)).collect()
}

/// Taylor coefficients `â_k = mode_k / r^k` for `k = 0..=max_k`.
pub fn coefficients_from_grid(g: &CircleGrid, max_k: usize) -> Result<Vec<Complex64>> {
    let n = g.size();
    if max_k >= n / 2 {
        return Err(Error::InvalidArgument(format!("max_k = {max_k} must be below N/2 = {}", n / 2)));
    }
    let modes = g.fourier_modes();
    let inv_r = 1.0 / g.radius();
    let mut scale = 1.0;
    Ok(modes[..=max_k]
        .iter()
        .map(|&m| {
            let c = m * scale;
            scale *= inv_r;
            c
        })
        .collect())
}

/// Real parts of [`coefficients_from_grid`], for functions with real
/// Taylor coefficients.
pub fn real_coefficients_from_grid(g: &CircleGrid, max_k: usize) -> Result<Vec<f64>> {
    Ok(coefficients_from_grid(g, max_k)?.into_iter().map(|c| c.re).collect())
}

/// Projection onto the strictly positive Fourier modes.
pub fn project_plus(g: &CircleGrid) -> CircleGrid {
    let n = g.size();
    let mut modes = g.fourier_modes();
    modes[0] = Complex64::new(0.0, 0.0);
    for m in modes[n / 2..].iter_mut() {
        *m = Complex64::new(0.0, 0.0);
    }
    CircleGrid::from_modes(g.radius(), modes)
}

/// `(Σ_{k≥1} |â_k|² r^{2k})^{1/2}`: the L² norm of `g − g(0)` for a grid of
/// a function analytic on the closed disk.
pub fn seminorm_triple(g: &CircleGrid) -> f64 {
    let n = g.size();
    let modes = g.fourier_modes();
    modes[1..n / 2].iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
}
