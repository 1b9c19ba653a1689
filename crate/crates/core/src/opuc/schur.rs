use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numerics::circle_points;
use crate::opuc::VerblunskySeq;

type SchurFn = Arc<dyn Fn(Complex64) -> Complex64 + Send + Sync>;

/// A Schur function `f⁽ⁿ⁾` evaluated lazily: a top-level function followed
/// by Möbius steps `f ← (α + z f)/(1 + ᾱ z f)` down to `level`.
#[derive(Clone)]
pub struct SchurEvaluator {
    level: usize,
    /// `α_level, α_{level+1}, …` applied innermost-last.
    alphas: Vec<Complex64>,
    top: SchurFn,
}

impl fmt::Debug for SchurEvaluator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SchurEvaluator")
            .field("level", &self.level)
            .field("alphas", &self.alphas)
            .finish_non_exhaustive()
    }
}

impl SchurEvaluator {
    /// `f ≡ 0` at `level`.
    pub fn zero(level: usize) -> Self {
        Self::constant(level, Complex64::default())
    }

    pub fn constant(level: usize, c: Complex64) -> Self {
        Self::from_fn(level, move |_| c)
    }

    pub fn from_fn<F>(level: usize, f: F) -> Self
    where
        F: Fn(Complex64) -> Complex64 + Send + Sync + 'static,
    {
        Self { level, alphas: Vec::new(), top: Arc::new(f) }
    }

    /// `f⁽ⁿ⁾` of the Bernstein–Szegő measure of `alphas` (zero past the list).
    pub fn of_sequence(alphas: &VerblunskySeq, n: usize) -> Self {
        let top = Self::zero(alphas.len().max(n));
        schur_forward(alphas, &top, n).expect("top level is at or above n")
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        let mut f = (self.top)(z);
        for &a in self.alphas.iter().rev() {
            let zf = z * f;
            f = (a + zf) / (1.0 + a.conj() * zf);
        }
        f
    }
}

/// Composes Schur steps from `f_top = f⁽ᵐ⁾` down to `f⁽ⁿ⁾`, `n ≤ m`.
pub fn schur_forward(alphas: &VerblunskySeq, f_top: &SchurEvaluator, n: usize) -> Result<SchurEvaluator> {
    if n > f_top.level {
        return Err(Error::InvalidArgument(format!(
            "target level {n} is above the top level {}",
            f_top.level
        )));
    }
    let mut steps: Vec<Complex64> = (n..f_top.level).map(|k| alphas.alpha(k)).collect();
    steps.extend_from_slice(&f_top.alphas);
    Ok(SchurEvaluator { level: n, alphas: steps, top: f_top.top.clone() })
}

/// Circle radius and size used by [`schur_inverse`].
pub const SCHUR_SAMPLE_RADIUS: f64 = 0.8;
pub const SCHUR_SAMPLE_POINTS: usize = 256;

/// Recovers `α₀ … α_{n_max}` from samples of `f` on a circle inside the
/// disk: `αₙ = f⁽ⁿ⁾(0)` is the circle mean and
/// `z f⁽ⁿ⁺¹⁾ = (f⁽ⁿ⁾ − αₙ)/(1 − ᾱₙ f⁽ⁿ⁾)`.
pub fn schur_inverse(f: &SchurEvaluator, n_max: usize) -> Result<VerblunskySeq> {
    schur_inverse_sampled(f, n_max, SCHUR_SAMPLE_RADIUS, SCHUR_SAMPLE_POINTS)
}

pub fn schur_inverse_sampled(
    f: &SchurEvaluator,
    n_max: usize,
    radius: f64,
    points: usize,
) -> Result<VerblunskySeq> {
    if !(radius > 0.0 && radius < 1.0) || points < 2 {
        return Err(Error::InvalidArgument(format!(
            "need a circle inside the disk and at least two points, got r = {radius}, N = {points}"
        )));
    }
    let zs = circle_points(radius, points);
    let mut values: Vec<Complex64> = zs.iter().map(|&z| f.eval(z)).collect();
    let mut alphas = Vec::with_capacity(n_max + 1);
    for level in 0..=n_max {
        let a = values.iter().sum::<Complex64>() / points as f64;
        if a.norm() >= 1.0 {
            return Err(Error::NotSchur { level, modulus: a.norm() });
        }
        alphas.push(a);
        for (v, &z) in values.iter_mut().zip(&zs) {
            *v = (*v - a) / ((1.0 - a.conj() * *v) * z);
        }
    }
    VerblunskySeq::new(alphas)
}

/// `F(z) = (1 + z f(z))/(1 − z f(z))`.
pub fn caratheodory_from_schur(f: &SchurEvaluator, z: Complex64) -> Result<Complex64> {
    if z.norm() >= 1.0 {
        return Err(Error::Domain(z.to_string(), "need |z| < 1".into()));
    }
    let zf = z * f.eval(z);
    if zf == Complex64::new(1.0, 0.0) {
        return Err(Error::Pole(z.to_string()));
    }
    Ok((1.0 + zf) / (1.0 - zf))
}

/// `f(z) = (F(z) − 1)/(z (F(z) + 1))`, for `z ≠ 0`.
pub fn schur_from_caratheodory(big_f: Complex64, z: Complex64) -> Result<Complex64> {
    if z == Complex64::default() {
        return Err(Error::Domain(z.to_string(), "z = 0 needs F'(0)".into()));
    }
    let den = z * (big_f + 1.0);
    if den == Complex64::default() {
        return Err(Error::Pole(z.to_string()));
    }
    Ok((big_f - 1.0) / den)
}
