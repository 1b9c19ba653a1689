use num_complex::Complex64;

use crate::error::{Error, Result};

/// Verblunsky coefficients `α₀, α₁, …`, zero past the stored list.
#[derive(Debug, Clone, PartialEq)]
pub struct VerblunskySeq {
    alphas: Vec<Complex64>,
}

impl VerblunskySeq {
    pub fn new(alphas: Vec<Complex64>) -> Result<Self> {
        for (i, a) in alphas.iter().enumerate() {
            if !(a.norm() < 1.0) {
                return Err(Error::InvalidArgument(format!("|alpha[{i}]| = {} must be < 1", a.norm())));
            }
        }
        Ok(Self { alphas })
    }

    pub fn real(alphas: &[f64]) -> Result<Self> {
        Self::new(alphas.iter().map(|&a| Complex64::new(a, 0.0)).collect())
    }

    pub fn free() -> Self {
        Self { alphas: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.alphas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.alphas.is_empty()
    }

    pub fn values(&self) -> &[Complex64] {
        &self.alphas
    }

    /// `αₙ`, zero past the list.
    pub fn alpha(&self, n: usize) -> Complex64 {
        self.alphas.get(n).copied().unwrap_or_default()
    }

    /// `ρₙ = (1 − |αₙ|²)^{1/2}`.
    pub fn rho(&self, n: usize) -> f64 {
        (1.0 - self.alpha(n).norm_sqr()).sqrt()
    }

    /// `α_{n+k}`, `k ≥ 0`.
    pub fn shifted(&self, n: usize) -> VerblunskySeq {
        Self { alphas: self.alphas.get(n..).map(<[_]>::to_vec).unwrap_or_default() }
    }
}

/// Monic `Φₙ` and its reversal `Φₙ*(z) = zⁿ conj(Φₙ(1/z̄))`, as coefficient
/// lists in increasing degree.
#[derive(Debug, Clone, PartialEq)]
pub struct SzegoPair {
    pub n: usize,
    pub phi: Vec<Complex64>,
    pub phi_star: Vec<Complex64>,
}

impl SzegoPair {
    pub fn eval_phi(&self, z: Complex64) -> Complex64 {
        horner(&self.phi, z)
    }

    pub fn eval_phi_star(&self, z: Complex64) -> Complex64 {
        horner(&self.phi_star, z)
    }
}

/// Conjugate-reversed coefficients of a degree-`n` polynomial.
pub fn reversed(coeffs: &[Complex64], n: usize) -> Vec<Complex64> {
    (0..=n).map(|k| coeffs.get(n - k).copied().unwrap_or_default().conj()).collect()
}

pub(crate) fn horner(coeffs: &[Complex64], z: Complex64) -> Complex64 {
    coeffs.iter().rev().fold(Complex64::default(), |acc, &c| acc * z + c)
}

/// `Φ_{k+1} = zΦ_k − ᾱ_k Φ_k*`, `Φ*_{k+1} = Φ_k* − α_k zΦ_k` from `Φ₀ = 1`.
pub fn szego_recursion(alphas: &VerblunskySeq, n: usize) -> SzegoPair {
    let mut phi = vec![Complex64::new(1.0, 0.0)];
    let mut star = vec![Complex64::new(1.0, 0.0)];
    for k in 0..n {
        let a = alphas.alpha(k);
        let mut next = vec![Complex64::default(); k + 2];
        let mut next_star = vec![Complex64::default(); k + 2];
        for i in 0..=k {
            next[i + 1] += phi[i];
            next[i] -= a.conj() * star[i];
            next_star[i] += star[i];
            next_star[i + 1] -= a * phi[i];
        }
        phi = next;
        star = next_star;
    }
    SzegoPair { n, phi, phi_star: star }
}

/// Weight `w(θ) = ∏ρ_k² / |Φ_L*(e^{iθ})|²` (in `dθ/2π`) of the measure whose
/// Verblunsky coefficients are the stored list followed by zeros.
pub fn bernstein_szego_weight(alphas: &VerblunskySeq) -> impl Fn(f64) -> f64 + Send + Sync {
    let pair = szego_recursion(alphas, alphas.len());
    let prod: f64 = (0..alphas.len()).map(|k| alphas.rho(k).powi(2)).product();
    move |theta| prod / pair.eval_phi_star(Complex64::from_polar(1.0, theta)).norm_sqr()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn free_gives_monomials() {
        let p = szego_recursion(&VerblunskySeq::free(), 4);
        assert_eq!(p.phi, vec![c(0.0), c(0.0), c(0.0), c(0.0), c(1.0)]);
        assert_eq!(p.phi_star, vec![c(1.0), c(0.0), c(0.0), c(0.0), c(0.0)]);
    }

    #[test]
    fn one_step() {
        let p = szego_recursion(&VerblunskySeq::real(&[0.5]).unwrap(), 1);
        assert_eq!(p.phi, vec![c(-0.5), c(1.0)]);
        assert_eq!(p.phi_star, vec![c(1.0), c(-0.5)]);
    }

    #[test]
    fn two_steps_by_hand() {
        // Φ₂ = z(z − ½) − ½(1 − z/2) = z² − z/4 − ½
        let p = szego_recursion(&VerblunskySeq::real(&[0.5, 0.5]).unwrap(), 2);
        assert_eq!(p.phi, vec![c(-0.5), c(-0.25), c(1.0)]);
        assert_eq!(reversed(&p.phi, 2), p.phi_star);
    }

    #[test]
    fn rejects_unit_alpha() {
        assert!(VerblunskySeq::real(&[0.3, 1.0]).is_err());
    }

    #[test]
    fn weight_is_normalized_for_one_alpha() {
        let w = bernstein_szego_weight(&VerblunskySeq::real(&[0.5]).unwrap());
        let n = 256;
        let mean: f64 =
            (0..n).map(|k| w(2.0 * std::f64::consts::PI * k as f64 / n as f64)).sum::<f64>() / n as f64;
        assert!((mean - 1.0).abs() < 1e-14);
    }
}
