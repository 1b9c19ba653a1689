use num_complex::Complex64;

use crate::error::{Error, Result};

/// Real-coefficient power series `c₀ + c₁z + … + c_d z^d` together with the
/// radius of the disk on which it stands for an analytic function.
///
/// Polynomials carry an infinite radius. Truncations of analytic functions
/// carry the radius of the function they approximate.
#[derive(Debug, Clone, PartialEq)]
pub struct TaylorSeries {
    coeffs: Vec<f64>,
    radius: f64,
}

impl TaylorSeries {
    pub fn new(coeffs: Vec<f64>, radius: f64) -> Result<Self> {
        if !(radius > 0.0) {
            return Err(Error::InvalidArgument(format!("series radius must be positive, got {radius}")));
        }
        if let Some(k) = coeffs.iter().position(|c| !c.is_finite()) {
            return Err(Error::InvalidArgument(format!("coefficient {k} is not finite")));
        }
        let coeffs = if coeffs.is_empty() { vec![0.0] } else { coeffs };
        Ok(Self { coeffs, radius })
    }

    pub fn polynomial(coeffs: Vec<f64>) -> Self {
        Self::new(coeffs, f64::INFINITY).expect("finite polynomial coefficients")
    }

    pub fn constant(c: f64) -> Self {
        Self::polynomial(vec![c])
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn with_radius(mut self, radius: f64) -> Self {
        self.radius = radius;
        self
    }

    /// Index of the last nonzero coefficient (0 for the zero series).
    pub fn degree(&self) -> usize {
        self.coeffs.iter().rposition(|&c| c != 0.0).unwrap_or(0)
    }

    pub fn leading_coefficient(&self) -> f64 {
        self.coeffs[self.degree()]
    }

    pub fn is_polynomial(&self) -> bool {
        self.radius.is_infinite()
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
    }

    pub fn eval_real(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    /// Value and first derivative at a real point.
    pub fn eval_real_with_derivative(&self, x: f64) -> (f64, f64) {
        let mut p = 0.0;
        let mut dp = 0.0;
        for &c in self.coeffs.iter().rev() {
            dp = dp * x + p;
            p = p * x + c;
        }
        (p, dp)
    }

    pub fn derivative(&self) -> TaylorSeries {
        let coeffs = self.coeffs.iter().enumerate().skip(1).map(|(k, &c)| k as f64 * c).collect();
        TaylorSeries { coeffs, radius: self.radius }.normalized_storage()
    }

    pub fn scale(&self, factor: f64) -> TaylorSeries {
        TaylorSeries { coeffs: self.coeffs.iter().map(|c| c * factor).collect(), radius: self.radius }
    }

    /// Cauchy product; the radius is the smaller of the two.
    pub fn mul(&self, other: &TaylorSeries) -> TaylorSeries {
        let mut out = vec![0.0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0.0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        TaylorSeries { coeffs: out, radius: self.radius.min(other.radius) }
    }

    /// `Σ |c_k| r^k`, an upper bound for `|f(z)|` on `|z| ≤ r`.
    pub fn majorant(&self, r: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * r + c.abs())
    }

    /// Drops trailing exact zeros (keeps at least the constant term).
    pub fn trimmed(mut self) -> TaylorSeries {
        let d = self.degree();
        self.coeffs.truncate(d + 1);
        self
    }

    fn normalized_storage(mut self) -> Self {
        if self.coeffs.is_empty() {
            self.coeffs.push(0.0);
        }
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn horner_matches_direct_sum() {
        let s = TaylorSeries::polynomial(vec![1.0, -2.0, 0.5]);
        let z = Complex64::new(0.3, -0.7);
        let direct = Complex64::new(1.0, 0.0) - 2.0 * z + 0.5 * z * z;
        assert!((s.eval(z) - direct).norm() < 1e-15);
        let (v, d) = s.eval_real_with_derivative(0.4);
        assert!((v - (1.0 - 0.8 + 0.08)).abs() < 1e-15);
        assert!((d - (-2.0 + 0.4)).abs() < 1e-15);
    }

    #[test]
    fn degree_ignores_trailing_zeros() {
        let s = TaylorSeries::polynomial(vec![1.0, 2.0, 0.0, 0.0]);
        assert_eq!(s.degree(), 1);
        assert_eq!(s.clone().trimmed().coeffs().len(), 2);
        assert_eq!(TaylorSeries::constant(0.0).degree(), 0);
    }

    #[test]
    fn rejects_bad_radius_and_nan() {
        assert!(TaylorSeries::new(vec![1.0], 0.0).is_err());
        assert!(TaylorSeries::new(vec![f64::NAN], 1.0).is_err());
    }

    #[test]
    fn product_and_majorant() {
        let a = TaylorSeries::polynomial(vec![1.0, -2.0]);
        let b = TaylorSeries::polynomial(vec![1.0, -0.5]);
        assert_eq!(a.mul(&b).coeffs(), &[1.0, -2.5, 1.0]);
        assert_eq!(a.majorant(2.0), 5.0);
    }
}
