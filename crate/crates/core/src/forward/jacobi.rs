use crate::error::{Error, Result};

/// Relative slack allowed when checking stored entries against an envelope.
const ENVELOPE_SLACK: f64 = 1e-12;

/// What the Jacobi parameters do past the stored entries.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Tail {
    /// `aₙ = 1`, `bₙ = 0` for every `n > K`.
    Free,
    /// `|bₙ| + |aₙ² − 1| ≤ C·R^{−2n}` for every `n`, with `R > 1`.
    Envelope { c: f64, r: f64 },
}

/// Jacobi parameters `a₁…a_K`, `b₁…b_K` plus a tail class.
///
/// Indices are 1-based as in the three-term recurrence
/// `x pₙ = a_{n+1} p_{n+1} + b_{n+1} pₙ + aₙ p_{n−1}`, with the convention
/// `a₀ = 1`. Entries past `K` read as free (`a = 1`, `b = 0`); under an
/// envelope tail they are unknown and only bounded by the envelope.
#[derive(Debug, Clone, PartialEq)]
pub struct JacobiParams {
    a: Vec<f64>,
    b: Vec<f64>,
    tail: Tail,
}

impl JacobiParams {
    pub fn new(a: Vec<f64>, b: Vec<f64>, tail: Tail) -> Result<Self> {
        if a.len() != b.len() {
            return Err(Error::InvalidArgument(format!("a has {} entries but b has {}", a.len(), b.len())));
        }
        for (i, &ai) in a.iter().enumerate() {
            if !(ai > 0.0 && ai.is_finite()) {
                return Err(Error::InvalidArgument(format!("a[{i}] = {ai} must be positive")));
            }
        }
        if let Some(i) = b.iter().position(|v| !v.is_finite()) {
            return Err(Error::InvalidArgument(format!("b[{i}] is not finite")));
        }
        if let Tail::Envelope { c, r } = tail {
            if !(c >= 0.0 && c.is_finite()) {
                return Err(Error::InvalidArgument(format!("envelope constant {c} must be ≥ 0")));
            }
            if !(r > 1.0 && r.is_finite()) {
                return Err(Error::InvalidArgument(format!("envelope radius {r} must exceed 1")));
            }
            for (i, (&ai, &bi)) in a.iter().zip(&b).enumerate() {
                let n = (i + 1) as i32;
                let bound = c * r.powi(-2 * n);
                if bi.abs() + (ai * ai - 1.0).abs() > bound * (1.0 + ENVELOPE_SLACK) {
                    return Err(Error::EnvelopeViolated { index: i });
                }
            }
        }
        Ok(Self { a, b, tail })
    }

    /// Finitely supported parameters (free tail).
    pub fn finite(a: Vec<f64>, b: Vec<f64>) -> Result<Self> {
        Self::new(a, b, Tail::Free)
    }

    /// The free Jacobi matrix `J₀`.
    pub fn free() -> Self {
        Self { a: Vec::new(), b: Vec::new(), tail: Tail::Free }
    }

    /// Stores `K` entries `(aₙ, bₙ) = f(n)`, `n = 1..=K`.
    pub fn from_fn<F>(k: usize, tail: Tail, f: F) -> Result<Self>
    where
        F: FnMut(usize) -> (f64, f64),
    {
        let (a, b) = (1..=k).map(f).unzip();
        Self::new(a, b, tail)
    }

    /// Number of stored entries `K`.
    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }

    pub fn tail(&self) -> Tail {
        self.tail
    }

    pub fn a_values(&self) -> &[f64] {
        &self.a
    }

    pub fn b_values(&self) -> &[f64] {
        &self.b
    }

    /// `aₙ` (1-based, `a₀ = 1`).
    pub fn a(&self, n: usize) -> f64 {
        if n == 0 {
            1.0
        } else {
            self.a.get(n - 1).copied().unwrap_or(1.0)
        }
    }

    /// `bₙ` (1-based).
    pub fn b(&self, n: usize) -> f64 {
        if n == 0 {
            0.0
        } else {
            self.b.get(n - 1).copied().unwrap_or(0.0)
        }
    }

    /// Largest `n` with `(aₙ, bₙ) ≠ (1, 0)`, or 0 for `J₀`.
    pub fn support(&self) -> usize {
        (1..=self.len()).rev().find(|&n| self.a(n) != 1.0 || self.b(n) != 0.0).unwrap_or(0)
    }

    /// The stripped operator `J⁽ᵏ⁾` with parameters `a_{n+k}`, `b_{n+k}`.
    pub fn shifted(&self, k: usize) -> JacobiParams {
        let k = k.min(self.len());
        let tail = match self.tail {
            Tail::Free => Tail::Free,
            Tail::Envelope { c, r } => Tail::Envelope { c: c * r.powi(-2 * k as i32), r },
        };
        JacobiParams { a: self.a[k..].to_vec(), b: self.b[k..].to_vec(), tail }
    }

    /// Diagonal and off-diagonal of the `size × size` truncation.
    pub fn truncated(&self, size: usize) -> (Vec<f64>, Vec<f64>) {
        let diag = (1..=size).map(|n| self.b(n)).collect();
        let off = (1..size).map(|n| self.a(n)).collect();
        (diag, off)
    }

    /// Orthonormal polynomials `p₀(E), …, p_{n_max}(E)` at a real energy.
    pub fn orthonormal_values(&self, energy: f64, n_max: usize) -> Vec<f64> {
        let mut p = Vec::with_capacity(n_max + 1);
        p.push(1.0);
        let mut prev = 0.0;
        for n in 0..n_max {
            let next = ((energy - self.b(n + 1)) * p[n] - self.a(n) * prev) / self.a(n + 1);
            prev = p[n];
            p.push(next);
        }
        p
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_nonpositive_a() {
        let err = JacobiParams::finite(vec![-1.0], vec![0.0]).unwrap_err();
        assert!(err.to_string().contains("a[0]"));
    }

    #[test]
    fn envelope_checked_at_construction() {
        let ok =
            JacobiParams::from_fn(10, Tail::Envelope { c: 1.0, r: 2.0 }, |n| (1.0, 4f64.powi(-(n as i32))));
        assert!(ok.is_ok());
        let bad = JacobiParams::new(vec![1.0], vec![0.5], Tail::Envelope { c: 1.0, r: 2.0 });
        assert!(matches!(bad, Err(Error::EnvelopeViolated { index: 0 })));
    }

    #[test]
    fn accessors_read_free_past_support() {
        let j = JacobiParams::finite(vec![2.0, 1.0], vec![0.5, 0.0]).unwrap();
        assert_eq!(j.a(0), 1.0);
        assert_eq!(j.a(1), 2.0);
        assert_eq!(j.a(7), 1.0);
        assert_eq!(j.b(7), 0.0);
        assert_eq!(j.support(), 1);
        assert_eq!(JacobiParams::free().support(), 0);
    }

    #[test]
    fn free_polynomials_at_two_grow_linearly() {
        let p = JacobiParams::free().orthonormal_values(2.0, 5);
        assert_eq!(p, vec![1.0, 2.0, 3.0, 4.0, 5.0, 6.0]);
    }

    #[test]
    fn shifted_envelope_rescales() {
        let j =
            JacobiParams::from_fn(4, Tail::Envelope { c: 1.0, r: 2.0 }, |n| (1.0, 4f64.powi(-(n as i32))))
                .unwrap();
        let s = j.shifted(2);
        assert_eq!(s.len(), 2);
        assert_eq!(s.tail(), Tail::Envelope { c: 1.0 / 16.0, r: 2.0 });
        assert_eq!(s.b(1), 4f64.powi(-3));
    }
}
