use crate::error::{Error, Result};

/// Numerical tolerances shared by the forward and inverse maps.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ToleranceConfig {
    /// Absolute tolerance on real zeros of a Jost function.
    pub root_tol: f64,
    /// Tolerance when comparing pole residues.
    pub residue_tol: f64,
    /// Tolerance on recovered Jacobi parameters.
    pub roundtrip_tol: f64,
    /// Trapezoid points on `[0, π]`.
    pub quad_points: usize,
}

impl Default for ToleranceConfig {
    fn default() -> Self {
        Self { root_tol: 1e-12, residue_tol: 1e-8, roundtrip_tol: 1e-7, quad_points: 512 }
    }
}

impl ToleranceConfig {
    pub fn validate(&self) -> Result<()> {
        let reals = [
            ("root_tol", self.root_tol),
            ("residue_tol", self.residue_tol),
            ("roundtrip_tol", self.roundtrip_tol),
        ];
        for (name, v) in reals {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::InvalidArgument(format!("{name} must be positive, got {v}")));
            }
        }
        if self.quad_points < 2 {
            return Err(Error::InvalidArgument("quad_points must be at least 2".into()));
        }
        Ok(())
    }
}
