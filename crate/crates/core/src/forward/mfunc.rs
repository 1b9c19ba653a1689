use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::forward::gc::jost_function;
use crate::forward::JacobiParams;

const POLE_FLOOR: f64 = 1e-300;

fn check_disk(z: Complex64) -> Result<()> {
    let r = z.norm();
    if r == 0.0 || r >= 1.0 {
        return Err(Error::Domain(z.to_string(), "need 0 < |z| < 1".into()));
    }
    Ok(())
}

/// `M(z)` by the backward recurrence
/// `M⁽ⁿ⁾ = 1/(z + 1/z − b_{n+1} − a_{n+1}² M⁽ⁿ⁺¹⁾)` seeded with `M⁽ᵈᵉᵖᵗʰ⁾ = z`.
///
/// Exact for free tails once `depth ≥ K`.
pub fn m_continued_fraction(j: &JacobiParams, z: Complex64, depth: usize) -> Result<Complex64> {
    check_disk(z)?;
    let e = z + z.inv();
    let mut m = z;
    for n in (0..depth).rev() {
        let a = j.a(n + 1);
        let denom = e - j.b(n + 1) - a * a * m;
        if denom.norm() < POLE_FLOOR {
            return Err(Error::Pole(z.to_string()));
        }
        m = denom.inv();
    }
    Ok(m)
}

/// `M(z) = z · u(z; J⁽¹⁾) / (a₁ · u(z; J))`.
pub fn m_from_jost(j: &JacobiParams, z: Complex64) -> Result<Complex64> {
    check_disk(z)?;
    let u = jost_function(j);
    let den = u.eval(z);
    if den.norm() <= 1e-14 * u.majorant(z.norm()) {
        return Err(Error::Pole(z.to_string()));
    }
    let num = jost_function(&j.shifted(1)).eval(z);
    Ok(z * num / (j.a(1) * den))
}
