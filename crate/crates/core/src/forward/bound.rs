use crate::error::{Error, Result};
use crate::forward::gc::jost_function;
use crate::forward::JacobiParams;
use crate::numerics::{find_real_zeros, TaylorSeries};

/// Default tolerance for locating zeros of the Jost function.
const ROOT_TOL: f64 = 1e-12;

/// Keeps zero searches off the endpoints `±1` and away from `0`.
const EDGE: f64 = 1e-9;

/// An eigenvalue `E = z + 1/z` outside `[−2, 2]`.
///
/// `residue` is `w̃ = lim_{z→z_j} (z_j − z) M(z)`, positive for a positive
/// weight, and `weight = (1/z_j − z_j) · w̃ / z_j`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundState {
    pub z: f64,
    pub energy: f64,
    pub weight: f64,
    pub residue: f64,
}

impl BoundState {
    pub fn from_weight(z: f64, weight: f64) -> Result<Self> {
        check_z(z)?;
        Ok(Self { z, energy: z + 1.0 / z, weight, residue: weight_to_residue(z, weight) })
    }

    pub fn from_residue(z: f64, residue: f64) -> Result<Self> {
        check_z(z)?;
        Ok(Self { z, energy: z + 1.0 / z, weight: residue_to_weight(z, residue), residue })
    }
}

fn check_z(z: f64) -> Result<()> {
    if !(z.abs() < 1.0 && z != 0.0) {
        return Err(Error::InvalidSpectralData(format!(
            "bound state at z = {z} must lie in (−1, 1) \\ {{0}}"
        )));
    }
    Ok(())
}

/// `w = (1/z − z) · w̃ / z`.
pub fn residue_to_weight(z: f64, residue: f64) -> f64 {
    (1.0 / z - z) * residue / z
}

pub fn weight_to_residue(z: f64, weight: f64) -> f64 {
    weight * z / (1.0 / z - z)
}

/// Bound states of `J`: simple real zeros of `u` in `(−1, 1) \ {0}`.
///
/// With `M = z·u(J⁽¹⁾)/(a₁ u)` the residue at a simple zero is
/// `w̃ = −z_j u(z_j; J⁽¹⁾) / (a₁ u'(z_j))`.
pub fn bound_states(j: &JacobiParams) -> Result<Vec<BoundState>> {
    bound_states_with_tol(j, ROOT_TOL)
}

pub fn bound_states_with_tol(j: &JacobiParams, root_tol: f64) -> Result<Vec<BoundState>> {
    let u = jost_function(j);
    let u1 = jost_function(&j.shifted(1));
    let zeros = find_real_zeros(&u, (-1.0 + EDGE, 1.0 - EDGE), root_tol)?;
    let mut states = Vec::with_capacity(zeros.len());
    for zj in zeros.into_iter().filter(|z| z.abs() > EDGE) {
        let zj = newton_polish(&u, zj);
        let (_, du) = u.eval_real_with_derivative(zj);
        let residue = -zj * u1.eval_real(zj) / (j.a(1) * du);
        let state = BoundState::from_residue(zj, residue)?;
        if !(state.weight > 0.0) {
            return Err(Error::InternalConsistency(format!(
                "nonpositive weight {} at z = {zj}",
                state.weight
            )));
        }
        states.push(state);
    }
    Ok(states)
}

/// A few Newton steps, kept only while `|u|` decreases.
fn newton_polish(u: &TaylorSeries, z0: f64) -> f64 {
    let mut z = z0;
    let mut best = u.eval_real(z).abs();
    for _ in 0..4 {
        let (v, d) = u.eval_real_with_derivative(z);
        if v == 0.0 || d == 0.0 {
            break;
        }
        let next = z - v / d;
        let val = u.eval_real(next).abs();
        if !(val < best) {
            break;
        }
        z = next;
        best = val;
    }
    z
}
