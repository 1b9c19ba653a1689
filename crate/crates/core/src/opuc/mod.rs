//! Orthogonal polynomials on the unit circle: the Szegő recursion, the
//! Schur algorithm, the Szegő function `D`, the relative Szegő function
//! `δₙD = D⁽ⁿ⁾/D⁽ⁿ⁺¹⁾` and the update of `D⁻¹` used to relate analyticity
//! of `D⁻¹` to geometric decay of the Verblunsky coefficients.

mod decay;
mod schur;
mod szego;
mod verblunsky;

pub use decay::{verblunsky_decay_check, VerblunskyDecay};
pub use schur::{
    caratheodory_from_schur, schur_forward, schur_from_caratheodory, schur_inverse, schur_inverse_sampled,
    SchurEvaluator, SCHUR_SAMPLE_POINTS, SCHUR_SAMPLE_RADIUS,
};
pub use szego::{
    dinv_update, relative_szego, relative_szego_caratheodory, relative_szego_cross_check, sz_image_weight,
    szego_function, szego_inverse_coefficients, szego_map_best_fit, szego_map_identity_check, DinvStep,
    SzFit, SZ_CONSTANT,
};
pub use verblunsky::{bernstein_szego_weight, reversed, szego_recursion, SzegoPair, VerblunskySeq};
