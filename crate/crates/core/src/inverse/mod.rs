//! Inverse map: Jost function and bound-state weights back to Jacobi
//! parameters, with canonical-weight analysis and decay-rate estimation.

mod canonical;
mod decay;
mod spectral;
mod strip;

pub use canonical::{canonical_weight, canonicity_check, CanonicityReport};
pub use decay::decay_rate_estimate;
pub(crate) use spectral::sample_measure;
pub use spectral::{
    ac_mass, jost_zeros, m_evaluate, m_reflection_extend, measure_from_jost, normalization_check, MEvaluator,
    SampledMeasure, SpectralData, MASS_TOL,
};
pub use strip::{
    default_work_radius, recover_jacobi, strip_once, strip_step, Recovery, RecoveryDiagnostics,
    StepDiagnostics, StripConfig, StripState,
};
