use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong across the forward map, the inverse map and
/// the OPUC routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("point {0} is outside the domain: {1}")]
    Domain(String, String),

    #[error("pole at z = {0}")]
    Pole(String),

    #[error("degenerate (even-order) zero near x = {at}")]
    DegenerateZero { at: f64 },

    #[error("need at least {needed} coefficients, got {got}")]
    TooFewCoefficients { needed: usize, got: usize },

    #[error("envelope radius {envelope} does not exceed working radius {working}")]
    EnvelopeTooWeak { envelope: f64, working: f64 },

    #[error("entry {index} violates the declared envelope")]
    EnvelopeViolated { index: usize },

    #[error("internal consistency: {0}")]
    InternalConsistency(String),

    #[error("no canonical weight at z={z}: u(1/z) vanishes")]
    NoCanonicalWeight { z: f64 },

    #[error("u must be analytic beyond |z| = {needed}, series radius is {radius}")]
    InsufficientAnalyticity { needed: f64, radius: f64 },

    #[error("invalid spectral data: {0}")]
    InvalidSpectralData(String),

    #[error("nonphysical data at step {step}: a^2 = {radicand}")]
    NonphysicalData { step: usize, radicand: f64 },

    #[error("analyticity lost at step {step}: negative-mode energy {energy:e}")]
    AnalyticityLoss { step: usize, energy: f64 },

    #[error("not a Schur function at level {level}: |f(0)| = {modulus}")]
    NotSchur { level: usize, modulus: f64 },

    #[error("inapplicable: {0}")]
    Inapplicable(String),
}

impl Error {
    /// Short machine-readable tag naming the violated condition.
    pub fn tag(&self) -> &'static str {
        match self {
            Error::InvalidArgument(_) => "invalid-argument",
            Error::Domain(..) => "domain",
            Error::Pole(_) => "pole",
            Error::DegenerateZero { .. } => "degenerate-zero",
            Error::TooFewCoefficients { .. } => "too-few-coefficients",
            Error::EnvelopeTooWeak { .. } => "envelope-too-weak",
            Error::EnvelopeViolated { .. } => "envelope-violated",
            Error::InternalConsistency(_) => "internal-consistency",
            Error::NoCanonicalWeight { .. } => "canonical-weight",
            Error::InsufficientAnalyticity { .. } => "insufficient-analyticity",
            Error::InvalidSpectralData(_) => "mass-normalization",
            Error::NonphysicalData { .. } => "nonphysical-data",
            Error::AnalyticityLoss { .. } => "analyticity-loss",
            Error::NotSchur { .. } => "not-schur",
            Error::Inapplicable(_) => "inapplicable",
        }
    }
}
