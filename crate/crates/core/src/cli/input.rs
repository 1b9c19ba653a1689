use std::path::Path;

use num_complex::Complex64;
use serde::Deserialize;

use crate::cli::CliError;
use crate::forward::{BoundState, JacobiParams, Tail};
use crate::inverse::SpectralData;
use crate::numerics::{TaylorSeries, ToleranceConfig};
use crate::opuc::VerblunskySeq;

/// One parsed input file.
#[derive(Debug, Clone, PartialEq)]
pub enum Input {
    Jacobi(JacobiParams),
    Spectral(SpectralData),
    Verblunsky(VerblunskySeq),
}

impl Input {
    pub fn kind(&self) -> &'static str {
        match self {
            Input::Jacobi(_) => "jacobi",
            Input::Spectral(_) => "spectral",
            Input::Verblunsky(_) => "verblunsky",
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct JacobiFile {
    a: Vec<f64>,
    b: Vec<f64>,
    #[serde(default = "free_tail")]
    tail: String,
    envelope_c: Option<f64>,
    envelope_r: Option<f64>,
}

fn free_tail() -> String {
    "free".into()
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct StateEntry {
    z: f64,
    w: f64,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct SpectralFile {
    u: Vec<f64>,
    radius: Option<f64>,
    #[serde(default)]
    states: Vec<StateEntry>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct VerblunskyFile {
    alphas: Vec<f64>,
    alphas_im: Option<Vec<f64>>,
}

pub fn parse_input(path: &Path) -> Result<Input, CliError> {
    parse_input_with(path, ToleranceConfig::default().root_tol)
}

/// [`parse_input`] with an explicit tolerance for matching bound states to
/// zeros of `u`.
pub fn parse_input_with(path: &Path, root_tol: f64) -> Result<Input, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    parse_str(&text, root_tol).map_err(|e| match e {
        CliError::Schema(msg) => CliError::Schema(format!("{}: {msg}", path.display())),
        other => other,
    })
}

/// Parses one input document. The file kind is chosen by its keys: `a`/`b`
/// for Jacobi parameters, `u` for spectral data, `alphas` for Verblunsky
/// coefficients.
pub fn parse_str(text: &str, root_tol: f64) -> Result<Input, CliError> {
    let table: toml::Table = toml::from_str(text).map_err(|e| CliError::Schema(e.to_string()))?;
    let schema = |e: toml::de::Error| CliError::Schema(e.to_string());
    if table.contains_key("u") {
        let f: SpectralFile = toml::from_str(text).map_err(schema)?;
        spectral(f, root_tol).map(Input::Spectral)
    } else if table.contains_key("alphas") {
        let f: VerblunskyFile = toml::from_str(text).map_err(schema)?;
        verblunsky(f).map(Input::Verblunsky)
    } else if table.contains_key("a") || table.contains_key("b") {
        let f: JacobiFile = toml::from_str(text).map_err(schema)?;
        jacobi(f).map(Input::Jacobi)
    } else {
        Err(CliError::Schema("expected one of the keys `a`/`b`, `u` or `alphas`".into()))
    }
}

fn jacobi(f: JacobiFile) -> Result<JacobiParams, CliError> {
    let tail = match (f.tail.as_str(), f.envelope_c, f.envelope_r) {
        ("free", None, None) => Tail::Free,
        ("free", _, _) => return Err(CliError::Schema("envelope_c/envelope_r given for a free tail".into())),
        ("envelope", Some(c), Some(r)) => Tail::Envelope { c, r },
        ("envelope", None, _) => return Err(CliError::Schema("tail: envelope needs envelope_c".into())),
        ("envelope", _, None) => return Err(CliError::Schema("tail: envelope needs envelope_r".into())),
        (other, _, _) => {
            return Err(CliError::Schema(format!("tail: expected \"free\" or \"envelope\", got {other:?}")))
        }
    };
    JacobiParams::new(f.a, f.b, tail).map_err(|e| CliError::Schema(e.to_string()))
}

fn spectral(f: SpectralFile, root_tol: f64) -> Result<SpectralData, CliError> {
    let u = TaylorSeries::new(f.u, f.radius.unwrap_or(f64::INFINITY))
        .map_err(|e| CliError::Schema(format!("u: {e}")))?;
    let mut states = Vec::with_capacity(f.states.len());
    for (i, s) in f.states.iter().enumerate() {
        if !(s.w > 0.0 && s.w.is_finite()) {
            return Err(CliError::Schema(format!("states[{i}].w = {} must be positive", s.w)));
        }
        let state =
            BoundState::from_weight(s.z, s.w).map_err(|e| CliError::Schema(format!("states[{i}].z: {e}")))?;
        states.push(state);
    }
    SpectralData::with_root_tol(u, states, root_tol).map_err(|e| CliError::Schema(e.to_string()))
}

fn verblunsky(f: VerblunskyFile) -> Result<VerblunskySeq, CliError> {
    let im = f.alphas_im.unwrap_or_else(|| vec![0.0; f.alphas.len()]);
    if im.len() != f.alphas.len() {
        return Err(CliError::Schema(format!(
            "alphas_im has {} entries but alphas has {}",
            im.len(),
            f.alphas.len()
        )));
    }
    let alphas = f.alphas.iter().zip(&im).map(|(&re, &im)| Complex64::new(re, im)).collect();
    VerblunskySeq::new(alphas).map_err(|e| CliError::Schema(e.to_string()))
}
