use std::fmt::Write as _;
use std::path::Path;

use num_complex::Complex64;
use toml::{Table, Value};

use crate::cli::{CliError, Command, Input, JobSpec};
use crate::error::Error;
use crate::forward::{bound_states_with_tol, jost_function, residue_to_weight, sturm_count, JacobiParams};
use crate::inverse::{
    canonical_weight, decay_rate_estimate, normalization_check, recover_jacobi, sample_measure, Recovery,
    SpectralData, StripConfig, MASS_TOL,
};
use crate::numerics::circle_points;
use crate::numerics::{radius_estimate, TaylorSeries};
use crate::opuc::{
    bernstein_szego_weight, relative_szego, relative_szego_cross_check, schur_inverse, szego_function,
    szego_inverse_coefficients, szego_recursion, verblunsky_decay_check, SchurEvaluator, VerblunskySeq,
};

/// Sturm counts use the truncation this far past the stored entries.
const STURM_MARGIN: usize = 60;
const OPUC_ROUNDTRIP_TOL: f64 = 1e-10;
const OPUC_TWO_FORMULA_TOL: f64 = 1e-12;
const OPUC_SZEGO_TOL: f64 = 1e-10;
/// Points on `|z| = 1/2` for the OPUC comparisons.
const OPUC_GRID: usize = 16;

struct Csv {
    header: &'static [&'static str],
    rows: Vec<Vec<String>>,
}

/// A job's TOML report plus an optional CSV table.
pub struct Report {
    table: Table,
    csv: Option<Csv>,
    failure: Option<CliError>,
}

impl Report {
    fn new(command: Command) -> Self {
        let mut table = Table::new();
        table.insert("command".into(), command.name().into());
        table.insert("status".into(), "ok".into());
        Self { table, csv: None, failure: None }
    }

    pub fn error(command: &str, tag: &str, message: &str) -> Self {
        let mut table = Table::new();
        table.insert("command".into(), command.into());
        table.insert("status".into(), "error".into());
        table.insert("tag".into(), tag.into());
        table.insert("message".into(), message.into());
        Self { table, csv: None, failure: None }
    }

    fn set(&mut self, key: &str, value: impl Into<Value>) {
        self.table.insert(key.into(), value.into());
    }

    fn fail(&mut self, e: CliError) {
        self.set("status", "failed");
        self.set("tag", e.tag());
        self.set("message", e.to_string());
        self.failure = Some(e);
    }

    pub fn toml(&self) -> String {
        toml::to_string(&self.table).expect("report tables serialize")
    }

    /// Writes the report to `path` (stdout if `None`) and the CSV table next
    /// to it.
    pub fn write(&self, path: Option<&Path>) -> Result<(), CliError> {
        let io = |p: &Path, e: std::io::Error| CliError::Io(format!("{}: {e}", p.display()));
        let Some(path) = path else {
            print!("{}", self.toml());
            return Ok(());
        };
        std::fs::write(path, self.toml()).map_err(|e| io(path, e))?;
        if let Some(csv) = &self.csv {
            let csv_path = path.with_extension("csv");
            let mut text = csv.header.join(",");
            text.push('\n');
            for row in &csv.rows {
                let _ = writeln!(text, "{}", row.join(","));
            }
            std::fs::write(&csv_path, text).map_err(|e| io(&csv_path, e))?;
        }
        Ok(())
    }

    pub(crate) fn into_result(self) -> Result<(), CliError> {
        self.failure.map_or(Ok(()), Err)
    }

    pub fn failure(&self) -> Option<&CliError> {
        self.failure.as_ref()
    }
}

fn floats(v: &[f64]) -> Value {
    Value::Array(v.iter().map(|&x| Value::Float(x)).collect())
}

fn num(x: f64) -> String {
    format!("{x:?}")
}

pub(crate) fn dispatch(job: &JobSpec, input: Input) -> Result<Report, CliError> {
    let kind = input.kind();
    let wrong = || CliError::WrongInput(kind, job.command.name());
    match (job.command, input) {
        (Command::Forward, Input::Jacobi(j)) => forward(job, &j),
        (Command::Roundtrip, Input::Jacobi(j)) => roundtrip(job, &j),
        (Command::Invert, Input::Spectral(d)) => invert(job, &d),
        (Command::Weights, Input::Spectral(d)) => weights(job, &d),
        (Command::Decay, Input::Jacobi(j)) => decay_jacobi(job, &j),
        (Command::Decay, Input::Spectral(d)) => decay_spectral(job, &d),
        (Command::OpucCheck, Input::Verblunsky(a)) => opuc_check(job, &a),
        _ => Err(wrong()),
    }
}

fn strip_config(job: &JobSpec) -> StripConfig {
    let mut c = StripConfig::from_tolerances(&job.tolerances);
    c.r0 = job.r0;
    c.work_radius = job.radius;
    c
}

fn forward(job: &JobSpec, j: &JacobiParams) -> Result<Report, CliError> {
    let u = jost_function(j);
    let states = bound_states_with_tol(j, job.tolerances.root_tol)?;
    let (above, below) = sturm_count(j, j.len() + STURM_MARGIN)?;
    let data = SpectralData::new(u.clone(), states.clone())?;
    let measure = sample_measure(&data, job.tolerances.quad_points)?;

    let mut r = Report::new(Command::Forward);
    r.set("jost", floats(u.coeffs()));
    r.set("degree", u.degree() as i64);
    r.set("leading_coefficient", u.leading_coefficient());
    if u.radius().is_finite() {
        r.set("radius", u.radius());
    }
    if let Ok(est) = radius_estimate(u.coeffs()) {
        r.set("radius_estimate", est);
    }
    r.set("eigenvalues_above", above as i64);
    r.set("eigenvalues_below", below as i64);
    r.set("mass_defect", (measure.total_mass - 1.0).abs());
    let rows = states
        .iter()
        .map(|s| {
            let mut t = Table::new();
            t.insert("z".into(), s.z.into());
            t.insert("energy".into(), s.energy.into());
            t.insert("w".into(), s.weight.into());
            t.insert("residue".into(), s.residue.into());
            Value::Table(t)
        })
        .collect();
    r.set("states", Value::Array(rows));
    r.csv = Some(Csv {
        header: &["theta", "f"],
        rows: measure.thetas.iter().zip(&measure.density).map(|(&t, &f)| vec![num(t), num(f)]).collect(),
    });
    Ok(r)
}

/// Canonical residue check ahead of stripping. States whose reflection lies
/// beyond the radius of `u` cannot be certified and are counted.
fn check_canonical(job: &JobSpec, d: &SpectralData) -> Result<usize, CliError> {
    let mut uncertified = 0;
    for s in d.states() {
        match canonical_weight(d.u(), s.z) {
            Ok(c) => {
                let cw = residue_to_weight(s.z, c);
                if !(cw > 0.0) {
                    return Err(CliError::CheckFailed {
                        tag: "nonpositive-canonical-weight",
                        message: format!("canonical weight at z={} is {cw}, not positive", s.z),
                    });
                }
                let tol = job.tolerances.residue_tol * c.abs().max(1.0);
                if (s.residue - c).abs() > tol {
                    return Err(CliError::CheckFailed {
                        tag: "canonical-weight",
                        message: format!(
                            "noncanonical weight at z={}: w = {}, canonical w = {}",
                            s.z, s.weight, cw
                        ),
                    });
                }
            }
            Err(Error::InsufficientAnalyticity { .. }) => uncertified += 1,
            Err(e) => return Err(e.into()),
        }
    }
    Ok(uncertified)
}

fn check_mass(job: &JobSpec, d: &SpectralData) -> Result<f64, CliError> {
    let defect = normalization_check(d, job.tolerances.quad_points)?;
    if defect > MASS_TOL {
        return Err(Error::InvalidSpectralData(format!("total mass differs from 1 by {defect:e}")).into());
    }
    Ok(defect)
}

fn recovery_report(command: Command, rec: &Recovery) -> Report {
    let mut r = Report::new(command);
    let p = &rec.params;
    let d = &rec.diagnostics;
    r.set("a", floats(p.a_values()));
    r.set("b", floats(p.b_values()));
    r.set("steps_taken", d.steps.len() as i64);
    if let Some(n) = d.terminated_at {
        r.set("terminated_at", n as i64);
    }
    r.set("residual_seminorm", d.residual_seminorm);
    r.set("mass_defect", d.mass_defect);
    let seminorms = d.seminorms();
    r.csv = Some(Csv {
        header: &["n", "a", "b", "seminorm"],
        rows: (1..=p.len())
            .map(|n| {
                let s = seminorms.get(n - 1).map(|&v| num(v)).unwrap_or_default();
                vec![n.to_string(), num(p.a(n)), num(p.b(n)), s]
            })
            .collect(),
    });
    if let Some((step, energy)) = d.analyticity_loss {
        r.fail(Error::AnalyticityLoss { step, energy }.into());
    }
    r
}

fn invert(job: &JobSpec, d: &SpectralData) -> Result<Report, CliError> {
    let uncertified = check_canonical(job, d)?;
    check_mass(job, d)?;
    let rec = recover_jacobi(d, job.strip_steps, &strip_config(job))?;
    let mut r = recovery_report(Command::Invert, &rec);
    r.set("uncertified_states", uncertified as i64);
    Ok(r)
}

fn weights(job: &JobSpec, d: &SpectralData) -> Result<Report, CliError> {
    let mut r = Report::new(Command::Weights);
    let mut rows = Vec::new();
    let mut csv = Vec::new();
    for s in d.states() {
        let mut t = Table::new();
        t.insert("z".into(), s.z.into());
        t.insert("w".into(), s.weight.into());
        match canonical_weight(d.u(), s.z) {
            Ok(c) => {
                let cw = residue_to_weight(s.z, c);
                let deviation = (s.residue - c).abs();
                t.insert("canonical_w".into(), cw.into());
                t.insert("deviation".into(), deviation.into());
                t.insert("positive".into(), (cw > 0.0).into());
                let tol = job.tolerances.residue_tol * c.abs().max(1.0);
                t.insert("canonical".into(), (deviation <= tol).into());
                csv.push(vec![num(s.z), num(s.weight), num(cw)]);
            }
            Err(Error::InsufficientAnalyticity { .. }) => {
                t.insert("canonical".into(), "uncertified".into());
                csv.push(vec![num(s.z), num(s.weight), String::new()]);
            }
            Err(e) => return Err(e.into()),
        }
        rows.push(Value::Table(t));
    }
    r.set("states", Value::Array(rows));
    r.csv = Some(Csv { header: &["z", "w", "canonical_w"], rows: csv });
    Ok(r)
}

fn decay_jacobi(_job: &JobSpec, j: &JacobiParams) -> Result<Report, CliError> {
    let mut r = Report::new(Command::Decay);
    r.set("decay_rate", decay_rate_estimate(j)?);
    if let Ok(est) = radius_estimate(jost_function(j).coeffs()) {
        r.set("jost_radius_estimate", est);
    }
    Ok(r)
}

fn decay_spectral(job: &JobSpec, d: &SpectralData) -> Result<Report, CliError> {
    check_mass(job, d)?;
    let rec = recover_jacobi(d, job.strip_steps, &strip_config(job))?;
    let mut r = recovery_report(Command::Decay, &rec);
    if r.failure().is_none() {
        r.set("decay_rate", decay_rate_estimate(&rec.params)?);
    }
    Ok(r)
}

fn roundtrip(job: &JobSpec, j: &JacobiParams) -> Result<Report, CliError> {
    let data = SpectralData::from_jacobi(j)?;
    let count = job.strip_steps.max(j.len());
    let rec = recover_jacobi(&data, count, &strip_config(job))?;
    let mut r = recovery_report(Command::Roundtrip, &rec);
    let err = (1..=count)
        .map(|n| (rec.params.a(n) - j.a(n)).abs().max((rec.params.b(n) - j.b(n)).abs()))
        .fold(0.0, f64::max);
    r.set("max_parameter_error", err);
    if r.failure().is_none() && err > job.tolerances.roundtrip_tol {
        r.fail(CliError::CheckFailed {
            tag: "roundtrip",
            message: format!("max parameter error {err:e} exceeds {:e}", job.tolerances.roundtrip_tol),
        });
    }
    Ok(r)
}

fn opuc_check(job: &JobSpec, alphas: &VerblunskySeq) -> Result<Report, CliError> {
    let len = alphas.len();
    let quad = job.tolerances.quad_points;
    let zs = circle_points(0.5, OPUC_GRID);

    let f0 = SchurEvaluator::of_sequence(alphas, 0);
    let recovered = schur_inverse(&f0, len.max(1) - 1)?;
    let schur_err = (0..len).map(|n| (recovered.alpha(n) - alphas.alpha(n)).norm()).fold(0.0, f64::max);

    let mut two_formula = 0.0f64;
    for n in 0..len {
        let fn_ = SchurEvaluator::of_sequence(alphas, n);
        let fnext = SchurEvaluator::of_sequence(alphas, n + 1);
        for &z in &zs {
            two_formula = two_formula.max(relative_szego_cross_check(alphas.alpha(n), &fn_, &fnext, z)?.2);
        }
    }

    let w = bernstein_szego_weight(alphas);
    let pair = szego_recursion(alphas, len);
    let prod_rho: f64 = (0..len).map(|k| alphas.rho(k)).product();
    let (mut telescoping, mut bernstein) = (0.0f64, 0.0f64);
    for &z in &zs {
        let d = szego_function(&w, z, quad)?;
        let mut prod = Complex64::new(1.0, 0.0);
        for n in 0..len {
            let fn_ = SchurEvaluator::of_sequence(alphas, n);
            let fnext = SchurEvaluator::of_sequence(alphas, n + 1);
            prod *= relative_szego(alphas.alpha(n), &fn_, &fnext, z)?;
        }
        telescoping = telescoping.max((prod - d).norm());
        bernstein = bernstein.max((d.inv() - pair.eval_phi_star(z) / prod_rho).norm());
    }

    // D(0)² is the geometric mean of w.
    let geometric_mean =
        (szego_function(&w, Complex64::default(), quad)?.powi(2) - prod_rho * prod_rho).norm();

    let coeffs: Vec<f64> = szego_inverse_coefficients(&w, quad, len.max(1))?.iter().map(|c| c.re).collect();
    let radius = if len >= 8 { radius_estimate(&coeffs[..len])? } else { f64::INFINITY };
    let check = verblunsky_decay_check(&TaylorSeries::new(coeffs, radius)?, alphas)?;

    let mut r = Report::new(Command::OpucCheck);
    r.set("schur_roundtrip_error", schur_err);
    r.set("two_formula_deviation", two_formula);
    r.set("telescoping_deviation", telescoping);
    r.set("bernstein_szego_deviation", bernstein);
    r.set("geometric_mean_deviation", geometric_mean);
    r.set("decay_r_est", check.r_est);
    r.set("dinv_radius", check.radius);
    r.set("decay_pass", check.pass);
    r.csv = Some(Csv {
        header: &["n", "re", "im"],
        rows: (0..len)
            .map(|n| {
                let a = recovered.alpha(n);
                vec![n.to_string(), num(a.re), num(a.im)]
            })
            .collect(),
    });
    let failures = [
        ("schur_roundtrip_error", schur_err, OPUC_ROUNDTRIP_TOL),
        ("two_formula_deviation", two_formula, OPUC_TWO_FORMULA_TOL),
        ("telescoping_deviation", telescoping, OPUC_SZEGO_TOL),
        ("bernstein_szego_deviation", bernstein, OPUC_SZEGO_TOL),
        ("geometric_mean_deviation", geometric_mean, OPUC_SZEGO_TOL),
    ];
    if let Some((name, v, tol)) = failures.iter().find(|(_, v, tol)| !(v <= tol)) {
        r.fail(CliError::CheckFailed { tag: "opuc", message: format!("{name} = {v:e} exceeds {tol:e}") });
    } else if !check.pass {
        r.fail(CliError::CheckFailed {
            tag: "opuc",
            message: format!("decay estimate {} is below the radius of D⁻¹, {}", check.r_est, check.radius),
        });
    }
    Ok(r)
}
