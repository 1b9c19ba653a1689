//! End-to-end runs of the `jost` binary.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn jost(args: &[&str], input: &Path, output: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jost"))
        .args(args)
        .arg("--input")
        .arg(input)
        .arg("--output")
        .arg(output)
        .output()
        .unwrap()
}

fn report(path: &Path) -> toml::Table {
    std::fs::read_to_string(path).unwrap().parse().unwrap()
}

fn float(t: &toml::Table, key: &str) -> f64 {
    t[key].as_float().unwrap_or_else(|| panic!("{key} is not a float"))
}

#[test]
fn forward_free_matrix() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "free.toml", "a = []\nb = []\n");
    let out = dir.path().join("free_out.toml");
    let run = jost(&["forward"], &input, &out);
    assert_eq!(run.status.code(), Some(0), "{}", String::from_utf8_lossy(&run.stderr));
    let r = report(&out);
    assert_eq!(r["jost"].as_array().unwrap(), &vec![toml::Value::Float(1.0)]);
    assert!(r["states"].as_array().unwrap().is_empty());
    let csv = std::fs::read_to_string(dir.path().join("free_out.csv")).unwrap();
    assert!(csv.starts_with("theta,f\n"));
}

#[test]
fn forward_single_site() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "b2.toml", "a = [1.0]\nb = [2.0]\n");
    let out = dir.path().join("out.toml");
    assert_eq!(jost(&["forward"], &input, &out).status.code(), Some(0));
    let r = report(&out);
    let state = r["states"].as_array().unwrap()[0].as_table().unwrap();
    assert!((float(state, "z") - 0.5).abs() < 1e-12);
    assert!((float(state, "w") - 0.75).abs() < 1e-10);
    assert_eq!(r["eigenvalues_above"].as_integer(), Some(1));
}

#[test]
fn roundtrip_single_site() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "b2.toml", "a = [1.0]\nb = [2.0]\n");
    let out = dir.path().join("out.toml");
    let run = jost(&["roundtrip"], &input, &out);
    assert_eq!(run.status.code(), Some(0), "{}", String::from_utf8_lossy(&run.stderr));
    let r = report(&out);
    assert!(float(&r, "max_parameter_error") < 1e-7);
    assert_eq!(r["status"].as_str(), Some("ok"));
    let csv = std::fs::read_to_string(dir.path().join("out.csv")).unwrap();
    assert!(csv.starts_with("n,a,b,seminorm\n1,"));
}

#[test]
fn invert_without_canonical_weight() {
    let dir = TempDir::new().unwrap();
    // u = (1 − 2z)(1 − z/2)
    let input = write(&dir, "nc.toml", "u = [1.0, -2.5, 1.0]\nstates = [{ z = 0.5, w = 0.5 }]\n");
    let out = dir.path().join("out.toml");
    let run = jost(&["invert"], &input, &out);
    assert_eq!(run.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&run.stderr);
    assert!(stderr.contains("no canonical weight at z=0.5"), "{stderr}");
    let r = report(&out);
    assert_eq!(r["status"].as_str(), Some("error"));
    assert_eq!(r["tag"].as_str(), Some("canonical-weight"));
}

#[test]
fn invert_single_site_data() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "sd.toml", "u = [1.0, -2.0]\nstates = [{ z = 0.5, w = 0.75 }]\n");
    let out = dir.path().join("out.toml");
    let run = jost(&["invert", "--strip-steps", "5"], &input, &out);
    assert_eq!(run.status.code(), Some(0), "{}", String::from_utf8_lossy(&run.stderr));
    let r = report(&out);
    let b = r["b"].as_array().unwrap();
    assert_eq!(b.len(), 5);
    assert!((b[0].as_float().unwrap() - 2.0).abs() < 1e-7);
}

#[test]
fn noncanonical_weight_is_rejected() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "nc.toml", "u = [1.0, -2.0]\nstates = [{ z = 0.5, w = 0.8 }]\n");
    let out = dir.path().join("out.toml");
    let run = jost(&["invert"], &input, &out);
    assert_eq!(run.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&run.stderr).contains("noncanonical weight"));
}

#[test]
fn nonpositive_canonical_weight_is_rejected() {
    let dir = TempDir::new().unwrap();
    // u = (1 − 2z)(1 − 3z/5) has u'(½)u(2) < 0.
    let input = write(&dir, "neg.toml", "u = [1.0, -2.6, 1.2]\nstates = [{ z = 0.5, w = 0.5 }]\n");
    let out = dir.path().join("out.toml");
    let run = jost(&["invert"], &input, &out);
    assert_eq!(run.status.code(), Some(2));
    assert_eq!(report(&out)["tag"].as_str(), Some("nonpositive-canonical-weight"));

    assert_eq!(jost(&["weights"], &input, &out).status.code(), Some(0));
    let state = report(&out)["states"].as_array().unwrap()[0].as_table().unwrap().clone();
    assert_eq!(state["positive"].as_bool(), Some(false));
    assert!(float(&state, "canonical_w") < 0.0);
}

#[test]
fn opuc_check_passes_on_geometric_alphas() {
    let dir = TempDir::new().unwrap();
    let alphas: Vec<String> = (0..25).map(|n| format!("{:?}", 0.4 * 3f64.powi(-n))).collect();
    let input = write(&dir, "v.toml", &format!("alphas = [{}]\n", alphas.join(", ")));
    let out = dir.path().join("out.toml");
    let run = jost(&["opuc-check"], &input, &out);
    assert_eq!(run.status.code(), Some(0), "{}", String::from_utf8_lossy(&run.stderr));
    let r = report(&out);
    assert!((float(&r, "decay_r_est") - 3.0).abs() < 0.15);
    assert_eq!(r["decay_pass"].as_bool(), Some(true));
}

#[test]
fn schema_errors_exit_one() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("out.toml");
    let input = write(&dir, "bad.toml", "a = [-1.0]\nb = [0.0]\n");
    let run = jost(&["forward"], &input, &out);
    assert_eq!(run.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&run.stderr).contains("error[schema]"));
    assert!(!out.exists());

    let input = write(&dir, "free.toml", "a = []\nb = []\n");
    let run = jost(&["opuc-check"], &input, &out);
    assert_eq!(run.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&run.stderr).contains("error[wrong-input]"));

    let run = jost(&["forward"], &dir.path().join("missing.toml"), &out);
    assert_eq!(run.status.code(), Some(1));
}

#[test]
fn bad_flag_exits_one() {
    let run = Command::new(env!("CARGO_BIN_EXE_jost")).args(["forward", "--nope"]).output().unwrap();
    assert_eq!(run.status.code(), Some(1));
    let run = Command::new(env!("CARGO_BIN_EXE_jost")).arg("--help").output().unwrap();
    assert_eq!(run.status.code(), Some(0));
}

#[test]
fn report_to_stdout() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "b2.toml", "a = [1.0]\nb = [2.0]\n");
    let run =
        Command::new(env!("CARGO_BIN_EXE_jost")).args(["decay", "--input"]).arg(&input).output().unwrap();
    assert_eq!(run.status.code(), Some(0));
    let r: toml::Table = String::from_utf8(run.stdout).unwrap().parse().unwrap();
    assert_eq!(r["decay_rate"].as_float(), Some(f64::INFINITY));
}
