use crate::error::{Error, Result};
use crate::numerics::TaylorSeries;

const MIN_SAMPLES: usize = 4096;

/// Real zeros of `u` in `[lo, hi]`.
///
/// Zeros are located from sign changes on a uniform scan and refined by
/// bisection to `root_tol`. Every zero must be simple: a zero where
/// `|u'| ≤ root_tol`, or a touch-down of `|u|` below `root_tol` without a
/// sign change, is reported as [`Error::DegenerateZero`].
pub fn find_real_zeros(u: &TaylorSeries, interval: (f64, f64), root_tol: f64) -> Result<Vec<f64>> {
    let (lo, hi) = interval;
    if !(lo < hi) {
        return Err(Error::InvalidArgument(format!("empty interval ({lo}, {hi})")));
    }
    let n = MIN_SAMPLES.max(64 * (u.degree() + 1));
    let xs: Vec<f64> = (0..=n).map(|i| lo + (hi - lo) * i as f64 / n as f64).collect();
    let vs: Vec<f64> = xs.iter().map(|&x| u.eval_real(x)).collect();

    let mut roots = Vec::new();
    for i in 0..n {
        let (v0, v1) = (vs[i], vs[i + 1]);
        if v0 == 0.0 {
            let before = if i == 0 { None } else { Some(vs[i - 1]) };
            match before {
                Some(b) if b != 0.0 && v1 != 0.0 && b.signum() == v1.signum() => {
                    return Err(Error::DegenerateZero { at: xs[i] });
                }
                _ => roots.push(xs[i]),
            }
        } else if v1 != 0.0 && v0.signum() != v1.signum() {
            roots.push(bisect(u, xs[i], xs[i + 1], v0, root_tol));
        }
    }
    if vs[n] == 0.0 {
        roots.push(xs[n]);
    }

    for &r in &roots {
        let (_, d) = u.eval_real_with_derivative(r);
        if d.abs() <= root_tol {
            return Err(Error::DegenerateZero { at: r });
        }
    }

    // Touch-downs: local minima of |u| with no sign change around them.
    for i in 1..n {
        let (a, b, c) = (vs[i - 1], vs[i], vs[i + 1]);
        let same_sign = a.signum() == b.signum() && b.signum() == c.signum() && b != 0.0;
        if same_sign && b.abs() <= a.abs() && b.abs() <= c.abs() {
            let (x, m) = minimize_abs(u, xs[i - 1], xs[i + 1]);
            if m < root_tol && !roots.iter().any(|r| (r - x).abs() < 2.0 * (hi - lo) / n as f64) {
                return Err(Error::DegenerateZero { at: x });
            }
        }
    }
    Ok(roots)
}

fn bisect(u: &TaylorSeries, mut a: f64, mut b: f64, mut fa: f64, tol: f64) -> f64 {
    for _ in 0..200 {
        let m = 0.5 * (a + b);
        if b - a <= tol || m == a || m == b {
            return m;
        }
        let fm = u.eval_real(m);
        if fm == 0.0 {
            return m;
        }
        if fm.signum() == fa.signum() {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    0.5 * (a + b)
}

/// Golden-section search for the minimum of `|u|` on `[a, b]`.
fn minimize_abs(u: &TaylorSeries, mut a: f64, mut b: f64) -> (f64, f64) {
    let g = 0.5 * (5f64.sqrt() - 1.0);
    let mut c = b - g * (b - a);
    let mut d = a + g * (b - a);
    for _ in 0..100 {
        if u.eval_real(c).abs() < u.eval_real(d).abs() {
            b = d;
        } else {
            a = c;
        }
        c = b - g * (b - a);
        d = a + g * (b - a);
    }
    let x = 0.5 * (a + b);
    (x, u.eval_real(x).abs())
}
