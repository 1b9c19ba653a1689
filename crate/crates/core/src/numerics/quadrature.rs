use std::f64::consts::PI;

/// Nodes and weights of the `n`-point trapezoid rule on `[0, π]`.
///
/// For integrands that are even, `2π`-periodic functions of `θ` this is the
/// full-circle trapezoid rule in disguise and converges geometrically.
pub fn trapezoid_nodes(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 2, "trapezoid rule needs at least two points");
    let h = PI / (n - 1) as f64;
    let nodes = (0..n).map(|k| k as f64 * h).collect();
    let weights = (0..n).map(|k| if k == 0 || k == n - 1 { 0.5 * h } else { h }).collect();
    (nodes, weights)
}

/// `∫₀^π f(θ) dθ` by the `n`-point trapezoid rule.
pub fn unit_circle_quadrature<F: Fn(f64) -> f64>(f: F, n: usize) -> f64 {
    let (nodes, weights) = trapezoid_nodes(n);
    nodes.iter().zip(&weights).map(|(&t, &w)| w * f(t)).sum()
}

/// Mean value `(1/2π) ∫₀^{2π} f(θ) dθ` over `n` equispaced nodes.
pub fn circle_mean<F, T>(f: F, n: usize) -> T
where
    F: Fn(f64) -> T,
    T: std::iter::Sum<T> + std::ops::Div<f64, Output = T>,
{
    (0..n).map(|k| f(2.0 * PI * k as f64 / n as f64)).sum::<T>() / n as f64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sin_squared() {
        let v = unit_circle_quadrature(|t| t.sin().powi(2), 64);
        assert!((v - PI / 2.0).abs() < 1e-12);
    }

    #[test]
    fn rational_trig_integrand() {
        // ∫₀^{2π} sin²θ/(a − b cosθ) = (2π/b²)(a − √(a² − b²)), halved.
        let v = unit_circle_quadrature(|t| t.sin().powi(2) / (5.0 - 4.0 * t.cos()), 256);
        assert!((v - PI / 8.0).abs() < 1e-10);
    }

    #[test]
    fn constant() {
        assert!((unit_circle_quadrature(|_| 1.0, 16) - PI).abs() < 1e-14);
    }

    #[test]
    fn mean_of_cosine_vanishes() {
        let m: f64 = circle_mean(|t| t.cos(), 32);
        assert!(m.abs() < 1e-15);
    }
}
