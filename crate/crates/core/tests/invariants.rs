//! Property tests across the forward map, stripping and the OPUC tools.

use std::f64::consts::PI;

use jacobi_jost::forward::{
    bound_states, jost_from_finite, jost_function, jost_solution_sequence, m_continued_fraction, m_from_jost,
    perturbation_determinant, polynomial_solution, residue_to_weight, sturm_count, wronskian, JacobiParams,
};
use jacobi_jost::inverse::{
    canonical_weight, normalization_check, recover_jacobi, SpectralData, StripConfig,
};
use jacobi_jost::numerics::CircleGrid;
use jacobi_jost::opuc::{
    dinv_update, relative_szego, relative_szego_cross_check, schur_inverse, szego_recursion, SchurEvaluator,
    VerblunskySeq,
};
use jacobi_jost::Complex64;
use proptest::prelude::*;

fn jacobi(max_k: usize) -> impl Strategy<Value = JacobiParams> {
    prop::collection::vec((0.5f64..2.0, -1.0f64..1.0), 1..=max_k).prop_map(|pairs| {
        let (a, b) = pairs.into_iter().unzip();
        JacobiParams::finite(a, b).unwrap()
    })
}

/// A point in the annulus `0.1 ≤ |z| ≤ r`.
fn disk_point(r: f64) -> impl Strategy<Value = Complex64> {
    (0.1f64..r, 0.0f64..2.0 * PI).prop_map(|(m, t)| Complex64::from_polar(m, t))
}

fn alphas(max_len: usize) -> impl Strategy<Value = VerblunskySeq> {
    prop::collection::vec((0.0f64..0.8, 0.0f64..2.0 * PI), 1..=max_len).prop_map(|v| {
        VerblunskySeq::new(v.into_iter().map(|(m, t)| Complex64::from_polar(m, t)).collect()).unwrap()
    })
}

proptest! {
    #[test]
    fn degree_law(j in jacobi(8)) {
        let k = j.len();
        let u = jost_from_finite(&j).unwrap();
        let prod: f64 = j.a_values().iter().product();
        prop_assert_eq!(u.degree(), 2 * k);
        prop_assert!((u.leading_coefficient() - (1.0 - j.a(k).powi(2)) / prod).abs() < 1e-12);
    }

    #[test]
    fn wronskian_is_constant(j in jacobi(6), z in disk_point(0.9)) {
        let n_max = j.len() + 3;
        let f = polynomial_solution(&j, z, n_max + 1);
        let u = jost_solution_sequence(&j, z, n_max + 1).unwrap();
        // W(f, u)(0) = u₀ = u(z).
        let w0 = jost_function(&j).eval(z);
        for n in 0..=n_max {
            prop_assert!((wronskian(&f, &u, &j, n).unwrap() - w0).norm() < 1e-11 * w0.norm().max(1.0));
        }
    }

    #[test]
    fn determinant_is_normalized_jost(j in jacobi(6), z in disk_point(0.9)) {
        let u = jost_function(&j);
        let ratio = u.eval(z) / u.eval(Complex64::default());
        let det = perturbation_determinant(&j, z).unwrap();
        prop_assert!((det - ratio).norm() < 1e-10 * ratio.norm().max(1.0));
    }

    #[test]
    fn continued_fraction_matches_jost(j in jacobi(6), z in disk_point(0.3)) {
        let cf = m_continued_fraction(&j, z, j.len()).unwrap();
        let jost = m_from_jost(&j, z).unwrap();
        prop_assert!((cf - jost).norm() < 1e-10 * cf.norm().max(1.0));
    }

    #[test]
    fn sturm_counts_bound_states(j in jacobi(6)) {
        let states = bound_states(&j).unwrap();
        let above = states.iter().filter(|s| s.z > 0.0).count();
        let below = states.len() - above;
        // Eigenvectors decay like |z|ⁿ; truncate well past that.
        let slowest = states.iter().map(|s| s.z.abs()).fold(0.0, f64::max);
        let n_max = j.support() + 60 + (40.0 / (1.0 - slowest)).ceil() as usize;
        prop_assert_eq!(sturm_count(&j, n_max).unwrap(), (above, below));
    }

    #[test]
    fn forward_weights_are_canonical(j in jacobi(6)) {
        let u = jost_function(&j);
        for s in bound_states(&j).unwrap() {
            let w = residue_to_weight(s.z, canonical_weight(&u, s.z).unwrap());
            prop_assert!((w - s.weight).abs() < 1e-8 * s.weight.max(1.0), "z={} {} vs {}", s.z, w, s.weight);
        }
    }

    #[test]
    fn forward_measure_is_normalized(j in jacobi(6)) {
        let d = SpectralData::from_jacobi(&j).unwrap();
        prop_assert!(normalization_check(&d, 512).unwrap() < 1e-10);
    }

    #[test]
    fn schur_round_trip(seq in alphas(10)) {
        let rec = schur_inverse(&SchurEvaluator::of_sequence(&seq, 0), seq.len() - 1).unwrap();
        for n in 0..seq.len() {
            prop_assert!((rec.alpha(n) - seq.alpha(n)).norm() < 1e-10);
        }
    }

    #[test]
    fn relative_szego_formulas_agree(seq in alphas(6), z in disk_point(0.9)) {
        for n in 0..seq.len() {
            let f = SchurEvaluator::of_sequence(&seq, n);
            let g = SchurEvaluator::of_sequence(&seq, n + 1);
            prop_assert!(relative_szego_cross_check(seq.alpha(n), &f, &g, z).unwrap().2 < 1e-12);
        }
    }

    /// For a finite sequence `D = ∏ δₙD = Πρ / φ*_L`.
    #[test]
    fn telescoping_product_is_bernstein_szego(seq in alphas(6), z in disk_point(0.9)) {
        let len = seq.len();
        let mut prod = Complex64::new(1.0, 0.0);
        for n in 0..len {
            let f = SchurEvaluator::of_sequence(&seq, n);
            let g = SchurEvaluator::of_sequence(&seq, n + 1);
            prod *= relative_szego(seq.alpha(n), &f, &g, z).unwrap();
        }
        let prod_rho: f64 = (0..len).map(|k| seq.rho(k)).product();
        let d = prod_rho / szego_recursion(&seq, len).eval_phi_star(z);
        prop_assert!((prod - d).norm() < 1e-10 * d.norm().max(1.0));
    }

    /// One update carries `(D⁽⁰⁾)⁻¹` to `(D⁽¹⁾)⁻¹` of the shifted sequence,
    /// within the measured bound.
    #[test]
    fn dinv_update_shifts(seq in alphas(5), r in 1.05f64..1.5) {
        let len = seq.len();
        let dinv = |s: &VerblunskySeq, z: Complex64| {
            let rho: f64 = (0..s.len()).map(|k| s.rho(k)).product();
            szego_recursion(s, s.len()).eval_phi_star(z) / rho
        };
        let grid = CircleGrid::sample(r, 64, |z| dinv(&seq, z)).unwrap();
        let step = dinv_update(&grid, &SchurEvaluator::of_sequence(&seq, 0), seq.alpha(0)).unwrap();
        let shifted = seq.shifted(1);
        for (z, v) in step.grid.points().into_iter().zip(step.grid.values()) {
            let want = dinv(&shifted, z);
            prop_assert!((v - want).norm() < 1e-9 * want.norm().max(1.0), "len {len}: {v} vs {want}");
        }
        prop_assert!(step.seminorm_after <= step.bound * (1.0 + 1e-9) + 1e-12);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn stripping_recovers_parameters(j in jacobi(4)) {
        let d = SpectralData::from_jacobi(&j).unwrap();
        let count = j.len() + 3;
        let rec = recover_jacobi(&d, count, &StripConfig::default()).unwrap();
        prop_assert!(rec.diagnostics.analyticity_loss.is_none());
        for n in 1..=count {
            prop_assert!((rec.params.a(n) - j.a(n)).abs() < 1e-7, "a{n}");
            prop_assert!((rec.params.b(n) - j.b(n)).abs() < 1e-7, "b{n}");
        }
    }
}
