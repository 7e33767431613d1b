use dirac_tensor::special::{adaptive_simpson, log_gamma, LaguerreSpec};
use proptest::prelude::*;

#[test]
fn three_term_recurrence_holds() {
    for alpha in [0.1, 1.0, 2.6, 7.0] {
        for step in 1..=500 {
            let x = 0.1 * f64::from(step);
            for n in 1..30u32 {
                let next = LaguerreSpec::new(n + 1, alpha).unwrap().eval(x);
                let cur = LaguerreSpec::new(n, alpha).unwrap().eval(x);
                let prev = LaguerreSpec::new(n - 1, alpha).unwrap().eval(x);
                let nf = f64::from(n);
                let lhs = (nf + 1.0) * next;
                let terms = [(2.0 * nf + 1.0 + alpha - x) * cur, (nf + alpha) * prev];
                let scale = lhs.abs().max(terms[0].abs()).max(terms[1].abs());
                assert!(
                    (lhs - (terms[0] - terms[1])).abs() <= 1e-10 * scale,
                    "n={n} alpha={alpha} x={x}"
                );
            }
        }
    }
}

#[test]
fn orthogonality_by_adaptive_quadrature() {
    for alpha in [0.0, 1.0, 3.0] {
        for m in 0..=6 {
            for n in 0..m {
                let lm = LaguerreSpec::new(m, alpha).unwrap();
                let ln = LaguerreSpec::new(n, alpha).unwrap();
                let overlap =
                    adaptive_simpson(|x| x.powf(alpha) * (-x).exp() * lm.eval(x) * ln.eval(x), 0.0, 200.0, 1e-12, 40);
                assert!(overlap.abs() < 1e-9, "m={m} n={n} alpha={alpha}: {overlap}");
            }
        }
    }
}

proptest! {
    #[test]
    fn derivative_matches_finite_difference(n in 1u32..12, alpha in -0.9f64..8.0, x in 0.05f64..30.0) {
        let spec = LaguerreSpec::new(n, alpha).unwrap();
        let h = 1e-4 * x.max(1.0);
        // Richardson-extrapolated central difference.
        let d = |h: f64| (spec.eval(x + h) - spec.eval(x - h)) / (2.0 * h);
        let fd = (4.0 * d(h / 2.0) - d(h)) / 3.0;
        let exact = spec.derivative(x);
        let scale = spec.eval(x).abs().max(exact.abs());
        // Away from roots: skip points where the derivative itself is tiny.
        prop_assume!(exact.abs() > 1e-3 * scale);
        prop_assert!((exact - fd).abs() <= 1e-8 * scale.max(1.0), "exact={} fd={}", exact, fd);
    }

    #[test]
    fn log_gamma_functional_equation(x in 0.5f64..199.0) {
        let lhs = log_gamma(x + 1.0).unwrap() - log_gamma(x).unwrap();
        let scale = log_gamma(x + 1.0).unwrap().abs().max(1.0);
        prop_assert!((lhs - x.ln()).abs() <= 1e-12 * scale);
    }
}
