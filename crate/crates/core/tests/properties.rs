mod common;

use common::*;
use harmap::certify::{
    certify_prop4, certify_thm1, certify_thm2, invert_annulus_domain, invert_annulus_target,
};
use harmap::closedform::{lnr_thm1, substitute_log, swap_derivatives, swap_to_r_of_f};
use harmap::numerics::{integrate_ivp, IvpSpec};
use harmap::radial::{residual_1d, residual_2d};
use harmap::{reduce, ConformalMetric};
use num_complex::Complex64;
use proptest::prelude::*;

fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * (1.0 + a.abs().max(b.abs()))
}

/// A point of the annulus value range kept away from its ends, as a fraction.
fn annulus_value(a: f64, t: f64) -> f64 {
    (-a * t).exp()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn sigma_is_positive(rho in 1e-6f64..0.999_999, a in 0.05f64..8.0, t in 0.001f64..0.999) {
        prop_assert!(ConformalMetric::EUCLIDEAN.sigma(rho).unwrap() > 0.0);
        prop_assert!(ConformalMetric::POINCARE_DISC.sigma(rho).unwrap() > 0.0);
        prop_assert!(ConformalMetric::PUNCTURED_DISC.sigma(rho).unwrap() > 0.0);
        let m = ConformalMetric::annulus(a).unwrap();
        prop_assert!(m.sigma(annulus_value(a, t)).unwrap() > 0.0);
    }

    #[test]
    fn dlog_matches_finite_differences(t in 0.05f64..0.95, a in 0.2f64..5.0) {
        let metrics = [
            (ConformalMetric::POINCARE_DISC, 0.05 + 0.85 * t),
            (ConformalMetric::PUNCTURED_DISC, 0.05 + 0.9 * t),
            (ConformalMetric::annulus(a).unwrap(), annulus_value(a, t)),
        ];
        for (m, rho) in metrics {
            let h = 1e-6 * rho;
            let fd = (m.sigma(rho + h).unwrap().ln() - m.sigma(rho - h).unwrap().ln()) / (2.0 * h);
            let d = m.dlog_sigma(rho).unwrap();
            prop_assert!(close(fd, d, 1e-6), "{m}: fd={fd} exact={d}");
        }
    }

    #[test]
    fn specializes_to_instance_equations(
        r in 0.05f64..3.0, t in 0.05f64..0.95, fp in -3.0f64..3.0, fpp in -5.0f64..5.0, a in 0.2f64..4.0
    ) {
        let e = reduce(ConformalMetric::EUCLIDEAN);
        let f = 0.1 + 2.0 * t;
        prop_assert!(close(residual_1d(&e, r, f, fp, fpp).unwrap(), euclid_instance(r, f, fp, fpp), 1e-12));

        let p = reduce(ConformalMetric::POINCARE_DISC);
        let f = 0.9 * t;
        prop_assert!(close(residual_1d(&p, r, f, fp, fpp).unwrap(), poincare_instance(r, f, fp, fpp), 1e-12));

        let d = reduce(ConformalMetric::PUNCTURED_DISC);
        let f = 0.05 + 0.9 * t;
        prop_assert!(close(residual_1d(&d, r, f, fp, fpp).unwrap(), punctured_instance(r, f, fp, fpp), 1e-12));

        let an = reduce(ConformalMetric::annulus(a).unwrap());
        let f = annulus_value(a, t);
        prop_assert!(close(residual_1d(&an, r, f, fp, fpp).unwrap(), annulus_instance(a, r, f, fp, fpp), 1e-12));
    }

    #[test]
    fn log_substitution_follows_chain_rule(
        r in 0.05f64..2.0, t in 0.05f64..0.95, fp in -3.0f64..3.0, fpp in -5.0f64..5.0, a in 0.2f64..4.0
    ) {
        let cases = [
            (ConformalMetric::annulus(a).unwrap(), annulus_value(a, t)),
            (ConformalMetric::PUNCTURED_DISC, 0.05 + 0.9 * t),
        ];
        for (m, f) in cases {
            let ode = reduce(m);
            let log = substitute_log(&ode).unwrap();
            let big_f = f.ln();
            let d1 = fp / f;
            let d2 = fpp / f - d1 * d1;
            let via_log = log.residual(r, big_f, d1, d2).unwrap();
            let via_f = residual_1d(&ode, r, f, fp, fpp).unwrap() / f;
            prop_assert!(close(via_log, via_f, 1e-12), "{m}: {via_log} vs {via_f}");
        }
    }

    #[test]
    fn swapped_form_follows_inverse_function_rule(
        r in 0.05f64..2.0, t in 0.05f64..0.95, fp in 0.1f64..3.0, fpp in -5.0f64..5.0, a in 0.2f64..4.0
    ) {
        let cases = [
            (ConformalMetric::annulus(a).unwrap(), annulus_value(a, t)),
            (ConformalMetric::PUNCTURED_DISC, 0.05 + 0.9 * t),
        ];
        for (m, f) in cases {
            let log = substitute_log(&reduce(m)).unwrap();
            let big_f = f.ln();
            let d1 = fp / f;
            let d2 = fpp / f - d1 * d1;
            let (r_f, r_ff) = swap_derivatives(d1, d2).unwrap();
            prop_assert!(close(r_f, 1.0 / d1, 1e-14));
            prop_assert!(close(r_ff, -d2 / d1.powi(3), 1e-14));
            let swapped = swap_to_r_of_f(log).residual(big_f, r, r_f, r_ff).unwrap();
            let expected = -(r_f.powi(3) / r) * log.residual(r, big_f, d1, d2).unwrap();
            prop_assert!(close(swapped, expected, 1e-10), "{m}: {swapped} vs {expected}");
        }
    }

    #[test]
    fn annulus_target_inversion_preserves_harmonicity(
        r in 0.05f64..2.0, t in 0.05f64..0.95, fp in -3.0f64..3.0, a in 0.2f64..4.0
    ) {
        let ode = reduce(ConformalMetric::annulus(a).unwrap());
        let f = annulus_value(a, t);
        let fpp = ode.phi(r, f, fp).unwrap();
        let (g, gp, gpp) = invert_annulus_target(a, f, fp, fpp);
        let scale = gpp.abs() + gp.abs() / r + g / (r * r);
        let res = residual_1d(&ode, r, g, gp, gpp).unwrap();
        prop_assert!(res.abs() <= 1e-11 * (1.0 + scale), "{res}");
    }

    #[test]
    fn annulus_domain_inversion_preserves_harmonicity(
        s_frac in 0.01f64..0.99, t in 0.05f64..0.95, gp in -3.0f64..3.0, a in 0.2f64..4.0
    ) {
        let inner = (-a).exp();
        let s = inner + (1.0 - inner) * s_frac;
        let r = inner / s;
        for m in [
            ConformalMetric::EUCLIDEAN,
            ConformalMetric::POINCARE_DISC,
            ConformalMetric::PUNCTURED_DISC,
            ConformalMetric::annulus(a).unwrap(),
        ] {
            let ode = reduce(m);
            let g = match m.modulus() {
                Some(a) => annulus_value(a, t),
                None => 0.05 + 0.9 * t,
            };
            let gpp = ode.phi(s, g, gp).unwrap();
            let (h, hp, hpp) = invert_annulus_domain(a, r, g, gp, gpp);
            let scale = hpp.abs() + hp.abs() / r + h / (r * r);
            let res = residual_1d(&ode, r, h, hp, hpp).unwrap();
            prop_assert!(res.abs() <= 1e-11 * (1.0 + scale), "{m}: {res}");
        }
    }

    #[test]
    fn quadrature_is_stable_under_tighter_tolerance(a in 0.1f64..5.0, c0 in 0.0f64..1e3, frac in 0.05f64..1.0) {
        let f = -a * frac;
        let coarse = lnr_thm1(f, a, c0, 1e-8).unwrap();
        let fine = lnr_thm1(f, a, c0, 1e-9).unwrap();
        prop_assert!((coarse - fine).abs() <= 1e-8);
    }
}

#[test]
fn numerical_solutions_satisfy_the_2d_equation() {
    // Poincaré target, profile from the integrator.
    let ode = reduce(ConformalMetric::POINCARE_DISC);
    let spec = IvpSpec::new(ode, 0.4, 0.3, 0.6, 0.9).tolerances(1e-13, 1e-13);
    let profile = integrate_ivp(&spec).unwrap();
    let mut ratios = Vec::new();
    for j in 0..10 {
        let rho = 0.45 + 0.04 * j as f64;
        let z = Complex64::from_polar(rho, 0.7 * j as f64);
        let r1 = residual_2d(&ConformalMetric::POINCARE_DISC, &profile, z, 2e-3)
            .unwrap()
            .norm();
        let r2 = residual_2d(&ConformalMetric::POINCARE_DISC, &profile, z, 1e-3)
            .unwrap()
            .norm();
        assert!(r2 <= 10.0 * 1e-6, "rho={rho}: {r2:e}");
        ratios.push(r1 / r2);
    }
    let mean = ratios.iter().sum::<f64>() / ratios.len() as f64;
    assert!((2.5..=6.0).contains(&mean), "{ratios:?}");
}

#[test]
fn certificates_are_deterministic() {
    let a = || certify_thm1(1.0, &[0.0, 3.0, 1e4], 1e-9).unwrap().to_json();
    assert_eq!(a(), a());
    let b = || {
        certify_thm2(1.0, &[0.0, 1.0, 1e4], -1e6, 1e-12)
            .unwrap()
            .to_json()
    };
    assert_eq!(b(), b());
    let c = || certify_prop4(&[0.0, 1.0, 100.0], 1e-9).unwrap().to_json();
    assert_eq!(c(), c());
}

#[test]
fn prop4_lower_bound_matches_analytic_minimum() {
    for c5 in [0.1, 0.5, 1.0, 3.0, 100.0, 1e4] {
        let b2 = harmap::certify::prop4_lower_bound(c5).unwrap();
        let exact = harmap::certify::prop4_lower_bound_analytic(c5);
        assert!((b2 - exact).abs() <= 1e-9, "c5={c5}: {b2} vs {exact}");
        assert!(b2 <= c5.min(1.0) + 1e-12);
    }
}
