mod common;

use common::*;

#[test]
fn bernoulli_equation_holds() {
    for (a, c0) in [(1.0, 0.0), (1.0, 3.0), (2.0, 0.5), (0.5, 10.0), (1.0, -0.5)] {
        let r = bernoulli_max_residual(a, c0);
        assert!(r <= 1e-6, "a={a} c0={c0}: {r:e}");
    }
}

#[test]
fn linear_equation_holds() {
    for c5 in [0.0, 0.5, 1.0, 100.0] {
        let r = linear_max_residual(c5);
        assert!(r <= 1e-6, "c5={c5}: {r:e}");
    }
}

#[test]
fn riccati_equation_holds() {
    for c3 in [-2.0, -0.5, 0.0, 1.0, 5.0, 100.0] {
        let r = riccati_max_residual(c3);
        assert!(r <= 1e-10, "c3={c3}: {r:e}");
    }
}

#[test]
fn lnr_differentiates_to_x() {
    for (a, c0) in [(1.0, 0.0), (1.0, 3.0), (2.0, 100.0)] {
        let e = duality_max_error(a, c0);
        assert!(e <= 1e-6, "a={a} c0={c0}: {e:e}");
    }
}

#[test]
fn lnr_range_bound() {
    for a in [0.1, 1.0, 4.0] {
        for c0 in [0.0, 0.5, 3.0, 1e4] {
            assert!(lnr_range_holds(a, c0), "a={a} c0={c0}");
        }
    }
}

#[test]
fn monotone_families() {
    for c1 in [0.1, 1.0, 10.0, 1e3] {
        assert!(r_thm2_increasing(c1), "c1={c1}");
    }
    for a in [0.01, std::f64::consts::LN_2, 1.0, 3.0] {
        assert!(q_increasing(a), "a={a}");
    }
}

#[test]
fn combined_suite_is_clean() {
    assert_eq!(first_integral_failures(), Vec::<String>::new());
}
