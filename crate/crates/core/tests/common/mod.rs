//! Independent oracles shared by the integration tests. Nothing here calls the
//! crate's generic reduction; each equation is written out by hand.

#![allow(dead_code, clippy::neg_cmp_op_on_partial_ord)]

use std::f64::consts::PI;

use harmap::closedform::{lnr_thm1, q_exact, r_thm2, riccati_h, v_invsq_prop4, x_thm1};

/// Annulus target, written as `f'' + f'/r − f/r² − S(f) ((f')² − f²/r²)` with
/// `S = (sin(k ln f) + k cos(k ln f)) / (f sin(k ln f))`.
pub fn annulus_instance(a: f64, r: f64, f: f64, fp: f64, fpp: f64) -> f64 {
    let k = PI / a;
    let t = k * f.ln();
    let s = (t.sin() + k * t.cos()) / (f * t.sin());
    fpp + fp / r - f / (r * r) - s * (fp * fp - f * f / (r * r))
}

/// Punctured-disc target: `S = (1 + ln g) / (g ln g)`.
pub fn punctured_instance(r: f64, g: f64, gp: f64, gpp: f64) -> f64 {
    let s = (1.0 + g.ln()) / (g * g.ln());
    gpp + gp / r - g / (r * r) - s * (gp * gp - g * g / (r * r))
}

pub fn euclid_instance(r: f64, h: f64, hp: f64, hpp: f64) -> f64 {
    hpp + hp / r - h / (r * r)
}

pub fn poincare_instance(r: f64, k: f64, kp: f64, kpp: f64) -> f64 {
    kpp + kp / r - k / (r * r) + 2.0 * k / (1.0 - k * k) * (kp * kp - k * k / (r * r))
}

fn central(f: impl Fn(f64) -> f64, x: f64, h: f64) -> f64 {
    (f(x + h) - f(x - h)) / (2.0 * h)
}

/// Largest `|x' + κx − κx³|` over 200 interior points, with `x'` by central
/// differences at step `1e-6`.
pub fn bernoulli_max_residual(a: f64, c0: f64) -> f64 {
    let k = PI / a;
    (0..200)
        .map(|i| {
            let f = -a * (i as f64 + 0.5) / 200.0;
            let x = x_thm1(f, a, c0).unwrap();
            let dx = central(|t| x_thm1(t, a, c0).unwrap(), f, 1e-6);
            let kappa = k / (k * f).tan();
            (dx + kappa * x - kappa * x.powi(3)).abs()
        })
        .fold(0.0, f64::max)
}

/// Largest `|w' + 4k w/(1 − k²) − 2(k + k³)/(1 − k²)|` for `w = k² + c5 (1 − k²)²`.
pub fn linear_max_residual(c5: f64) -> f64 {
    (0..200)
        .map(|i| {
            let k = (i as f64 + 0.5) / 200.0;
            let w = v_invsq_prop4(k, c5).unwrap();
            let dw = central(|t| v_invsq_prop4(t, c5).unwrap(), k, 1e-6);
            let lhs = dw + 4.0 * k / (1.0 - k * k) * w;
            (lhs - 2.0 * (k + k.powi(3)) / (1.0 - k * k)).abs()
        })
        .fold(0.0, f64::max)
}

/// Largest `|H' + H² + H/r − 1/r²|` with the exact derivative of `H`, on
/// `[0.05, 1]`, skipping points near a pole of `H`.
pub fn riccati_max_residual(c3: f64) -> f64 {
    (0..500)
        .filter_map(|i| {
            let r = 0.05 + 0.95 * i as f64 / 499.0;
            let p = 1.0 + c3 * r * r;
            if p.abs() < 1e-2 {
                return None;
            }
            let h = riccati_h(r, c3).ok()?.value();
            let dh = 1.0 / (r * r) + 2.0 * c3 * (1.0 - c3 * r * r) / (p * p);
            Some((dh + h * h + h / r - 1.0 / (r * r)).abs())
        })
        .fold(0.0, f64::max)
}

/// Largest `|d/dF lnr(F) − x(F)|` with the derivative by central differences.
pub fn duality_max_error(a: f64, c0: f64) -> f64 {
    let h = 1e-4 * a;
    (1..50)
        .map(|i| {
            let f = -a * i as f64 / 50.0;
            let d = central(|t| lnr_thm1(t, a, c0, 1e-13).unwrap(), f, h);
            (d - x_thm1(f, a, c0).unwrap()).abs()
        })
        .fold(0.0, f64::max)
}

/// `r_thm2` strictly increasing in `G` on 1000 points of `[-50, 0]`.
pub fn r_thm2_increasing(c1: f64) -> bool {
    let vals: Vec<f64> = (0..1000)
        .map(|i| r_thm2(-50.0 + 50.0 * i as f64 / 999.0, c1).unwrap())
        .collect();
    vals.windows(2).all(|w| w[1] > w[0])
}

/// `q_exact` strictly increasing on 1000 points of `[e^{-a}, 1]`.
pub fn q_increasing(a: f64) -> bool {
    let lo = (-a).exp();
    let vals: Vec<f64> = (0..1000)
        .map(|i| q_exact((lo + (1.0 - lo) * i as f64 / 999.0).min(1.0), a).unwrap())
        .collect();
    vals.windows(2).all(|w| w[1] > w[0])
}

/// `lnr_thm1(−a) ∈ [−a, −a/√(1+c0)]` for `c0 ≥ 0`.
pub fn lnr_range_holds(a: f64, c0: f64) -> bool {
    let v = lnr_thm1(-a, a, c0, 1e-13).unwrap();
    let slack = 1e-12 * a;
    v >= -a - slack && v <= -a / (1.0 + c0).sqrt() + slack
}

/// Runs every first-integral suite at its stated tolerance; returns the
/// failures as human-readable strings.
pub fn first_integral_failures() -> Vec<String> {
    let mut out = Vec::new();
    for (a, c0) in [(1.0, 0.0), (1.0, 3.0), (2.0, 0.5), (0.5, 10.0), (1.0, -0.5)] {
        let r = bernoulli_max_residual(a, c0);
        if !(r <= 1e-6) {
            out.push(format!("bernoulli a={a} c0={c0}: {r:e}"));
        }
    }
    for c5 in [0.0, 0.5, 1.0, 100.0] {
        let r = linear_max_residual(c5);
        if !(r <= 1e-6) {
            out.push(format!("linear c5={c5}: {r:e}"));
        }
    }
    for c3 in [-2.0, -0.5, 0.0, 1.0, 5.0, 100.0] {
        let r = riccati_max_residual(c3);
        if !(r <= 1e-10) {
            out.push(format!("riccati c3={c3}: {r:e}"));
        }
    }
    for (a, c0) in [(1.0, 0.0), (1.0, 3.0), (2.0, 100.0)] {
        let e = duality_max_error(a, c0);
        if !(e <= 1e-6) {
            out.push(format!("duality a={a} c0={c0}: {e:e}"));
        }
        if !lnr_range_holds(a, c0) {
            out.push(format!("range bound a={a} c0={c0}"));
        }
    }
    for c1 in [0.1, 1.0, 10.0] {
        if !r_thm2_increasing(c1) {
            out.push(format!("r_thm2 monotonicity c1={c1}"));
        }
    }
    for a in [std::f64::consts::LN_2, 1.0, 3.0] {
        if !q_increasing(a) {
            out.push(format!("q monotonicity a={a}"));
        }
    }
    out
}
