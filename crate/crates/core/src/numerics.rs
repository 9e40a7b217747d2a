//! Scalar numerical building blocks: an adaptive Dormand–Prince integrator
//! for second-order ODEs, adaptive Gauss–Kronrod quadrature, Brent's
//! bracketing root finder, and a shooting solver built from the three.

use crate::error::{Error, Result};
use crate::radial::{BoundaryLabels, ProfileRow, ProfileSample, RadialOde};

/// Offset used in place of a singular left endpoint `r = 0`.
pub const SINGULAR_START: f64 = 1e-6;

/// Relative step-size floor; reaching it is reported, never swallowed.
pub const STEP_FLOOR: f64 = 1e-14;

/// A scalar second-order ODE `y'' = accel(t, y, y')`.
pub trait SecondOrderOde {
    fn accel(&self, t: f64, y: f64, yp: f64) -> Result<f64>;

    /// Whether the state `(t, y)` is inside the region where the ODE is defined.
    fn admits(&self, t: f64, y: f64) -> bool;
}

impl<O: SecondOrderOde + ?Sized> SecondOrderOde for &O {
    fn accel(&self, t: f64, y: f64, yp: f64) -> Result<f64> {
        (**self).accel(t, y, yp)
    }

    fn admits(&self, t: f64, y: f64) -> bool {
        (**self).admits(t, y)
    }
}

#[derive(Debug, Clone)]
pub struct IvpSpec<O> {
    pub ode: O,
    pub r0: f64,
    pub f0: f64,
    pub fp0: f64,
    pub r1: f64,
    pub rtol: f64,
    pub atol: f64,
    pub max_step: Option<f64>,
    pub max_steps: usize,
}

impl<O: SecondOrderOde> IvpSpec<O> {
    pub fn new(ode: O, r0: f64, f0: f64, fp0: f64, r1: f64) -> Self {
        IvpSpec {
            ode,
            r0,
            f0,
            fp0,
            r1,
            rtol: 1e-12,
            atol: 1e-12,
            max_step: None,
            max_steps: 200_000,
        }
    }

    pub fn tolerances(mut self, rtol: f64, atol: f64) -> Self {
        self.rtol = rtol;
        self.atol = atol;
        self
    }

    pub fn max_step(mut self, h: f64) -> Self {
        self.max_step = Some(h);
        self
    }

    fn validate(&self) -> Result<()> {
        if !(self.r0.is_finite() && self.r1.is_finite()) || self.r0 == self.r1 {
            return Err(Error::Config(format!(
                "integration interval [{}, {}] is empty",
                self.r0, self.r1
            )));
        }
        if !(self.rtol > 0.0 && self.atol > 0.0) {
            return Err(Error::Config("tolerances must be positive".into()));
        }
        if !(self.f0.is_finite() && self.fp0.is_finite()) {
            return Err(Error::Config("initial state must be finite".into()));
        }
        if !self.ode.admits(self.r0, self.f0) {
            return Err(Error::OutOfDomain {
                quantity: "initial state",
                value: self.f0,
                domain: format!("admissible region of the ODE at t = {}", self.r0),
            });
        }
        Ok(())
    }
}

// Dormand–Prince 5(4) tableau.
const C: [f64; 7] = [0.0, 1.0 / 5.0, 3.0 / 10.0, 4.0 / 5.0, 8.0 / 9.0, 1.0, 1.0];
const A: [[f64; 6]; 7] = [
    [0.0; 6],
    [1.0 / 5.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [3.0 / 40.0, 9.0 / 40.0, 0.0, 0.0, 0.0, 0.0],
    [44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0, 0.0, 0.0, 0.0],
    [
        19372.0 / 6561.0,
        -25360.0 / 2187.0,
        64448.0 / 6561.0,
        -212.0 / 729.0,
        0.0,
        0.0,
    ],
    [
        9017.0 / 3168.0,
        -355.0 / 33.0,
        46732.0 / 5247.0,
        49.0 / 176.0,
        -5103.0 / 18656.0,
        0.0,
    ],
    [
        35.0 / 384.0,
        0.0,
        500.0 / 1113.0,
        125.0 / 192.0,
        -2187.0 / 6784.0,
        11.0 / 84.0,
    ],
];
// Difference between the fifth- and fourth-order weights.
const E: [f64; 7] = [
    71.0 / 57600.0,
    0.0,
    -71.0 / 16695.0,
    71.0 / 1920.0,
    -17253.0 / 339200.0,
    22.0 / 525.0,
    -1.0 / 40.0,
];

enum StepOutcome {
    Accepted {
        y: [f64; 2],
        k_last: [f64; 2],
        err: f64,
    },
    Rejected {
        err: f64,
    },
    LeftDomain,
}

fn dp_step<O: SecondOrderOde>(
    spec: &IvpSpec<O>,
    t: f64,
    y: [f64; 2],
    k0: [f64; 2],
    h: f64,
) -> StepOutcome {
    let mut k = [[0.0; 2]; 7];
    k[0] = k0;
    for s in 1..7 {
        let mut ys = y;
        for (j, kj) in k.iter().enumerate().take(s) {
            ys[0] += h * A[s][j] * kj[0];
            ys[1] += h * A[s][j] * kj[1];
        }
        let ts = t + C[s] * h;
        if !spec.ode.admits(ts, ys[0]) {
            return StepOutcome::LeftDomain;
        }
        match spec.ode.accel(ts, ys[0], ys[1]) {
            Ok(acc) if acc.is_finite() && ys[1].is_finite() => k[s] = [ys[1], acc],
            _ => return StepOutcome::LeftDomain,
        }
    }
    // FSAL: the seventh stage is evaluated at the fifth-order solution.
    let mut ynew = y;
    for (j, kj) in k.iter().enumerate().take(6) {
        ynew[0] += h * A[6][j] * kj[0];
        ynew[1] += h * A[6][j] * kj[1];
    }
    let mut sum = 0.0;
    for i in 0..2 {
        let e: f64 = (0..7).map(|s| E[s] * k[s][i]).sum::<f64>() * h;
        let scale = spec.atol + spec.rtol * y[i].abs().max(ynew[i].abs());
        sum += (e / scale).powi(2);
    }
    let err = (sum / 2.0).sqrt();
    if err <= 1.0 {
        StepOutcome::Accepted {
            y: ynew,
            k_last: k[6],
            err,
        }
    } else {
        StepOutcome::Rejected { err }
    }
}

/// Integrates `f'' = accel(r, f, f')` from `r0` to `r1` (either direction).
///
/// The returned sample holds the accepted steps, including both endpoints.
pub fn integrate_ivp<O: SecondOrderOde>(spec: &IvpSpec<O>) -> Result<ProfileSample> {
    spec.validate()?;
    let dir = (spec.r1 - spec.r0).signum();
    let span = (spec.r1 - spec.r0).abs();
    let hmax = spec.max_step.unwrap_or(span).min(span);

    let mut t = spec.r0;
    let mut y = [spec.f0, spec.fp0];
    let acc0 = spec.ode.accel(t, y[0], y[1])?;
    let mut k0 = [y[1], acc0];

    let mut rows = vec![ProfileRow {
        r: t,
        f: y[0],
        fprime: y[1],
    }];
    let mut second = vec![acc0];

    let mut h = initial_step(spec, k0).min(hmax);
    let mut steps = 0usize;

    loop {
        let remaining = (spec.r1 - t).abs();
        if remaining <= 0.0 {
            break;
        }
        let last = h >= remaining;
        let step = if last { remaining } else { h };
        let floor = STEP_FLOOR * t.abs().max(1.0);
        if step < floor && !last {
            return Err(Error::StepUnderflow { t, h: step });
        }
        steps += 1;
        if steps > spec.max_steps {
            return Err(Error::MaxStepsExceeded {
                steps: spec.max_steps,
                t,
            });
        }

        match dp_step(spec, t, y, k0, dir * step) {
            StepOutcome::Accepted {
                y: ynew,
                k_last,
                err,
            } => {
                t = if last { spec.r1 } else { t + dir * step };
                y = ynew;
                k0 = k_last;
                rows.push(ProfileRow {
                    r: t,
                    f: y[0],
                    fprime: y[1],
                });
                second.push(k_last[1]);
                let fac = if err == 0.0 {
                    5.0
                } else {
                    (0.9 * err.powf(-0.2)).clamp(0.2, 5.0)
                };
                h = (step * fac).min(hmax);
                if last {
                    break;
                }
            }
            StepOutcome::Rejected { err } => {
                h = step * (0.9 * err.powf(-0.2)).clamp(0.1, 0.9);
                if h < floor {
                    return Err(Error::StepUnderflow { t, h });
                }
            }
            StepOutcome::LeftDomain => {
                h = step * 0.25;
                if h < floor {
                    return Err(Error::SingularityStop {
                        t,
                        y: y[0],
                        reason: format!(
                            "solution leaves the admissible region beyond f = {}",
                            y[0]
                        ),
                    });
                }
            }
        }
    }

    ProfileSample::new(rows, second)
}

fn initial_step<O: SecondOrderOde>(spec: &IvpSpec<O>, k0: [f64; 2]) -> f64 {
    let y = [spec.f0, spec.fp0];
    let d0 = y
        .iter()
        .map(|v| (v / (spec.atol + spec.rtol * v.abs())).powi(2))
        .sum::<f64>()
        .sqrt();
    let d1 = (0..2)
        .map(|i| (k0[i] / (spec.atol + spec.rtol * y[i].abs())).powi(2))
        .sum::<f64>()
        .sqrt();
    let span = (spec.r1 - spec.r0).abs();
    let h = if d0 < 1e-5 || d1 < 1e-5 {
        1e-6
    } else {
        0.01 * d0 / d1
    };
    // Cap at a fraction of the interval and of the distance to a possibly
    // singular origin.
    h.min(span / 10.0)
        .min(0.1 * spec.r0.abs().max(1e-12))
        .max(1e-12 * span)
}

// Gauss–Kronrod 15-point rule (7-point Gauss embedded).
const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

fn gk15<F: FnMut(f64) -> f64>(f: &mut F, lo: f64, hi: f64) -> (f64, f64) {
    let center = 0.5 * (lo + hi);
    let half = 0.5 * (hi - lo);
    let fc = f(center);
    let mut kronrod = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    for j in 0..7 {
        let dx = half * XGK[j];
        let pair = f(center - dx) + f(center + dx);
        kronrod += WGK[j] * pair;
        if j % 2 == 1 {
            gauss += WG[j / 2] * pair;
        }
    }
    (kronrod * half, ((kronrod - gauss) * half).abs())
}

/// Adaptive quadrature of `f` over `[lo, hi]` to absolute error `tol`.
///
/// The rule never samples the interval endpoints, so integrands whose
/// defining formula degenerates there are fine as long as they stay bounded.
pub fn quad<F: FnMut(f64) -> f64>(mut f: F, lo: f64, hi: f64, tol: f64) -> Result<f64> {
    if !(tol > 0.0) {
        return Err(Error::Config(format!(
            "quadrature tolerance must be positive, got {tol}"
        )));
    }
    if lo == hi {
        return Ok(0.0);
    }
    if lo > hi {
        return quad(f, hi, lo, tol).map(|v| -v);
    }
    const MAX_INTERVALS: usize = 5000;

    let (v, e) = gk15(&mut f, lo, hi);
    let mut parts = vec![(lo, hi, v, e)];
    loop {
        let total_err: f64 = parts.iter().map(|p| p.3).sum();
        if total_err <= tol {
            return Ok(parts.iter().map(|p| p.2).sum());
        }
        if parts.len() >= MAX_INTERVALS {
            return Err(Error::QuadratureNonConvergence {
                intervals: parts.len(),
                estimate: total_err,
            });
        }
        let (worst, _) = parts
            .iter()
            .enumerate()
            .max_by(|x, y| x.1 .3.total_cmp(&y.1 .3))
            .unwrap();
        let (a, b, _, _) = parts.swap_remove(worst);
        let mid = 0.5 * (a + b);
        if !(mid > a && mid < b) {
            return Err(Error::QuadratureNonConvergence {
                intervals: parts.len() + 1,
                estimate: total_err,
            });
        }
        let (vl, el) = gk15(&mut f, a, mid);
        let (vr, er) = gk15(&mut f, mid, b);
        parts.push((a, mid, vl, el));
        parts.push((mid, b, vr, er));
    }
}

/// Brent's method on a sign-changing bracket; the final bracket is no wider
/// than `tol` (plus a few ulps of the root).
pub fn find_root<F: FnMut(f64) -> f64>(mut f: F, lo: f64, hi: f64, tol: f64) -> Result<f64> {
    try_find_root(|x| Ok(f(x)), lo, hi, tol)
}

/// [`find_root`] for functions that can fail, such as a shooting mismatch.
pub fn try_find_root<F>(mut f: F, lo: f64, hi: f64, tol: f64) -> Result<f64>
where
    F: FnMut(f64) -> Result<f64>,
{
    const MAX_ITER: usize = 200;
    let (mut a, mut b) = (lo, hi);
    let (mut fa, mut fb) = (f(a)?, f(b)?);
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if !(fa.is_finite() && fb.is_finite()) || fa.signum() == fb.signum() {
        return Err(Error::InvalidBracket {
            lo,
            hi,
            f_lo: fa,
            f_hi: fb,
        });
    }
    let (mut c, mut fc) = (a, fa);
    let mut d = b - a;
    let mut e = d;

    for _ in 0..MAX_ITER {
        if fb.signum() == fc.signum() {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if fc.abs() < fb.abs() {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        let tol1 = 2.0 * f64::EPSILON * b.abs() + 0.5 * tol;
        let xm = 0.5 * (c - b);
        if xm.abs() <= tol1 || fb == 0.0 {
            return Ok(b);
        }
        if e.abs() >= tol1 && fa.abs() > fb.abs() {
            // Inverse quadratic interpolation, or secant when only two points.
            let s = fb / fa;
            let (mut p, mut q) = if a == c {
                (2.0 * xm * s, 1.0 - s)
            } else {
                let qa = fa / fc;
                let r = fb / fc;
                (
                    s * (2.0 * xm * qa * (qa - r) - (b - a) * (r - 1.0)),
                    (qa - 1.0) * (r - 1.0) * (s - 1.0),
                )
            };
            if p > 0.0 {
                q = -q;
            }
            p = p.abs();
            let min1 = 3.0 * xm * q - (tol1 * q).abs();
            let min2 = (e * q).abs();
            if 2.0 * p < min1.min(min2) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += if d.abs() > tol1 { d } else { tol1.copysign(xm) };
        fb = f(b)?;
    }
    Err(Error::RootNonConvergence {
        iterations: MAX_ITER,
    })
}

/// Two-point boundary value problem `f(r_left) = f_left`, `f(r_right) = f_right`
/// solved by shooting on the initial slope `f'(r_left)`.
#[derive(Debug, Clone)]
pub struct ShootingProblem {
    pub ode: RadialOde,
    pub r_left: f64,
    pub f_left: f64,
    pub r_right: f64,
    pub f_right: f64,
    pub bracket: (f64, f64),
    /// Width of the final slope bracket.
    pub tol: f64,
    /// Relative and absolute tolerance of each trial integration.
    pub ivp_tol: f64,
}

impl ShootingProblem {
    /// Builds the problem and checks that the bracket straddles a root of the
    /// mismatch. A left endpoint at `r = 0` is moved to [`SINGULAR_START`].
    pub fn new(
        ode: RadialOde,
        left: (f64, f64),
        right: (f64, f64),
        bracket: (f64, f64),
        tol: f64,
    ) -> Result<Self> {
        let r_left = if left.0 <= 0.0 {
            SINGULAR_START
        } else {
            left.0
        };
        if !(right.0 > r_left) {
            return Err(Error::Config(format!(
                "shooting needs r_left < r_right, got {r_left} and {}",
                right.0
            )));
        }
        if !(tol > 0.0) {
            return Err(Error::Config("shooting tolerance must be positive".into()));
        }
        let problem = ShootingProblem {
            ode,
            r_left,
            f_left: left.1,
            r_right: right.0,
            f_right: right.1,
            bracket,
            tol,
            ivp_tol: 1e-12,
        };
        let lo = problem.mismatch(bracket.0)?;
        let hi = problem.mismatch(bracket.1)?;
        if !(lo.is_finite() && hi.is_finite())
            || (lo != 0.0 && hi != 0.0 && lo.signum() == hi.signum())
        {
            return Err(Error::InvalidBracket {
                lo: bracket.0,
                hi: bracket.1,
                f_lo: lo,
                f_hi: hi,
            });
        }
        Ok(problem)
    }

    fn trajectory(&self, slope: f64) -> Result<ProfileSample> {
        let spec = IvpSpec::new(self.ode, self.r_left, self.f_left, slope, self.r_right)
            .tolerances(self.ivp_tol, self.ivp_tol);
        integrate_ivp(&spec)
    }

    /// `f(r_right; s) − f_right`. A trajectory that leaves the metric's value
    /// domain early is scored by its exit value, which has the sign of the
    /// overshoot.
    pub fn mismatch(&self, slope: f64) -> Result<f64> {
        match self.trajectory(slope) {
            Ok(profile) => Ok(profile.last().f - self.f_right),
            Err(Error::SingularityStop { y, .. }) => Ok(y - self.f_right),
            Err(e) => Err(e),
        }
    }
}

/// Solves the boundary value problem; the result carries the boundary labels.
pub fn shoot(problem: &ShootingProblem) -> Result<ProfileSample> {
    let slope = try_find_root(
        |s| problem.mismatch(s),
        problem.bracket.0,
        problem.bracket.1,
        problem.tol,
    )?;
    Ok(problem.trajectory(slope)?.with_labels(BoundaryLabels {
        inner: Some(problem.f_left),
        outer: Some(problem.f_right),
    }))
}

/// Slope at the left end of a converged shooting profile.
pub fn shooting_slope(profile: &ProfileSample) -> f64 {
    profile.first().fprime
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metrics::ConformalMetric;
    use crate::radial::reduce;
    use approx::assert_abs_diff_eq;

    fn euclid() -> RadialOde {
        reduce(ConformalMetric::EUCLIDEAN)
    }

    #[test]
    fn ivp_reaches_q_endpoint() {
        let spec = IvpSpec::new(euclid(), 0.5, 0.0, 8.0 / 3.0, 1.0);
        let p = integrate_ivp(&spec).unwrap();
        assert_eq!(p.last().r, 1.0);
        assert_abs_diff_eq!(p.last().f, 1.0, epsilon = 1e-8);
    }

    #[test]
    fn ivp_preserves_identity() {
        let spec = IvpSpec::new(euclid(), 0.5, 0.5, 1.0, 1.0);
        let p = integrate_ivp(&spec).unwrap();
        for row in p.rows() {
            assert_abs_diff_eq!(row.f, row.r, epsilon = 1e-12);
            assert_abs_diff_eq!(row.fprime, 1.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn ivp_runs_backwards() {
        let spec = IvpSpec::new(euclid(), 1.0, 1.0, 1.0, 0.25);
        let p = integrate_ivp(&spec).unwrap();
        assert_eq!(p.first().r, 0.25);
        assert_abs_diff_eq!(p.first().f, 0.25, epsilon = 1e-12);
    }

    #[test]
    fn ivp_stops_at_domain_boundary() {
        // Punctured-disc target: a steep start drives f to 1 before r = 1.
        let ode = reduce(ConformalMetric::PUNCTURED_DISC);
        let spec = IvpSpec::new(ode, 0.5, 0.5, 20.0, 1.0);
        match integrate_ivp(&spec) {
            Err(Error::SingularityStop { t, .. }) => assert!(t > 0.5 && t < 1.0),
            other => panic!("expected singularity stop, got {other:?}"),
        }
    }

    #[test]
    fn ivp_rejects_bad_specs() {
        assert!(integrate_ivp(&IvpSpec::new(euclid(), 0.5, 0.0, 1.0, 0.5)).is_err());
        assert!(
            integrate_ivp(&IvpSpec::new(euclid(), 0.5, 0.0, 1.0, 1.0).tolerances(0.0, 1e-9))
                .is_err()
        );
        let ode = reduce(ConformalMetric::POINCARE_DISC);
        assert!(integrate_ivp(&IvpSpec::new(ode, 0.5, 1.5, 0.0, 1.0)).is_err());
    }

    #[test]
    fn ivp_max_steps() {
        let mut spec = IvpSpec::new(euclid(), 0.5, 0.0, 1.0, 1.0);
        spec.max_steps = 3;
        spec.max_step = Some(1e-3);
        assert!(matches!(
            integrate_ivp(&spec),
            Err(Error::MaxStepsExceeded { .. })
        ));
    }

    #[test]
    fn quad_basics() {
        assert_abs_diff_eq!(
            quad(|t| t * t, 0.0, 1.0, 1e-12).unwrap(),
            1.0 / 3.0,
            epsilon = 1e-14
        );
        assert_abs_diff_eq!(
            quad(|_| 1.0, 0.0, 1.0, 1e-12).unwrap(),
            1.0,
            epsilon = 1e-14
        );
        assert_abs_diff_eq!(
            quad(|t| t * t, 1.0, 0.0, 1e-12).unwrap(),
            -1.0 / 3.0,
            epsilon = 1e-14
        );
        assert_eq!(quad(|t| t, 2.0, 2.0, 1e-9).unwrap(), 0.0);
        assert!(quad(|t| t, 0.0, 1.0, 0.0).is_err());
    }

    #[test]
    fn quad_is_exact_on_high_degree_polynomials() {
        // The Kronrod rule integrates degree 22 exactly.
        let v = quad(|t: f64| 23.0 * t.powi(22), 0.0, 1.0, 1e-13).unwrap();
        assert_abs_diff_eq!(v, 1.0, epsilon = 1e-13);
    }

    #[test]
    fn quad_handles_peaks() {
        let eps = 1e-3;
        let v = quad(|t: f64| eps / (t * t + eps * eps), -1.0, 1.0, 1e-10).unwrap();
        assert_abs_diff_eq!(v, 2.0 * (1.0 / eps).atan(), epsilon = 1e-9);
    }

    #[test]
    fn quad_non_convergence() {
        let r = quad(
            |t: f64| if t > 0.3 { 1.0 / (t - 0.3) } else { 0.0 },
            0.0,
            1.0,
            1e-12,
        );
        assert!(matches!(r, Err(Error::QuadratureNonConvergence { .. })));
    }

    #[test]
    fn root_examples() {
        let r = find_root(|x| x * x - 2.0, 1.0, 2.0, 1e-12).unwrap();
        assert_abs_diff_eq!(r, 2f64.sqrt(), epsilon = 1e-12);
        let r = find_root(|x| x, -1.0, 1.0, 1e-12).unwrap();
        assert_abs_diff_eq!(r, 0.0, epsilon = 1e-12);
        assert!(matches!(
            find_root(|x| x * x + 1.0, -1.0, 1.0, 1e-12),
            Err(Error::InvalidBracket { .. })
        ));
    }

    #[test]
    fn root_on_hard_function() {
        let r = find_root(|x: f64| x.powi(9), -1.0, 4.0, 1e-10).unwrap();
        assert!(r.abs() < 1e-3);
        let r = find_root(|x: f64| x.cos() - x, 0.0, 1.0, 1e-14).unwrap();
        assert_abs_diff_eq!(r, 0.7390851332151607, epsilon = 1e-14);
    }

    #[test]
    fn shooting_for_existence_slope() {
        let a = 2f64.ln();
        let p = ShootingProblem::new(euclid(), ((-a).exp(), 0.0), (1.0, 1.0), (1.0, 5.0), 1e-12)
            .unwrap();
        let sol = shoot(&p).unwrap();
        assert_abs_diff_eq!(shooting_slope(&sol), 8.0 / 3.0, epsilon = 1e-8);
        assert_abs_diff_eq!(sol.last().f, 1.0, epsilon = 1e-10);
        assert!(sol.is_strictly_monotone());
        assert_eq!(sol.labels.inner, Some(0.0));
    }

    #[test]
    fn shooting_recovers_identity() {
        let p = ShootingProblem::new(euclid(), (0.5, 0.5), (1.0, 1.0), (0.0, 3.0), 1e-12).unwrap();
        let sol = shoot(&p).unwrap();
        for row in sol.rows() {
            assert_abs_diff_eq!(row.f, row.r, epsilon = 1e-10);
        }
    }

    #[test]
    fn shooting_rejects_bad_bracket() {
        let r = ShootingProblem::new(euclid(), (0.5, 0.0), (1.0, 1.0), (5.0, 9.0), 1e-10);
        assert!(matches!(r, Err(Error::InvalidBracket { .. })));
    }

    #[test]
    fn shooting_moves_singular_origin() {
        let p = ShootingProblem::new(euclid(), (0.0, 0.0), (1.0, 1.0), (0.0, 3.0), 1e-12).unwrap();
        assert_eq!(p.r_left, SINGULAR_START);
    }
}
