//! Radial reduction of the harmonic map equation.
//!
//! For a map `u = f(r) e^{iθ}` into a target with conformal factor `σ(|u|)`,
//! the equation `u_{zz̄} + (2σ_u/σ) u_z u_{z̄} = 0` collapses to
//!
//! ```text
//! f'' = -f'/r + f/r² - (ln σ)'(f) · ((f')² - f²/r²)
//! ```
//!
//! [`RadialOde`] evaluates that right-hand side, [`residual_2d`] checks the
//! original two-dimensional equation directly by finite differences so the
//! reduction itself can be tested.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::metrics::{ConformalMetric, MetricKind};
use crate::numerics::SecondOrderOde;

/// The reduced ODE `f'' = Φ(r, f, f')` for one target metric.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialOde {
    metric: ConformalMetric,
    r_min: f64,
    r_max: f64,
}

pub fn reduce(metric: ConformalMetric) -> RadialOde {
    RadialOde {
        metric,
        r_min: 0.0,
        r_max: f64::INFINITY,
    }
}

impl RadialOde {
    /// Restrict the independent variable to the open interval `(r_min, r_max)`.
    pub fn with_domain(mut self, r_min: f64, r_max: f64) -> Result<Self> {
        if !(r_min >= 0.0 && r_max > r_min) {
            return Err(Error::Config(format!(
                "radial domain ({r_min}, {r_max}) is empty or negative"
            )));
        }
        self.r_min = r_min;
        self.r_max = r_max;
        Ok(self)
    }

    pub fn metric(&self) -> ConformalMetric {
        self.metric
    }

    pub fn domain(&self) -> (f64, f64) {
        (self.r_min, self.r_max)
    }

    fn check_r(&self, r: f64) -> Result<()> {
        if r.is_finite() && r > self.r_min && r < self.r_max {
            Ok(())
        } else {
            Err(Error::OutOfDomain {
                quantity: "r",
                value: r,
                domain: format!("({}, {})", self.r_min, self.r_max),
            })
        }
    }

    /// Whether `f` is an admissible profile value for the target.
    ///
    /// The flat metric is defined on the whole plane, so any finite value is
    /// admissible there even though `σ` itself is only queried for `ρ > 0`.
    pub fn admits_value(&self, f: f64) -> bool {
        match self.metric.kind() {
            MetricKind::Euclidean => f.is_finite(),
            _ => self.metric.radial_domain().contains(f),
        }
    }

    /// `Φ(r, f, f')`.
    pub fn phi(&self, r: f64, f: f64, fp: f64) -> Result<f64> {
        self.check_r(r)?;
        let linear = -fp / r + f / (r * r);
        if self.metric.kind() == MetricKind::Euclidean {
            return Ok(linear);
        }
        let dlog = self.metric.dlog_sigma(f)?;
        Ok(linear - dlog * (fp * fp - f * f / (r * r)))
    }

    /// Human-readable form of the specialized equation.
    pub fn describe(&self) -> String {
        let head = "f'' + f'/r - f/r^2";
        match self.metric.kind() {
            MetricKind::Euclidean => format!("{head} = 0"),
            MetricKind::PoincareDisc => {
                format!("{head} + (2 f / (1 - f^2)) * ((f')^2 - f^2/r^2) = 0")
            }
            MetricKind::HyperbolicPuncturedDisc => {
                format!("{head} - ((1 + ln f) / (f ln f)) * ((f')^2 - f^2/r^2) = 0")
            }
            MetricKind::HyperbolicAnnulus => {
                let a = self.metric.modulus().unwrap();
                format!(
                    "{head} - ((sin(k ln f) + k cos(k ln f)) / (f sin(k ln f))) * ((f')^2 - f^2/r^2) = 0, k = pi/a = {}",
                    std::f64::consts::PI / a
                )
            }
        }
    }
}

impl SecondOrderOde for RadialOde {
    fn accel(&self, t: f64, y: f64, yp: f64) -> Result<f64> {
        self.phi(t, y, yp)
    }

    fn admits(&self, t: f64, y: f64) -> bool {
        t > self.r_min && t < self.r_max && self.admits_value(y)
    }
}

/// `f'' − Φ(r, f, f')`; zero exactly on solutions.
pub fn residual_1d(ode: &RadialOde, r: f64, f: f64, fp: f64, fpp: f64) -> Result<f64> {
    Ok(fpp - ode.phi(r, f, fp)?)
}

/// A radial profile `r ↦ f(r)` on an open interval.
pub trait RadialProfile {
    fn value(&self, r: f64) -> f64;
    /// Open interval on which [`value`](RadialProfile::value) may be called.
    fn support(&self) -> (f64, f64);
}

/// Adapter for closures.
#[derive(Debug, Clone, Copy)]
pub struct FnProfile<F> {
    pub f: F,
    pub lo: f64,
    pub hi: f64,
}

impl<F: Fn(f64) -> f64> FnProfile<F> {
    pub fn new(f: F, lo: f64, hi: f64) -> Self {
        FnProfile { f, lo, hi }
    }
}

impl<F: Fn(f64) -> f64> RadialProfile for FnProfile<F> {
    fn value(&self, r: f64) -> f64 {
        (self.f)(r)
    }

    fn support(&self) -> (f64, f64) {
        (self.lo, self.hi)
    }
}

pub const DEFAULT_STENCIL_STEP: f64 = 1e-3;

/// Residual of `u_{zz̄} + (2σ_u/σ) u_z u_{z̄}` at `z` for `u = f(|z|) z/|z|`.
///
/// Uses second-order central differences with step `h` on the real and
/// imaginary parts, so the residual of a true harmonic map is `O(h²)`.
pub fn residual_2d<P: RadialProfile + ?Sized>(
    metric: &ConformalMetric,
    profile: &P,
    z: Complex64,
    h: f64,
) -> Result<Complex64> {
    if !(h.is_finite() && h > 0.0) {
        return Err(Error::Config(format!(
            "stencil step must be positive, got {h}"
        )));
    }
    let r = z.norm();
    let (lo, hi) = profile.support();
    let available = (r - lo).min(hi - r);
    if !(available > 2.0 * h) {
        return Err(Error::StepTooLarge {
            h,
            needed: 2.0 * h,
            available,
        });
    }

    let u = |w: Complex64| -> Complex64 {
        let rho = w.norm();
        w * (profile.value(rho) / rho)
    };
    let dx = Complex64::new(h, 0.0);
    let dy = Complex64::new(0.0, h);

    let u0 = u(z);
    let (ue, uw, un, us) = (u(z + dx), u(z - dx), u(z + dy), u(z - dy));
    let ux = (ue - uw) / (2.0 * h);
    let uy = (un - us) / (2.0 * h);
    let lap = (ue + uw + un + us - 4.0 * u0) / (h * h);

    let i = Complex64::i();
    let uz = 0.5 * (ux - i * uy);
    let uzbar = 0.5 * (ux + i * uy);
    let mut res = 0.25 * lap;

    let modulus = u0.norm();
    if metric.kind() != MetricKind::Euclidean && modulus > 0.0 {
        let sigma_u_over_sigma = metric.dlog_sigma(modulus)? * u0.conj() / (2.0 * modulus);
        res += 2.0 * sigma_u_over_sigma * uz * uzbar;
    }
    Ok(res)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProfileRow {
    pub r: f64,
    pub f: f64,
    pub fprime: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Monotonicity {
    Increasing,
    Decreasing,
    None,
}

/// Target values a profile is meant to attain at its inner and outer radius.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct BoundaryLabels {
    pub inner: Option<f64>,
    pub outer: Option<f64>,
}

/// A sampled radial profile, ordered by increasing `r`.
///
/// Each row also carries `f''`, which makes the quintic Hermite interpolant
/// between rows `C²` and accurate to `O(Δr⁶)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ProfileSample {
    rows: Vec<ProfileRow>,
    fsecond: Vec<f64>,
    pub labels: BoundaryLabels,
}

impl ProfileSample {
    /// Rows may arrive in either order; they are stored by increasing `r`.
    pub fn new(mut rows: Vec<ProfileRow>, mut fsecond: Vec<f64>) -> Result<Self> {
        if rows.len() != fsecond.len() || rows.len() < 2 {
            return Err(Error::Degenerate(
                "profile needs at least two rows with f''",
            ));
        }
        if rows[0].r > rows[rows.len() - 1].r {
            rows.reverse();
            fsecond.reverse();
        }
        if rows.windows(2).any(|w| !(w[1].r > w[0].r)) {
            return Err(Error::Degenerate("profile radii must be strictly monotone"));
        }
        Ok(ProfileSample {
            rows,
            fsecond,
            labels: BoundaryLabels::default(),
        })
    }

    pub fn with_labels(mut self, labels: BoundaryLabels) -> Self {
        self.labels = labels;
        self
    }

    pub fn rows(&self) -> &[ProfileRow] {
        &self.rows
    }

    pub fn second_derivatives(&self) -> &[f64] {
        &self.fsecond
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn span(&self) -> (f64, f64) {
        (self.rows[0].r, self.rows[self.rows.len() - 1].r)
    }

    pub fn first(&self) -> ProfileRow {
        self.rows[0]
    }

    pub fn last(&self) -> ProfileRow {
        self.rows[self.rows.len() - 1]
    }

    pub fn monotonicity(&self) -> Monotonicity {
        if self.rows.iter().all(|row| row.fprime > 0.0) {
            Monotonicity::Increasing
        } else if self.rows.iter().all(|row| row.fprime < 0.0) {
            Monotonicity::Decreasing
        } else {
            Monotonicity::None
        }
    }

    pub fn is_strictly_monotone(&self) -> bool {
        self.monotonicity() != Monotonicity::None
            && self.rows.windows(2).all(|w| {
                if self.rows[0].fprime > 0.0 {
                    w[1].f > w[0].f
                } else {
                    w[1].f < w[0].f
                }
            })
    }

    /// Interpolated `(f, f', f'')` at `r`, or `None` outside the sampled span.
    pub fn interpolate(&self, r: f64) -> Option<(f64, f64, f64)> {
        let (lo, hi) = self.span();
        if !(r >= lo && r <= hi) {
            return None;
        }
        let k = match self.rows.partition_point(|row| row.r <= r) {
            0 => 0,
            n if n >= self.rows.len() => self.rows.len() - 2,
            n => n - 1,
        };
        let (a, b) = (self.rows[k], self.rows[k + 1]);
        let (a2, b2) = (self.fsecond[k], self.fsecond[k + 1]);
        Some(quintic_hermite(a, a2, b, b2, r))
    }

    /// The profile evaluated at the given radii.
    pub fn resample(&self, radii: &[f64]) -> Option<Vec<(ProfileRow, f64)>> {
        radii
            .iter()
            .map(|&r| {
                self.interpolate(r)
                    .map(|(f, fprime, fpp)| (ProfileRow { r, f, fprime }, fpp))
            })
            .collect()
    }
}

impl RadialProfile for ProfileSample {
    fn value(&self, r: f64) -> f64 {
        self.interpolate(r).map_or(f64::NAN, |v| v.0)
    }

    fn support(&self) -> (f64, f64) {
        self.span()
    }
}

fn quintic_hermite(a: ProfileRow, a2: f64, b: ProfileRow, b2: f64, r: f64) -> (f64, f64, f64) {
    let h = b.r - a.r;
    let t = (r - a.r) / h;
    let (t2, t3, t4, t5) = (t * t, t * t * t, t * t * t * t, t * t * t * t * t);

    let h00 = 1.0 - 10.0 * t3 + 15.0 * t4 - 6.0 * t5;
    let h10 = t - 6.0 * t3 + 8.0 * t4 - 3.0 * t5;
    let h20 = 0.5 * (t2 - 3.0 * t3 + 3.0 * t4 - t5);
    let h01 = 10.0 * t3 - 15.0 * t4 + 6.0 * t5;
    let h11 = -4.0 * t3 + 7.0 * t4 - 3.0 * t5;
    let h21 = 0.5 * (t3 - 2.0 * t4 + t5);

    let d00 = -30.0 * t2 + 60.0 * t3 - 30.0 * t4;
    let d10 = 1.0 - 18.0 * t2 + 32.0 * t3 - 15.0 * t4;
    let d20 = 0.5 * (2.0 * t - 9.0 * t2 + 12.0 * t3 - 5.0 * t4);
    let d11 = -12.0 * t2 + 28.0 * t3 - 15.0 * t4;
    let d21 = 0.5 * (3.0 * t2 - 8.0 * t3 + 5.0 * t4);

    let s00 = -60.0 * t + 180.0 * t2 - 120.0 * t3;
    let s10 = -36.0 * t + 96.0 * t2 - 60.0 * t3;
    let s20 = 0.5 * (2.0 - 18.0 * t + 36.0 * t2 - 20.0 * t3);
    let s11 = -24.0 * t + 84.0 * t2 - 60.0 * t3;
    let s21 = 0.5 * (6.0 * t - 24.0 * t2 + 20.0 * t3);

    let f = a.f * h00
        + h * a.fprime * h10
        + h * h * a2 * h20
        + b.f * h01
        + h * b.fprime * h11
        + h * h * b2 * h21;
    let df =
        (b.f - a.f) * (-d00) / h + a.fprime * d10 + h * a2 * d20 + b.fprime * d11 + h * b2 * d21;
    let ddf = (b.f - a.f) * (-s00) / (h * h)
        + a.fprime * s10 / h
        + a2 * s20
        + b.fprime * s11 / h
        + b2 * s21;
    (f, df, ddf)
}
