//! Closed-form objects of the rotationally symmetric problems: the
//! logarithmic substitution, the swap to `r` as the dependent variable, the
//! first integrals that follow, and the explicit solution families.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::metrics::MetricKind;
use crate::numerics::{quad, SecondOrderOde};
use crate::radial::RadialOde;

/// Which logarithmic equation a hyperbolic target reduces to.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LogTarget {
    /// `F = ln f ∈ (−a, 0)`, coefficient `κ(F) = (π/a) cot(πF/a)`.
    Annulus { a: f64 },
    /// `G = ln g ∈ (−∞, 0)`, coefficient `κ(G) = 1/G`.
    PuncturedDisc,
}

/// The radial equation rewritten for `F = ln f`:
///
/// ```text
/// F'' + F'/r − κ(F)(F')² + κ(F)/r² = 0
/// ```
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogOde {
    pub target: LogTarget,
}

pub fn substitute_log(ode: &RadialOde) -> Result<LogOde> {
    let metric = ode.metric();
    let target = match metric.kind() {
        MetricKind::HyperbolicAnnulus => LogTarget::Annulus {
            a: metric.modulus().unwrap(),
        },
        MetricKind::HyperbolicPuncturedDisc => LogTarget::PuncturedDisc,
        other => {
            return Err(Error::UnsupportedMetric {
                op: "logarithmic substitution",
                kind: other.name(),
            })
        }
    };
    Ok(LogOde { target })
}

impl LogOde {
    /// Open interval of admissible `F`.
    pub fn value_domain(&self) -> (f64, f64) {
        match self.target {
            LogTarget::Annulus { a } => (-a, 0.0),
            LogTarget::PuncturedDisc => (f64::NEG_INFINITY, 0.0),
        }
    }

    pub fn kappa(&self, big_f: f64) -> Result<f64> {
        let (lo, hi) = self.value_domain();
        if !(big_f > lo && big_f < hi) {
            return Err(Error::OutOfDomain {
                quantity: "ln f",
                value: big_f,
                domain: format!("({lo}, {hi})"),
            });
        }
        Ok(match self.target {
            LogTarget::Annulus { a } => {
                let k = PI / a;
                k / (k * big_f).tan()
            }
            LogTarget::PuncturedDisc => 1.0 / big_f,
        })
    }

    pub fn residual(&self, r: f64, big_f: f64, fp: f64, fpp: f64) -> Result<f64> {
        let kappa = self.kappa(big_f)?;
        Ok(fpp + fp / r - kappa * fp * fp + kappa / (r * r))
    }

    /// `F''` solved from the equation.
    pub fn accel(&self, r: f64, big_f: f64, fp: f64) -> Result<f64> {
        let kappa = self.kappa(big_f)?;
        Ok(-fp / r + kappa * (fp * fp - 1.0 / (r * r)))
    }
}

/// The log equation with `r` regarded as a function of `F`:
///
/// ```text
/// r''/r − (r'/r)² + κ(F) r'/r − κ(F)(r'/r)³ = 0
/// ```
///
/// so `x = (ln r)'` obeys the Bernoulli equation `x' + κx − κx³ = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SwappedOde {
    pub log: LogOde,
}

pub fn swap_to_r_of_f(log: LogOde) -> SwappedOde {
    SwappedOde { log }
}

/// Converts `(F_r, F_rr)` into `(r_F, r_FF)` using `F_r = 1/r_F` and
/// `F_rr = −r_FF / r_F³`.
pub fn swap_derivatives(f_r: f64, f_rr: f64) -> Result<(f64, f64)> {
    if f_r == 0.0 || !f_r.is_finite() {
        return Err(Error::Degenerate(
            "variable swap needs F'(r) ≠ 0 (r_F would be infinite)",
        ));
    }
    let r_f = 1.0 / f_r;
    Ok((r_f, -f_rr * r_f * r_f * r_f))
}

impl SwappedOde {
    pub fn residual(&self, big_f: f64, r: f64, r_f: f64, r_ff: f64) -> Result<f64> {
        if r_f == 0.0 {
            return Err(Error::Degenerate(
                "variable swap needs r'(F) ≠ 0 (F'(r) would be infinite)",
            ));
        }
        if !(r > 0.0) {
            return Err(Error::OutOfDomain {
                quantity: "r",
                value: r,
                domain: "(0, inf)".into(),
            });
        }
        let kappa = self.log.kappa(big_f)?;
        let x = r_f / r;
        Ok(r_ff / r - x * x + kappa * x - kappa * x * x * x)
    }
}

impl SecondOrderOde for SwappedOde {
    fn accel(&self, t: f64, y: f64, yp: f64) -> Result<f64> {
        let kappa = self.log.kappa(t)?;
        let x = yp / y;
        Ok(y * (x * x - kappa * x + kappa * x * x * x))
    }

    fn admits(&self, t: f64, y: f64) -> bool {
        let (lo, hi) = self.log.value_domain();
        t > lo && t < hi && y > 0.0 && y.is_finite()
    }
}

fn check_positive(name: &'static str, value: f64) -> Result<()> {
    if value.is_finite() && value > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidConstant {
            name,
            value,
            reason: "must be positive and finite",
        })
    }
}

fn check_c0(c0: f64) -> Result<()> {
    if c0.is_finite() && c0 > -1.0 {
        Ok(())
    } else {
        Err(Error::InvalidConstant {
            name: "c0",
            value: c0,
            reason: "need 1 + c0 > 0 for x to be real on (-a, 0)",
        })
    }
}

fn check_nonnegative(name: &'static str, value: f64) -> Result<()> {
    if value.is_finite() && value >= 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidConstant {
            name,
            value,
            reason: "must be nonnegative",
        })
    }
}

/// `x(F) = (ln r)'(F) = 1/√(1 + c0 sin²(πF/a))`, extended by 1 at `F ∈ {−a, 0}`.
pub fn x_thm1(big_f: f64, a: f64, c0: f64) -> Result<f64> {
    check_positive("a", a)?;
    check_c0(c0)?;
    if !(big_f >= -a && big_f <= 0.0) {
        return Err(Error::OutOfDomain {
            quantity: "F",
            value: big_f,
            domain: format!("[{}, 0]", -a),
        });
    }
    if big_f == 0.0 || big_f == -a {
        return Ok(1.0);
    }
    let s = (PI * big_f / a).sin();
    Ok(1.0 / (1.0 + c0 * s * s).sqrt())
}

/// `(ln r)(F) = ∫₀^F x(t) dt`, by adaptive quadrature to absolute error `tol`.
pub fn lnr_thm1(big_f: f64, a: f64, c0: f64, tol: f64) -> Result<f64> {
    check_positive("a", a)?;
    check_c0(c0)?;
    if !(big_f >= -a && big_f <= 0.0) {
        return Err(Error::OutOfDomain {
            quantity: "F",
            value: big_f,
            domain: format!("[{}, 0]", -a),
        });
    }
    let k = PI / a;
    quad(
        |t| {
            let s = (k * t).sin();
            1.0 / (1.0 + c0 * s * s).sqrt()
        },
        0.0,
        big_f,
        tol,
    )
}

fn check_g(g: f64) -> Result<()> {
    if g <= 0.0 && g.is_finite() {
        Ok(())
    } else {
        Err(Error::OutOfDomain {
            quantity: "G",
            value: g,
            domain: "(-inf, 0]".into(),
        })
    }
}

/// `(ln r)'(G) = 1/√(1 + c1 G²)`.
pub fn lnr_prime_thm2(g: f64, c1: f64) -> Result<f64> {
    check_nonnegative("c1", c1)?;
    check_g(g)?;
    Ok(1.0 / (1.0 + c1 * g * g).sqrt())
}

/// `r(G) = (√c1 G + √(1 + c1 G²))^{1/√c1}`, evaluated as `exp(asinh(√c1 G)/√c1)`
/// to avoid the cancellation for large negative `G`.
pub fn r_thm2(g: f64, c1: f64) -> Result<f64> {
    check_positive("c1", c1)?;
    check_g(g)?;
    let s = c1.sqrt();
    Ok(((s * g).asinh() / s).exp())
}

/// Both algebraic forms of the Riccati solution `H = (ln h)'`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RiccatiForms {
    /// `1/r − 2/(c3 r³ + r)`
    pub reduced: f64,
    /// `−1/r + 2 c3 r/(1 + c3 r²)`
    pub expanded: f64,
}

impl RiccatiForms {
    pub fn value(&self) -> f64 {
        self.expanded
    }
}

fn check_radius(r: f64) -> Result<()> {
    if r.is_finite() && r > 0.0 && r <= 1.0 {
        Ok(())
    } else {
        Err(Error::OutOfDomain {
            quantity: "r",
            value: r,
            domain: "(0, 1]".into(),
        })
    }
}

fn check_pole(r: f64, c3: f64) -> Result<f64> {
    let p = 1.0 + c3 * r * r;
    if p.abs() <= 4.0 * f64::EPSILON * (1.0 + (c3 * r * r).abs()) {
        return Err(Error::Singular {
            what: "1 + c3 r^2",
            at: r,
        });
    }
    Ok(p)
}

/// `H(r) = (ln h)'(r)` for the Euler solution family, checked in both forms.
pub fn riccati_h(r: f64, c3: f64) -> Result<RiccatiForms> {
    check_radius(r)?;
    let p = check_pole(r, c3)?;
    let reduced = 1.0 / r - 2.0 / (c3 * r * r * r + r);
    let expanded = -1.0 / r + 2.0 * c3 * r / p;
    // Both forms inherit the conditioning of 1 + c3 r² near a pole.
    let cond = 1.0 + (c3 * r * r).abs() / p.abs();
    let scale = 1.0 / r + (2.0 * c3 * r / p).abs() * cond;
    if (reduced - expanded).abs() > 1e-12 * scale {
        return Err(Error::FormMismatch {
            r,
            first: reduced,
            second: expanded,
        });
    }
    Ok(RiccatiForms { reduced, expanded })
}

/// `h(r) = |1 + c3 r²| e^{c4} / r`.
pub fn h_thm3(r: f64, c3: f64, c4: f64) -> Result<f64> {
    Ok(h_thm3_derivatives(r, c3, c4)?.0)
}

/// `(h, h', h'')` away from the kink of the absolute value.
pub fn h_thm3_derivatives(r: f64, c3: f64, c4: f64) -> Result<(f64, f64, f64)> {
    check_radius(r)?;
    if !c3.is_finite() || !c4.is_finite() {
        return Err(Error::InvalidConstant {
            name: "c3/c4",
            value: if c3.is_finite() { c4 } else { c3 },
            reason: "must be finite",
        });
    }
    let p = check_pole(r, c3)?;
    let scale = p.signum() * c4.exp();
    Ok((
        scale * (1.0 / r + c3 * r),
        scale * (c3 - 1.0 / (r * r)),
        scale * 2.0 / (r * r * r),
    ))
}

/// The harmonic diffeomorphism profile `q(r) = (e^{2a} r² − 1) / (r (e^{2a} − 1))`
/// with `q(e^{−a}) = 0` and `q(1) = 1`.
pub fn q_exact(r: f64, a: f64) -> Result<f64> {
    Ok(q_exact_derivatives(r, a)?.0)
}

/// `(q, q', q'')`.
pub fn q_exact_derivatives(r: f64, a: f64) -> Result<(f64, f64, f64)> {
    check_positive("a", a)?;
    let inner = (-a).exp();
    // One ulp of slack so that exp(-a) itself is accepted.
    if !(r.is_finite() && r >= inner * (1.0 - f64::EPSILON) && r <= 1.0) {
        return Err(Error::OutOfDomain {
            quantity: "r",
            value: r,
            domain: format!("[{inner}, 1]"),
        });
    }
    let denom = (2.0 * a).exp_m1();
    let growth = (2.0 * a).exp();
    let q = (2.0 * (a + r.ln())).exp_m1() / (r * denom);
    let dq = (growth + 1.0 / (r * r)) / denom;
    let ddq = -2.0 / (r * r * r * denom);
    Ok((q, dq, ddq))
}

/// `v⁻² = k² + c5(1 − k²)²` where `v = (ln r)'(k)`.
pub fn v_invsq_prop4(k: f64, c5: f64) -> Result<f64> {
    check_nonnegative("c5", c5)?;
    if !(0.0..=1.0).contains(&k) {
        return Err(Error::OutOfDomain {
            quantity: "k",
            value: k,
            domain: "[0, 1]".into(),
        });
    }
    if k == 0.0 && c5 == 0.0 {
        return Err(Error::Degenerate("v is undefined at k = 0 when c5 = 0"));
    }
    let w = 1.0 - k * k;
    Ok(k * k + c5 * w * w)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Thm1X,
    Thm1Lnr,
    Thm2LnrPrime,
    Thm2R,
    Thm3LogDeriv,
    Thm3Profile,
    Thm3Q,
    Prop4Vinvsq,
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::Thm1X,
        Family::Thm1Lnr,
        Family::Thm2LnrPrime,
        Family::Thm2R,
        Family::Thm3LogDeriv,
        Family::Thm3Profile,
        Family::Thm3Q,
        Family::Prop4Vinvsq,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Thm1X => "thm1-x",
            Family::Thm1Lnr => "thm1-lnr",
            Family::Thm2LnrPrime => "thm2-lnr-prime",
            Family::Thm2R => "thm2-r",
            Family::Thm3LogDeriv => "thm3-H",
            Family::Thm3Profile => "thm3-h",
            Family::Thm3Q => "thm3-q",
            Family::Prop4Vinvsq => "prop4-vinvsq",
        }
    }

    /// Constants the family depends on, in the order they are reported.
    pub fn constant_names(self) -> &'static [&'static str] {
        match self {
            Family::Thm1X | Family::Thm1Lnr => &["a", "c0"],
            Family::Thm2LnrPrime | Family::Thm2R => &["c1"],
            Family::Thm3LogDeriv => &["c3"],
            Family::Thm3Profile => &["c3", "c4"],
            Family::Thm3Q => &["a"],
            Family::Prop4Vinvsq => &["c5"],
        }
    }

    /// Name of the free variable.
    pub fn parameter(self) -> &'static str {
        match self {
            Family::Thm1X | Family::Thm1Lnr => "F",
            Family::Thm2LnrPrime | Family::Thm2R => "G",
            Family::Thm3LogDeriv | Family::Thm3Profile | Family::Thm3Q => "r",
            Family::Prop4Vinvsq => "k",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    /// Accepts the family name or the name of its defining function
    /// (`x_thm1`, `q_exact`, `v_invsq`, ...).
    fn from_str(s: &str) -> Result<Self> {
        let alias = match s {
            "x_thm1" | "x" => Some(Family::Thm1X),
            "lnr_thm1" => Some(Family::Thm1Lnr),
            "lnr_prime_thm2" => Some(Family::Thm2LnrPrime),
            "r_thm2" => Some(Family::Thm2R),
            "riccati_h" | "H" => Some(Family::Thm3LogDeriv),
            "h_thm3" | "h" => Some(Family::Thm3Profile),
            "q_exact" | "q" => Some(Family::Thm3Q),
            "v_invsq" | "v_invsq_prop4" => Some(Family::Prop4Vinvsq),
            _ => None,
        };
        alias
            .or_else(|| Family::ALL.into_iter().find(|f| f.name() == s))
            .ok_or_else(|| Error::Config(format!("unknown closed-form family '{s}'")))
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct Constants {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c0: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c1: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c3: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c4: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c5: Option<f64>,
}

impl Constants {
    fn get(&self, name: &str) -> Option<f64> {
        match name {
            "a" => self.a,
            "c0" => self.c0,
            "c1" => self.c1,
            "c3" => self.c3,
            "c4" => self.c4,
            "c5" => self.c5,
            _ => None,
        }
    }
}

/// Default quadrature tolerance for [`Family::Thm1Lnr`] evaluations.
pub const LNR_TOL: f64 = 1e-12;

/// One member of a closed-form family, with its constants validated.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ClosedForm {
    pub family: Family,
    pub constants: Constants,
}

impl ClosedForm {
    pub fn new(family: Family, constants: Constants) -> Result<Self> {
        for name in family.constant_names() {
            if constants.get(name).is_none() {
                return Err(Error::Config(format!(
                    "family {family} needs constant {name}"
                )));
            }
        }
        let c = |n: &str| constants.get(n).unwrap();
        match family {
            Family::Thm1X | Family::Thm1Lnr => {
                check_positive("a", c("a"))?;
                check_c0(c("c0"))?;
            }
            Family::Thm2LnrPrime => check_nonnegative("c1", c("c1"))?,
            Family::Thm2R => check_positive("c1", c("c1"))?,
            Family::Thm3LogDeriv | Family::Thm3Profile => {}
            Family::Thm3Q => check_positive("a", c("a"))?,
            Family::Prop4Vinvsq => check_nonnegative("c5", c("c5"))?,
        }
        Ok(ClosedForm { family, constants })
    }

    pub fn eval(&self, t: f64) -> Result<f64> {
        let c = |n: &str| self.constants.get(n).unwrap();
        match self.family {
            Family::Thm1X => x_thm1(t, c("a"), c("c0")),
            Family::Thm1Lnr => lnr_thm1(t, c("a"), c("c0"), LNR_TOL),
            Family::Thm2LnrPrime => lnr_prime_thm2(t, c("c1")),
            Family::Thm2R => r_thm2(t, c("c1")),
            Family::Thm3LogDeriv => riccati_h(t, c("c3")).map(|h| h.value()),
            Family::Thm3Profile => h_thm3(t, c("c3"), c("c4")),
            Family::Thm3Q => q_exact(t, c("a")),
            Family::Prop4Vinvsq => v_invsq_prop4(t, c("c5")),
        }
    }
}
