//! Rotationally symmetric conformal metrics `σ(|u|)|du|` on plane domains.
//!
//! Only the conformal factor and its logarithmic derivative enter the radial
//! reduction of the harmonic map equation, so that is all this module exposes.

use std::f64::consts::PI;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MetricKind {
    /// Flat metric `|du|` on the plane.
    Euclidean,
    /// `2|du| / (1 - |u|²)` on the unit disc.
    PoincareDisc,
    /// Complete hyperbolic metric `|du| / (|u| ln(1/|u|))` on the punctured disc.
    HyperbolicPuncturedDisc,
    /// Complete hyperbolic metric on the annulus `e^{-a} < |u| < 1`.
    HyperbolicAnnulus,
}

impl MetricKind {
    pub fn name(self) -> &'static str {
        match self {
            MetricKind::Euclidean => "euclidean",
            MetricKind::PoincareDisc => "poincare-disc",
            MetricKind::HyperbolicPuncturedDisc => "hyperbolic-punctured-disc",
            MetricKind::HyperbolicAnnulus => "hyperbolic-annulus",
        }
    }
}

impl fmt::Display for MetricKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A target metric. The modulus `a` is present exactly for the annulus.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConformalMetric {
    kind: MetricKind,
    a: Option<f64>,
}

impl ConformalMetric {
    pub const EUCLIDEAN: ConformalMetric = ConformalMetric {
        kind: MetricKind::Euclidean,
        a: None,
    };
    pub const POINCARE_DISC: ConformalMetric = ConformalMetric {
        kind: MetricKind::PoincareDisc,
        a: None,
    };
    pub const PUNCTURED_DISC: ConformalMetric = ConformalMetric {
        kind: MetricKind::HyperbolicPuncturedDisc,
        a: None,
    };

    pub fn new(kind: MetricKind, a: Option<f64>) -> Result<Self> {
        match (kind, a) {
            (MetricKind::HyperbolicAnnulus, Some(a)) => Self::annulus(a),
            (MetricKind::HyperbolicAnnulus, None) => Err(Error::Config(
                "the hyperbolic annulus needs a modulus a > 0".into(),
            )),
            (_, Some(_)) => Err(Error::Config(format!(
                "the {kind} metric takes no modulus parameter"
            ))),
            (kind, None) => Ok(ConformalMetric { kind, a: None }),
        }
    }

    pub fn annulus(a: f64) -> Result<Self> {
        if !(a.is_finite() && a > 0.0) {
            return Err(Error::InvalidConstant {
                name: "a",
                value: a,
                reason: "annulus modulus must be positive and finite",
            });
        }
        Ok(ConformalMetric {
            kind: MetricKind::HyperbolicAnnulus,
            a: Some(a),
        })
    }

    pub fn kind(&self) -> MetricKind {
        self.kind
    }

    pub fn modulus(&self) -> Option<f64> {
        self.a
    }

    /// Open (or half-open, for the Poincaré disc) interval of admissible `ρ = |u|`.
    pub fn radial_domain(&self) -> RadialDomain {
        match self.kind {
            MetricKind::Euclidean => RadialDomain {
                lo: 0.0,
                hi: f64::INFINITY,
                lo_closed: false,
            },
            MetricKind::PoincareDisc => RadialDomain {
                lo: 0.0,
                hi: 1.0,
                lo_closed: true,
            },
            MetricKind::HyperbolicPuncturedDisc => RadialDomain {
                lo: 0.0,
                hi: 1.0,
                lo_closed: false,
            },
            MetricKind::HyperbolicAnnulus => RadialDomain {
                lo: (-self.a.unwrap_or(f64::NAN)).exp(),
                hi: 1.0,
                lo_closed: false,
            },
        }
    }

    fn check(&self, rho: f64) -> Result<()> {
        let dom = self.radial_domain();
        if dom.contains(rho) {
            Ok(())
        } else {
            Err(Error::OutOfDomain {
                quantity: "rho",
                value: rho,
                domain: dom.to_string(),
            })
        }
    }

    /// Conformal factor `σ(ρ)`.
    pub fn sigma(&self, rho: f64) -> Result<f64> {
        self.check(rho)?;
        Ok(match self.kind {
            MetricKind::Euclidean => 1.0,
            MetricKind::PoincareDisc => 2.0 / (1.0 - rho * rho),
            MetricKind::HyperbolicPuncturedDisc => 1.0 / (rho * (-rho.ln())),
            MetricKind::HyperbolicAnnulus => {
                let k = PI / self.a.unwrap();
                -k / (rho * (k * rho.ln()).sin())
            }
        })
    }

    /// Logarithmic derivative `d(ln σ)/dρ`.
    pub fn dlog_sigma(&self, rho: f64) -> Result<f64> {
        self.check(rho)?;
        Ok(match self.kind {
            MetricKind::Euclidean => 0.0,
            MetricKind::PoincareDisc => 2.0 * rho / (1.0 - rho * rho),
            MetricKind::HyperbolicPuncturedDisc => {
                let l = rho.ln();
                -(1.0 + l) / (rho * l)
            }
            MetricKind::HyperbolicAnnulus => {
                let k = PI / self.a.unwrap();
                let arg = k * rho.ln();
                let s = arg.sin();
                // sin vanishes only at the excluded endpoints, but guard the
                // last few ulps next to them.
                if s.abs() < 1e-15 {
                    return Err(Error::Singular {
                        what: "cot((pi/a) ln rho)",
                        at: rho,
                    });
                }
                -(1.0 + k * arg.cos() / s) / rho
            }
        })
    }
}

impl fmt::Display for ConformalMetric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.a {
            Some(a) => write!(f, "{}(a={})", self.kind, a),
            None => write!(f, "{}", self.kind),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialDomain {
    pub lo: f64,
    pub hi: f64,
    pub lo_closed: bool,
}

impl RadialDomain {
    pub fn contains(&self, rho: f64) -> bool {
        let above = if self.lo_closed {
            rho >= self.lo
        } else {
            rho > self.lo
        };
        rho.is_finite() && above && rho < self.hi
    }
}

impl fmt::Display for RadialDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let open = if self.lo_closed { '[' } else { '(' };
        write!(f, "{open}{}, {})", self.lo, self.hi)
    }
}
