use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{quantity} = {value} is outside the valid domain {domain}")]
    OutOfDomain {
        quantity: &'static str,
        value: f64,
        domain: String,
    },

    #[error("{what} is singular at {at}")]
    Singular { what: &'static str, at: f64 },

    #[error("invalid constant {name} = {value}: {reason}")]
    InvalidConstant {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("{op} is not defined for the {kind} metric")]
    UnsupportedMetric {
        op: &'static str,
        kind: &'static str,
    },

    #[error("degenerate input: {0}")]
    Degenerate(&'static str),

    #[error("step h = {h} is too large: the stencil needs radius {needed} but only {available} is available")]
    StepTooLarge { h: f64, needed: f64, available: f64 },

    #[error("closed forms disagree at r = {r}: {first} vs {second}")]
    FormMismatch { r: f64, first: f64, second: f64 },

    #[error("invalid bracket [{lo}, {hi}]: f(lo) = {f_lo}, f(hi) = {f_hi} do not change sign")]
    InvalidBracket {
        lo: f64,
        hi: f64,
        f_lo: f64,
        f_hi: f64,
    },

    #[error("root finder did not converge after {iterations} iterations")]
    RootNonConvergence { iterations: usize },

    #[error("singularity stop at t = {t}: {reason}")]
    SingularityStop { t: f64, y: f64, reason: String },

    #[error("step size underflow at t = {t} (h = {h})")]
    StepUnderflow { t: f64, h: f64 },

    #[error("maximum number of steps ({steps}) exceeded at t = {t}")]
    MaxStepsExceeded { steps: usize, t: f64 },

    #[error("quadrature did not converge: {intervals} subintervals, error estimate {estimate:e}")]
    QuadratureNonConvergence { intervals: usize, estimate: f64 },

    #[error("invalid configuration: {0}")]
    Config(String),
}

impl Error {
    /// True for failures of the numerical machinery, as opposed to bad input.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::InvalidBracket { .. }
                | Error::RootNonConvergence { .. }
                | Error::SingularityStop { .. }
                | Error::StepUnderflow { .. }
                | Error::MaxStepsExceeded { .. }
                | Error::QuadratureNonConvergence { .. }
                | Error::FormMismatch { .. }
                | Error::Singular { .. }
        )
    }
}
