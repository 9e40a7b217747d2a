//! Numerics for rotationally symmetric harmonic maps between surfaces.
//!
//! A rotationally symmetric map `u = f(r) e^{iθ}` into a surface with conformal
//! metric `σ(|u|)|du|` is harmonic exactly when its profile `f` solves a scalar
//! second-order ODE. This crate provides:
//!
//! - [`metrics`]: the flat, Poincaré, punctured-disc and annulus target metrics;
//! - [`radial`]: the reduced ODE and residual checks in 1D and 2D;
//! - [`closedform`]: substitutions, first integrals and explicit solution families;
//! - [`numerics`]: integrator, quadrature, root finder and shooting solver;
//! - [`certify`]: numeric nonexistence and existence certificates.

// `!(x > 0.0)` is used on purpose: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod certify;
pub mod closedform;
pub mod error;
pub mod metrics;
pub mod numerics;
pub mod radial;

pub use error::{Error, Result};
pub use metrics::{ConformalMetric, MetricKind};
pub use radial::{reduce, ProfileSample, RadialOde};
