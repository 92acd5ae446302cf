//! Average block-error-rate (BLER) toolkit for a two-user downlink NOMA
//! system with HARQ chase combining, in the finite-blocklength regime.
//!
//! The near user (stronger channel) performs successive interference
//! cancellation: it first decodes the far user's message, removes it, then
//! decodes its own. Each failed transmission is chase-combined, so after `T`
//! rounds the effective SINR of every decoding step is the sum of the
//! per-round SINRs. Block error rates use the normal approximation for finite
//! blocklength, replaced by its tangent linearization so that averaging over
//! Rayleigh fading reduces to integrating the accumulated-SINR CDF over a
//! narrow window.
//!
//! Layout:
//! - [`specfun`]: exponential integral, incomplete gamma family, Gaussian
//!   tail, binomials.
//! - [`model`]: system/coding parameters, SINR maps, the finite-blocklength
//!   error model and its linearization.
//! - [`analytic`]: closed-form average BLER for both users (far user via a
//!   Gauss-Chebyshev/exponential-integral series, near user via the Gamma
//!   distribution) plus the antiderivatives that certify them.
//! - [`asymptotic`]: large-SNR BLER, the required-blocklength equation, and
//!   the joint power-allocation/blocklength solver.
//! - [`montecarlo`]: reproducible, partitioned Monte Carlo estimator used to
//!   cross-validate every closed form.
//! - [`config`]: JSON scenario schema shared with the command-line front end.
//!
//! All mathematical routines are generic over the scalar type through
//! [`Real`]; `f64` aliases for the common parameter structs are exported at
//! the crate root. The far-user series is ill-conditioned (terms up to ~1e10
//! times its sum), so its internals always run in double-double precision
//! regardless of the public scalar type; see [`dd`] for details.

pub mod analytic;
pub mod asymptotic;
pub mod config;
pub mod dd;
pub mod error;
pub mod model;
pub mod montecarlo;
pub mod real;
pub mod specfun;

pub use asymptotic::GammaInverse;
pub use error::{Error, Result};
pub use real::Real;

/// Default-precision system parameters.
pub type SystemConfig = model::SystemConfig<f64>;
/// Default-precision coding parameters.
pub type CodingConfig = model::CodingConfig<f64>;
/// Default-precision linearization window.
pub type QLinearization = model::QLinearization<f64>;
/// Default-precision far-user series evaluator.
pub type FarSeries = analytic::FarSeries;
/// Default-precision reliability targets for the solver.
pub type ReliabilityTargets = asymptotic::ReliabilityTargets<f64>;
/// Default-precision solver scenario.
pub type SolverScenario = asymptotic::SolverScenario<f64>;
/// Default-precision solver output.
pub type SolverOutput = asymptotic::SolverOutput<f64>;
