//! Closed-form average block error rates for both users: the far-user series
//! machinery, the near-user Gamma forms, and their combination across the SIC
//! decode chain.

pub mod far;
mod kernel;
mod kernel_tables;
pub mod near;
pub mod series;

pub use far::{
    avg_bler_far_decode, avg_bler_far_with_series, cdf_far_sinr, omega_fn, psi, s_kn, FarSeries,
};
pub use near::{
    avg_bler_near_own, avg_bler_oma, cdf_near_sinr, cdf_near_with_scale, upsilon_fn,
    upsilon_with_scale,
};
pub use series::{
    chebyshev_nodes, composition_count, enumerate_compositions, omega_coefficients,
    omega_numerators, Composition,
};

use crate::error::{Error, Result};
use crate::model::{CodingConfig, SystemConfig, User};
use crate::real::Real;

/// Quadrature parameters of the far-user series: node count N and inversion
/// term count L.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadratureConfig {
    /// Gauss–Chebyshev node count N ≥ 1.
    pub n_nodes: usize,
    /// Inversion term count L: even, at least 2.
    pub l_terms: usize,
}

impl QuadratureConfig {
    /// Validated constructor.
    pub fn new(n_nodes: usize, l_terms: usize) -> Result<Self> {
        if n_nodes < 1 {
            return Err(Error::Config("quadrature needs at least 1 node".into()));
        }
        if l_terms < 2 || l_terms % 2 != 0 {
            return Err(Error::Config(format!(
                "inversion term count must be even and at least 2, got {l_terms}"
            )));
        }
        Ok(Self { n_nodes, l_terms })
    }
}

/// How a BLER estimate was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// Exact window form of the linearized error model.
    ClosedForm,
    /// Infinite-blocklength style approximation Φ ≈ 1{γ < θ}.
    Asymptotic,
    /// Seeded simulation.
    MonteCarlo,
}

/// An average-BLER value clamped to [0, 1], carrying its provenance, the
/// unclamped value for diagnostics, and a standard error when stochastic.
#[derive(Debug, Clone, PartialEq)]
pub struct BlerEstimate<R: Real> {
    /// Estimate clamped to [0, 1].
    pub value: R,
    /// Value before clamping; excess beyond [0, 1] should stay below 1e-6.
    pub pre_clamp: R,
    /// Provenance.
    pub method: Method,
    /// Standard error for stochastic estimates.
    pub std_err: Option<R>,
}

impl<R: Real> BlerEstimate<R> {
    /// Wrap a raw value, clamping it into [0, 1].
    pub fn clamped(raw: R, method: Method) -> Self {
        let value = if raw < R::zero() {
            R::zero()
        } else if raw > R::one() {
            R::one()
        } else {
            raw
        };
        Self {
            value,
            pre_clamp: raw,
            method,
            std_err: None,
        }
    }

    /// Attach a standard error.
    pub fn with_std_err(mut self, std_err: R) -> Self {
        self.std_err = Some(std_err);
        self
    }
}

/// Accumulated-SINR CDF value clamped to [0, 1], with the raw series value
/// and a flag set when the threshold sits at or beyond the validity edge T·κ.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CdfApprox<R: Real> {
    /// Clamped probability.
    pub value: R,
    /// Unclamped series value.
    pub raw: R,
    /// Threshold r ≥ T·κ: the accumulated SINR cannot reach it.
    pub beyond_validity: bool,
}

/// End-to-end average BLER of one user. The far user decodes only its own
/// message; the near user first decodes the far message (SIC stage), then its
/// own: ε̄₁ = ε̄₁₂ + (1 − ε̄₁₂) ε̄₁₁.
pub fn avg_bler_user<R: Real>(
    config: &SystemConfig<R>,
    coding: &CodingConfig<R>,
    quad: &QuadratureConfig,
    user: User,
) -> Result<BlerEstimate<R>> {
    match user {
        User::Far => avg_bler_far_decode(config, coding, quad, User::Far),
        User::Near => {
            let sic = avg_bler_far_decode(config, coding, quad, User::Near)?;
            let own = avg_bler_near_own(config, coding)?;
            let raw = sic.value + (R::one() - sic.value) * own.value;
            Ok(BlerEstimate::clamped(raw, Method::ClosedForm))
        }
    }
}
