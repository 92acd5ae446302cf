//! Near-user own-message statistics: the T-round accumulated SNR is a Gamma
//! variable, giving an exact CDF and an exact window-average antiderivative.

use crate::analytic::{BlerEstimate, Method};
use crate::error::{Error, Result};
use crate::model::{linearize, CodingConfig, SystemConfig, User};
use crate::real::Real;
use crate::specfun::{gamma_int, lower_incomplete_gamma, reg_lower_incomplete_gamma};

/// CDF of the near user's accumulated own-signal SNR at threshold r ≥ 0:
/// P(T, r/s) with per-round scale s = ρ α₁ μ₁.
pub fn cdf_near_sinr<R: Real>(r: R, config: &SystemConfig<R>) -> Result<R> {
    cdf_near_with_scale(r, config.near_scale(), config.t_rounds)
}

/// Gamma CDF with explicit scale, shared with the orthogonal-access baseline.
pub fn cdf_near_with_scale<R: Real>(r: R, scale: R, t_rounds: u32) -> Result<R> {
    if !(r >= R::zero()) {
        return Err(Error::domain(
            "cdf_near_sinr",
            format!("threshold must be nonnegative, got {r}"),
        ));
    }
    if r == R::zero() {
        return Ok(R::zero());
    }
    reg_lower_incomplete_gamma(t_rounds, r / scale)
}

/// Antiderivative of the Gamma CDF:
/// Υ(x) = (1/Γ(T)) [x γ(T, x/s) − s γ(T+1, x/s)], so Υ' = P(T, x/s) and
/// Υ(0) = 0.
pub fn upsilon_fn<R: Real>(x: R, config: &SystemConfig<R>) -> Result<R> {
    upsilon_with_scale(x, config.near_scale(), config.t_rounds)
}

/// Υ with explicit scale.
pub fn upsilon_with_scale<R: Real>(x: R, scale: R, t_rounds: u32) -> Result<R> {
    if !(x >= R::zero()) {
        return Err(Error::domain(
            "upsilon_fn",
            format!("argument must be nonnegative, got {x}"),
        ));
    }
    if x == R::zero() {
        return Ok(R::zero());
    }
    let u = x / scale;
    let g_t = lower_incomplete_gamma(t_rounds, u)?;
    let g_t1 = lower_incomplete_gamma(t_rounds + 1, u)?;
    Ok((x * g_t - scale * g_t1) / gamma_int::<R>(t_rounds)?)
}

/// Average BLER of the near user's own decode stage after SIC, via the exact
/// window form λ₁ [Υ(τ₁) − Υ(max(υ₁, 0))].
pub fn avg_bler_near_own<R: Real>(
    config: &SystemConfig<R>,
    coding: &CodingConfig<R>,
) -> Result<BlerEstimate<R>> {
    let raw = window_average_gamma(config.near_scale(), config.t_rounds, coding.n1, coding.m)?;
    Ok(BlerEstimate::clamped(raw, Method::ClosedForm))
}

/// Average BLER of one user under orthogonal access: full transmit power on
/// that user's channel, payload `n_bits`, and a share `m_share` of the
/// blocklength. The share itself must respect the m ≥ 100 regime.
pub fn avg_bler_oma<R: Real>(
    config: &SystemConfig<R>,
    n_bits: R,
    m_share: R,
    user: User,
) -> Result<BlerEstimate<R>> {
    let scale = config.rho * config.mu(user);
    let raw = window_average_gamma(scale, config.t_rounds, n_bits, m_share)?;
    Ok(BlerEstimate::clamped(raw, Method::ClosedForm))
}

/// λ [Υ(τ) − Υ(max(υ, 0))] for a Gamma-distributed accumulated SINR.
fn window_average_gamma<R: Real>(scale: R, t_rounds: u32, n: R, m: R) -> Result<R> {
    let lin = linearize(n, m)?;
    let lo = if lin.upsilon > R::zero() {
        lin.upsilon
    } else {
        R::zero()
    };
    let hi = upsilon_with_scale(lin.tau, scale, t_rounds)?;
    let lo_v = upsilon_with_scale(lo, scale, t_rounds)?;
    Ok(lin.lambda * (hi - lo_v))
}
