//! Asymptotic (infinite-blocklength style) BLER approximations and the joint
//! power-allocation / blocklength design solver built on them.
//!
//! The design problem: find the smallest blocklength M and a power split α₁
//! such that the near user meets ε̄₁^R (split across its two decode stages by
//! the margin δ) and the far user meets ε̄₂^R. M follows from the near-user
//! Gamma quantile in closed form; α₁ is then the root of the far-user
//! residual G(α₁), located by bisection on (0, 1/2).

use serde::{Deserialize, Serialize};

use crate::analytic::{cdf_near_with_scale, FarSeries, QuadratureConfig};
use crate::error::{Error, Result};
use crate::model::{CodingConfig, SystemConfig, User, MIN_BLOCKLENGTH};
use crate::real::Real;
use crate::specfun::{gamma_int, inverse_regularized_lower_gamma};

/// Convention for inverting the near-user Gamma CDF when sizing M.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GammaInverse {
    /// Invert the regularized CDF P(T, ·) at the target (default).
    #[default]
    Regularized,
    /// Invert the unregularized γ(T, ·) at the target, i.e. drop the 1/Γ(T)
    /// normalization.
    Literal,
}

impl std::str::FromStr for GammaInverse {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "regularized" => Ok(Self::Regularized),
            "literal" => Ok(Self::Literal),
            other => Err(Error::Config(format!(
                "unknown gamma-inverse mode '{other}' (expected 'regularized' or 'literal')"
            ))),
        }
    }
}

/// Reliability targets and solver tolerances.
#[derive(Debug, Clone, PartialEq)]
pub struct ReliabilityTargets<R: Real> {
    /// Near-user end-to-end target ε̄₁^R.
    pub eps1: R,
    /// Far-user target ε̄₂^R.
    pub eps2: R,
    /// Margin δ splitting the near-user budget across its decode stages.
    pub delta: R,
    /// Residual tolerance ν for the bisection.
    pub nu: R,
}

impl<R: Real> ReliabilityTargets<R> {
    /// Validated constructor.
    pub fn new(eps1: R, eps2: R, delta: R, nu: R) -> Result<Self> {
        for (name, v) in [("eps1", eps1), ("eps2", eps2)] {
            if !(v > R::zero() && v < R::one()) {
                return Err(Error::Config(format!(
                    "{name} must lie in (0, 1), got {v}"
                )));
            }
        }
        if !(delta >= R::zero()) {
            return Err(Error::Config(format!("delta must be nonnegative, got {delta}")));
        }
        if !(nu > R::zero()) {
            return Err(Error::Config(format!("nu must be positive, got {nu}")));
        }
        Ok(Self {
            eps1,
            eps2,
            delta,
            nu,
        })
    }

    /// Near-user per-stage target ε̄₁^R/(1 + δ).
    pub fn eps1_stage(&self) -> R {
        self.eps1 / (R::one() + self.delta)
    }
}

/// Inputs of the design problem that are independent of the power split.
#[derive(Debug, Clone, PartialEq)]
pub struct SolverScenario<R: Real> {
    /// Transmit SNR ρ (linear).
    pub rho: R,
    /// Near-user mean channel gain.
    pub mu1: R,
    /// Far-user mean channel gain.
    pub mu2: R,
    /// Combining rounds.
    pub t_rounds: u32,
    /// Near-user payload (bits).
    pub n1: R,
    /// Far-user payload (bits).
    pub n2: R,
}

impl<R: Real> SolverScenario<R> {
    /// Validated constructor.
    pub fn new(rho: R, mu1: R, mu2: R, t_rounds: u32, n1: R, n2: R) -> Result<Self> {
        if !(rho > R::zero()) {
            return Err(Error::Config(format!("rho must be positive, got {rho}")));
        }
        for (name, v) in [("mu1", mu1), ("mu2", mu2)] {
            if !(v > R::zero() && v <= R::one()) {
                return Err(Error::Config(format!(
                    "{name} must lie in (0, 1], got {v}"
                )));
            }
        }
        if t_rounds < 1 {
            return Err(Error::Config("t_rounds must be at least 1".into()));
        }
        if !(n1 >= R::one() && n2 >= R::one()) {
            return Err(Error::Config(format!(
                "payloads must be at least 1 bit, got n1={n1}, n2={n2}"
            )));
        }
        Ok(Self {
            rho,
            mu1,
            mu2,
            t_rounds,
            n1,
            n2,
        })
    }

    /// Extract the power-split-independent inputs from a system config.
    pub fn from_system(config: &SystemConfig<R>, n1: R, n2: R) -> Result<Self> {
        Self::new(
            config.rho,
            config.mu(User::Near),
            config.mu(User::Far),
            config.t_rounds,
            n1,
            n2,
        )
    }
}

/// Solver result: the located power split and required blocklength.
#[derive(Debug, Clone, PartialEq)]
pub struct SolverOutput<R: Real> {
    /// Power split at which the far-user residual vanished.
    pub alpha1_star: R,
    /// Real-valued blocklength meeting the near-user target at α₁*.
    pub m_req_real: R,
    /// Smallest integer blocklength.
    pub m_req_ceil: u64,
    /// Residual evaluations spent by the bisection.
    pub iterations: usize,
    /// Far-user residual at α₁*.
    pub residual: R,
}

/// Orthogonal-access baseline blocklengths per user.
#[derive(Debug, Clone, PartialEq)]
pub struct OmaBlocklengths<R: Real> {
    /// Near-user share.
    pub m1: R,
    /// Far-user share.
    pub m2: R,
}

impl<R: Real> OmaBlocklengths<R> {
    /// Total orthogonal-access blocklength M₁ + M₂.
    pub fn total(&self) -> R {
        self.m1 + self.m2
    }
}

/// Asymptotic stage BLER: the decode threshold's CDF value, dropping the
/// finite-blocklength window spread (Φ ≈ 1{γ < θ}).
pub fn asymptotic_bler<R: Real>(
    config: &SystemConfig<R>,
    coding: &CodingConfig<R>,
    stage: User,
    quad: &QuadratureConfig,
) -> Result<R> {
    let two = R::of(2.0);
    match stage {
        User::Near => {
            let theta1 = two.powf(coding.n1 / coding.m) - R::one();
            cdf_near_with_scale(theta1, config.near_scale(), config.t_rounds)
        }
        User::Far => {
            let theta2 = two.powf(coding.n2 / coding.m) - R::one();
            let series = FarSeries::new(config, quad, User::Far)?;
            Ok(series.cdf_approx::<R>(theta2.as_f64())?.value)
        }
    }
}

/// Invert the near-user Gamma CDF at probability `p` under the chosen
/// convention, returning the normalized quantile x with CDF(s·x) = p.
fn gamma_quantile<R: Real>(t_rounds: u32, p: R, mode: GammaInverse) -> Result<R> {
    match mode {
        GammaInverse::Regularized => inverse_regularized_lower_gamma(t_rounds, p),
        GammaInverse::Literal => {
            inverse_regularized_lower_gamma(t_rounds, p / gamma_int::<R>(t_rounds)?)
        }
    }
}

/// Blocklength at which the near user's asymptotic own-stage BLER equals
/// ε̄₁^R/(1+δ) for power split `alpha1`:
/// M = N₁ / log₂(1 + ρ α₁ μ₁ x), x the Gamma quantile. Targets loose enough
/// to push M below 100 lie outside the model's regime.
pub fn required_blocklength_near<R: Real>(
    scenario: &SolverScenario<R>,
    alpha1: R,
    targets: &ReliabilityTargets<R>,
    mode: GammaInverse,
) -> Result<R> {
    if !(alpha1 > R::zero() && alpha1 < R::one()) {
        return Err(Error::domain(
            "required_blocklength_near",
            format!("alpha1 must lie in (0, 1), got {alpha1}"),
        ));
    }
    let x = gamma_quantile(scenario.t_rounds, targets.eps1_stage(), mode)?;
    let theta1 = scenario.rho * alpha1 * scenario.mu1 * x;
    let m = scenario.n1 / (R::one() + theta1).log2();
    if m < R::of(MIN_BLOCKLENGTH) {
        return Err(Error::Regime { m: m.as_f64() });
    }
    Ok(m)
}

/// Far-user design residual G(α₁) = asymptotic ε̄₂₂ at the blocklength M(α₁)
/// minus ε̄₂^R. Returns the +1 sentinel where the search point is unusable:
/// the far threshold θ₂ at or beyond T·κ, or M(α₁) below the model regime.
pub fn solver_residual<R: Real>(
    scenario: &SolverScenario<R>,
    alpha1: R,
    targets: &ReliabilityTargets<R>,
    quad: &QuadratureConfig,
    mode: GammaInverse,
) -> Result<R> {
    let m = match required_blocklength_near(scenario, alpha1, targets, mode) {
        Ok(m) => m,
        Err(Error::Regime { .. }) => return Ok(R::one()),
        Err(e) => return Err(e),
    };
    let theta2 = R::of(2.0).powf(scenario.n2 / m) - R::one();
    let kappa = (R::one() - alpha1) / alpha1;
    if theta2 >= R::of_usize(scenario.t_rounds as usize) * kappa {
        return Ok(R::one());
    }
    let series = FarSeries::from_parts(
        scenario.rho.as_f64(),
        alpha1.as_f64(),
        scenario.mu2.as_f64(),
        scenario.t_rounds,
        quad,
    )?;
    let f = series.cdf_approx::<R>(theta2.as_f64())?.value;
    Ok(f - targets.eps2)
}

/// Joint design solve: bisection of G(α₁) on (0, 1/2]. The α₁ → 0⁺ limit is
/// analytically −ε̄₂^R (the far user's threshold collapses as M explodes), so
/// only the upper endpoint needs evaluating; if the residual is already
/// negative there, no sign change exists inside the bracket and the targets
/// are declared infeasible.
pub fn solve_power_blocklength<R: Real>(
    scenario: &SolverScenario<R>,
    targets: &ReliabilityTargets<R>,
    quad: &QuadratureConfig,
    mode: GammaInverse,
) -> Result<SolverOutput<R>> {
    const MAX_ITER: usize = 200;
    let mut hi = R::of(0.5);
    let mut lo = R::zero();
    let g_hi = solver_residual(scenario, hi, targets, quad, mode)?;
    let mut iterations = 1;
    if g_hi < R::zero() {
        return Err(Error::Infeasible(
            "residual has no sign change on (0, 0.5): far-user target met even at an equal power split"
                .into(),
        ));
    }
    let mut candidate = (hi, g_hi);
    while iterations < MAX_ITER {
        let mid = (lo + hi) * R::of(0.5);
        let g = solver_residual(scenario, mid, targets, quad, mode)?;
        iterations += 1;
        candidate = (mid, g);
        if g.abs() <= targets.nu {
            break;
        }
        if g > R::zero() {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    let (alpha1_star, residual) = candidate;
    if residual.abs() > targets.nu {
        return Err(Error::Convergence {
            routine: "solve_power_blocklength",
            iterations,
        });
    }
    let m = required_blocklength_near(scenario, alpha1_star, targets, mode)?;
    Ok(SolverOutput {
        alpha1_star,
        m_req_real: m,
        m_req_ceil: m.as_f64().ceil() as u64,
        iterations,
        residual,
    })
}

/// Orthogonal-access baseline: each user gets the full power on its own
/// channel and a dedicated blocklength sized from its own Gamma quantile;
/// the comparison total is M₁ + M₂. Per-user shares below the m ≥ 100 regime
/// are errors, as in the joint solve.
pub fn oma_required_blocklength<R: Real>(
    scenario: &SolverScenario<R>,
    targets: &ReliabilityTargets<R>,
    mode: GammaInverse,
) -> Result<OmaBlocklengths<R>> {
    let x1 = gamma_quantile(scenario.t_rounds, targets.eps1_stage(), mode)?;
    let m1 = scenario.n1 / (R::one() + scenario.rho * scenario.mu1 * x1).log2();
    if m1 < R::of(MIN_BLOCKLENGTH) {
        return Err(Error::Regime { m: m1.as_f64() });
    }
    let x2 = gamma_quantile(scenario.t_rounds, targets.eps2, mode)?;
    let m2 = scenario.n2 / (R::one() + scenario.rho * scenario.mu2 * x2).log2();
    if m2 < R::of(MIN_BLOCKLENGTH) {
        return Err(Error::Regime { m: m2.as_f64() });
    }
    Ok(OmaBlocklengths { m1, m2 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::db_to_linear;
    use approx::assert_relative_eq;

    /// Design scenario of the blocklength-comparison figure: d₁ = 3, d₂ = 7,
    /// η = 2 (μ₁ = 0.1, μ₂ = 0.02), T = 3, N₁ = N₂ = 300.
    fn fig_scenario(rho_db: f64) -> SolverScenario<f64> {
        SolverScenario::new(db_to_linear(rho_db), 0.1, 0.02, 3, 300.0, 300.0).unwrap()
    }

    fn fig_targets(eps2: f64) -> ReliabilityTargets<f64> {
        ReliabilityTargets::new(1e-5, eps2, 0.1, 1e-7).unwrap()
    }

    #[test]
    fn validation_rejects_bad_inputs() {
        assert!(ReliabilityTargets::new(0.0f64, 1e-5, 0.1, 1e-7).is_err());
        assert!(ReliabilityTargets::new(1e-5f64, 1.0, 0.1, 1e-7).is_err());
        assert!(ReliabilityTargets::new(1e-5f64, 1e-5, -0.1, 1e-7).is_err());
        assert!(ReliabilityTargets::new(1e-5f64, 1e-5, 0.1, 0.0).is_err());
        assert!(SolverScenario::new(0.0f64, 0.1, 0.02, 3, 300.0, 300.0).is_err());
        assert!(SolverScenario::new(10.0f64, 0.0, 0.02, 3, 300.0, 300.0).is_err());
        assert!(SolverScenario::new(10.0f64, 0.1, 0.02, 0, 300.0, 300.0).is_err());
    }

    #[test]
    fn gamma_inverse_parsing() {
        assert_eq!(
            "regularized".parse::<GammaInverse>().unwrap(),
            GammaInverse::Regularized
        );
        assert_eq!(
            "literal".parse::<GammaInverse>().unwrap(),
            GammaInverse::Literal
        );
        assert!("other".parse::<GammaInverse>().is_err());
        assert_eq!(GammaInverse::default(), GammaInverse::Regularized);
    }

    #[test]
    fn required_blocklength_t1_closed_form() {
        // T = 1: P(1, x) = 1 − e^{−x}, so x = −ln(1 − u₁).
        let scen = SolverScenario::new(100.0f64, 0.5, 0.1, 1, 200.0, 200.0).unwrap();
        let targets = ReliabilityTargets::new(1e-3f64, 1e-3, 0.1, 1e-7).unwrap();
        let u1 = 1e-3 / 1.1;
        let x = -(1.0f64 - u1).ln();
        let expect = 200.0 / (1.0 + 100.0 * 0.25 * 0.5 * x).log2();
        let got = required_blocklength_near(&scen, 0.25, &targets, GammaInverse::Regularized)
            .unwrap();
        assert_relative_eq!(got, expect, max_relative = 1e-12);
        // T = 1 has Γ(1) = 1, so both inverse conventions coincide.
        let lit =
            required_blocklength_near(&scen, 0.25, &targets, GammaInverse::Literal).unwrap();
        assert_relative_eq!(got, lit, max_relative = 1e-14);
    }

    #[test]
    fn inverse_conventions_differ_for_t3() {
        let scen = fig_scenario(30.0);
        let targets = fig_targets(1e-5);
        let reg = required_blocklength_near(&scen, 0.2, &targets, GammaInverse::Regularized)
            .unwrap();
        let lit =
            required_blocklength_near(&scen, 0.2, &targets, GammaInverse::Literal).unwrap();
        // Γ(3) = 2 halves the effective probability: the literal convention
        // demands a larger blocklength.
        assert!(lit > reg * 1.05, "reg={reg}, lit={lit}");
    }

    #[test]
    fn loose_target_breaks_regime() {
        let scen = fig_scenario(40.0);
        let targets = ReliabilityTargets::new(0.5f64, 1e-5, 0.1, 1e-7).unwrap();
        assert!(matches!(
            required_blocklength_near(&scen, 0.45, &targets, GammaInverse::Regularized),
            Err(Error::Regime { .. })
        ));
    }

    #[test]
    fn residual_sentinel_on_infeasible_theta2() {
        // Constructed so M(α₁) ≈ 189 is in-regime but θ₂ = 2 ≥ T·κ = 1.22.
        let eps1 = 1.1 * (1.0 - (-2.0f64).exp());
        let scen = SolverScenario::new(1.0 / 0.045, 0.1, 0.02, 1, 300.0, 300.0).unwrap();
        let targets = ReliabilityTargets::new(eps1, 1e-5, 0.1, 1e-7).unwrap();
        let quad = QuadratureConfig::new(30, 18).unwrap();
        let m = required_blocklength_near(&scen, 0.45, &targets, GammaInverse::Regularized)
            .unwrap();
        assert!((100.0..262.0).contains(&m), "m = {m}");
        let g = solver_residual(&scen, 0.45, &targets, &quad, GammaInverse::Regularized)
            .unwrap();
        assert_eq!(g, 1.0);
    }

    #[test]
    fn residual_sentinel_on_regime_break() {
        let scen = fig_scenario(40.0);
        let targets = ReliabilityTargets::new(0.5f64, 1e-5, 0.1, 1e-7).unwrap();
        let quad = QuadratureConfig::new(30, 18).unwrap();
        let g = solver_residual(&scen, 0.45, &targets, &quad, GammaInverse::Regularized)
            .unwrap();
        assert_eq!(g, 1.0);
    }

    #[test]
    fn solve_round_trip_at_30db() {
        let scen = fig_scenario(30.0);
        let targets = fig_targets(1e-5);
        let quad = QuadratureConfig::new(30, 18).unwrap();
        let out =
            solve_power_blocklength(&scen, &targets, &quad, GammaInverse::Regularized).unwrap();
        assert!(out.residual.abs() <= 1e-7);
        assert!(out.alpha1_star > 0.0 && out.alpha1_star < 0.5);
        assert!(out.m_req_real >= 100.0);
        assert!(out.m_req_ceil as f64 >= out.m_req_real);
        assert!((out.m_req_ceil as f64) < out.m_req_real + 1.0);
        // Feeding M back through the near-user CDF reproduces the stage
        // target exactly (this is the closed-form inversion).
        let theta1 = 2.0f64.powf(300.0 / out.m_req_real) - 1.0;
        let s = scen.rho * out.alpha1_star * scen.mu1;
        let back = cdf_near_with_scale(theta1, s, 3).unwrap();
        assert_relative_eq!(back, targets.eps1_stage(), max_relative = 1e-10);
        // And the residual definition round-trips through asymptotic_bler's
        // far stage.
        let theta2 = 2.0f64.powf(300.0 / out.m_req_real) - 1.0;
        let series =
            FarSeries::from_parts(scen.rho, out.alpha1_star, scen.mu2, 3, &quad).unwrap();
        let eps22 = series.cdf_approx::<f64>(theta2).unwrap().value;
        assert_relative_eq!(eps22 - 1e-5, out.residual, epsilon = 1e-12);
    }

    #[test]
    fn solve_rejects_sign_change_free_targets() {
        // A far target so loose it is met even at the equal split.
        let scen = fig_scenario(30.0);
        let targets = ReliabilityTargets::new(1e-5f64, 0.99, 0.1, 1e-7).unwrap();
        let quad = QuadratureConfig::new(30, 18).unwrap();
        assert!(matches!(
            solve_power_blocklength(&scen, &targets, &quad, GammaInverse::Regularized),
            Err(Error::Infeasible(_))
        ));
    }

    #[test]
    fn blocklength_shrinks_with_snr() {
        let targets = fig_targets(1e-5);
        let m30 = required_blocklength_near(
            &fig_scenario(30.0),
            0.2,
            &targets,
            GammaInverse::Regularized,
        )
        .unwrap();
        let m35 = required_blocklength_near(
            &fig_scenario(35.0),
            0.2,
            &targets,
            GammaInverse::Regularized,
        )
        .unwrap();
        assert!(m35 < m30);
    }

    #[test]
    fn oma_baseline_values_and_regime() {
        let targets = fig_targets(1e-5);
        let oma =
            oma_required_blocklength(&fig_scenario(30.0), &targets, GammaInverse::Regularized)
                .unwrap();
        assert!(oma.m1 > 100.0 && oma.m2 > oma.m1);
        assert_relative_eq!(oma.total(), oma.m1 + oma.m2);
        // At 40 dB the near user's full-power share falls below the regime.
        assert!(matches!(
            oma_required_blocklength(&fig_scenario(40.0), &targets, GammaInverse::Regularized),
            Err(Error::Regime { .. })
        ));
    }

    #[test]
    fn asymptotic_bler_matches_threshold_cdfs() {
        let cfg = SystemConfig::new(db_to_linear(25.0), 0.2, 1.0, 2.0, 2.0, 2).unwrap();
        let coding = CodingConfig::new(160.0, 160.0, 200.0).unwrap();
        let quad = QuadratureConfig::new(30, 18).unwrap();
        let theta = 2.0f64.powf(160.0 / 200.0) - 1.0;
        let near = asymptotic_bler(&cfg, &coding, User::Near, &quad).unwrap();
        assert_relative_eq!(
            near,
            cdf_near_with_scale(theta, cfg.near_scale(), 2).unwrap(),
            max_relative = 1e-14
        );
        let far = asymptotic_bler(&cfg, &coding, User::Far, &quad).unwrap();
        let series = FarSeries::new(&cfg, &quad, User::Far).unwrap();
        assert_relative_eq!(
            far,
            series.cdf_approx::<f64>(theta).unwrap().value,
            max_relative = 1e-14
        );
    }
}
