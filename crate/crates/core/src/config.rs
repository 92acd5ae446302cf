//! Serializable experiment configuration: one flat record assembled from
//! built-in defaults, an optional JSON file, and command-line overrides, then
//! validated into the typed configs of the other modules.

use serde::{Deserialize, Serialize};

use crate::analytic::QuadratureConfig;
use crate::asymptotic::{GammaInverse, ReliabilityTargets};
use crate::error::{Error, Result};
use crate::model::{db_to_linear, CodingConfig, SystemConfig};
use crate::montecarlo::McConfig;

/// Fully resolved scenario. Serializes with the external key names
/// (`T` for the round count); field order fixes the provenance-line layout.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Scenario {
    /// Transmit SNR in dB.
    pub rho_db: f64,
    /// Near-user power fraction.
    pub alpha1: f64,
    /// Near-user distance.
    pub d1: f64,
    /// Far-user distance.
    pub d2: f64,
    /// Path-loss exponent.
    pub eta: f64,
    /// Combining rounds.
    #[serde(rename = "T")]
    pub t_rounds: u32,
    /// Near-user payload (bits).
    pub n1: f64,
    /// Far-user payload (bits).
    pub n2: f64,
    /// Blocklength (channel uses).
    pub m: f64,
    /// Series node count.
    pub quad_n: usize,
    /// Series inversion term count.
    pub quad_l: usize,
    /// Monte Carlo seed.
    pub seed: u64,
    /// Monte Carlo trials.
    pub trials: u64,
    /// Near-user reliability target (design commands only).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eps1_target: Option<f64>,
    /// Far-user reliability target (design commands only).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eps2_target: Option<f64>,
    /// Near-user stage-split margin (design commands only).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta: Option<f64>,
    /// Solver residual tolerance (design commands only).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nu: Option<f64>,
    /// Gamma-inverse convention for blocklength sizing.
    pub gamma_inverse: GammaInverse,
}

/// Partial scenario as read from a config file; any subset of keys may
/// appear, unknown keys are rejected.
#[derive(Debug, Clone, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioPatch {
    pub rho_db: Option<f64>,
    pub alpha1: Option<f64>,
    pub d1: Option<f64>,
    pub d2: Option<f64>,
    pub eta: Option<f64>,
    #[serde(rename = "T")]
    pub t_rounds: Option<u32>,
    pub n1: Option<f64>,
    pub n2: Option<f64>,
    pub m: Option<f64>,
    pub quad_n: Option<usize>,
    pub quad_l: Option<usize>,
    pub seed: Option<u64>,
    pub trials: Option<u64>,
    pub eps1_target: Option<f64>,
    pub eps2_target: Option<f64>,
    pub delta: Option<f64>,
    pub nu: Option<f64>,
    pub gamma_inverse: Option<GammaInverse>,
}

impl ScenarioPatch {
    /// Parse a patch from JSON text.
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text)
            .map_err(|e| Error::Config(format!("config file is not valid: {e}")))
    }
}

macro_rules! take {
    ($self:ident, $patch:ident, $($field:ident),+) => {
        $(if let Some(v) = $patch.$field {
            $self.$field = v;
        })+
    };
}

macro_rules! take_opt {
    ($self:ident, $patch:ident, $($field:ident),+) => {
        $(if $patch.$field.is_some() {
            $self.$field = $patch.$field;
        })+
    };
}

impl Scenario {
    /// Overlay a patch: present keys win, absent keys keep current values.
    pub fn apply(&mut self, patch: &ScenarioPatch) {
        take!(
            self, patch, rho_db, alpha1, d1, d2, eta, t_rounds, n1, n2, m, quad_n, quad_l,
            seed, trials
        );
        take_opt!(self, patch, eps1_target, eps2_target, delta, nu);
        if let Some(v) = patch.gamma_inverse {
            self.gamma_inverse = v;
        }
    }

    /// Validated physical configuration.
    pub fn system(&self) -> Result<SystemConfig<f64>> {
        SystemConfig::new(
            db_to_linear(self.rho_db),
            self.alpha1,
            self.d1,
            self.d2,
            self.eta,
            self.t_rounds,
        )
    }

    /// Validated coding configuration.
    pub fn coding(&self) -> Result<CodingConfig<f64>> {
        CodingConfig::new(self.n1, self.n2, self.m)
    }

    /// Validated series parameters.
    pub fn quadrature(&self) -> Result<QuadratureConfig> {
        QuadratureConfig::new(self.quad_n, self.quad_l)
    }

    /// Monte Carlo layout.
    pub fn mc(&self) -> McConfig {
        McConfig::new(self.seed, self.trials)
    }

    /// Reliability targets for the design commands; every solver key must be
    /// present.
    pub fn solver_targets(&self) -> Result<ReliabilityTargets<f64>> {
        let mut missing = Vec::new();
        for (name, v) in [
            ("eps1_target", self.eps1_target),
            ("eps2_target", self.eps2_target),
            ("delta", self.delta),
            ("nu", self.nu),
        ] {
            if v.is_none() {
                missing.push(name);
            }
        }
        if !missing.is_empty() {
            return Err(Error::Config(format!(
                "missing solver keys: {}",
                missing.join(", ")
            )));
        }
        ReliabilityTargets::new(
            self.eps1_target.unwrap(),
            self.eps2_target.unwrap(),
            self.delta.unwrap(),
            self.nu.unwrap(),
        )
    }

    /// One-line JSON of the resolved record, for provenance comments.
    pub fn resolved_json(&self) -> String {
        serde_json::to_string(self).expect("scenario serializes")
    }
}
