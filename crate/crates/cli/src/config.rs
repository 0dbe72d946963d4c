//! Scenario configuration: a JSON document with every block optional
//! except what a given subcommand actually needs. Missing blocks fall
//! back to the documented defaults (classical kernel, α = η = 1,
//! h = 0.01, t_end = 100, the default parameter preset).

use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use serde::{Deserialize, Serialize};

use infowave_core::analysis::{KernelConstants, OperatorFamily};
use infowave_core::model::{ModelParams, State};
use infowave_core::presets;
use infowave_core::solvers::SolverOptions;
use infowave_core::special::MLEvalPolicy;

fn one() -> f64 {
    1.0
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridConfig {
    pub h: f64,
    pub t_end: f64,
}

impl Default for GridConfig {
    fn default() -> Self {
        Self {
            h: 0.01,
            t_end: 100.0,
        }
    }
}

/// Integrator selector as written in config files and `--kernel`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum KernelChoice {
    #[default]
    Classical,
    Ffp,
    Ffe,
    Ffm,
}

/// Operator family selector for the `bounds` subcommand.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum FamilyChoice {
    Classical,
    Caputo,
    CaputoFabrizio,
    AtanganaBaleanu,
    Ffp,
    Ffe,
    Ffm,
}

impl FamilyChoice {
    pub fn family(self) -> OperatorFamily {
        match self {
            Self::Classical => OperatorFamily::Classical,
            Self::Caputo => OperatorFamily::Caputo,
            Self::CaputoFabrizio => OperatorFamily::CaputoFabrizio,
            Self::AtanganaBaleanu => OperatorFamily::AtanganaBaleanu,
            Self::Ffp => OperatorFamily::FractalPower,
            Self::Ffe => OperatorFamily::FractalExponential,
            Self::Ffm => OperatorFamily::FractalMittagLeffler,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputsConfig {
    pub csv_path: Option<PathBuf>,
    pub svg_path: Option<PathBuf>,
    pub report_path: Option<PathBuf>,
}

/// Full description of one run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioConfig {
    #[serde(default = "presets::default_params")]
    pub params: ModelParams,
    #[serde(default = "presets::default_initial")]
    pub initial: State,
    #[serde(default)]
    pub grid: GridConfig,
    #[serde(default)]
    pub kernel: KernelChoice,
    #[serde(default = "one")]
    pub alpha: f64,
    #[serde(default = "one")]
    pub eta: f64,
    #[serde(default)]
    pub outputs: OutputsConfig,
    #[serde(default)]
    pub bound_check: Option<FamilyChoice>,
    #[serde(default)]
    pub ml_policy: Option<MLEvalPolicy>,
    #[serde(default)]
    pub cf_normalization: Option<f64>,
    #[serde(default)]
    pub ab_normalization: Option<f64>,
    #[serde(default)]
    pub fractal_time_constant: Option<f64>,
}

impl Default for ScenarioConfig {
    fn default() -> Self {
        Self {
            params: presets::default_params(),
            initial: presets::default_initial(),
            grid: GridConfig::default(),
            kernel: KernelChoice::default(),
            alpha: 1.0,
            eta: 1.0,
            outputs: OutputsConfig::default(),
            bound_check: None,
            ml_policy: None,
            cf_normalization: None,
            ab_normalization: None,
            fractal_time_constant: None,
        }
    }
}

impl ScenarioConfig {
    pub fn validate(&self) -> Result<()> {
        self.params
            .validate()
            .map_err(|e| anyhow::anyhow!("params: {e}"))?;
        if !self.initial.is_finite() {
            bail!("initial: every compartment must be finite");
        }
        if !(self.alpha > 0.0 && self.alpha <= 1.0) {
            bail!("alpha must lie in (0, 1], got {}", self.alpha);
        }
        if !(self.eta > 0.0 && self.eta <= 1.0) {
            bail!("eta must lie in (0, 1], got {}", self.eta);
        }
        if !(self.grid.h > 0.0) || !self.grid.h.is_finite() {
            bail!("grid.h must be positive and finite, got {}", self.grid.h);
        }
        if !(self.grid.t_end > 0.0) || !self.grid.t_end.is_finite() {
            bail!(
                "grid.t_end must be positive and finite, got {}",
                self.grid.t_end
            );
        }
        let steps = self.grid.t_end / self.grid.h;
        if steps > 1e7 {
            bail!(
                "grid spans {steps:.3e} steps; the guard tops out at 1e7 (raise h or lower t_end)"
            );
        }
        if steps < 1.0 {
            bail!("grid.t_end shorter than one step");
        }
        if let Some(policy) = &self.ml_policy {
            policy
                .validate()
                .map_err(|e| anyhow::anyhow!("ml_policy: {e}"))?;
        }
        for (name, v) in [
            ("cf_normalization", self.cf_normalization),
            ("ab_normalization", self.ab_normalization),
            ("fractal_time_constant", self.fractal_time_constant),
        ] {
            if let Some(v) = v {
                if !(v > 0.0) || !v.is_finite() {
                    bail!("{name} must be positive and finite, got {v}");
                }
            }
        }
        Ok(())
    }

    /// Model parameters with the configured orders folded in.
    pub fn resolved_params(&self) -> ModelParams {
        ModelParams {
            alpha: self.alpha,
            eta: self.eta,
            ..self.params
        }
    }

    pub fn solver_options(&self) -> SolverOptions {
        SolverOptions {
            cf_normalization: self.cf_normalization.unwrap_or(1.0),
            ab_normalization: self.ab_normalization,
            ..SolverOptions::default()
        }
    }

    pub fn kernel_constants(&self) -> KernelConstants {
        KernelConstants {
            cf_normalization: self.cf_normalization.unwrap_or(1.0),
            ab_normalization: self.ab_normalization,
            fractal_time: self.fractal_time_constant.unwrap_or(1.0),
        }
    }

    pub fn ml_policy(&self) -> MLEvalPolicy {
        self.ml_policy.unwrap_or_default()
    }
}

/// Reads and fully validates a scenario file.
pub fn parse_config(path: &Path) -> Result<ScenarioConfig> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading config {}", path.display()))?;
    let config: ScenarioConfig = serde_json::from_str(&text)
        .with_context(|| format!("parsing config {}", path.display()))?;
    config
        .validate()
        .with_context(|| format!("validating config {}", path.display()))?;
    Ok(config)
}

/// Canonical serialization; parsing it back yields an identical config.
pub fn to_json_string(config: &ScenarioConfig) -> Result<String> {
    Ok(serde_json::to_string_pretty(config)?)
}
