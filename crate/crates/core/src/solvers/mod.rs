//! Time integration of the model under the three fractal-fractional
//! kernels plus a classical fourth-order reference integrator.
//!
//! The power-law and Mittag-Leffler schemes carry the full node history
//! (per-step cost O(n), total O(n²)); the exponential-decay scheme and
//! the RK4 reference are O(n) total. Every integrator is deterministic:
//! identical inputs produce bit-identical trajectories.

mod classical;
mod ffe;
mod ffm;
mod ffp;
mod weights;

pub use classical::integrate_classical;
pub use ffe::{integrate_ffe, integrate_ffe_with};
pub use ffm::{integrate_ffm, integrate_ffm_with};
pub use ffp::{integrate_ffp, integrate_ffp_with};
pub use weights::{ff_weights, fractal_factor, SchemeWeights};

pub(crate) use weights::HistoryAccumulator;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{rhs, ModelParams, State, DIM};

/// Uniform time grid starting at `t = 0`; node `k` sits at `k·h`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Grid {
    pub h: f64,
    pub n_steps: usize,
}

impl Grid {
    pub fn new(h: f64, n_steps: usize) -> Result<Self> {
        if !(h > 0.0) || !h.is_finite() {
            return Err(Error::InvalidParam {
                name: "h",
                reason: format!("step size must be positive and finite, got {h}"),
            });
        }
        if n_steps < 1 {
            return Err(Error::InvalidParam {
                name: "n_steps",
                reason: "at least one step is required".into(),
            });
        }
        Ok(Self { h, n_steps })
    }

    /// Grid covering `[0, t_end]` with the step count rounded to the
    /// nearest integer.
    pub fn from_t_end(h: f64, t_end: f64) -> Result<Self> {
        if !(t_end > 0.0) || !t_end.is_finite() {
            return Err(Error::InvalidParam {
                name: "t_end",
                reason: format!("horizon must be positive and finite, got {t_end}"),
            });
        }
        let n = (t_end / h).round();
        if !n.is_finite() || n < 1.0 {
            return Err(Error::InvalidParam {
                name: "t_end",
                reason: "horizon shorter than one step".into(),
            });
        }
        Self::new(h, n as usize)
    }

    pub fn node_time(&self, k: usize) -> f64 {
        k as f64 * self.h
    }

    pub fn t_end(&self) -> f64 {
        self.node_time(self.n_steps)
    }
}

/// Which integrator produced a trajectory.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Kernel {
    Classical,
    PowerLaw,
    ExponentialDecay,
    MittagLeffler,
}

/// Time grid plus the per-node states and the scheme provenance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Trajectory {
    pub grid: Grid,
    pub states: Vec<State>,
    pub kernel: Kernel,
    pub alpha: f64,
    pub eta: f64,
}

impl Trajectory {
    pub fn final_state(&self) -> &State {
        self.states.last().expect("trajectory holds n_steps+1 states")
    }

    /// `(t_k, state_k)` pairs over all nodes.
    pub fn nodes(&self) -> impl Iterator<Item = (f64, &State)> + '_ {
        self.states
            .iter()
            .enumerate()
            .map(|(k, s)| (self.grid.node_time(k), s))
    }
}

/// Handling of the fractal factor at the singular node `t = 0`
/// (the factor `η·t^{η−1}` blows up there for `η < 1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StartupRegularization {
    /// Evaluate the `t = 0` factor at the first positive node `t = h`.
    #[default]
    FirstNodeFactor,
    /// Drop the function value at the singular node entirely.
    ZeroInitialValue,
}

/// Scheme knobs: startup handling and the kernel normalizations.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SolverOptions {
    pub startup: StartupRegularization,
    /// Caputo-Fabrizio normalization `M(α)`.
    pub cf_normalization: f64,
    /// Atangana-Baleanu normalization; `None` selects
    /// `AB(α) = 1 − α + α/Γ(α)`.
    pub ab_normalization: Option<f64>,
}

impl Default for SolverOptions {
    fn default() -> Self {
        Self {
            startup: StartupRegularization::FirstNodeFactor,
            cf_normalization: 1.0,
            ab_normalization: None,
        }
    }
}

impl SolverOptions {
    pub fn validate(&self) -> Result<()> {
        if !(self.cf_normalization > 0.0) || !self.cf_normalization.is_finite() {
            return Err(Error::InvalidParam {
                name: "cf_normalization",
                reason: format!("must be positive, got {}", self.cf_normalization),
            });
        }
        if let Some(ab) = self.ab_normalization {
            if !(ab > 0.0) || !ab.is_finite() {
                return Err(Error::InvalidParam {
                    name: "ab_normalization",
                    reason: format!("must be positive, got {ab}"),
                });
            }
        }
        Ok(())
    }
}

pub(crate) fn validate_orders(alpha: f64, eta: f64) -> Result<()> {
    for (name, value) in [("alpha", alpha), ("eta", eta)] {
        if !value.is_finite() || value <= 0.0 || value > 1.0 {
            return Err(Error::InvalidParam {
                name,
                reason: format!("must lie in (0, 1], got {value}"),
            });
        }
    }
    Ok(())
}

pub(crate) fn check_inputs(params: &ModelParams, init: &State) -> Result<()> {
    params.validate()?;
    if !init.is_finite() {
        return Err(Error::NonFinite("initial state"));
    }
    Ok(())
}

/// Model right-hand side as a flat array.
pub(crate) fn rhs_array(params: &ModelParams, x: &[f64; DIM]) -> Result<[f64; DIM]> {
    Ok(rhs(params, &State::from_array(*x))?.as_array())
}

/// History value `F(t, x) = fractal_factor(t, η) · rhs(x)` with the
/// configured startup regularization at the singular node.
pub(crate) fn history_value(
    params: &ModelParams,
    x: &[f64; DIM],
    t: f64,
    eta: f64,
    h: f64,
    options: &SolverOptions,
) -> Result<[f64; DIM]> {
    if t == 0.0 && eta < 1.0 && options.startup == StartupRegularization::ZeroInitialValue {
        return Ok([0.0; DIM]);
    }
    let factor = fractal_factor(t, eta, h);
    let mut f = rhs_array(params, x)?;
    for v in &mut f {
        *v *= factor;
    }
    Ok(f)
}
