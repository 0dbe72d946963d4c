//! Run report: the analytic diagnostics attached to a simulation,
//! with failed computations carried as explicit inapplicability notes
//! instead of silent NaNs.

use serde::Serialize;

use infowave_core::analysis::{
    disease_free_equilibrium, endemic_equilibrium, lipschitz_constants, next_generation_matrices,
    reproduction_number, stability_spectrum, strength_number, wave_window, EquilibriumReport,
    LipschitzReport, NGMReport, StabilityReport, SupBounds, WaveWindowReport,
};
use infowave_core::model::ModelParams;
use infowave_core::solvers::Trajectory;

/// A diagnostic that either produced a value or records why it could
/// not.
#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum Computed<T> {
    Value(T),
    Inapplicable { inapplicable: String },
}

impl<T> From<infowave_core::Result<T>> for Computed<T> {
    fn from(r: infowave_core::Result<T>) -> Self {
        match r {
            Ok(v) => Computed::Value(v),
            Err(e) => Computed::Inapplicable {
                inapplicable: e.to_string(),
            },
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SchemeMeta {
    pub kernel: String,
    pub alpha: f64,
    pub eta: f64,
    pub h: f64,
    pub t_end: f64,
    pub n_steps: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct WaveSample {
    pub t: f64,
    pub window: WaveWindowReport,
}

#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub scheme: SchemeMeta,
    pub r0: Computed<f64>,
    pub strength_number: Computed<f64>,
    pub next_generation: Computed<NGMReport>,
    pub disease_free: Computed<EquilibriumReport>,
    pub endemic: Computed<EquilibriumReport>,
    pub stability: Computed<StabilityReport>,
    /// Existence constants fed with the trajectory's own maxima.
    pub lipschitz: Computed<LipschitzReport>,
    pub wave_windows: Vec<WaveSample>,
    pub final_state: infowave_core::State,
    pub wall_time_seconds: f64,
}

/// Assembles the full report for a finished trajectory.
pub fn build_run_report(
    params: &ModelParams,
    trajectory: &Trajectory,
    kernel_label: &str,
    wall_time_seconds: f64,
) -> RunReport {
    let bounds = SupBounds::from_trajectory(trajectory);
    let n_nodes = trajectory.states.len();
    let sample_stride = (n_nodes / 10).max(1);
    let wave_windows = trajectory
        .nodes()
        .enumerate()
        .filter(|(k, _)| k % sample_stride == 0 || *k == n_nodes - 1)
        .filter_map(|(_, (t, state))| {
            wave_window(params, state)
                .ok()
                .map(|window| WaveSample { t, window })
        })
        .collect();
    RunReport {
        scheme: SchemeMeta {
            kernel: kernel_label.to_string(),
            alpha: trajectory.alpha,
            eta: trajectory.eta,
            h: trajectory.grid.h,
            t_end: trajectory.grid.t_end(),
            n_steps: trajectory.grid.n_steps,
        },
        r0: reproduction_number(params).into(),
        strength_number: strength_number(params).into(),
        next_generation: next_generation_matrices(params).into(),
        disease_free: disease_free_equilibrium(params).into(),
        endemic: endemic_equilibrium(params).into(),
        stability: stability_spectrum(params).into(),
        lipschitz: lipschitz_constants(params, &bounds).into(),
        wave_windows,
        final_state: *trajectory.final_state(),
        wall_time_seconds,
    }
}
