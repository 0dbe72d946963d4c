//! Second-order wave-detection window.
//!
//! The impacted classes can only develop the curvature extrema read as
//! additional waves while `S_p` sits inside an explicit window; this
//! module evaluates the window and the curvature trichotomy at a state.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{derived_rates, second_derivative_rhs, ModelParams, State};

/// Sign class of `d²I/dt²` at the sampled state.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CurvatureClass {
    /// Negative curvature: the impacted class sits at/near a crest.
    LocalMaximum,
    /// Positive curvature: a trough, compatible with a renewed wave.
    LocalMinimum,
    Inflection,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WaveWindowReport {
    /// `j₁² / (βσ + 2βj₁ + β²)`.
    pub lower: f64,
    /// `min{(j₁+j₂)N/β, (j₁+j₃)N/β, (j₁+j₄)N/β}`.
    pub upper: f64,
    pub s_p_current: f64,
    /// True iff `lower < S_p < upper`.
    pub in_window: bool,
    /// `d²I/dt²` at the state.
    pub i_curvature: f64,
    pub curvature: CurvatureClass,
    /// Whether the auxiliary dominance assumptions `N > S_p`, `N > I`
    /// used to derive the window hold at this state.
    pub n_exceeds_s_p: bool,
    pub n_exceeds_i: bool,
}

/// Evaluates the wave window and curvature trichotomy at `state`.
pub fn wave_window(params: &ModelParams, state: &State) -> Result<WaveWindowReport> {
    params.validate()?;
    if params.beta <= 0.0 {
        return Err(Error::ZeroDenominator("wave window (β = 0)"));
    }
    let n = state.total();
    if n <= 0.0 {
        return Err(Error::ZeroPopulation);
    }
    let dr = derived_rates(params);
    let lower = dr.j1 * dr.j1
        / (params.beta * params.sigma + 2.0 * params.beta * dr.j1 + params.beta * params.beta);
    let upper = [dr.j2, dr.j3, dr.j4]
        .iter()
        .map(|j| (dr.j1 + j) * n / params.beta)
        .fold(f64::INFINITY, f64::min);
    let i_curvature = second_derivative_rhs(params, state)?.i;
    let curvature = if i_curvature < 0.0 {
        CurvatureClass::LocalMaximum
    } else if i_curvature > 0.0 {
        CurvatureClass::LocalMinimum
    } else {
        CurvatureClass::Inflection
    };
    Ok(WaveWindowReport {
        lower,
        upper,
        s_p_current: state.s_p,
        in_window: lower < state.s_p && state.s_p < upper,
        i_curvature,
        curvature,
        n_exceeds_s_p: n > state.s_p,
        n_exceeds_i: n > state.i,
    })
}
