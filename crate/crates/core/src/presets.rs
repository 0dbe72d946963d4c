//! Documented default parameter sets.
//!
//! No parameter table ships with the source material these dynamics
//! come from, so the presets below are illustrative: all rates lie in
//! [0.01, 0.7] and the pair of presets brackets the spreading threshold
//! (reproduction numbers ≈ 0.53 and ≈ 1.37). The common scale gives a
//! steady total population of Π/ν = 10.

use crate::model::{ModelParams, State};

fn baseline(beta: f64) -> ModelParams {
    ModelParams {
        pi: 0.2,
        beta,
        sigma: 0.03,
        nu: 0.02,
        gamma1: 0.04,
        gamma2: 0.04,
        gamma3: 0.04,
        gamma4: 0.02,
        tau: 0.02,
        tau1: 0.03,
        tau2: 0.05,
        tau3: 0.05,
        tau4: 0.05,
        phi1: 0.03,
        phi2: 0.03,
        alpha: 1.0,
        eta: 1.0,
    }
}

/// Default scenario: spreading regime (R₀ ≈ 1.368).
pub fn default_params() -> ModelParams {
    supercritical_params()
}

/// Spreading preset, R₀ = 0.65·0.02/(0.05·0.19) ≈ 1.368.
pub fn supercritical_params() -> ModelParams {
    baseline(0.65)
}

/// Die-out preset, R₀ = 0.25·0.02/(0.05·0.19) ≈ 0.526.
///
/// β is placed so the spectrum at the disease-free point stays simple
/// (β = 0.3 would collide the threshold eigenvalue with −j₂).
pub fn subcritical_params() -> ModelParams {
    baseline(0.25)
}

/// Default initial condition: nine willing individuals, one impacted,
/// every other compartment empty; N(0) = Π/ν keeps the population flat.
pub fn default_initial() -> State {
    State::new(9.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0)
}

/// Decoupled decay test: no influx, no transmission, only the exit
/// rates σ = ν = 0.05, so `S_p' = −0.1·S_p` exactly.
pub fn decay_params() -> ModelParams {
    ModelParams {
        pi: 0.0,
        beta: 0.0,
        sigma: 0.05,
        nu: 0.05,
        gamma1: 0.0,
        gamma2: 0.0,
        gamma3: 0.0,
        gamma4: 0.0,
        tau: 0.0,
        tau1: 0.0,
        tau2: 0.0,
        tau3: 0.0,
        tau4: 0.0,
        phi1: 0.0,
        phi2: 0.0,
        alpha: 1.0,
        eta: 1.0,
    }
}

/// Unit mass in `S_p` for the decay test.
pub fn decay_initial() -> State {
    State::new(1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0)
}
