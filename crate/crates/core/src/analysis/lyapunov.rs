//! Volterra Lyapunov diagnostics around a strictly positive
//! equilibrium: value, first and second time derivative, and the
//! conditional global-stability indicator.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{derived_rates, rhs, second_derivative_rhs, ModelParams, State, DIM};

fn check_positive(what: &'static str, state: &State) -> Result<()> {
    if !state.is_finite() || state.as_array().iter().any(|v| *v <= 0.0) {
        return Err(Error::NonPositiveCompartment(what));
    }
    Ok(())
}

/// Volterra value `Σᵢ (xᵢ − xᵢ* − xᵢ*·ln(xᵢ/xᵢ*))`; nonnegative, zero
/// exactly at the equilibrium.
pub fn lyapunov_value(state: &State, equilibrium: &State) -> Result<f64> {
    check_positive("lyapunov_value state", state)?;
    check_positive("lyapunov_value equilibrium", equilibrium)?;
    let x = state.as_array();
    let e = equilibrium.as_array();
    let mut acc = 0.0;
    for c in 0..DIM {
        acc += x[c] - e[c] - e[c] * (x[c] / e[c]).ln();
    }
    Ok(acc)
}

/// First derivative along the flow plus its split into the collected
/// positive (`omega`) and negative (`sigma_term`) pieces, so that
/// `dl_dt = omega − sigma_term` holds to rounding.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LyapunovDerivative {
    pub dl_dt: f64,
    pub omega: f64,
    pub sigma_term: f64,
}

/// `dL/dt = Σᵢ (1 − xᵢ*/xᵢ)·rhsᵢ(state)`, with every signed flow
/// contribution routed into `omega` (positive) or `sigma_term`
/// (negative magnitude).
pub fn lyapunov_derivative(
    params: &ModelParams,
    state: &State,
    equilibrium: &State,
) -> Result<LyapunovDerivative> {
    check_positive("lyapunov_derivative state", state)?;
    check_positive("lyapunov_derivative equilibrium", equilibrium)?;
    let dot = rhs(params, state)?.as_array();
    let x = state.as_array();
    let e = equilibrium.as_array();
    let weight: Vec<f64> = (0..DIM).map(|c| 1.0 - e[c] / x[c]).collect();
    let dl_dt: f64 = (0..DIM).map(|c| weight[c] * dot[c]).sum();

    let dr = derived_rates(params);
    let n = state.total();
    let foi = if n > 0.0 {
        params.beta * state.s_p * state.i / n
    } else {
        0.0
    };
    // Signed flow pieces of each equation, in state order.
    let flows: [&[f64]; DIM] = [
        &[
            params.pi,
            -foi,
            -params.sigma * state.s_p,
            -params.nu * state.s_p,
        ],
        &[foi, -dr.j1 * state.i],
        &[params.gamma1 * state.i, -dr.j2 * state.i_p],
        &[params.gamma2 * state.i, -dr.j3 * state.i_n],
        &[params.gamma3 * state.i, -dr.j4 * state.i_c],
        &[
            params.tau1 * state.i,
            params.tau2 * state.i_n,
            params.tau3 * state.i_p,
            params.tau4 * state.i_c,
            -dr.j5 * state.r,
        ],
        &[
            params.sigma * state.s_p,
            params.phi1 * state.i_n,
            params.phi2 * state.i_c,
            params.gamma4 * state.i,
            params.tau * state.r,
            -params.nu * state.d,
        ],
    ];
    let mut omega = 0.0;
    let mut sigma_term = 0.0;
    for (c, pieces) in flows.iter().enumerate() {
        for piece in *pieces {
            let v = weight[c] * piece;
            if v >= 0.0 {
                omega += v;
            } else {
                sigma_term -= v;
            }
        }
    }
    Ok(LyapunovDerivative {
        dl_dt,
        omega,
        sigma_term,
    })
}

/// `d²L/dt² = Σᵢ [ xᵢ*·(rhsᵢ/xᵢ)² + (1 − xᵢ*/xᵢ)·(d²xᵢ/dt²) ]`.
pub fn lyapunov_second_derivative(
    params: &ModelParams,
    state: &State,
    equilibrium: &State,
) -> Result<f64> {
    check_positive("lyapunov_second_derivative state", state)?;
    check_positive("lyapunov_second_derivative equilibrium", equilibrium)?;
    let dot = rhs(params, state)?.as_array();
    let second = second_derivative_rhs(params, state)?.as_array();
    let x = state.as_array();
    let e = equilibrium.as_array();
    let mut acc = 0.0;
    for c in 0..DIM {
        let ratio = dot[c] / x[c];
        acc += e[c] * ratio * ratio + (1.0 - e[c] / x[c]) * second[c];
    }
    Ok(acc)
}

/// Value and sign of the five-term bracket whose nonpositivity is the
/// stated sufficient condition for global stability of the endemic
/// point. Reported as a diagnostic only; it gates nothing.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GlobalStabilityCheck {
    pub bracket: f64,
    pub satisfied: bool,
}

pub fn global_stability_indicator(
    state: &State,
    equilibrium: &State,
) -> Result<GlobalStabilityCheck> {
    check_positive("global_stability_indicator state", state)?;
    check_positive("global_stability_indicator equilibrium", equilibrium)?;
    let n = state.total();
    let n_star = equilibrium.total();
    let bracket = 5.0
        - equilibrium.s_p / state.s_p
        - n_star * state.s_p / (n * equilibrium.s_p)
        - equilibrium.i_p * state.i / (equilibrium.i * state.i_p)
        - state.i_p / equilibrium.i_p
        - equilibrium.i_n * state.i / (equilibrium.i * state.i_n)
        - state.i_n / equilibrium.i_n
        - equilibrium.i_c * state.i / (equilibrium.i * state.i_c)
        - state.i_c / equilibrium.i_c
        + n_star * state.i / (n * equilibrium.i);
    Ok(GlobalStabilityCheck {
        bracket,
        satisfied: bracket <= 0.0,
    })
}
