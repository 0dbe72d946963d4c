//! Power-law (Riemann-Liouville kernel) fractal-fractional scheme.

use crate::error::{Error, Result};
use crate::model::{ModelParams, State, DIM};
use crate::special::gamma_pos;

use super::{
    check_inputs, history_value, validate_orders, Grid, HistoryAccumulator, Kernel, SolverOptions,
    Trajectory,
};

/// Two-step-Lagrange history scheme for the power-law kernel:
///
///   x(t_{n+1}) = x(0) + h^α/Γ(α+2) · Σ_{j=0..n}
///                [F(t_j)·w_cur − F(t_{j−1})·w_prev],
///
/// with `F(t, x) = η·t^{η−1}·rhs(x)` and `F(t_{−1}) := F(t_0)`.
/// Cost is O(n) per step (full history), O(n²) total.
pub fn integrate_ffp(
    params: &ModelParams,
    init: &State,
    grid: &Grid,
    alpha: f64,
    eta: f64,
) -> Result<Trajectory> {
    integrate_ffp_with(params, init, grid, alpha, eta, &SolverOptions::default())
}

pub fn integrate_ffp_with(
    params: &ModelParams,
    init: &State,
    grid: &Grid,
    alpha: f64,
    eta: f64,
    options: &SolverOptions,
) -> Result<Trajectory> {
    check_inputs(params, init)?;
    validate_orders(alpha, eta)?;
    options.validate()?;
    let h = grid.h;
    let coef = h.powf(alpha) / gamma_pos(alpha + 2.0);
    let x0 = init.as_array();

    let mut states = Vec::with_capacity(grid.n_steps + 1);
    states.push(*init);
    let mut history: Vec<[f64; DIM]> = Vec::with_capacity(grid.n_steps + 1);
    history.push(history_value(params, &x0, 0.0, eta, h, options)?);
    let mut acc = HistoryAccumulator::new(alpha, grid.n_steps);

    for step in 0..grid.n_steps {
        let s = acc.weighted_sum(&history, step);
        let mut next = [0.0; DIM];
        for c in 0..DIM {
            next[c] = x0[c] + coef * s[c];
        }
        let state = State::from_array(next);
        if !state.is_finite() {
            return Err(Error::Diverged { node: step + 1 });
        }
        history.push(history_value(
            params,
            &next,
            grid.node_time(step + 1),
            eta,
            h,
            options,
        )?);
        states.push(state);
    }
    Ok(Trajectory {
        grid: *grid,
        states,
        kernel: Kernel::PowerLaw,
        alpha,
        eta,
    })
}
