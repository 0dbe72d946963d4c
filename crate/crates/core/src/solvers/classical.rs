//! Classical fixed-step RK4 reference integrator.

use crate::error::{Error, Result};
use crate::model::{ModelParams, State, DIM};

use super::{check_inputs, rhs_array, Grid, Kernel, Trajectory};

/// Integrates the model with fourth-order Runge-Kutta; global error
/// O(h⁴) on smooth trajectories.
pub fn integrate_classical(params: &ModelParams, init: &State, grid: &Grid) -> Result<Trajectory> {
    check_inputs(params, init)?;
    let h = grid.h;
    let mut states = Vec::with_capacity(grid.n_steps + 1);
    states.push(*init);
    let mut x = init.as_array();
    for step in 0..grid.n_steps {
        // A stage overflowing mid-step is a divergence of the run, not
        // a caller error.
        let diverged = |_| Error::Diverged { node: step + 1 };
        let k1 = rhs_array(params, &x).map_err(diverged)?;
        let mut stage = [0.0; DIM];
        for c in 0..DIM {
            stage[c] = x[c] + 0.5 * h * k1[c];
        }
        let k2 = rhs_array(params, &stage).map_err(diverged)?;
        for c in 0..DIM {
            stage[c] = x[c] + 0.5 * h * k2[c];
        }
        let k3 = rhs_array(params, &stage).map_err(diverged)?;
        for c in 0..DIM {
            stage[c] = x[c] + h * k3[c];
        }
        let k4 = rhs_array(params, &stage).map_err(diverged)?;
        for c in 0..DIM {
            x[c] += h / 6.0 * (k1[c] + 2.0 * k2[c] + 2.0 * k3[c] + k4[c]);
        }
        let state = State::from_array(x);
        if !state.is_finite() {
            return Err(Error::Diverged { node: step + 1 });
        }
        states.push(state);
    }
    Ok(Trajectory {
        grid: *grid,
        states,
        kernel: Kernel::Classical,
        alpha: 1.0,
        eta: 1.0,
    })
}
