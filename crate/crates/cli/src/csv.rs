//! Trajectory CSV serialization: 17-significant-digit decimals, LF
//! line endings, locale-independent.

use std::fmt::Write as _;
use std::path::Path;

use anyhow::{Context, Result};

use infowave_core::analysis::{lyapunov_derivative, lyapunov_second_derivative, lyapunov_value};
use infowave_core::model::{ModelParams, State};
use infowave_core::solvers::Trajectory;

pub const HEADER: &str = "t,S_p,I,I_p,I_n,I_c,R,D,N";

/// One value at 17 significant digits: enough for an exact f64
/// round-trip through the decimal text.
fn cell(v: f64) -> String {
    format!("{v:.16e}")
}

fn push_row(out: &mut String, t: f64, state: &State) {
    let x = state.as_array();
    let _ = write!(out, "{}", cell(t));
    for v in x {
        let _ = write!(out, ",{}", cell(v));
    }
    let _ = writeln!(out, ",{}", cell(state.total()));
}

/// CSV text for one trajectory: header plus one row per node.
pub fn trajectory_csv_string(trajectory: &Trajectory) -> String {
    let mut out = String::with_capacity(32 * 10 * (trajectory.states.len() + 1));
    out.push_str(HEADER);
    out.push('\n');
    for (t, state) in trajectory.nodes() {
        push_row(&mut out, t, state);
    }
    out
}

pub fn write_trajectory_csv(trajectory: &Trajectory, path: &Path) -> Result<()> {
    std::fs::write(path, trajectory_csv_string(trajectory))
        .with_context(|| format!("writing trajectory CSV {}", path.display()))
}

/// Trajectory CSV with Lyapunov diagnostics appended as three extra
/// columns. Nodes where a compartment is not strictly positive leave
/// the diagnostic cells empty.
pub fn lyapunov_csv_string(
    trajectory: &Trajectory,
    params: &ModelParams,
    equilibrium: &State,
) -> String {
    let mut out = String::with_capacity(40 * 13 * (trajectory.states.len() + 1));
    out.push_str(HEADER);
    out.push_str(",L,dL_dt,d2L_dt2\n");
    for (t, state) in trajectory.nodes() {
        let x = state.as_array();
        let _ = write!(out, "{}", cell(t));
        for v in x {
            let _ = write!(out, ",{}", cell(v));
        }
        let _ = write!(out, ",{}", cell(state.total()));
        let diagnostics = lyapunov_value(state, equilibrium).ok().map(|l| {
            (
                l,
                lyapunov_derivative(params, state, equilibrium)
                    .map(|d| d.dl_dt)
                    .ok(),
                lyapunov_second_derivative(params, state, equilibrium).ok(),
            )
        });
        match diagnostics {
            Some((l, dl, d2l)) => {
                let _ = write!(out, ",{}", cell(l));
                match dl {
                    Some(v) => {
                        let _ = write!(out, ",{}", cell(v));
                    }
                    None => out.push(','),
                }
                match d2l {
                    Some(v) => {
                        let _ = writeln!(out, ",{}", cell(v));
                    }
                    None => out.push_str(",\n"),
                }
            }
            None => out.push_str(",,,\n"),
        }
    }
    out
}
