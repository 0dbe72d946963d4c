//! Disease-free and endemic equilibria.

use nalgebra::{SMatrix, SVector};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{derived_rates, jacobian, rhs, ModelParams, State, DIM};

use super::reproduction::reproduction_number;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum EquilibriumKind {
    DiseaseFree,
    Endemic,
}

/// An equilibrium point together with the honestly measured residual.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EquilibriumReport {
    pub point: State,
    /// max-abs of the right-hand side at `point`; never clamped.
    pub residual_norm: f64,
    pub kind: EquilibriumKind,
    pub closed_form_used: bool,
    pub refinement_iterations: usize,
    /// Closed-form seed the refinement started from (endemic only).
    pub seed: Option<State>,
}

/// Disease-free equilibrium `(Π/(σ+ν), 0, …, 0, σΠ/((σ+ν)ν))`.
pub fn disease_free_equilibrium(params: &ModelParams) -> Result<EquilibriumReport> {
    params.validate()?;
    let a1 = params.sigma + params.nu;
    let point = State::new(
        params.pi / a1,
        0.0,
        0.0,
        0.0,
        0.0,
        0.0,
        params.sigma * params.pi / (a1 * params.nu),
    );
    let residual_norm = rhs(params, &point)?.max_abs();
    Ok(EquilibriumReport {
        point,
        residual_norm,
        kind: EquilibriumKind::DiseaseFree,
        closed_form_used: true,
        refinement_iterations: 0,
        seed: None,
    })
}

/// Closed-form endemic point read with the infection term normalized to
/// `N ≡ 1`; used as the refinement seed.
fn endemic_seed(params: &ModelParams) -> State {
    let dr = derived_rates(params);
    let i = params.pi / dr.lambda - dr.a1 / params.beta;
    assemble_endemic(params, dr.lambda / params.beta, i)
}

/// Exact endemic point for the live population sum: every equilibrium
/// has `N* = Π/ν`, which makes the remaining balance equations linear.
fn endemic_live(params: &ModelParams, r0: f64) -> State {
    let dr = derived_rates(params);
    let n_star = params.pi / params.nu;
    let s_p = dr.j1 * n_star / params.beta;
    let i = params.pi / dr.j1 * (1.0 - 1.0 / r0);
    assemble_endemic(params, s_p, i)
}

fn assemble_endemic(params: &ModelParams, s_p: f64, i: f64) -> State {
    let dr = derived_rates(params);
    let i_p = params.gamma1 * i / dr.j2;
    let i_n = params.gamma2 * i / dr.j3;
    let i_c = params.gamma3 * i / dr.j4;
    let r = (params.tau1 * i + params.tau2 * i_n + params.tau3 * i_p + params.tau4 * i_c) / dr.j5;
    let d = (params.sigma * s_p
        + params.phi1 * i_n
        + params.phi2 * i_c
        + params.gamma4 * i
        + params.tau * r)
        / params.nu;
    State::new(s_p, i, i_p, i_n, i_c, r, d)
}

fn residual(params: &ModelParams, x: &[f64; DIM]) -> Result<f64> {
    Ok(rhs(params, &State::from_array(*x))?.max_abs())
}

/// Damped Newton iteration on `rhs = 0` with the live population sum.
fn newton_refine(
    params: &ModelParams,
    seed: [f64; DIM],
    target: f64,
    max_iter: usize,
) -> Result<([f64; DIM], f64, usize)> {
    let mut x = seed;
    let mut norm = residual(params, &x)?;
    for iteration in 0..max_iter {
        if norm <= target {
            return Ok((x, norm, iteration));
        }
        let j = jacobian(params, &State::from_array(x))?;
        let jm = SMatrix::<f64, DIM, DIM>::from_fn(|r, c| j[r][c]);
        let res = rhs(params, &State::from_array(x))?.as_array();
        let rv = SVector::<f64, DIM>::from_row_slice(&res);
        let delta = jm
            .lu()
            .solve(&(-rv))
            .ok_or(Error::SingularMatrix("endemic refinement Jacobian"))?;
        let mut step = 1.0;
        loop {
            let mut trial = [0.0; DIM];
            for c in 0..DIM {
                trial[c] = x[c] + step * delta[c];
            }
            let trial_state = State::from_array(trial);
            if trial_state.is_finite() {
                let trial_norm = residual(params, &trial)?;
                if trial_norm < norm {
                    x = trial;
                    norm = trial_norm;
                    break;
                }
            }
            step *= 0.5;
            if step < 1e-12 {
                return Err(Error::NewtonStalled { target, best: norm });
            }
        }
    }
    if norm <= target {
        Ok((x, norm, max_iter))
    } else {
        Err(Error::NewtonStalled { target, best: norm })
    }
}

/// Endemic equilibrium: closed-form seed, then damped Newton refinement
/// against the live-`N` right-hand side.
///
/// Exists iff the reproduction number exceeds one; otherwise the
/// computed `I*` is nonpositive and the error carries it.
pub fn endemic_equilibrium(params: &ModelParams) -> Result<EquilibriumReport> {
    params.validate()?;
    if params.beta <= 0.0 {
        return Err(Error::NoEndemicEquilibrium {
            i_star: f64::NEG_INFINITY,
        });
    }
    let r0 = reproduction_number(params)?;
    let dr = derived_rates(params);
    let i_live = params.pi / dr.j1 * (1.0 - 1.0 / r0);
    if !(i_live > 0.0) {
        return Err(Error::NoEndemicEquilibrium { i_star: i_live });
    }
    let seed = endemic_seed(params);
    let target = 1e-12 * params.pi.max(1.0);
    // The refinement can slide into the disease-free root when the
    // normalized seed is far off; restart from the live-N closed form
    // in that case (every equilibrium has N* = Π/ν, which pins the
    // endemic point exactly).
    let (point, residual_norm, refinement_iterations) =
        match newton_refine(params, seed.as_array(), target, 200) {
            Ok(refined) if refined.0[1] > 0.0 => refined,
            _ => newton_refine(params, endemic_live(params, r0).as_array(), target, 200)?,
        };
    let required = 1e-9 * params.pi.max(1.0);
    if residual_norm > required {
        return Err(Error::NewtonStalled {
            target: required,
            best: residual_norm,
        });
    }
    Ok(EquilibriumReport {
        point: State::from_array(point),
        residual_norm,
        kind: EquilibriumKind::Endemic,
        closed_form_used: true,
        refinement_iterations,
        seed: Some(seed),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets;
    use approx::assert_relative_eq;

    #[test]
    fn disease_free_closed_form() {
        // Π=1, σ=ν=0.1 → (5, 0, …, 0, 5) with vanishing residual.
        let mut p = presets::supercritical_params();
        p.pi = 1.0;
        p.sigma = 0.1;
        p.nu = 0.1;
        let report = disease_free_equilibrium(&p).unwrap();
        assert_relative_eq!(report.point.s_p, 5.0, max_relative = 1e-14);
        assert_relative_eq!(report.point.d, 5.0, max_relative = 1e-14);
        assert_eq!(report.point.i, 0.0);
        assert!(report.residual_norm <= 1e-10 * p.pi.max(1.0));
    }

    #[test]
    fn disease_free_degenerate_cases() {
        let mut p = presets::supercritical_params();
        p.pi = 0.0;
        let report = disease_free_equilibrium(&p).unwrap();
        assert_eq!(report.point, State::zero());

        let mut q = presets::supercritical_params();
        q.sigma = 0.0;
        let report = disease_free_equilibrium(&q).unwrap();
        assert_eq!(report.point.d, 0.0);
        assert_relative_eq!(report.point.s_p, q.pi / q.nu, max_relative = 1e-14);
    }

    #[test]
    fn endemic_refinement_reaches_tight_residual() {
        // Spreading regime with every flow active.
        let p = ModelParams {
            pi: 1.0,
            beta: 2.0,
            sigma: 0.1,
            nu: 0.1,
            gamma1: 0.05,
            gamma2: 0.05,
            gamma3: 0.05,
            gamma4: 0.05,
            tau: 0.02,
            tau1: 0.05,
            tau2: 0.05,
            tau3: 0.05,
            tau4: 0.05,
            phi1: 0.05,
            phi2: 0.05,
            alpha: 1.0,
            eta: 1.0,
        };
        let report = endemic_equilibrium(&p).unwrap();
        assert!(report.residual_norm <= 1e-9 * p.pi.max(1.0));
        assert!(report.point.i > 0.0);
        assert!(report.seed.is_some());
        // Live-N closed form is an independent route to the same point.
        let r0 = reproduction_number(&p).unwrap();
        let direct = endemic_live(&p, r0);
        for (a, b) in report.point.as_array().iter().zip(direct.as_array()) {
            assert_relative_eq!(a, &b, max_relative = 1e-8);
        }
    }

    #[test]
    fn no_endemic_point_below_threshold() {
        let p = presets::subcritical_params();
        match endemic_equilibrium(&p) {
            Err(Error::NoEndemicEquilibrium { i_star }) => assert!(i_star <= 0.0),
            other => panic!("expected NoEndemicEquilibrium, got {other:?}"),
        }
    }

    #[test]
    fn refined_impact_positive_over_random_supercritical_sweep() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let mut p = ModelParams {
                pi: rng.gen_range(0.05..2.0),
                beta: 0.0,
                sigma: rng.gen_range(0.01..0.3),
                nu: rng.gen_range(0.01..0.3),
                gamma1: rng.gen_range(0.01..0.2),
                gamma2: rng.gen_range(0.01..0.2),
                gamma3: rng.gen_range(0.01..0.2),
                gamma4: rng.gen_range(0.01..0.2),
                tau: rng.gen_range(0.01..0.2),
                tau1: rng.gen_range(0.01..0.2),
                tau2: rng.gen_range(0.01..0.2),
                tau3: rng.gen_range(0.01..0.2),
                tau4: rng.gen_range(0.01..0.2),
                phi1: rng.gen_range(0.01..0.2),
                phi2: rng.gen_range(0.01..0.2),
                alpha: 1.0,
                eta: 1.0,
            };
            // Place beta strictly above the threshold value.
            let dr = derived_rates(&p);
            p.beta = dr.a1 * dr.j1 / p.nu * rng.gen_range(1.1..4.0);
            let report = endemic_equilibrium(&p).unwrap();
            assert!(report.point.i > 0.0);
            assert!(report.residual_norm <= 1e-9 * p.pi.max(1.0));
        }
    }
}
