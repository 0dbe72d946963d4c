//! Parameters, state, right-hand side, Jacobian and second-order
//! derivative system of the seven-compartment model.
//!
//! Compartments, in fixed order: `S_p` (willing but susceptible to
//! harmful criticism), `I` (impacted), `I_p` (impacted, positive
//! opinion), `I_n` (impacted, negative opinion), `I_c` (impacted,
//! confused), `R` (recovered from the divisions), `D` (death or denial).
//!
//! The total population `N` is always the live sum of all seven
//! compartments, which makes the conservation identity
//! `dN/dt = Π − νN` hold exactly.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Number of compartments.
pub const DIM: usize = 7;

fn default_order() -> f64 {
    1.0
}

/// Rate constants of the model plus the fractional orders.
///
/// All rates are per unit time; populations are dimensionless counts.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ModelParams {
    /// Influx of individuals becoming eligible for a dose.
    pub pi: f64,
    /// Transmission coefficient of harmful information.
    pub beta: f64,
    /// Denial/death exit rate out of `S_p`.
    pub sigma: f64,
    /// Natural exit rate, common to every compartment.
    pub nu: f64,
    /// I -> I_p rate.
    pub gamma1: f64,
    /// I -> I_n rate.
    pub gamma2: f64,
    /// I -> I_c rate.
    pub gamma3: f64,
    /// I -> D rate.
    pub gamma4: f64,
    /// R -> D rate.
    pub tau: f64,
    /// I -> R recovery rate.
    pub tau1: f64,
    /// I_n -> R recovery rate.
    pub tau2: f64,
    /// I_p -> R recovery rate.
    pub tau3: f64,
    /// I_c -> R recovery rate.
    pub tau4: f64,
    /// I_n -> D rate.
    pub phi1: f64,
    /// I_c -> D rate.
    pub phi2: f64,
    /// Fractional (memory) order, in (0, 1].
    #[serde(default = "default_order")]
    pub alpha: f64,
    /// Fractal (time-scaling) dimension, in (0, 1].
    #[serde(default = "default_order")]
    pub eta: f64,
}

impl ModelParams {
    /// Checks the admissibility invariants: every rate nonnegative,
    /// `nu > 0`, and both orders in (0, 1].
    pub fn validate(&self) -> Result<()> {
        let rates = [
            ("pi", self.pi),
            ("beta", self.beta),
            ("sigma", self.sigma),
            ("nu", self.nu),
            ("gamma1", self.gamma1),
            ("gamma2", self.gamma2),
            ("gamma3", self.gamma3),
            ("gamma4", self.gamma4),
            ("tau", self.tau),
            ("tau1", self.tau1),
            ("tau2", self.tau2),
            ("tau3", self.tau3),
            ("tau4", self.tau4),
            ("phi1", self.phi1),
            ("phi2", self.phi2),
        ];
        for (name, value) in rates {
            if !value.is_finite() || value < 0.0 {
                return Err(Error::InvalidParam {
                    name,
                    reason: format!("must be a finite nonnegative rate, got {value}"),
                });
            }
        }
        if self.nu <= 0.0 {
            return Err(Error::InvalidParam {
                name: "nu",
                reason: "must be strictly positive".into(),
            });
        }
        for (name, value) in [("alpha", self.alpha), ("eta", self.eta)] {
            if !value.is_finite() || value <= 0.0 || value > 1.0 {
                return Err(Error::InvalidParam {
                    name,
                    reason: format!("must lie in (0, 1], got {value}"),
                });
            }
        }
        Ok(())
    }
}

/// Compartment values at one instant.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct State {
    pub s_p: f64,
    pub i: f64,
    pub i_p: f64,
    pub i_n: f64,
    pub i_c: f64,
    pub r: f64,
    pub d: f64,
}

impl State {
    pub const fn new(s_p: f64, i: f64, i_p: f64, i_n: f64, i_c: f64, r: f64, d: f64) -> Self {
        Self {
            s_p,
            i,
            i_p,
            i_n,
            i_c,
            r,
            d,
        }
    }

    pub const fn zero() -> Self {
        Self::new(0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0)
    }

    pub const fn as_array(&self) -> [f64; DIM] {
        [
            self.s_p, self.i, self.i_p, self.i_n, self.i_c, self.r, self.d,
        ]
    }

    pub const fn from_array(x: [f64; DIM]) -> Self {
        Self::new(x[0], x[1], x[2], x[3], x[4], x[5], x[6])
    }

    /// Total population `N`: the live sum of all seven compartments.
    pub fn total(&self) -> f64 {
        self.s_p + self.i + self.i_p + self.i_n + self.i_c + self.r + self.d
    }

    pub fn is_finite(&self) -> bool {
        self.as_array().iter().all(|v| v.is_finite())
    }

    /// A state is admissible iff every compartment is finite and >= 0.
    pub fn is_admissible(&self) -> bool {
        self.is_finite() && self.as_array().iter().all(|v| *v >= 0.0)
    }
}

/// Time derivative of a [`State`], same slot order.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StateDerivative {
    pub s_p: f64,
    pub i: f64,
    pub i_p: f64,
    pub i_n: f64,
    pub i_c: f64,
    pub r: f64,
    pub d: f64,
}

impl StateDerivative {
    pub const fn as_array(&self) -> [f64; DIM] {
        [
            self.s_p, self.i, self.i_p, self.i_n, self.i_c, self.r, self.d,
        ]
    }

    pub const fn from_array(x: [f64; DIM]) -> Self {
        Self {
            s_p: x[0],
            i: x[1],
            i_p: x[2],
            i_n: x[3],
            i_c: x[4],
            r: x[5],
            d: x[6],
        }
    }

    pub fn max_abs(&self) -> f64 {
        self.as_array().iter().fold(0.0f64, |m, v| m.max(v.abs()))
    }
}

/// Aggregate exit rates used throughout the equilibrium, reproduction
/// and stability formulas.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DerivedRates {
    /// Exit rate of `I`: gamma1+gamma2+gamma3+gamma4+tau1+nu.
    pub j1: f64,
    /// Exit rate of `I_p`: tau3+nu.
    pub j2: f64,
    /// Exit rate of `I_n`: tau2+phi1+nu.
    pub j3: f64,
    /// Exit rate of `I_c`: tau4+phi2+nu.
    pub j4: f64,
    /// Exit rate of `R`: tau+nu.
    pub j5: f64,
    /// Exit rate of `S_p`: sigma+nu.
    pub a1: f64,
    /// Alias for `j1` used by the endemic closed forms.
    pub lambda: f64,
}

/// Computes the aggregate exit rates from the raw constants.
pub fn derived_rates(params: &ModelParams) -> DerivedRates {
    let j1 = params.gamma1 + params.gamma2 + params.gamma3 + params.gamma4 + params.tau1 + params.nu;
    DerivedRates {
        j1,
        j2: params.tau3 + params.nu,
        j3: params.tau2 + params.phi1 + params.nu,
        j4: params.tau4 + params.phi2 + params.nu,
        j5: params.tau + params.nu,
        a1: params.sigma + params.nu,
        lambda: j1,
    }
}

/// Total population `N` of a state.
pub fn total_population(state: &State) -> f64 {
    state.total()
}

/// Force of infection `beta * S_p * I / N`, defined as 0 when `N = 0`
/// (the limit along admissible paths).
fn force_of_infection(params: &ModelParams, state: &State, n: f64) -> f64 {
    if n == 0.0 {
        0.0
    } else {
        params.beta * state.s_p * state.i / n
    }
}

/// Right-hand side of the model at `state` with the live population sum.
///
/// The component sum equals `Π − νN` exactly in exact arithmetic.
pub fn rhs(params: &ModelParams, state: &State) -> Result<StateDerivative> {
    if !state.is_finite() {
        return Err(Error::NonFinite("rhs state"));
    }
    let n = state.total();
    let foi = force_of_infection(params, state, n);
    let dr = derived_rates(params);
    Ok(StateDerivative {
        s_p: params.pi - foi - params.sigma * state.s_p - params.nu * state.s_p,
        i: foi - dr.j1 * state.i,
        i_p: params.gamma1 * state.i - dr.j2 * state.i_p,
        i_n: params.gamma2 * state.i - dr.j3 * state.i_n,
        i_c: params.gamma3 * state.i - dr.j4 * state.i_c,
        r: params.tau1 * state.i
            + params.tau2 * state.i_n
            + params.tau3 * state.i_p
            + params.tau4 * state.i_c
            - dr.j5 * state.r,
        d: params.sigma * state.s_p
            + params.phi1 * state.i_n
            + params.phi2 * state.i_c
            + params.gamma4 * state.i
            + params.tau * state.r
            - params.nu * state.d,
    })
}

/// Analytic Jacobian of [`rhs`] with `N` treated as the dependent sum of
/// the state slots. Slot order is `(S_p, I, I_p, I_n, I_c, R, D)`.
pub fn jacobian(params: &ModelParams, state: &State) -> Result<[[f64; DIM]; DIM]> {
    if !state.is_finite() {
        return Err(Error::NonFinite("jacobian state"));
    }
    let n = state.total();
    if n <= 0.0 {
        return Err(Error::ZeroPopulation);
    }
    let dr = derived_rates(params);
    let n2 = n * n;
    // Partial derivatives of the force of infection beta*S_p*I/N with
    // dN/dx_k = 1 for every slot.
    let foi_sp = params.beta * state.i * (n - state.s_p) / n2;
    let foi_i = params.beta * state.s_p * (n - state.i) / n2;
    let foi_other = -params.beta * state.s_p * state.i / n2;

    let mut j = [[0.0; DIM]; DIM];
    // d(S_p')/dx
    j[0] = [
        -foi_sp - dr.a1,
        -foi_i,
        -foi_other,
        -foi_other,
        -foi_other,
        -foi_other,
        -foi_other,
    ];
    // d(I')/dx
    j[1] = [
        foi_sp,
        foi_i - dr.j1,
        foi_other,
        foi_other,
        foi_other,
        foi_other,
        foi_other,
    ];
    // d(I_p')/dx
    j[2][1] = params.gamma1;
    j[2][2] = -dr.j2;
    // d(I_n')/dx
    j[3][1] = params.gamma2;
    j[3][3] = -dr.j3;
    // d(I_c')/dx
    j[4][1] = params.gamma3;
    j[4][4] = -dr.j4;
    // d(R')/dx
    j[5][1] = params.tau1;
    j[5][2] = params.tau3;
    j[5][3] = params.tau2;
    j[5][4] = params.tau4;
    j[5][5] = -dr.j5;
    // d(D')/dx
    j[6][0] = params.sigma;
    j[6][1] = params.gamma4;
    j[6][3] = params.phi1;
    j[6][4] = params.phi2;
    j[6][5] = params.tau;
    j[6][6] = -params.nu;
    Ok(j)
}

/// Second time derivative of every compartment, evaluated from the
/// displayed d²x/dt² formulas with the dotted quantities replaced by
/// [`rhs`] and `Ṅ = Π − νN`.
///
/// Equals `jacobian(state) · rhs(state)` in exact arithmetic.
pub fn second_derivative_rhs(params: &ModelParams, state: &State) -> Result<StateDerivative> {
    let n = state.total();
    if n <= 0.0 {
        return Err(Error::ZeroPopulation);
    }
    let dot = rhs(params, state)?;
    let dr = derived_rates(params);
    let n_dot = params.pi - params.nu * n;
    // d/dt of the force of infection along the trajectory.
    let foi_dot = params.beta
        * ((dot.s_p * state.i + dot.i * state.s_p) * n - n_dot * state.s_p * state.i)
        / (n * n);
    Ok(StateDerivative {
        s_p: -dr.a1 * dot.s_p - foi_dot,
        i: foi_dot - dr.j1 * dot.i,
        i_p: params.gamma1 * dot.i - dr.j2 * dot.i_p,
        i_n: params.gamma2 * dot.i - dr.j3 * dot.i_n,
        i_c: params.gamma3 * dot.i - dr.j4 * dot.i_c,
        r: params.tau1 * dot.i
            + params.tau2 * dot.i_n
            + params.tau3 * dot.i_p
            + params.tau4 * dot.i_c
            - dr.j5 * dot.r,
        d: params.sigma * dot.s_p
            + params.phi1 * dot.i_n
            + params.phi2 * dot.i_c
            + params.gamma4 * dot.i
            + params.tau * dot.r
            - params.nu * dot.d,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    // A small valid parameter set shared by the hand-checked examples:
    // beta=0.5, sigma=nu=0.1, every gamma/tau_i/phi = 0.05, tau = 0.02.
    fn example_params() -> ModelParams {
        ModelParams {
            pi: 1.0,
            beta: 0.5,
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
        }
    }

    #[test]
    fn derived_rates_sums() {
        let p = example_params();
        let dr = derived_rates(&p);
        assert_relative_eq!(dr.j1, 0.35, max_relative = 1e-15);
        assert_relative_eq!(dr.j5, 0.12, max_relative = 1e-15);
        assert_eq!(dr.lambda, dr.j1);

        let mut q = p;
        q.tau3 = 0.0;
        q.nu = 0.1;
        assert_relative_eq!(derived_rates(&q).j2, 0.1, max_relative = 1e-15);
    }

    #[test]
    fn total_population_is_component_sum() {
        assert_eq!(
            total_population(&State::new(5.0, 0.0, 0.0, 0.0, 0.0, 0.0, 5.0)),
            10.0
        );
        assert_eq!(total_population(&State::zero()), 0.0);
        assert_eq!(
            total_population(&State::new(1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0)),
            7.0
        );
    }

    #[test]
    fn rhs_all_zero_state_keeps_only_influx() {
        let p = example_params();
        let d = rhs(&p, &State::zero()).unwrap();
        assert_eq!(d.s_p, 1.0);
        assert_eq!(d.i, 0.0);
        assert_eq!(d.d, 0.0);
    }

    #[test]
    fn rhs_matches_term_by_term_hand_evaluation() {
        // state (5, 1, 0, 0, 0, 0, 5), N = 11. Exact fractions:
        // foi = 5/22, S_p' = -5/22, I' = -27/220, all others 1/20.
        let p = example_params();
        let d = rhs(&p, &State::new(5.0, 1.0, 0.0, 0.0, 0.0, 0.0, 5.0)).unwrap();
        assert_relative_eq!(d.s_p, -5.0 / 22.0, max_relative = 1e-14);
        assert_relative_eq!(d.i, -27.0 / 220.0, max_relative = 1e-14);
        assert_relative_eq!(d.i_p, 0.05, max_relative = 1e-14);
        assert_relative_eq!(d.i_n, 0.05, max_relative = 1e-14);
        assert_relative_eq!(d.i_c, 0.05, max_relative = 1e-14);
        assert_relative_eq!(d.r, 0.05, max_relative = 1e-14);
        assert_relative_eq!(d.d, 0.05, max_relative = 1e-14);
    }

    #[test]
    fn rhs_rejects_non_finite_state() {
        let p = example_params();
        let mut s = State::zero();
        s.i = f64::NAN;
        assert!(matches!(rhs(&p, &s), Err(Error::NonFinite(_))));
    }

    #[test]
    fn conservation_identity() {
        let p = example_params();
        let s = State::new(3.0, 2.0, 1.0, 0.5, 0.25, 4.0, 7.0);
        let d = rhs(&p, &s).unwrap();
        let sum: f64 = d.as_array().iter().sum();
        let expected = p.pi - p.nu * s.total();
        let scale = d.as_array().iter().map(|v| v.abs()).sum::<f64>() + 1.0;
        assert!((sum - expected).abs() <= 1e-12 * scale);
    }

    #[test]
    fn jacobian_linear_entries() {
        let p = example_params();
        let s = State::new(3.0, 2.0, 1.0, 0.5, 0.25, 4.0, 7.0);
        let j = jacobian(&p, &s).unwrap();
        assert_eq!(j[2][1], p.gamma1);
        assert_eq!(j[5][5], -derived_rates(&p).j5);
        assert_eq!(j[6][0], p.sigma);
    }

    #[test]
    fn jacobian_zero_population_is_domain_error() {
        let p = example_params();
        assert_eq!(jacobian(&p, &State::zero()), Err(Error::ZeroPopulation));
    }

    #[test]
    fn jacobian_matches_central_differences() {
        let p = example_params();
        let s = State::new(4.3, 1.7, 0.9, 0.45, 0.31, 2.2, 5.9);
        let j = jacobian(&p, &s).unwrap();
        let mut worst = 0.0f64;
        for k in 0..DIM {
            let h = 1e-6 * s.as_array()[k].abs().max(1.0);
            let mut hi = s.as_array();
            let mut lo = s.as_array();
            hi[k] += h;
            lo[k] -= h;
            let dhi = rhs(&p, &State::from_array(hi)).unwrap().as_array();
            let dlo = rhs(&p, &State::from_array(lo)).unwrap().as_array();
            for row in 0..DIM {
                let fd = (dhi[row] - dlo[row]) / (2.0 * h);
                worst = worst.max((j[row][k] - fd).abs());
            }
        }
        assert!(worst <= 1e-6, "max |analytic - fd| = {worst:e}");
    }

    #[test]
    fn second_derivative_matches_jacobian_times_rhs() {
        let p = example_params();
        let s = State::new(4.3, 1.7, 0.9, 0.45, 0.31, 2.2, 5.9);
        let second = second_derivative_rhs(&p, &s).unwrap().as_array();
        let j = jacobian(&p, &s).unwrap();
        let dot = rhs(&p, &s).unwrap().as_array();
        for row in 0..DIM {
            let jr: f64 = (0..DIM).map(|c| j[row][c] * dot[c]).sum();
            assert_relative_eq!(second[row], jr, max_relative = 1e-10, epsilon = 1e-13);
        }
    }

    #[test]
    fn second_derivative_decoupled_decay() {
        // beta = 0, Pi = 0: S_p'' = (sigma+nu)^2 S_p.
        let mut p = example_params();
        p.beta = 0.0;
        p.pi = 0.0;
        let s = State::new(1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0);
        let second = second_derivative_rhs(&p, &s).unwrap();
        assert_relative_eq!(second.s_p, 0.04, max_relative = 1e-12);
    }

    #[test]
    fn params_validation_rejects_bad_orders() {
        let mut p = example_params();
        p.alpha = 1.5;
        assert!(matches!(p.validate(), Err(Error::InvalidParam { name: "alpha", .. })));
        let mut q = example_params();
        q.nu = 0.0;
        assert!(matches!(q.validate(), Err(Error::InvalidParam { name: "nu", .. })));
        assert!(example_params().validate().is_ok());
    }
}
