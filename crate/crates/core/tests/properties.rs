//! Property tests over randomized parameters and states.

use infowave_core::analysis::{
    lyapunov_value, next_generation_matrices, positivity_lower_bound, reproduction_number,
    strength_number, Compartment, KernelConstants, OperatorFamily, SupBounds,
};
use infowave_core::model::{
    derived_rates, jacobian, rhs, second_derivative_rhs, ModelParams, State, DIM,
};
use proptest::prelude::*;

fn arb_params() -> impl Strategy<Value = ModelParams> {
    (
        0.0f64..2.0,        // pi
        0.0f64..1.5,        // beta
        0.0f64..0.5,        // sigma
        0.01f64..0.5,       // nu
        prop::array::uniform4(0.0f64..0.4),
        0.0f64..0.4,        // tau
        prop::array::uniform4(0.0f64..0.4),
        prop::array::uniform2(0.0f64..0.4),
    )
        .prop_map(|(pi, beta, sigma, nu, gamma, tau, taus, phi)| ModelParams {
            pi,
            beta,
            sigma,
            nu,
            gamma1: gamma[0],
            gamma2: gamma[1],
            gamma3: gamma[2],
            gamma4: gamma[3],
            tau,
            tau1: taus[0],
            tau2: taus[1],
            tau3: taus[2],
            tau4: taus[3],
            phi1: phi[0],
            phi2: phi[1],
            alpha: 1.0,
            eta: 1.0,
        })
}

fn arb_admissible_state() -> impl Strategy<Value = State> {
    prop::array::uniform7(0.0f64..1e4).prop_map(State::from_array)
}

fn arb_positive_state() -> impl Strategy<Value = State> {
    prop::array::uniform7(1e-3f64..1e4).prop_map(State::from_array)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn conservation_sum_equals_influx_minus_outflow(
        params in arb_params(),
        state in arb_admissible_state(),
    ) {
        let d = rhs(&params, &state).unwrap();
        let sum: f64 = d.as_array().iter().sum();
        let expected = params.pi - params.nu * state.total();
        let scale = d.as_array().iter().map(|v| v.abs()).sum::<f64>() + 1.0;
        prop_assert!(
            (sum - expected).abs() <= 1e-12 * scale,
            "sum {sum} vs {expected}"
        );
    }

    #[test]
    fn empty_compartments_never_drain(
        params in arb_params(),
        state in arb_admissible_state(),
        slot in 0usize..DIM,
    ) {
        let mut x = state.as_array();
        x[slot] = 0.0;
        let d = rhs(&params, &State::from_array(x)).unwrap();
        prop_assert!(
            d.as_array()[slot] >= 0.0,
            "slot {slot} drains from empty: {}",
            d.as_array()[slot]
        );
    }

    #[test]
    fn jacobian_matches_finite_differences(
        params in arb_params(),
        state in arb_positive_state(),
    ) {
        let j = jacobian(&params, &state).unwrap();
        for k in 0..DIM {
            let h = 1e-6 * state.as_array()[k].abs().max(1.0);
            let mut hi = state.as_array();
            let mut lo = state.as_array();
            hi[k] += h;
            lo[k] -= h;
            let dhi = rhs(&params, &State::from_array(hi)).unwrap().as_array();
            let dlo = rhs(&params, &State::from_array(lo)).unwrap().as_array();
            for row in 0..DIM {
                let fd = (dhi[row] - dlo[row]) / (2.0 * h);
                prop_assert!(
                    (j[row][k] - fd).abs() <= 1e-6 * (1.0 + fd.abs()),
                    "entry ({row},{k}): analytic {} fd {fd}",
                    j[row][k]
                );
            }
        }
    }

    #[test]
    fn second_derivative_is_jacobian_times_rhs(
        params in arb_params(),
        state in arb_positive_state(),
    ) {
        let second = second_derivative_rhs(&params, &state).unwrap().as_array();
        let j = jacobian(&params, &state).unwrap();
        let dot = rhs(&params, &state).unwrap().as_array();
        for row in 0..DIM {
            let jr: f64 = (0..DIM).map(|c| j[row][c] * dot[c]).sum();
            let scale = (0..DIM)
                .map(|c| (j[row][c] * dot[c]).abs())
                .sum::<f64>()
                .max(1e-30);
            prop_assert!(
                (second[row] - jr).abs() <= 1e-10 * scale,
                "row {row}: formula {} vs product {jr}",
                second[row]
            );
        }
    }

    #[test]
    fn reproduction_number_agrees_with_spectral_radius(params in arb_params()) {
        let closed = reproduction_number(&params).unwrap();
        let ngm = next_generation_matrices(&params).unwrap();
        prop_assert!(
            (closed - ngm.spectral_radius).abs() <= 1e-12 * closed.max(1.0),
            "closed {closed} vs spectral {}",
            ngm.spectral_radius
        );
    }

    #[test]
    fn strength_number_is_negative_for_positive_rates(params in arb_params()) {
        let mut p = params;
        p.pi = p.pi.max(0.05);
        p.beta = p.beta.max(0.05);
        p.sigma = p.sigma.max(0.01);
        let sn = strength_number(&p).unwrap();
        prop_assert!(sn < 0.0, "strength number {sn} not negative");
    }

    #[test]
    fn lyapunov_value_is_positive_definite(
        state in arb_positive_state(),
        equilibrium in arb_positive_state(),
    ) {
        let v = lyapunov_value(&state, &equilibrium).unwrap();
        prop_assert!(v >= 0.0, "negative value {v}");
        let at_eq = lyapunov_value(&equilibrium, &equilibrium).unwrap();
        prop_assert!(at_eq.abs() <= 1e-12);
    }

    #[test]
    fn positivity_bounds_decay_in_time(
        params in arb_params(),
        alpha in 0.3f64..1.0,
        x0 in 0.1f64..100.0,
    ) {
        let bounds = SupBounds {
            sup_sp: 10.0,
            sup_i: 2.0,
            sup_ip: 1.0,
            sup_in: 1.0,
            sup_ic: 1.0,
            sup_r: 2.0,
            sup_n: 12.0,
        };
        let constants = KernelConstants::default();
        for family in [
            OperatorFamily::Classical,
            OperatorFamily::Caputo,
            OperatorFamily::FractalPower,
        ] {
            let mut prev = f64::INFINITY;
            for k in 0..=20 {
                let t = k as f64;
                let v = positivity_lower_bound(
                    family,
                    &params,
                    &bounds,
                    Compartment::Impacted,
                    x0,
                    t,
                    alpha,
                    0.9,
                    &constants,
                )
                .unwrap();
                prop_assert!(v <= prev + 1e-12, "family {family:?} grew at t={t}");
                prop_assert!(v >= 0.0);
                prev = v;
            }
        }
    }

    #[test]
    fn derived_rates_dominate_components(params in arb_params()) {
        let dr = derived_rates(&params);
        prop_assert!(dr.j1 >= params.gamma1);
        prop_assert!(dr.j1 >= params.tau1);
        prop_assert!(dr.j1 >= params.nu);
        prop_assert!(dr.j1 > 0.0 && dr.j2 > 0.0 && dr.j3 > 0.0 && dr.j4 > 0.0 && dr.j5 > 0.0);
    }
}
