//! Existence/uniqueness constants: the per-equation Lipschitz and
//! growth constants and the feasibility conditions K₁…K₆.
//!
//! The formulas are evaluated exactly as printed in the source
//! derivation, including spots where that derivation is internally
//! odd (a quartic σ power, two unsquared rates, an undefined ε₁ taken
//! as zero, and a spurious ‖I_c‖ factor); `notes` records each such
//! spot so reports stay self-describing.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::ModelParams;
use crate::solvers::Trajectory;

/// Supremum-norm surrogates for the trajectories entering the bounds.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SupBounds {
    pub sup_sp: f64,
    pub sup_i: f64,
    pub sup_ip: f64,
    pub sup_in: f64,
    pub sup_ic: f64,
    pub sup_r: f64,
    pub sup_n: f64,
}

impl SupBounds {
    /// Componentwise maxima of a stored trajectory (plus the maximum
    /// population sum).
    pub fn from_trajectory(trajectory: &Trajectory) -> Self {
        let mut b = SupBounds {
            sup_sp: 0.0,
            sup_i: 0.0,
            sup_ip: 0.0,
            sup_in: 0.0,
            sup_ic: 0.0,
            sup_r: 0.0,
            sup_n: 0.0,
        };
        for s in &trajectory.states {
            b.sup_sp = b.sup_sp.max(s.s_p.abs());
            b.sup_i = b.sup_i.max(s.i.abs());
            b.sup_ip = b.sup_ip.max(s.i_p.abs());
            b.sup_in = b.sup_in.max(s.i_n.abs());
            b.sup_ic = b.sup_ic.max(s.i_c.abs());
            b.sup_r = b.sup_r.max(s.r.abs());
            b.sup_n = b.sup_n.max(s.total().abs());
        }
        b
    }

    pub fn validate(&self) -> Result<()> {
        let fields = [
            ("sup_sp", self.sup_sp),
            ("sup_i", self.sup_i),
            ("sup_ip", self.sup_ip),
            ("sup_in", self.sup_in),
            ("sup_ic", self.sup_ic),
            ("sup_r", self.sup_r),
            ("sup_n", self.sup_n),
        ];
        for (name, v) in fields {
            if !v.is_finite() || v < 0.0 {
                return Err(Error::InvalidParam {
                    name,
                    reason: format!("supremum bound must be finite and nonnegative, got {v}"),
                });
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LipschitzReport {
    /// Squared-Lipschitz constants ρ₁…ρ₇, one per equation.
    pub rho: [f64; 7],
    /// Growth constants ρ̄₁…ρ̄₇.
    pub rho_bar: [f64; 7],
    /// Feasibility ratios K₁…K₆.
    pub k_conditions: [f64; 6],
    /// True iff `max(K₁…K₆) ≤ 1`.
    pub feasible: bool,
    /// Spots where the printed formulas are evaluated verbatim despite
    /// looking like transcription slips.
    pub notes: Vec<String>,
}

/// Evaluates every printed ρᵢ, ρ̄ᵢ and Kᵢ formula.
pub fn lipschitz_constants(params: &ModelParams, bounds: &SupBounds) -> Result<LipschitzReport> {
    params.validate()?;
    bounds.validate()?;
    let b2 = params.beta * params.beta;
    let nu2 = params.nu * params.nu;
    let sup_i2 = bounds.sup_i * bounds.sup_i;
    let sup_sp2 = bounds.sup_sp * bounds.sup_sp;
    let sup_ic2 = bounds.sup_ic * bounds.sup_ic;
    let gamma_sq = params.gamma1 * params.gamma1
        + params.gamma2 * params.gamma2
        + params.gamma3 * params.gamma3
        + params.gamma4 * params.gamma4;

    let rho = [
        2.0 * (b2 * sup_i2 + params.sigma.powi(4) + nu2),
        2.0 * (b2 * sup_sp2 + gamma_sq + params.tau1 * params.tau1 + nu2),
        2.0 * (params.tau3 * params.tau3 + nu2),
        2.0 * (params.tau2 * params.tau2 + params.phi1 * params.phi1 + nu2),
        2.0 * (params.tau4 * params.tau4 + params.phi2 * params.phi2 + nu2),
        2.0 * (params.tau * params.tau + nu2),
        2.0 * nu2,
    ];

    let rho_bar = [
        2.0 * params.pi * params.pi,
        2.0 * (b2 * sup_sp2 + gamma_sq + params.tau1 * params.tau1 + nu2),
        2.0 * params.gamma1 * params.gamma1 * sup_i2,
        2.0 * params.gamma2 * params.gamma2 * sup_i2 * sup_ic2,
        2.0 * params.gamma3 * params.gamma3 * sup_i2,
        2.0 * (params.tau1 * params.tau1 * sup_i2
            + params.tau2 * params.tau2 * bounds.sup_in * bounds.sup_in
            + params.tau3 * params.tau3 * bounds.sup_ip * bounds.sup_ip
            + params.tau4 * params.tau4 * sup_ic2),
        2.0 * (params.sigma * params.sigma * sup_sp2
            + params.phi1 * params.phi1 * bounds.sup_in * bounds.sup_in
            + params.phi2 * params.phi2 * sup_ic2
            + params.gamma4 * params.gamma4 * sup_i2
            + params.tau * params.tau * bounds.sup_r * bounds.sup_r),
    ];

    let numerators = [
        2.0 * (b2 * sup_i2 + params.sigma.powi(4) + nu2),
        2.0 * (params.tau3 * params.tau3 + nu2),
        2.0 * (params.tau2 + params.phi1 + params.nu),
        2.0 * (params.tau4 * params.tau4 + params.phi2 * params.phi2 + params.nu),
        2.0 * (params.tau * params.tau + nu2),
        2.0 * nu2,
    ];
    let denominators = [
        ("K1", rho_bar[0]),
        ("K2", rho_bar[2]),
        ("K3", rho_bar[3]),
        ("K4", rho_bar[4]),
        ("K5", rho_bar[5]),
        ("K6", rho_bar[6]),
    ];
    let mut k_conditions = [0.0; 6];
    for (slot, ((name, denominator), numerator)) in
        denominators.iter().zip(numerators).enumerate()
    {
        if *denominator == 0.0 {
            return Err(Error::ZeroDenominator(name));
        }
        k_conditions[slot] = numerator / denominator;
    }
    let feasible = k_conditions.iter().all(|k| *k <= 1.0);

    let notes = vec![
        "rho_1 and K_1 carry sigma^4 as printed (sigma^2 expected)".to_string(),
        "rho_7 drops the undefined epsilon_1 term (taken as 0)".to_string(),
        "rho_bar_4 and K_3 carry the extra ||I_c|| factor as printed".to_string(),
        "K_3 numerator rates and K_4's nu are unsquared as printed".to_string(),
    ];

    Ok(LipschitzReport {
        rho,
        rho_bar,
        k_conditions,
        feasible,
        notes,
    })
}
