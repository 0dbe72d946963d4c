//! Positivity lower bounds per differentiation-operator family.
//!
//! Each compartment decays no faster than a linear relaxation whose
//! rate aggregates its worst-case outflows; the bound shape then
//! follows the operator family: exponential for the classical and
//! exponential-kernel cases, Mittag-Leffler for the power-law and
//! Mittag-Leffler kernels. The fractal variants rescale the rate by
//! `c^{1−η}` with `c` the configured fractal time constant.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{derived_rates, ModelParams};
use crate::special::{ab_normalization, mittag_leffler};

use super::lipschitz::SupBounds;

/// Differentiation-operator family a bound is stated for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OperatorFamily {
    Classical,
    Caputo,
    CaputoFabrizio,
    AtanganaBaleanu,
    FractalPower,
    FractalExponential,
    FractalMittagLeffler,
}

impl OperatorFamily {
    pub fn name(&self) -> &'static str {
        match self {
            Self::Classical => "classical",
            Self::Caputo => "caputo",
            Self::CaputoFabrizio => "caputo-fabrizio",
            Self::AtanganaBaleanu => "atangana-baleanu",
            Self::FractalPower => "fractal-power",
            Self::FractalExponential => "fractal-exponential",
            Self::FractalMittagLeffler => "fractal-mittag-leffler",
        }
    }
}

/// Compartment selector for per-compartment diagnostics.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Compartment {
    SusceptibleP,
    Impacted,
    PositiveOpinion,
    NegativeOpinion,
    Confused,
    Recovered,
    Denial,
}

impl Compartment {
    pub const ALL: [Compartment; 7] = [
        Compartment::SusceptibleP,
        Compartment::Impacted,
        Compartment::PositiveOpinion,
        Compartment::NegativeOpinion,
        Compartment::Confused,
        Compartment::Recovered,
        Compartment::Denial,
    ];

    /// Slot index in the state vector.
    pub const fn index(&self) -> usize {
        match self {
            Self::SusceptibleP => 0,
            Self::Impacted => 1,
            Self::PositiveOpinion => 2,
            Self::NegativeOpinion => 3,
            Self::Confused => 4,
            Self::Recovered => 5,
            Self::Denial => 6,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Self::SusceptibleP => "S_p",
            Self::Impacted => "I",
            Self::PositiveOpinion => "I_p",
            Self::NegativeOpinion => "I_n",
            Self::Confused => "I_c",
            Self::Recovered => "R",
            Self::Denial => "D",
        }
    }
}

/// Kernel normalizations and the fractal time constant.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct KernelConstants {
    /// Caputo-Fabrizio normalization `M(α)`.
    pub cf_normalization: f64,
    /// Atangana-Baleanu normalization; `None` selects
    /// `AB(α) = 1 − α + α/Γ(α)`.
    pub ab_normalization: Option<f64>,
    /// Fractal time constant `c` entering the `c^{1−η}` rate factor.
    pub fractal_time: f64,
}

impl Default for KernelConstants {
    fn default() -> Self {
        Self {
            cf_normalization: 1.0,
            ab_normalization: None,
            fractal_time: 1.0,
        }
    }
}

impl KernelConstants {
    pub fn validate(&self) -> Result<()> {
        if !(self.cf_normalization > 0.0) || !self.cf_normalization.is_finite() {
            return Err(Error::InvalidParam {
                name: "cf_normalization",
                reason: format!("must be positive, got {}", self.cf_normalization),
            });
        }
        if let Some(ab) = self.ab_normalization {
            if !(ab > 0.0) || !ab.is_finite() {
                return Err(Error::InvalidParam {
                    name: "ab_normalization",
                    reason: format!("must be positive, got {ab}"),
                });
            }
        }
        if !(self.fractal_time > 0.0) || !self.fractal_time.is_finite() {
            return Err(Error::InvalidParam {
                name: "fractal_time",
                reason: format!("must be positive, got {}", self.fractal_time),
            });
        }
        Ok(())
    }

    fn ab(&self, alpha: f64) -> f64 {
        self.ab_normalization
            .unwrap_or_else(|| ab_normalization(alpha))
    }
}

/// Worst-case decay rate of a compartment: its aggregated outflow
/// rates, with the infection pressure on `S_p` bounded by
/// `β·‖I‖∞/‖N‖∞`.
pub fn compartment_decay_rate(
    params: &ModelParams,
    bounds: &SupBounds,
    compartment: Compartment,
) -> Result<f64> {
    let dr = derived_rates(params);
    Ok(match compartment {
        Compartment::SusceptibleP => {
            let pressure = if params.beta * bounds.sup_i == 0.0 {
                0.0
            } else {
                if bounds.sup_n <= 0.0 {
                    return Err(Error::ZeroDenominator(
                        "S_p decay rate (‖N‖∞ = 0 with nonzero infection pressure)",
                    ));
                }
                params.beta * bounds.sup_i / bounds.sup_n
            };
            pressure + dr.a1
        }
        Compartment::Impacted => dr.j1,
        Compartment::PositiveOpinion => dr.j2,
        Compartment::NegativeOpinion => dr.j3,
        Compartment::Confused => dr.j4,
        Compartment::Recovered => dr.j5,
        Compartment::Denial => params.nu,
    })
}

/// Lower bound on a compartment at time `t` under the given operator
/// family, seeded at `initial_value`.
///
/// Shapes: classical `x₀·e^{−λt}`; Caputo `x₀·E_α(−λt^α)`; fractal
/// variants rescale `λ` by `c^{1−η}`; the exponential and
/// Mittag-Leffler kernels divide the rate by `M(α) − (1−α)λ` resp.
/// `AB(α) − (1−α)λ`, which must be positive for the bound to apply.
#[allow(clippy::too_many_arguments)]
pub fn positivity_lower_bound(
    family: OperatorFamily,
    params: &ModelParams,
    bounds: &SupBounds,
    compartment: Compartment,
    initial_value: f64,
    t: f64,
    alpha: f64,
    eta: f64,
    constants: &KernelConstants,
) -> Result<f64> {
    params.validate()?;
    bounds.validate()?;
    constants.validate()?;
    if !t.is_finite() || t < 0.0 {
        return Err(Error::InvalidParam {
            name: "t",
            reason: format!("time must be nonnegative, got {t}"),
        });
    }
    if !initial_value.is_finite() || initial_value < 0.0 {
        return Err(Error::InvalidParam {
            name: "initial_value",
            reason: format!("must be finite and nonnegative, got {initial_value}"),
        });
    }
    for (name, value) in [("alpha", alpha), ("eta", eta)] {
        if !value.is_finite() || value <= 0.0 || value > 1.0 {
            return Err(Error::InvalidParam {
                name,
                reason: format!("must lie in (0, 1], got {value}"),
            });
        }
    }
    let lambda = compartment_decay_rate(params, bounds, compartment)?;
    let fractal_scale = constants.fractal_time.powf(1.0 - eta);
    let value = match family {
        OperatorFamily::Classical => initial_value * (-lambda * t).exp(),
        OperatorFamily::Caputo => {
            initial_value * mittag_leffler(alpha, -lambda * t.powf(alpha))?
        }
        OperatorFamily::CaputoFabrizio => {
            let denominator = constants.cf_normalization - (1.0 - alpha) * lambda;
            if denominator <= 0.0 {
                return Err(Error::BoundInapplicable {
                    family: family.name(),
                    denominator,
                });
            }
            initial_value * (-alpha * lambda * t / denominator).exp()
        }
        OperatorFamily::AtanganaBaleanu => {
            let denominator = constants.ab(alpha) - (1.0 - alpha) * lambda;
            if denominator <= 0.0 {
                return Err(Error::BoundInapplicable {
                    family: family.name(),
                    denominator,
                });
            }
            initial_value
                * mittag_leffler(alpha, -alpha * lambda * t.powf(alpha) / denominator)?
        }
        OperatorFamily::FractalPower => {
            initial_value * mittag_leffler(alpha, -fractal_scale * lambda * t.powf(alpha))?
        }
        OperatorFamily::FractalExponential => {
            let denominator = constants.cf_normalization - (1.0 - alpha) * lambda;
            if denominator <= 0.0 {
                return Err(Error::BoundInapplicable {
                    family: family.name(),
                    denominator,
                });
            }
            initial_value * (-alpha * fractal_scale * lambda * t / denominator).exp()
        }
        OperatorFamily::FractalMittagLeffler => {
            let denominator = constants.ab(alpha) - (1.0 - alpha) * lambda;
            if denominator <= 0.0 {
                return Err(Error::BoundInapplicable {
                    family: family.name(),
                    denominator,
                });
            }
            initial_value
                * mittag_leffler(
                    alpha,
                    -alpha * fractal_scale * lambda * t.powf(alpha) / denominator,
                )?
        }
    };
    Ok(value)
}
