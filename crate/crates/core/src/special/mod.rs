//! Special functions: Gamma and the one-parameter Mittag-Leffler
//! function, plus the kernel normalization constants built from them.

mod gamma;
mod mittag_leffler;

pub use gamma::{gamma_fn, ln_gamma};
pub use mittag_leffler::{
    mittag_leffler, mittag_leffler_asymptotic, mittag_leffler_integral, mittag_leffler_series,
    mittag_leffler_with_policy, MLEvalPolicy,
};

/// Default Atangana-Baleanu normalization `AB(α) = 1 − α + α/Γ(α)`.
///
/// Returns exactly 1 at `α = 1` so that the Mittag-Leffler scheme
/// degenerates bit-exactly to the power-law one.
pub fn ab_normalization(alpha: f64) -> f64 {
    if alpha == 1.0 {
        1.0
    } else {
        1.0 - alpha + alpha / gamma::gamma_pos(alpha)
    }
}

pub(crate) use gamma::gamma_pos;
