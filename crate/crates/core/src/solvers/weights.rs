//! Two-step-Lagrange history weights shared by the power-law and
//! Mittag-Leffler schemes, and the fractal time-scaling factor.

use crate::error::{Error, Result};
use crate::model::DIM;

/// Weight pair attached to the node pair `(j, j−1)` inside the history
/// sum at step `n`; both depend only on the lag `d = n − j`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SchemeWeights {
    pub w_cur: f64,
    pub w_prev: f64,
}

fn w_cur(d: f64, alpha: f64) -> f64 {
    (d + 1.0).powf(alpha) * (d + alpha + 2.0) - d.powf(alpha) * (d + 2.0 * alpha + 2.0)
}

fn w_prev(d: f64, alpha: f64) -> f64 {
    (d + 1.0).powf(alpha + 1.0) - d.powf(alpha) * (d + alpha + 1.0)
}

/// Closed-form history weights for node `j` at step `n`.
///
/// At `α = 1` they collapse to `(3, 1)`: the two-step Adams-Bashforth
/// stencil once the leading `h^α/Γ(α+2)` factor becomes `h/2`.
pub fn ff_weights(n: usize, j: usize, alpha: f64) -> Result<SchemeWeights> {
    if j > n {
        return Err(Error::InvalidParam {
            name: "j",
            reason: format!("history index {j} exceeds current step {n}"),
        });
    }
    if !alpha.is_finite() || alpha <= 0.0 || alpha > 1.0 {
        return Err(Error::InvalidParam {
            name: "alpha",
            reason: format!("must lie in (0, 1], got {alpha}"),
        });
    }
    let d = (n - j) as f64;
    Ok(SchemeWeights {
        w_cur: w_cur(d, alpha),
        w_prev: w_prev(d, alpha),
    })
}

/// Fractal chain-rule factor `η·t^{η−1}`.
///
/// `η = 1` gives exactly 1 for every `t`. At the singular node `t = 0`
/// with `η < 1` the factor is evaluated at the first positive node
/// `t = h` instead, which keeps the first step bounded.
pub fn fractal_factor(t: f64, eta: f64, h: f64) -> f64 {
    if eta == 1.0 {
        return 1.0;
    }
    let t_eff = if t == 0.0 { h } else { t };
    eta * t_eff.powf(eta - 1.0)
}

/// Incrementally extended weight table for the O(n²) history sum
///
///   S_n = Σ_{j=0..n} [F_j·w_cur(n−j) − F_{j−1}·w_prev(n−j)],
///   F_{−1} := F_0,
///
/// regrouped per history node as
///
///   S_n = F_n·w_cur(0) + Σ_{m=0..n−1} F_m·u(n−m) − F_0·w_prev(n),
///   u(d) = w_cur(d) − w_prev(d−1),
///
/// which halves the inner-loop work.
pub(crate) struct HistoryAccumulator {
    alpha: f64,
    wc0: f64,
    /// u[d−1] = w_cur(d) − w_prev(d−1) for d ≥ 1.
    u: Vec<f64>,
    /// wp[d] = w_prev(d).
    wp: Vec<f64>,
}

impl HistoryAccumulator {
    pub fn new(alpha: f64, capacity: usize) -> Self {
        let mut wp = Vec::with_capacity(capacity + 1);
        wp.push(w_prev(0.0, alpha));
        Self {
            alpha,
            wc0: w_cur(0.0, alpha),
            u: Vec::with_capacity(capacity),
            wp,
        }
    }

    fn extend(&mut self, n: usize) {
        while self.u.len() < n {
            let d = (self.u.len() + 1) as f64;
            self.u.push(w_cur(d, self.alpha) - w_prev(d - 1.0, self.alpha));
        }
        while self.wp.len() <= n {
            let d = self.wp.len() as f64;
            self.wp.push(w_prev(d, self.alpha));
        }
    }

    /// Weighted history sum at step `n`; `f` holds `F_0..F_n`.
    pub fn weighted_sum(&mut self, f: &[[f64; DIM]], n: usize) -> [f64; DIM] {
        self.extend(n);
        let mut acc = [0.0; DIM];
        for (m, fm) in f[..n].iter().enumerate() {
            let w = self.u[n - m - 1];
            for c in 0..DIM {
                acc[c] += fm[c] * w;
            }
        }
        let wp_n = self.wp[n];
        for c in 0..DIM {
            acc[c] += f[n][c] * self.wc0 - f[0][c] * wp_n;
        }
        acc
    }
}
