//! Analytic diagnostics: equilibria, next-generation matrices,
//! reproduction and strength numbers, stability spectrum, existence
//! (Lipschitz) constants, operator-family positivity lower bounds,
//! Lyapunov diagnostics and the second-order wave window.

mod bounds;
mod equilibrium;
mod lipschitz;
mod lyapunov;
mod reproduction;
mod stability;
mod wave;

pub use bounds::{
    compartment_decay_rate, positivity_lower_bound, Compartment, KernelConstants, OperatorFamily,
};

use nalgebra::{Complex, DMatrix};

use crate::error::{Error, Result};

/// Eigenvalues of a small dense real matrix via balancing plus an
/// iteration-capped Schur decomposition.
///
/// The unbounded eigenvalue path can spin forever on rank-deficient
/// inputs (the zero matrix among them), which this model produces
/// whenever the transmission rate vanishes; scaling plus an explicit
/// iteration cap keeps every case terminating. The one-way couplings
/// into the denial compartment leave the Jacobian badly row/column
/// unbalanced, so a Parlett-Reinsch pass recovers the digits the QR
/// iteration would otherwise lose.
pub(crate) fn small_matrix_eigenvalues(m: DMatrix<f64>) -> Result<Vec<Complex<f64>>> {
    let n = m.nrows();
    let scale = m.iter().fold(0.0f64, |acc, v| acc.max(v.abs()));
    if scale == 0.0 {
        return Ok(vec![Complex::new(0.0, 0.0); n]);
    }
    let mut balanced = m / scale;
    balance_in_place(&mut balanced);
    let schur = nalgebra::linalg::Schur::try_new(balanced, f64::EPSILON, 100_000)
        .ok_or(Error::SingularMatrix("eigenvalue iteration did not converge"))?;
    Ok(schur
        .complex_eigenvalues()
        .iter()
        .map(|e| e * scale)
        .collect())
}

/// Parlett-Reinsch balancing: diagonal similarity scaling by powers of
/// two until every row/column pair has comparable one-norms. Leaves
/// the spectrum unchanged.
fn balance_in_place(a: &mut DMatrix<f64>) {
    const RADIX: f64 = 2.0;
    let n = a.nrows();
    loop {
        let mut converged = true;
        for i in 0..n {
            let mut col = 0.0;
            let mut row = 0.0;
            for j in 0..n {
                if j != i {
                    col += a[(j, i)].abs();
                    row += a[(i, j)].abs();
                }
            }
            if col == 0.0 || row == 0.0 {
                continue;
            }
            let start = col + row;
            let mut factor = 1.0;
            let mut c = col;
            let mut r = row;
            while c < r / RADIX {
                factor *= RADIX;
                c *= RADIX * RADIX;
            }
            while c >= r * RADIX {
                factor /= RADIX;
                c /= RADIX * RADIX;
            }
            if (c + r) / factor < 0.95 * start {
                converged = false;
                for j in 0..n {
                    a[(i, j)] /= factor;
                }
                for j in 0..n {
                    a[(j, i)] *= factor;
                }
            }
        }
        if converged {
            return;
        }
    }
}
pub use equilibrium::{
    disease_free_equilibrium, endemic_equilibrium, EquilibriumKind, EquilibriumReport,
};
pub use lipschitz::{lipschitz_constants, LipschitzReport, SupBounds};
pub use lyapunov::{
    global_stability_indicator, lyapunov_derivative, lyapunov_second_derivative, lyapunov_value,
    GlobalStabilityCheck, LyapunovDerivative,
};
pub use reproduction::{next_generation_matrices, reproduction_number, strength_number, NGMReport};
pub use stability::{stability_spectrum, Eigenvalue, StabilityClass, StabilityReport};
pub use wave::{wave_window, CurvatureClass, WaveWindowReport};
