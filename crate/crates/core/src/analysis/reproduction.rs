//! Next-generation matrices, reproduction number and strength number.

use nalgebra::Matrix4;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{derived_rates, ModelParams};

/// New-infection matrix `F`, transition matrix `V`, its inverse, and
/// the spectral radius of `F·V⁻¹`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NGMReport {
    pub f_matrix: [[f64; 4]; 4],
    pub v_matrix: [[f64; 4]; 4],
    pub v_inverse: [[f64; 4]; 4],
    pub spectral_radius: f64,
}

/// Builds the next-generation pair on the infected block
/// `(I, I_p, I_n, I_c)` at the disease-free equilibrium.
///
/// `F` has the single entry `βν/(σ+ν)` at (1,1); `V` carries the exit
/// rates `j₁..j₄` on the diagonal and `−γ₁,−γ₂,−γ₃` in the first
/// column. The spectral radius equals `βν/((σ+ν)j₁)`.
pub fn next_generation_matrices(params: &ModelParams) -> Result<NGMReport> {
    params.validate()?;
    let dr = derived_rates(params);
    let mut f = [[0.0; 4]; 4];
    f[0][0] = params.beta * params.nu / dr.a1;
    let v = [
        [dr.j1, 0.0, 0.0, 0.0],
        [-params.gamma1, dr.j2, 0.0, 0.0],
        [-params.gamma2, 0.0, dr.j3, 0.0],
        [-params.gamma3, 0.0, 0.0, dr.j4],
    ];
    let vm = Matrix4::from_fn(|r, c| v[r][c]);
    let v_inv = vm
        .try_inverse()
        .ok_or(Error::SingularMatrix("transition matrix V"))?;
    let fm = Matrix4::from_fn(|r, c| f[r][c]);
    let ngm = fm * v_inv;
    let spectral_radius =
        super::small_matrix_eigenvalues(nalgebra::DMatrix::from_fn(4, 4, |r, c| ngm[(r, c)]))?
            .iter()
            .map(|e| e.norm())
            .fold(0.0f64, f64::max);
    let mut v_inverse = [[0.0; 4]; 4];
    for r in 0..4 {
        for c in 0..4 {
            v_inverse[r][c] = v_inv[(r, c)];
        }
    }
    Ok(NGMReport {
        f_matrix: f,
        v_matrix: v,
        v_inverse,
        spectral_radius,
    })
}

/// Closed-form reproduction number `R₀ = βν/((σ+ν)·j₁)`.
pub fn reproduction_number(params: &ModelParams) -> Result<f64> {
    params.validate()?;
    let dr = derived_rates(params);
    let denominator = dr.a1 * dr.j1;
    if denominator <= 0.0 {
        return Err(Error::ZeroDenominator("reproduction number (σ+ν)·j₁"));
    }
    Ok(params.beta * params.nu / denominator)
}

/// Strength number `SN = −2β(σ+ν) / (Π(1+σ/ν)²·j₁)`: the nonzero
/// eigenvalue of `F_n·V⁻¹` where `F_n` holds the second derivative of
/// the infection term at the disease-free point. Negative for all
/// strictly positive parameters.
pub fn strength_number(params: &ModelParams) -> Result<f64> {
    params.validate()?;
    if params.pi <= 0.0 {
        return Err(Error::ZeroDenominator("strength number (Π = 0)"));
    }
    let dr = derived_rates(params);
    let ratio = 1.0 + params.sigma / params.nu;
    Ok(-2.0 * params.beta * dr.a1 / (params.pi * ratio * ratio * dr.j1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets;
    use approx::assert_relative_eq;

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
    fn spectral_radius_matches_closed_form() {
        // β=0.5, σ=ν=0.1, j₁=0.35 → βν/((σ+ν)j₁) = 5/7.
        let p = example_params();
        let report = next_generation_matrices(&p).unwrap();
        assert_relative_eq!(report.spectral_radius, 5.0 / 7.0, max_relative = 1e-12);
        assert_relative_eq!(
            report.spectral_radius,
            reproduction_number(&p).unwrap(),
            max_relative = 1e-12
        );
    }

    #[test]
    fn f_matrix_has_single_entry() {
        let report = next_generation_matrices(&example_params()).unwrap();
        let mut nonzero = 0;
        for r in 0..4 {
            for c in 0..4 {
                if report.f_matrix[r][c] != 0.0 {
                    nonzero += 1;
                    assert_eq!((r, c), (0, 0));
                }
            }
        }
        assert_eq!(nonzero, 1);
    }

    #[test]
    fn v_inverse_solves_to_identity() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let mut p = example_params();
            p.gamma1 = rng.gen_range(0.01..0.4);
            p.gamma2 = rng.gen_range(0.01..0.4);
            p.gamma3 = rng.gen_range(0.01..0.4);
            p.tau2 = rng.gen_range(0.01..0.4);
            p.tau3 = rng.gen_range(0.01..0.4);
            p.tau4 = rng.gen_range(0.01..0.4);
            p.nu = rng.gen_range(0.01..0.4);
            let report = next_generation_matrices(&p).unwrap();
            for r in 0..4 {
                for c in 0..4 {
                    let mut acc = 0.0;
                    for k in 0..4 {
                        acc += report.v_matrix[r][k] * report.v_inverse[k][c];
                    }
                    let expected = if r == c { 1.0 } else { 0.0 };
                    assert!(
                        (acc - expected).abs() <= 1e-10,
                        "V·V⁻¹ entry ({r},{c}) = {acc}"
                    );
                }
            }
        }
    }

    #[test]
    fn reproduction_number_threshold_and_zero() {
        let mut p = example_params();
        // β placed exactly at the threshold value (σ+ν)j₁/ν.
        let dr = crate::model::derived_rates(&p);
        p.beta = dr.a1 * dr.j1 / p.nu;
        let r0 = reproduction_number(&p).unwrap();
        assert!((r0 - 1.0).abs() <= 1e-15);

        p.beta = 0.0;
        assert_eq!(reproduction_number(&p).unwrap(), 0.0);
        assert_eq!(
            next_generation_matrices(&p).unwrap().spectral_radius,
            0.0
        );
    }

    #[test]
    fn strength_number_examples() {
        // β=0.5, σ=ν=0.1, Π=1, j₁=0.35 → −1/7.
        let p = example_params();
        assert_relative_eq!(
            strength_number(&p).unwrap(),
            -1.0 / 7.0,
            max_relative = 1e-12
        );

        let mut z = p;
        z.beta = 0.0;
        assert_eq!(strength_number(&z).unwrap(), 0.0);

        let mut doubled = p;
        doubled.pi = 2.0;
        assert_relative_eq!(
            strength_number(&doubled).unwrap(),
            strength_number(&p).unwrap() / 2.0,
            max_relative = 1e-12
        );
    }

    #[test]
    fn strength_number_cross_checked_against_second_difference() {
        // Independent route: (d²/dI²)(βS_p I/N)|_{E₀} / j₁ with the
        // population sum responding to I.
        let p = presets::supercritical_params();
        let dfe = crate::analysis::disease_free_equilibrium(&p).unwrap().point;
        let n0 = dfe.total();
        let g = |i: f64| p.beta * dfe.s_p * i / (n0 + i);
        let h = 1e-4;
        let second = (g(h) - 2.0 * g(0.0) + g(-h)) / (h * h);
        let dr = derived_rates(&p);
        assert_relative_eq!(
            strength_number(&p).unwrap(),
            second / dr.j1,
            max_relative = 1e-6
        );
    }

    #[test]
    fn strength_number_zero_influx_is_domain_error() {
        let mut p = example_params();
        p.pi = 0.0;
        assert!(matches!(
            strength_number(&p),
            Err(Error::ZeroDenominator(_))
        ));
    }
}
