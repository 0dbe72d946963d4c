//! Stability spectrum at the disease-free equilibrium.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::model::{derived_rates, jacobian, ModelParams, DIM};

use super::equilibrium::disease_free_equilibrium;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Eigenvalue {
    pub re: f64,
    pub im: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum StabilityClass {
    /// Every eigenvalue has a strictly negative real part.
    LocallyStable,
    Unstable,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StabilityReport {
    /// Numeric eigenvalues of the Jacobian at the disease-free point,
    /// sorted by real part then imaginary part.
    pub eigenvalues: Vec<Eigenvalue>,
    pub classification: StabilityClass,
    /// The analytically known eigenvalue `βν/(σ+ν) − j₁`, whose sign
    /// matches the sign of `R₀ − 1`.
    pub threshold_eigenvalue: f64,
}

/// Numeric spectrum of the Jacobian at the disease-free equilibrium.
pub fn stability_spectrum(params: &ModelParams) -> Result<StabilityReport> {
    let dfe = disease_free_equilibrium(params)?;
    let j = jacobian(params, &dfe.point)?;
    let m = nalgebra::DMatrix::from_fn(DIM, DIM, |r, c| j[r][c]);
    let mut eigenvalues: Vec<Eigenvalue> = super::small_matrix_eigenvalues(m)?
        .iter()
        .map(|e| Eigenvalue { re: e.re, im: e.im })
        .collect();
    eigenvalues.sort_by(|a, b| {
        a.re.partial_cmp(&b.re)
            .unwrap()
            .then(a.im.partial_cmp(&b.im).unwrap())
    });
    let classification = if eigenvalues.iter().all(|e| e.re < 0.0) {
        StabilityClass::LocallyStable
    } else {
        StabilityClass::Unstable
    };
    let dr = derived_rates(params);
    let threshold_eigenvalue = params.beta * params.nu / dr.a1 - dr.j1;
    Ok(StabilityReport {
        eigenvalues,
        classification,
        threshold_eigenvalue,
    })
}
