//! Simulation and analysis kit for a seven-compartment model of harmful
//! information spreading through a vaccination-eligible population.
//!
//! The crate provides:
//!
//! - the model right-hand side, Jacobian, and second-order derivative
//!   system ([`model`]);
//! - Gamma and one-parameter Mittag-Leffler evaluation ([`special`]);
//! - equilibria, next-generation matrices, reproduction and strength
//!   numbers, the stability spectrum, Lipschitz/feasibility constants,
//!   operator-family positivity lower bounds, Lyapunov diagnostics and
//!   the second-order wave window ([`analysis`]);
//! - time integration under power-law, exponential-decay and
//!   Mittag-Leffler fractal-fractional kernels plus a classical RK4
//!   reference ([`solvers`]);
//! - the documented default parameter presets ([`presets`]).
//!
//! Everything is pure and deterministic: identical inputs produce
//! bit-identical outputs.

pub mod analysis;
pub mod error;
pub mod model;
pub mod presets;
pub mod solvers;
pub mod special;

pub use error::{Error, Result};
pub use model::{DerivedRates, ModelParams, State, StateDerivative};
pub use solvers::{Grid, Kernel, Trajectory};
