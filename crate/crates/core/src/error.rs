//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParam { name: &'static str, reason: String },

    #[error("non-finite value in {0}")]
    NonFinite(&'static str),

    #[error("total population must be positive")]
    ZeroPopulation,

    #[error("gamma function requires a positive argument, got {0}")]
    GammaDomain(f64),

    #[error("mittag-leffler order must lie in (0, 2], got {0}")]
    MittagLefflerOrder(f64),

    #[error("mittag-leffler series did not converge within {0} terms")]
    SeriesNotConverged(usize),

    #[error("no endemic equilibrium: computed I* = {i_star}")]
    NoEndemicEquilibrium { i_star: f64 },

    #[error("equilibrium refinement stalled: residual {best:e} above target {target:e}")]
    NewtonStalled { target: f64, best: f64 },

    #[error("positivity bound inapplicable for {family}: denominator = {denominator}")]
    BoundInapplicable {
        family: &'static str,
        denominator: f64,
    },

    #[error("zero denominator in {0}")]
    ZeroDenominator(&'static str),

    #[error("{0} requires strictly positive compartments")]
    NonPositiveCompartment(&'static str),

    #[error("singular matrix: {0}")]
    SingularMatrix(&'static str),

    #[error("trajectory diverged at node {node}")]
    Diverged { node: usize },
}
