//! Command-line front end for the simulation and analysis kit:
//! scenario configuration files, subcommands, trajectory/report
//! serialization and static plot emission.

pub mod commands;
pub mod config;
pub mod csv;
pub mod report;
pub mod svg;

pub use commands::{execute, Cli};

/// Marker for operator/usage mistakes that should exit with status 2
/// (computation failures exit with status 1).
#[derive(Debug)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for UsageError {}
