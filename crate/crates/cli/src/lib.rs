//! Verification sweeps, report serialization and export for the
//! `cluster-index` command-line tool.

pub mod args;
pub mod checks;
pub mod commands;
pub mod config;
pub mod error;
pub mod render;
pub mod report;

pub use args::Cli;
pub use checks::{
    check_associativity, check_dimension_formula, check_disjointness, check_injectivity, check_serre, find_collisions,
    replay, CheckKind, CheckReport, Detail, Status, Witness,
};
pub use config::{Case, Format, SweepConfig, TiltingScope};
pub use error::{CliError, EXIT_ANOMALY, EXIT_FAILED, EXIT_OK, EXIT_USAGE};
pub use report::{run_sweep, VerificationReport, SCHEMA_VERSION};
