//! Batch driver for the `ptnu` binary: run configuration, output formatting
//! and the `table2`, `wavefunction`, `verify` and `limit` commands.

pub mod commands;
pub mod config;
pub mod format;

pub use config::{ConfigError, OutputFormat, RunConfig};
