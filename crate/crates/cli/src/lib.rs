//! Command-line front end for `geodesic-core`: config files, runs of the
//! lattice solver and the continuum reference, and their tables and reports.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod app;
pub mod commands;
pub mod config;
pub mod error;
pub mod output;

pub use config::{parse_config, ConfigError, ConfigSource, MetricSpec, RunConfig};
pub use error::CliError;
