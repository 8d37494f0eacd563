//! File output, grade ingestion and the command line for `qbank-core`.

pub mod cli;
pub mod config;
mod error;
pub mod grades;
pub mod output;

pub use error::CliError;
