//! Command-line front end and file formats for `gminor-core`.

pub mod cli;
pub mod edgelist;
pub mod error;
pub mod json;

pub use error::CliError;
