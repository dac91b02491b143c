//! Library side of the `metaplectic` binary: configuration, JSON formats,
//! schema checks, the acceptance criteria and the subcommand bodies.

use std::fmt;

pub mod commands;
pub mod config;
pub mod criteria;
pub mod json;
pub mod par;
pub mod schema;

/// Bad input from the command line, a config file or a JSON document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UsageError(pub String);

impl UsageError {
    pub fn from_core(e: metaplectic_core::Error) -> Self {
        UsageError(e.to_string())
    }
}

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

impl From<metaplectic_core::Error> for UsageError {
    fn from(e: metaplectic_core::Error) -> Self {
        Self::from_core(e)
    }
}

impl From<schema::SchemaError> for UsageError {
    fn from(e: schema::SchemaError) -> Self {
        UsageError(e.to_string())
    }
}
