// SPDX-License-Identifier: Apache-2.0

use std::fmt;

use coarse_core::boundary::BoundaryError;
use coarse_core::cheeger::CheegerError;
use coarse_core::graph::GraphError;
use coarse_core::nets::NetError;
use coarse_core::pole::PoleError;

/// An error tagged with the module it came from and a stable code.
///
/// Renders as `[module:CODE] message`.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub struct CliError {
    pub module: &'static str,
    pub code: &'static str,
    pub message: String,
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}:{}] {}", self.module, self.code, self.message)
    }
}

impl CliError {
    pub fn new(module: &'static str, code: &'static str, message: impl Into<String>) -> Self {
        CliError { module, code, message: message.into() }
    }

    pub fn parse(message: impl Into<String>) -> Self {
        CliError::new("io", "E_PARSE", message)
    }

    pub fn config(message: impl Into<String>) -> Self {
        CliError::new("cli", "E_CONFIG", message)
    }
}

macro_rules! from_core {
    ($($ty:ty => $module:literal),* $(,)?) => {$(
        impl From<$ty> for CliError {
            fn from(e: $ty) -> Self {
                CliError::new($module, e.code(), e.to_string())
            }
        }
    )*};
}

from_core! {
    GraphError => "graph-core",
    CheegerError => "cheeger",
    NetError => "nets",
    BoundaryError => "boundary",
    PoleError => "pole",
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::new("io", "E_IO", e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::parse(format!("JSON: {e}"))
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::parse(format!("CSV: {e}"))
    }
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;
