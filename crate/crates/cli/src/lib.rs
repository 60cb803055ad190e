// SPDX-License-Identifier: Apache-2.0

//! File formats, analyses, verification presets and the command-line front
//! end built on `coarse-core`.

pub mod analysis;
pub mod cli;
pub mod config;
pub mod error;
pub mod experiments;
pub mod formats;
pub mod plot;

pub use error::{CliError, Result};
