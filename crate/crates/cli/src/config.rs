// SPDX-License-Identifier: Apache-2.0

//! Run configuration: every command-line flag has a field here, and a JSON
//! file of the same shape can supply defaults for a run.

use std::path::{Path, PathBuf};

use coarse_core::nets::SpaceKind;
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 20_240_917;
pub const DEFAULT_TOLERANCE: f64 = 1e-10;
pub const DEFAULT_PAIR_SAMPLE: usize = 2000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Analysis {
    Delta,
    Thin,
    Cheeger,
    Lambda1,
    Boundary,
    Pole,
    Net,
    Qi,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Preset {
    #[default]
    Equivalence,
    Kanai,
    All,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ExperimentConfig {
    pub analysis: Option<Analysis>,
    pub preset: Option<Preset>,
    /// Family spec such as `tree:3,5`.
    pub family: Option<String>,
    pub input: Option<PathBuf>,
    pub radius: Option<u32>,
    pub radii: Option<Vec<u32>>,
    pub vertex: Option<usize>,
    pub epsilon: Option<f64>,
    pub visual_a: Option<f64>,
    pub seed: Option<u64>,
    /// Model space for sampled clouds: `euclidean` or `poincare`.
    pub kind: Option<String>,
    /// Radius of the sampled disk.
    pub disk_radius: Option<f64>,
    pub count: Option<usize>,
    pub buffer: Option<u32>,
    pub tolerance: Option<f64>,
    pub pair_sample: Option<usize>,
    pub format: Option<Format>,
    pub out: Option<PathBuf>,
}

macro_rules! overlay {
    ($base:ident, $over:ident; $($field:ident),*) => {
        ExperimentConfig { $($field: $over.$field.or($base.$field)),* }
    };
}

impl ExperimentConfig {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::new("io", "E_IO", format!("{}: {e}", path.display())))?;
        serde_json::from_str(&text).map_err(|e| CliError::config(format!("{}: {e}", path.display())))
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    /// Fields set in `over` replace those in `self`.
    pub fn overlay(self, over: ExperimentConfig) -> Self {
        let base = self;
        overlay!(base, over; analysis, preset, family, input, radius, radii, vertex, epsilon,
            visual_a, seed, kind, disk_radius, count, buffer, tolerance, pair_sample, format, out)
    }

    pub fn seed(&self) -> u64 {
        self.seed.unwrap_or(DEFAULT_SEED)
    }

    pub fn format(&self) -> Format {
        self.format.unwrap_or_default()
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance.unwrap_or(DEFAULT_TOLERANCE)
    }

    pub fn pair_sample(&self) -> usize {
        self.pair_sample.unwrap_or(DEFAULT_PAIR_SAMPLE)
    }

    pub fn space_kind(&self) -> Result<Option<SpaceKind>> {
        self.kind.as_deref().map(|k| k.parse().map_err(CliError::from)).transpose()
    }

    /// Range checks, run before any computation.
    pub fn validate(&self) -> Result<()> {
        if self.family.is_some() && self.input.is_some() {
            return Err(CliError::config("--family and --input are mutually exclusive"));
        }
        if let Some(e) = self.epsilon {
            if !(e > 0.0 && e.is_finite()) {
                return Err(CliError::config(format!("epsilon must be positive, got {e}")));
            }
        }
        if let Some(a) = self.visual_a {
            if !(a > 1.0 && a.is_finite()) {
                return Err(CliError::config(format!("visual parameter must exceed 1, got {a}")));
            }
        }
        if let Some(radii) = &self.radii {
            if radii.is_empty() {
                return Err(CliError::config("radius list is empty"));
            }
            if radii.windows(2).any(|w| w[0] >= w[1]) {
                return Err(CliError::config("radii must be strictly increasing"));
            }
        }
        if let Some(t) = self.tolerance {
            if !(t > 0.0 && t.is_finite()) {
                return Err(CliError::config(format!("tolerance must be positive, got {t}")));
            }
        }
        if let Some(r) = self.disk_radius {
            if !(r > 0.0 && r.is_finite()) {
                return Err(CliError::config(format!("disk radius must be positive, got {r}")));
            }
        }
        if self.count == Some(0) {
            return Err(CliError::config("point count must be positive"));
        }
        if self.pair_sample == Some(0) {
            return Err(CliError::config("pair sample size must be positive"));
        }
        self.space_kind()?;
        Ok(())
    }
}

/// `a..b` (inclusive), a comma list, or a single radius.
pub fn parse_radii(s: &str) -> std::result::Result<Vec<u32>, String> {
    let s = s.trim();
    if let Some((a, b)) = s.split_once("..") {
        let a: u32 = a.trim().parse().map_err(|_| format!("bad range start in '{s}'"))?;
        let b: u32 = b.trim().parse().map_err(|_| format!("bad range end in '{s}'"))?;
        if a > b {
            return Err(format!("empty range '{s}'"));
        }
        return Ok((a..=b).collect());
    }
    s.split(',')
        .map(|p| p.trim().parse().map_err(|_| format!("bad radius '{p}'")))
        .collect()
}
