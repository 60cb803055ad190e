// SPDX-License-Identifier: Apache-2.0

//! Tidy CSV tables (one observation per row) extracted from report files.

use std::path::{Path, PathBuf};

use serde::Serialize;
use serde_json::Value;

use crate::analysis::{BoundaryReport, CheegerReport, PoleReport};
use crate::error::{CliError, Result};
use crate::experiments::VerifyReport;
use crate::formats::{csv_table, write_atomic};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MarginRow {
    pub family: String,
    pub v: usize,
    pub r: u32,
    pub margin: u32,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RatioRow {
    pub family: String,
    pub r: u32,
    pub ratio: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SStarRow {
    pub family: String,
    pub depth: u32,
    pub a: f64,
    #[serde(rename = "S_star")]
    pub s_star: String,
}

#[derive(Debug, Default, Clone, PartialEq)]
pub struct PlotTables {
    pub margins: Vec<MarginRow>,
    pub profiles: Vec<RatioRow>,
    pub s_star: Vec<SStarRow>,
}

/// File names written by [`emit_plot_data`].
pub const MARGINS_FILE: &str = "margins.csv";
pub const PROFILES_FILE: &str = "profiles.csv";
pub const S_STAR_FILE: &str = "s_star.csv";

impl PlotTables {
    fn pole(&mut self, p: &PoleReport) {
        for (&r, &margin) in p.radii.iter().zip(&p.margins) {
            self.margins.push(MarginRow { family: p.family.clone(), v: p.v, r, margin });
        }
    }

    fn cheeger(&mut self, c: &CheegerReport) {
        for p in &c.points {
            let ratio = p.ratio_num as f64 / p.ratio_den as f64;
            self.profiles.push(RatioRow { family: c.family.clone(), r: p.r, ratio });
        }
    }

    fn boundary(&mut self, b: &BoundaryReport) {
        let s = b.s_star();
        self.s_star.push(SStarRow {
            family: b.family.clone(),
            depth: b.depth,
            a: b.a,
            s_star: if s.is_finite() { s.to_string() } else { "inf".into() },
        });
    }

    /// Adds whatever a report value contains; returns false for unknown kinds.
    pub fn add(&mut self, value: Value) -> Result<bool> {
        if let Value::Array(items) = value {
            let mut any = false;
            for item in items {
                any |= self.add(item)?;
            }
            return Ok(any);
        }
        let kind = value.get("report").and_then(Value::as_str).unwrap_or("").to_owned();
        match kind.as_str() {
            "pole" => self.pole(&serde_json::from_value(value)?),
            "cheeger" => self.cheeger(&serde_json::from_value(value)?),
            "boundary" => self.boundary(&serde_json::from_value(value)?),
            "verify-theorem" => {
                let report: VerifyReport = serde_json::from_value(value)?;
                for row in &report.rows {
                    self.pole(&row.pole);
                    self.cheeger(&row.profile);
                    for b in &row.boundary {
                        self.boundary(b);
                    }
                }
            }
            _ => return Ok(false),
        }
        Ok(true)
    }
}

/// Reads the reports and writes the three tables into `out_dir`.
pub fn emit_plot_data(inputs: &[PathBuf], out_dir: &Path) -> Result<PlotTables> {
    if inputs.is_empty() {
        return Err(CliError::new("cli", "E_NO_REPORTS", "plot-data needs at least one --input report"));
    }
    let mut tables = PlotTables::default();
    for path in inputs {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::new("io", "E_IO", format!("missing report {}: {e}", path.display())))?;
        let value: Value = serde_json::from_str(&text)?;
        if !tables.add(value)? {
            return Err(CliError::new(
                "cli",
                "E_NO_REPORTS",
                format!("{} holds no pole, cheeger, boundary or verify-theorem report", path.display()),
            ));
        }
    }
    write_atomic(&out_dir.join(MARGINS_FILE), table(&tables.margins, "family,v,r,margin")?.as_bytes())?;
    write_atomic(&out_dir.join(PROFILES_FILE), table(&tables.profiles, "family,r,ratio")?.as_bytes())?;
    write_atomic(&out_dir.join(S_STAR_FILE), table(&tables.s_star, "family,depth,a,S_star")?.as_bytes())?;
    Ok(tables)
}

/// Header is written even for an empty table.
fn table<R: Serialize>(rows: &[R], header: &str) -> Result<String> {
    if rows.is_empty() {
        Ok(format!("{header}\n"))
    } else {
        csv_table(rows)
    }
}
