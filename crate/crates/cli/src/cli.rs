// SPDX-License-Identifier: Apache-2.0

//! Argument parsing and subcommand dispatch.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use coarse_core::nets::epsilon_net;
use serde::Serialize;

use crate::analysis::{load_cloud, load_graph, run_analysis};
use crate::config::{parse_radii, Analysis, ExperimentConfig, Format, Preset};
use crate::error::{CliError, Result};
use crate::experiments::verify;
use crate::formats::{csv_table, to_json, write_atomic, write_cloud, write_edge_list, write_net_mapping, GraphJson};
use crate::plot::emit_plot_data;

#[derive(Debug, Parser)]
#[command(name = "coarse", version, about = "Coarse-geometric invariants of graphs and point clouds")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a family graph (`--family`) or sample a point cloud (`--kind`).
    Gen(CommonArgs),
    /// Run one analysis on a graph or cloud.
    Analyze {
        #[arg(value_enum)]
        analysis: Analysis,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Build the ε-net of a cloud and export its graph and index mapping.
    Net(CommonArgs),
    /// Run a verification preset; exits with 2 if a check fails.
    VerifyTheorem {
        #[arg(long, value_enum)]
        preset: Option<Preset>,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Turn report files into tidy CSV tables.
    PlotData {
        /// Report JSON files (repeatable).
        #[arg(long = "input", required = true)]
        inputs: Vec<PathBuf>,
        /// Output directory.
        #[arg(long)]
        out: PathBuf,
    },
}

/// A parsed `--radii` value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Radii(pub Vec<u32>);

#[derive(Debug, Clone, Default, Args)]
pub struct CommonArgs {
    /// JSON config; flags given on the command line take precedence.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Family spec: path:N, cycle:N, tree:K,D, grid:R,C, ladder:N, comb:N,SLOPE.
    #[arg(long)]
    pub family: Option<String>,
    /// Graph (.json or edge list) or cloud (.csv) file.
    #[arg(long)]
    pub input: Option<PathBuf>,
    #[arg(long)]
    pub radius: Option<u32>,
    /// `a..b` (inclusive) or a comma list.
    #[arg(long, value_parser = |s: &str| parse_radii(s).map(Radii))]
    pub radii: Option<Radii>,
    /// Base vertex; defaults to the vertex farthest from the frontier.
    #[arg(long)]
    pub vertex: Option<usize>,
    #[arg(long)]
    pub epsilon: Option<f64>,
    #[arg(long)]
    pub visual_a: Option<f64>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Cloud model space: euclidean or poincare.
    #[arg(long)]
    pub kind: Option<String>,
    /// Radius of the sampled disk.
    #[arg(long)]
    pub disk_radius: Option<f64>,
    /// Number of sampled points.
    #[arg(long)]
    pub count: Option<usize>,
    /// Pole margin buffer; defaults to ⌊r/4⌋.
    #[arg(long)]
    pub buffer: Option<u32>,
    /// Residual tolerance of the eigenvalue solver.
    #[arg(long)]
    pub tolerance: Option<f64>,
    /// Pair sample size of the quasi-isometry fit.
    #[arg(long)]
    pub pair_sample: Option<usize>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

impl CommonArgs {
    /// The config file (if any) overlaid with the flags.
    pub fn resolve(&self) -> Result<ExperimentConfig> {
        let base = match &self.config {
            Some(path) => ExperimentConfig::load(path)?,
            None => ExperimentConfig::default(),
        };
        let flags = ExperimentConfig {
            family: self.family.clone(),
            input: self.input.clone(),
            radius: self.radius,
            radii: self.radii.clone().map(|r| r.0),
            vertex: self.vertex,
            epsilon: self.epsilon,
            visual_a: self.visual_a,
            seed: self.seed,
            kind: self.kind.clone(),
            disk_radius: self.disk_radius,
            count: self.count,
            buffer: self.buffer,
            tolerance: self.tolerance,
            pair_sample: self.pair_sample,
            format: self.format,
            out: self.out.clone(),
            ..ExperimentConfig::default()
        };
        let cfg = base.overlay(flags);
        cfg.validate()?;
        Ok(cfg)
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => write_atomic(path, text.as_bytes()),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

#[derive(Serialize)]
struct VerdictCsv<'a> {
    family: &'a str,
    v: usize,
    hyperbolic: bool,
    cheeger_positive: bool,
    uniformly_perfect: bool,
    pole_like: bool,
    equivalence: bool,
}

/// Runs a parsed command. `Ok(false)` means a verification check failed.
pub fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Gen(args) => {
            let cfg = args.resolve()?;
            let text = if cfg.family.is_some() || cfg.input.is_some() {
                let g = load_graph(&cfg)?.graph;
                match cfg.format() {
                    Format::Json => to_json(&GraphJson::from_graph(&g))?,
                    Format::Csv => write_edge_list(&g),
                }
            } else {
                write_cloud(&load_cloud(&cfg)?.0)?
            };
            emit(cfg.out.as_deref(), &text)?;
            Ok(true)
        }
        Command::Analyze { analysis, common } => {
            let mut cfg = common.resolve()?;
            cfg.analysis = Some(analysis);
            let report = run_analysis(analysis, &cfg)?;
            emit(cfg.out.as_deref(), &report.render(cfg.format())?)?;
            Ok(true)
        }
        Command::Net(args) => {
            let cfg = args.resolve()?;
            let out = cfg.out.clone().ok_or_else(|| CliError::config("net export needs --out"))?;
            let (cloud, _) = load_cloud(&cfg)?;
            let eps = cfg.epsilon.ok_or_else(|| CliError::config("nets need --epsilon"))?;
            let net = epsilon_net(&cloud, eps)?;
            write_atomic(&out, to_json(&GraphJson::from_graph(&net.graph))?.as_bytes())?;
            write_atomic(&mapping_path(&out), write_net_mapping(&cloud, &net)?.as_bytes())?;
            Ok(true)
        }
        Command::VerifyTheorem { preset, common } => {
            let mut cfg = common.resolve()?;
            let preset = preset.or(cfg.preset).unwrap_or_default();
            cfg.preset = Some(preset);
            let report = verify(preset, cfg.seed())?;
            for row in &report.rows {
                eprintln!(
                    "{:<32} hyperbolic={} cheeger_positive={} uniformly_perfect={} pole_like={} equivalence={}",
                    row.family, row.hyperbolic, row.cheeger_positive, row.uniformly_perfect, row.pole_like, row.equivalence
                );
            }
            if let Some(k) = &report.kanai {
                eprintln!("kanai factor_ok={} euclidean_monotone={}", k.factor_ok, k.euclidean_monotone);
            }
            let text = match cfg.format() {
                Format::Json => to_json(&report)?,
                Format::Csv => {
                    let rows: Vec<VerdictCsv> = report
                        .rows
                        .iter()
                        .map(|r| VerdictCsv {
                            family: &r.family,
                            v: r.v,
                            hyperbolic: r.hyperbolic,
                            cheeger_positive: r.cheeger_positive,
                            uniformly_perfect: r.uniformly_perfect,
                            pole_like: r.pole_like,
                            equivalence: r.equivalence,
                        })
                        .collect();
                    csv_table(&rows)?
                }
            };
            emit(cfg.out.as_deref(), &text)?;
            Ok(report.passed)
        }
        Command::PlotData { inputs, out } => {
            emit_plot_data(&inputs, &out)?;
            Ok(true)
        }
    }
}

/// `net.json` → `net.mapping.csv` in the same directory.
pub fn mapping_path(graph_path: &Path) -> PathBuf {
    let stem = graph_path.file_stem().map_or_else(|| "net".into(), |s| s.to_string_lossy().into_owned());
    graph_path.with_file_name(format!("{stem}.mapping.csv"))
}
