// SPDX-License-Identifier: Apache-2.0

//! Single analyses on one graph or cloud, with their report types.

use std::collections::VecDeque;
use std::path::Path;

use coarse_core::boundary::{boundary_approx, uniform_perfectness_scan, DEFAULT_VISUAL_A};
use coarse_core::cheeger::{
    cheeger_profile, classify_profile, dirichlet_lambda1, regular_tree_cheeger, ProfileMethod,
    Trend, Window,
};
use coarse_core::graph::{apsp, bfs, distances_among, gen_family, DistMatrix, Family, Graph};
use coarse_core::hyperbolicity::{
    delta_four_point_with, delta_thin, DeltaOptions, ThinOptions, FULL_SCAN_LIMIT,
};
use coarse_core::nets::{
    central_vertex, epsilon_net, qi_constants, sample_space, NetResult, PointCloud, SpaceKind,
};
use coarse_core::pole::{pole_series, pole_verdict, theorem_bound};
use coarse_core::{HalfInt, Rational};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::config::{Analysis, ExperimentConfig, Format};
use crate::error::{CliError, Result};
use crate::formats::{csv_table, read_cloud, read_graph, to_json};

/// Radius of the induced ball on which the thin-triangle constant feeding the
/// pole bound is computed.
pub const BOUND_THIN_RADIUS: u32 = 4;

pub fn rational_string(q: Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// A finite value as a JSON number, infinity as `"inf"`.
pub fn s_star_value(s: f64) -> Value {
    serde_json::Number::from_f64(s).map_or_else(|| Value::String("inf".into()), Value::Number)
}

pub struct LoadedGraph {
    pub graph: Graph,
    pub label: String,
}

fn stem(path: &Path) -> String {
    path.file_stem().map_or_else(|| path.display().to_string(), |s| s.to_string_lossy().into_owned())
}

pub fn load_graph(cfg: &ExperimentConfig) -> Result<LoadedGraph> {
    match (&cfg.family, &cfg.input) {
        (Some(spec), _) => {
            let family: Family = spec.parse()?;
            Ok(LoadedGraph { graph: gen_family(&family)?, label: family.to_string() })
        }
        (None, Some(path)) => Ok(LoadedGraph { graph: read_graph(path)?, label: stem(path) }),
        (None, None) => Err(CliError::config("a graph needs --family or --input")),
    }
}

/// A cloud from `--input`, or sampled from `--kind`, `--disk-radius`,
/// `--count` and `--seed`.
pub fn load_cloud(cfg: &ExperimentConfig) -> Result<(PointCloud, String)> {
    if let Some(path) = &cfg.input {
        return Ok((read_cloud(path)?, stem(path)));
    }
    let kind = cfg.space_kind()?.unwrap_or(SpaceKind::Poincare);
    let radius = cfg
        .disk_radius
        .ok_or_else(|| CliError::config("sampling a cloud needs --disk-radius"))?;
    let count = cfg.count.ok_or_else(|| CliError::config("sampling a cloud needs --count"))?;
    let cloud = sample_space(kind, radius, count, cfg.seed())?;
    Ok((cloud, format!("{kind}:{radius}")))
}

/// Vertex farthest from the frontier, lowest index on ties; `0` without a
/// frontier.
pub fn default_vertex(g: &Graph) -> usize {
    if g.frontier().is_empty() {
        return 0;
    }
    let mut dist = vec![u32::MAX; g.n()];
    let mut queue: VecDeque<usize> = g.frontier().iter().copied().collect();
    for &f in g.frontier() {
        dist[f] = 0;
    }
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if dist[w] == u32::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    let best = *dist.iter().max().expect("graphs are nonempty");
    dist.iter().position(|&d| d == best).expect("maximum is attained")
}

/// Distance from `v` to the frontier, or its eccentricity without one.
pub fn reach(g: &Graph, v: usize) -> u32 {
    let row = bfs(g, v);
    if g.frontier().is_empty() {
        row.into_iter().max().unwrap_or(0)
    } else {
        g.frontier().iter().map(|&f| row[f]).min().unwrap_or(0)
    }
}

fn check_vertex(g: &Graph, v: usize) -> Result<usize> {
    if v < g.n() {
        Ok(v)
    } else {
        Err(CliError::config(format!("vertex {v} out of range for {} vertices", g.n())))
    }
}

/// Sorted ball `B(v, r)`.
pub fn ball(g: &Graph, v: usize, r: u32) -> Vec<usize> {
    let row = bfs(g, v);
    (0..g.n()).filter(|&w| row[w] <= r).collect()
}

/// The subgraph induced on `B(v, r)` and its vertex list.
pub fn induced_ball(g: &Graph, v: usize, r: u32) -> (Graph, Vec<usize>) {
    let members = ball(g, v, r);
    let mut position = vec![usize::MAX; g.n()];
    for (k, &w) in members.iter().enumerate() {
        position[w] = k;
    }
    let edges: Vec<(usize, usize)> = g
        .edges()
        .filter(|&(a, b)| position[a] != usize::MAX && position[b] != usize::MAX)
        .map(|(a, b)| (position[a], position[b]))
        .collect();
    let sub = Graph::from_edges(members.len(), &edges).expect("balls are connected");
    (sub, members)
}

// ---------------------------------------------------------------- delta

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DeltaReport {
    pub report: String,
    pub family: String,
    pub n: usize,
    pub delta: String,
    pub witness: [usize; 4],
    pub exact: bool,
    pub upper: String,
}

#[derive(Serialize)]
struct DeltaCsv<'a> {
    delta: &'a str,
    x: usize,
    y: usize,
    z: usize,
    o: usize,
    exact: bool,
    upper: &'a str,
}

/// Four-point δ of the whole graph, or of the ambient metric on `B(v, r)`.
pub fn delta_report(g: &Graph, label: &str, v: usize, radius: Option<u32>) -> DeltaReport {
    let (dist, members) = match radius {
        Some(r) => {
            let members = ball(g, v, r);
            (distances_among(g, &members), members)
        }
        None => (apsp(g), (0..g.n()).collect()),
    };
    let base = members.binary_search(&v).unwrap_or(0);
    let w = delta_four_point_with(&dist, DeltaOptions { full_scan_limit: FULL_SCAN_LIMIT, base });
    DeltaReport {
        report: "delta".into(),
        family: label.into(),
        n: members.len(),
        delta: w.value.to_string(),
        witness: w.witness.map(|i| members[i]),
        exact: w.exact,
        upper: w.upper.to_string(),
    }
}

// ---------------------------------------------------------------- thin

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ThinReport {
    pub report: String,
    pub family: String,
    pub n: usize,
    pub delta_thin: u32,
    pub exact: bool,
    pub triangle: [usize; 3],
    pub point: usize,
    pub triangles_examined: usize,
}

pub fn thin_report(g: &Graph, label: &str, v: usize, radius: Option<u32>, seed: u64) -> ThinReport {
    let (sub, members) = match radius {
        Some(r) => induced_ball(g, v, r),
        None => (g.clone(), (0..g.n()).collect()),
    };
    let w = delta_thin(&sub, &apsp(&sub), ThinOptions { seed, ..ThinOptions::default() });
    ThinReport {
        report: "thin".into(),
        family: label.into(),
        n: members.len(),
        delta_thin: w.value,
        exact: w.exact,
        triangle: w.triangle.map(|i| members[i]),
        point: members[w.point],
        triangles_examined: w.triangles_examined,
    }
}

// ---------------------------------------------------------------- cheeger

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProfileRow {
    pub r: u32,
    pub ratio_num: u64,
    pub ratio_den: u64,
    pub exact_flag: bool,
    pub witness_size: usize,
}

impl ProfileRow {
    pub fn ratio(&self) -> Rational {
        Rational::new(self.ratio_num, self.ratio_den)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheegerReport {
    pub report: String,
    pub family: String,
    pub v: usize,
    pub points: Vec<ProfileRow>,
    pub trend: Option<String>,
    pub exponent: Option<f64>,
}

impl CheegerReport {
    pub fn bounded_below(&self) -> bool {
        self.trend.as_deref() == Some("bounded-below")
    }

    pub fn min_ratio(&self) -> Option<Rational> {
        self.points.iter().map(ProfileRow::ratio).min()
    }
}

pub fn cheeger_report(g: &Graph, label: &str, v: usize, radii: &[u32]) -> Result<CheegerReport> {
    let profile = cheeger_profile(g, v, radii, ProfileMethod::Auto)?;
    let points: Vec<ProfileRow> = profile
        .iter()
        .map(|p| ProfileRow {
            r: p.radius,
            ratio_num: *p.witness.ratio.numer(),
            ratio_den: *p.witness.ratio.denom(),
            exact_flag: p.witness.exact,
            witness_size: p.witness.set.len(),
        })
        .collect();
    let series: Vec<(u32, Rational)> = points.iter().map(|p| (p.r, p.ratio())).collect();
    let trend = classify_profile(&series).ok();
    Ok(CheegerReport {
        report: "cheeger".into(),
        family: label.into(),
        v,
        points,
        trend: trend.map(|t| match t.trend {
            Trend::BoundedBelow => "bounded-below".into(),
            Trend::Decaying => "decaying".into(),
        }),
        exponent: trend.map(|t| t.exponent).filter(|e| e.is_finite()),
    })
}

// ---------------------------------------------------------------- lambda1

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Lambda1Row {
    pub r: u32,
    pub window_size: usize,
    pub lambda1: f64,
    pub residual: f64,
    pub iterations: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Lambda1Report {
    pub report: String,
    pub family: String,
    pub v: usize,
    pub points: Vec<Lambda1Row>,
}

pub fn lambda1_report(g: &Graph, label: &str, v: usize, radii: &[u32], tol: f64) -> Result<Lambda1Report> {
    let mut points = Vec::new();
    for &r in radii {
        let w = Window::ball(g, v, r)?;
        let rep = dirichlet_lambda1(&w, tol)?;
        points.push(Lambda1Row {
            r,
            window_size: w.len(),
            lambda1: rep.lambda1,
            residual: rep.residual,
            iterations: rep.iterations,
        });
    }
    Ok(Lambda1Report { report: "lambda1".into(), family: label.into(), v, points })
}

// ---------------------------------------------------------------- boundary

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundaryReport {
    pub report: String,
    pub family: String,
    pub v: usize,
    pub a: f64,
    pub depth: u32,
    pub n_points: usize,
    #[serde(rename = "S_star")]
    pub s_star: Value,
    pub resolution: f64,
    pub verdict: String,
}

impl BoundaryReport {
    pub fn s_star(&self) -> f64 {
        self.s_star.as_f64().unwrap_or(f64::INFINITY)
    }
}

#[derive(Serialize)]
struct BoundaryCsv<'a> {
    depth: u32,
    a: f64,
    n_points: usize,
    #[serde(rename = "S_star")]
    s_star: String,
    resolution: f64,
    verdict: &'a str,
}

/// Boundary scan at one depth; only distances among `S(v, r) ∪ {v}` are
/// computed.
pub fn boundary_report(g: &Graph, label: &str, v: usize, depth: u32, a: f64) -> Result<BoundaryReport> {
    let row = bfs(g, v);
    let members: Vec<usize> = (0..g.n()).filter(|&w| w == v || row[w] == depth).collect();
    let dist: DistMatrix = distances_among(g, &members);
    let base = members.binary_search(&v).expect("base is listed");
    let approx = boundary_approx(&dist, base, depth, a)?;
    let scan = uniform_perfectness_scan(&approx.visual, None)?;
    let verdict = if scan.degenerate {
        "degenerate"
    } else if scan.uniformly_perfect {
        "uniformly-perfect"
    } else {
        "not-uniformly-perfect"
    };
    Ok(BoundaryReport {
        report: "boundary".into(),
        family: label.into(),
        v,
        a,
        depth,
        n_points: approx.representatives.len(),
        s_star: s_star_value(scan.s_star),
        resolution: scan.resolution,
        verdict: verdict.into(),
    })
}

// ---------------------------------------------------------------- pole

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundInputs {
    pub delta_th: String,
    pub h: String,
    /// `regular-tree` when exact, `profile-minimum` when an upper estimate.
    pub h_source: String,
    pub mu: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PoleReport {
    pub report: String,
    pub family: String,
    pub v: usize,
    pub radii: Vec<u32>,
    pub margins: Vec<u32>,
    pub verdict: String,
    #[serde(rename = "M_estimate")]
    pub m_estimate: Option<u32>,
    pub slope: f64,
    #[serde(rename = "M_bound", default, skip_serializing_if = "Option::is_none")]
    pub m_bound: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bound_inputs: Option<BoundInputs>,
}

impl PoleReport {
    pub fn pole_like(&self) -> bool {
        self.verdict == "pole-like"
    }

    /// `M ≤ M_bound`, when both exist.
    pub fn bound_holds(&self) -> Option<bool> {
        let bound = self.m_bound.as_ref()?;
        let (n, d) = bound.split_once('/')?;
        let bound = Rational::new(n.parse().ok()?, d.parse().ok()?);
        Some(Rational::from_integer(u64::from(self.m_estimate?)) <= bound)
    }
}

#[derive(Serialize)]
struct MarginCsv {
    r: u32,
    margin: u32,
}

pub fn pole_report(
    g: &Graph,
    label: &str,
    v: usize,
    radii: &[u32],
    buffer: Option<u32>,
) -> Result<PoleReport> {
    let series = pole_series(g, v, radii, buffer)?;
    let verdict = pole_verdict(&series)?;
    Ok(PoleReport {
        report: "pole".into(),
        family: label.into(),
        v,
        radii: series.iter().map(|s| s.0).collect(),
        margins: series.iter().map(|s| s.1).collect(),
        verdict: if verdict.pole_like { "pole-like" } else { "no-pole-like" }.into(),
        m_estimate: verdict.m_estimate,
        slope: verdict.slope,
        m_bound: None,
        bound_inputs: None,
    })
}

/// Attaches `M_bound = ⌊δ_th⌋ + h⁻¹ μ^⌊δ_th⌋` with δ_th from the induced ball
/// of radius [`BOUND_THIN_RADIUS`] around the base vertex and μ the maximum
/// degree. Does nothing when `h` is zero.
pub fn attach_bound(g: &Graph, report: &mut PoleReport, h: Rational, h_source: &str, seed: u64) -> Result<()> {
    if *h.numer() == 0 {
        return Ok(());
    }
    let (sub, _) = induced_ball(g, report.v, BOUND_THIN_RADIUS);
    let thin = delta_thin(&sub, &apsp(&sub), ThinOptions { seed, ..ThinOptions::default() });
    let delta_th = HalfInt::from_int(thin.value);
    let mu = g.max_degree() as u64;
    let bound = theorem_bound(delta_th, h, mu)?;
    report.m_bound = Some(rational_string(bound.m_bound));
    report.bound_inputs = Some(BoundInputs {
        delta_th: delta_th.to_string(),
        h: rational_string(h),
        h_source: h_source.into(),
        mu,
    });
    Ok(())
}

// ---------------------------------------------------------------- nets

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NetReport {
    pub report: String,
    pub family: String,
    pub kind: String,
    pub epsilon: f64,
    pub cloud_points: usize,
    pub vertices: usize,
    pub edges: usize,
    pub frontier: usize,
    pub mu: usize,
    pub covering_radius: f64,
    pub central_vertex: usize,
}

pub fn net_report(cloud: &PointCloud, net: &NetResult, label: &str) -> NetReport {
    NetReport {
        report: "net".into(),
        family: label.into(),
        kind: cloud.kind().to_string(),
        epsilon: net.epsilon,
        cloud_points: cloud.len(),
        vertices: net.graph.n(),
        edges: net.graph.edge_count(),
        frontier: net.graph.frontier().len(),
        mu: net.mu,
        covering_radius: net.covering_radius,
        central_vertex: central_vertex(cloud, net),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QiSummary {
    pub report: String,
    pub family: String,
    pub epsilon: f64,
    pub alpha: f64,
    pub beta: f64,
    pub epsilon_full: f64,
    pub sample_size: usize,
    pub holds: bool,
}

// ---------------------------------------------------------------- dispatch

/// A finished analysis, renderable as JSON or CSV.
#[derive(Debug, Clone, PartialEq)]
pub enum AnalysisReport {
    Delta(DeltaReport),
    Thin(ThinReport),
    Cheeger(CheegerReport),
    Lambda1(Lambda1Report),
    Boundary(Vec<BoundaryReport>),
    Pole(PoleReport),
    Net(NetReport),
    Qi(QiSummary),
}

impl AnalysisReport {
    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Json => match self {
                AnalysisReport::Delta(r) => to_json(r),
                AnalysisReport::Thin(r) => to_json(r),
                AnalysisReport::Cheeger(r) => to_json(r),
                AnalysisReport::Lambda1(r) => to_json(r),
                AnalysisReport::Boundary(rows) if rows.len() == 1 => to_json(&rows[0]),
                AnalysisReport::Boundary(rows) => to_json(rows),
                AnalysisReport::Pole(r) => to_json(r),
                AnalysisReport::Net(r) => to_json(r),
                AnalysisReport::Qi(r) => to_json(r),
            },
            Format::Csv => match self {
                AnalysisReport::Delta(r) => {
                    let [x, y, z, o] = r.witness;
                    csv_table(&[DeltaCsv { delta: &r.delta, x, y, z, o, exact: r.exact, upper: &r.upper }])
                }
                AnalysisReport::Thin(r) => csv_table(&[r]),
                AnalysisReport::Cheeger(r) => csv_table(&r.points),
                AnalysisReport::Lambda1(r) => csv_table(&r.points),
                AnalysisReport::Boundary(rows) => {
                    let out: Vec<BoundaryCsv> = rows
                        .iter()
                        .map(|b| BoundaryCsv {
                            depth: b.depth,
                            a: b.a,
                            n_points: b.n_points,
                            s_star: match b.s_star() {
                                s if s.is_finite() => s.to_string(),
                                _ => "inf".into(),
                            },
                            resolution: b.resolution,
                            verdict: &b.verdict,
                        })
                        .collect();
                    csv_table(&out)
                }
                AnalysisReport::Pole(r) => {
                    let rows: Vec<MarginCsv> = r
                        .radii
                        .iter()
                        .zip(&r.margins)
                        .map(|(&r, &margin)| MarginCsv { r, margin })
                        .collect();
                    csv_table(&rows)
                }
                AnalysisReport::Net(r) => csv_table(&[r]),
                AnalysisReport::Qi(r) => csv_table(&[r]),
            },
        }
    }
}

fn graph_radii(cfg: &ExperimentConfig, default: impl FnOnce() -> Vec<u32>) -> Vec<u32> {
    cfg.radii.clone().or_else(|| cfg.radius.map(|r| vec![r])).unwrap_or_else(default)
}

/// Runs one analysis as configured.
pub fn run_analysis(which: Analysis, cfg: &ExperimentConfig) -> Result<AnalysisReport> {
    cfg.validate()?;
    if matches!(which, Analysis::Net | Analysis::Qi) {
        let (cloud, label) = load_cloud(cfg)?;
        let eps = cfg.epsilon.ok_or_else(|| CliError::config("nets need --epsilon"))?;
        let net = epsilon_net(&cloud, eps)?;
        return Ok(match which {
            Analysis::Net => AnalysisReport::Net(net_report(&cloud, &net, &label)),
            _ => {
                let qi = qi_constants(&cloud, &net, cfg.pair_sample(), cfg.seed())?;
                AnalysisReport::Qi(QiSummary {
                    report: "qi".into(),
                    family: label,
                    epsilon: eps,
                    alpha: qi.alpha,
                    beta: qi.beta,
                    epsilon_full: qi.epsilon_full,
                    sample_size: qi.sample_size,
                    holds: qi.holds(),
                })
            }
        });
    }

    let LoadedGraph { graph: g, label } = load_graph(cfg)?;
    let v = check_vertex(&g, cfg.vertex.unwrap_or_else(|| default_vertex(&g)))?;
    let reach = reach(&g, v);
    Ok(match which {
        Analysis::Delta => AnalysisReport::Delta(delta_report(&g, &label, v, cfg.radius)),
        Analysis::Thin => AnalysisReport::Thin(thin_report(&g, &label, v, cfg.radius, cfg.seed())),
        Analysis::Cheeger => {
            let radii = graph_radii(cfg, || (1..reach).collect());
            AnalysisReport::Cheeger(cheeger_report(&g, &label, v, &radii)?)
        }
        Analysis::Lambda1 => {
            let radii = graph_radii(cfg, || (1..reach).collect());
            AnalysisReport::Lambda1(lambda1_report(&g, &label, v, &radii, cfg.tolerance())?)
        }
        Analysis::Boundary => {
            let a = cfg.visual_a.unwrap_or(DEFAULT_VISUAL_A);
            let depths = graph_radii(cfg, || vec![reach]);
            let rows = depths
                .iter()
                .map(|&d| boundary_report(&g, &label, v, d, a))
                .collect::<Result<Vec<_>>>()?;
            AnalysisReport::Boundary(rows)
        }
        Analysis::Pole => {
            let radii = graph_radii(cfg, || (2..=reach.max(4)).collect());
            let mut report = pole_report(&g, &label, v, &radii, cfg.buffer)?;
            if let (true, Some(h)) = (report.pole_like(), regular_tree_cheeger(&g)) {
                attach_bound(&g, &mut report, h, "regular-tree", cfg.seed())?;
            }
            AnalysisReport::Pole(report)
        }
        Analysis::Net | Analysis::Qi => unreachable!("handled above"),
    })
}
