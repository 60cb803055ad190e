// SPDX-License-Identifier: Apache-2.0

//! Theorem-verification presets: the verdict matrix over the standard
//! families and the Euclidean/hyperbolic net comparison.

use coarse_core::boundary::DEFAULT_VISUAL_A;
use coarse_core::cheeger::{cheeger_profile, regular_tree_cheeger, ProfileMethod};
use coarse_core::graph::{distances_among, gen_family, Family, Graph};
use coarse_core::hyperbolicity::{delta_four_point_with, DeltaOptions};
use coarse_core::nets::{central_vertex, epsilon_net, sample_space, SpaceKind};
use coarse_core::Rational;
use serde::{Deserialize, Serialize};

use crate::analysis::{
    attach_bound, ball, boundary_report, cheeger_report, pole_report, rational_string, reach,
    BoundaryReport, CheegerReport, PoleReport,
};
use crate::config::Preset;
use crate::error::Result;

/// δ stabilizes when it grows by at most this much between the middle and
/// the last radius.
pub const DELTA_STABILITY_SLACK: u32 = 1;
/// Exhaustive δ on balls up to this size.
pub const BALL_SCAN_LIMIT: usize = 500;
/// Boundary S* values may vary across depths by at most this factor.
pub const S_STAR_SPREAD: f64 = 2.0;

/// Net scale of the hyperbolic rows.
pub const NET_EPSILON: f64 = 0.3;
/// Expected cloud points per `ε²` of area.
pub const NET_DENSITY: f64 = 8.0;
pub const NET_RADIUS: f64 = 6.0;
pub const NET_SEED: u64 = 1;

/// Radii, seeds and ratio factor of the Euclidean/hyperbolic comparison.
pub const KANAI_RADII: [f64; 4] = [3.0, 4.0, 5.0, 6.0];
pub const KANAI_SEEDS: [u64; 3] = [1, 2, 3];
pub const KANAI_FACTOR: f64 = 2.0;

/// One test graph with the radii used for each column.
#[derive(Debug, Clone)]
pub struct RowSpec {
    pub label: String,
    pub graph: Graph,
    pub v: usize,
    pub delta_radii: Vec<u32>,
    pub profile_radii: Vec<u32>,
    pub boundary_depths: Vec<u32>,
    pub pole_radii: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DeltaPoint {
    pub r: u32,
    pub n: usize,
    pub delta: String,
    pub exact: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerdictRow {
    pub family: String,
    pub v: usize,
    pub hyperbolic: bool,
    pub cheeger_positive: bool,
    pub uniformly_perfect: bool,
    pub pole_like: bool,
    /// `(hyperbolic ∧ cheeger_positive) == (uniformly_perfect ∧ pole_like)`.
    pub equivalence: bool,
    /// `M ≤ M_bound` where a bound was computed.
    pub bound_holds: Option<bool>,
    pub delta: Vec<DeltaPoint>,
    pub profile: CheegerReport,
    pub boundary: Vec<BoundaryReport>,
    pub pole: PoleReport,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KanaiRow {
    pub seed: u64,
    pub radius: f64,
    pub points: usize,
    pub hyperbolic_vertices: usize,
    pub hyperbolic_r: u32,
    pub hyperbolic_ratio: String,
    pub euclidean_radius: f64,
    pub euclidean_vertices: usize,
    pub euclidean_r: u32,
    pub euclidean_ratio: String,
    pub factor_ok: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KanaiReport {
    pub epsilon: f64,
    pub density: f64,
    pub rows: Vec<KanaiRow>,
    /// Hyperbolic ratio ≥ factor × Euclidean ratio on every row.
    pub factor_ok: bool,
    /// Euclidean ratios strictly decrease with the radius for every seed.
    pub euclidean_monotone: bool,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub report: String,
    pub preset: Preset,
    pub rows: Vec<VerdictRow>,
    pub kanai: Option<KanaiReport>,
    pub passed: bool,
}

fn family(spec: &str) -> Graph {
    gen_family(&spec.parse::<Family>().expect("preset spec")).expect("preset family")
}

/// Points in a disk of area `A` at the preset density.
pub fn point_count(area: f64) -> usize {
    (NET_DENSITY * area / (NET_EPSILON * NET_EPSILON)).ceil() as usize
}

pub fn hyperbolic_area(radius: f64) -> f64 {
    2.0 * std::f64::consts::PI * (radius.cosh() - 1.0)
}

/// Euclidean disk radius with the same area as the hyperbolic disk.
pub fn matching_euclidean_radius(radius: f64) -> f64 {
    2.0 * (radius / 2.0).sinh()
}

/// The ε-net row: a hyperbolic disk net based at its most central vertex.
pub fn poincare_row() -> Result<RowSpec> {
    let count = point_count(hyperbolic_area(NET_RADIUS));
    let cloud = sample_space(SpaceKind::Poincare, NET_RADIUS, count, NET_SEED)?;
    let net = epsilon_net(&cloud, NET_EPSILON)?;
    let v = central_vertex(&cloud, &net);
    let fd = reach(&net.graph, v);
    Ok(RowSpec {
        label: format!("poincare-net:R={NET_RADIUS},eps={NET_EPSILON}"),
        graph: net.graph,
        v,
        delta_radii: (2..=7).collect(),
        profile_radii: (1..fd).collect(),
        boundary_depths: (4..fd).collect(),
        pole_radii: (3..fd).collect(),
    })
}

pub fn preset_rows() -> Result<Vec<RowSpec>> {
    let grid = family("grid:17,17");
    Ok(vec![
        RowSpec {
            label: "tree:3,7".into(),
            graph: family("tree:3,7"),
            v: 0,
            delta_radii: (2..=6).collect(),
            profile_radii: (1..=6).collect(),
            boundary_depths: (4..=6).collect(),
            pole_radii: (4..=7).collect(),
        },
        RowSpec {
            label: "path:60".into(),
            graph: family("path:60"),
            v: 30,
            delta_radii: (2..=7).collect(),
            profile_radii: vec![5, 10, 15, 20, 25],
            boundary_depths: (4..=6).collect(),
            pole_radii: vec![10, 15, 20, 25],
        },
        RowSpec {
            label: "grid:17,17".into(),
            v: 8 * 17 + 8,
            graph: grid,
            delta_radii: (2..=7).collect(),
            profile_radii: (1..=7).collect(),
            boundary_depths: (3..=7).collect(),
            pole_radii: (4..=7).collect(),
        },
        RowSpec {
            label: "comb:40,0.5".into(),
            graph: family("comb:40,0.5"),
            v: 0,
            delta_radii: (2..=7).collect(),
            profile_radii: vec![12, 16, 20, 24],
            boundary_depths: vec![12, 16, 20, 24],
            pole_radii: vec![12, 16, 20, 24],
        },
        poincare_row()?,
    ])
}

/// δ of the ambient metric restricted to nested balls.
pub fn ball_deltas(g: &Graph, v: usize, radii: &[u32]) -> Vec<DeltaPoint> {
    radii
        .iter()
        .map(|&r| {
            let members = ball(g, v, r);
            let dist = distances_among(g, &members);
            let base = members.binary_search(&v).expect("centre is in its ball");
            let w = delta_four_point_with(&dist, DeltaOptions { full_scan_limit: BALL_SCAN_LIMIT, base });
            DeltaPoint { r, n: members.len(), delta: w.value.to_string(), exact: w.exact }
        })
        .collect()
}

fn doubled(p: &DeltaPoint) -> u32 {
    p.delta.trim_end_matches("/2").parse().expect("δ renders as k/2")
}

/// δ grows by at most [`DELTA_STABILITY_SLACK`] from the middle radius to the last.
pub fn delta_stable(points: &[DeltaPoint]) -> bool {
    let (Some(last), Some(mid)) = (points.last(), points.get(points.len().saturating_sub(1) / 2)) else {
        return false;
    };
    doubled(last) <= doubled(mid) + 2 * DELTA_STABILITY_SLACK
}

/// Finite S* at every depth, varying by at most [`S_STAR_SPREAD`].
pub fn boundary_uniformly_perfect(rows: &[BoundaryReport]) -> bool {
    let values: Vec<f64> = rows.iter().map(BoundaryReport::s_star).collect();
    let (lo, hi) = values.iter().fold((f64::INFINITY, 0.0f64), |(lo, hi), &s| (lo.min(s), hi.max(s)));
    !values.is_empty() && hi.is_finite() && hi <= S_STAR_SPREAD * lo
}

pub fn evaluate_row(spec: &RowSpec, seed: u64) -> Result<VerdictRow> {
    let g = &spec.graph;
    let delta = ball_deltas(g, spec.v, &spec.delta_radii);
    let hyperbolic = delta_stable(&delta);
    let profile = cheeger_report(g, &spec.label, spec.v, &spec.profile_radii)?;
    let cheeger_positive = profile.bounded_below();
    let boundary = spec
        .boundary_depths
        .iter()
        .map(|&d| boundary_report(g, &spec.label, spec.v, d, DEFAULT_VISUAL_A))
        .collect::<Result<Vec<_>>>()?;
    let uniformly_perfect = hyperbolic && boundary_uniformly_perfect(&boundary);
    let mut pole = pole_report(g, &spec.label, spec.v, &spec.pole_radii, None)?;
    let pole_like = pole.pole_like();
    if hyperbolic && cheeger_positive && pole_like {
        let (h, source) = match regular_tree_cheeger(g) {
            Some(h) => (h, "regular-tree"),
            None => (profile.min_ratio().unwrap_or_default(), "profile-minimum"),
        };
        attach_bound(g, &mut pole, h, source, seed)?;
    }
    Ok(VerdictRow {
        family: spec.label.clone(),
        v: spec.v,
        hyperbolic,
        cheeger_positive,
        uniformly_perfect,
        pole_like,
        equivalence: (hyperbolic && cheeger_positive) == (uniformly_perfect && pole_like),
        bound_holds: pole.bound_holds(),
        delta,
        profile,
        boundary,
        pole,
    })
}

pub fn verdict_matrix(seed: u64) -> Result<Vec<VerdictRow>> {
    preset_rows()?.iter().map(|spec| evaluate_row(spec, seed)).collect()
}

/// Final profile ratio of the net of a disk of the given kind and radius, at
/// the largest radius the frontier allows around the central vertex.
fn final_ratio(kind: SpaceKind, radius: f64, count: usize, seed: u64) -> Result<(usize, u32, Rational)> {
    let cloud = sample_space(kind, radius, count, seed)?;
    let net = epsilon_net(&cloud, NET_EPSILON)?;
    let v = central_vertex(&cloud, &net);
    let r = reach(&net.graph, v).saturating_sub(1).max(1);
    let profile = cheeger_profile(&net.graph, v, &[r], ProfileMethod::Auto)?;
    Ok((net.graph.n(), r, profile[0].witness.ratio))
}

fn to_f64(q: Rational) -> f64 {
    *q.numer() as f64 / *q.denom() as f64
}

/// Hyperbolic and Euclidean disks of equal area and point count: the
/// hyperbolic nets keep their isoperimetric ratio, the Euclidean ones lose it.
pub fn kanai_dichotomy() -> Result<KanaiReport> {
    let mut rows = Vec::new();
    let mut euclidean_monotone = true;
    for &seed in &KANAI_SEEDS {
        let mut previous: Option<Rational> = None;
        for &radius in &KANAI_RADII {
            let count = point_count(hyperbolic_area(radius));
            let (hv, hr, h) = final_ratio(SpaceKind::Poincare, radius, count, seed)?;
            let er_disk = matching_euclidean_radius(radius);
            let (ev, er, e) = final_ratio(SpaceKind::Euclidean, er_disk, count, seed)?;
            if previous.is_some_and(|p| e >= p) {
                euclidean_monotone = false;
            }
            previous = Some(e);
            rows.push(KanaiRow {
                seed,
                radius,
                points: count,
                hyperbolic_vertices: hv,
                hyperbolic_r: hr,
                hyperbolic_ratio: rational_string(h),
                euclidean_radius: er_disk,
                euclidean_vertices: ev,
                euclidean_r: er,
                euclidean_ratio: rational_string(e),
                factor_ok: to_f64(h) >= KANAI_FACTOR * to_f64(e),
            });
        }
    }
    let factor_ok = rows.iter().all(|r| r.factor_ok);
    Ok(KanaiReport {
        epsilon: NET_EPSILON,
        density: NET_DENSITY,
        rows,
        factor_ok,
        euclidean_monotone,
        passed: factor_ok && euclidean_monotone,
    })
}

pub fn verify(preset: Preset, seed: u64) -> Result<VerifyReport> {
    let rows = match preset {
        Preset::Equivalence | Preset::All => verdict_matrix(seed)?,
        Preset::Kanai => Vec::new(),
    };
    let kanai = match preset {
        Preset::Kanai | Preset::All => Some(kanai_dichotomy()?),
        Preset::Equivalence => None,
    };
    let passed = rows.iter().all(|r| r.equivalence && r.bound_holds != Some(false))
        && kanai.as_ref().is_none_or(|k| k.passed);
    Ok(VerifyReport { report: "verify-theorem".into(), preset, rows, kanai, passed })
}
