// SPDX-License-Identifier: Apache-2.0

//! Point clouds in the Euclidean and hyperbolic planes, greedy
//! r-approximations, ε-net graphs and quasi-isometry certificates.
//!
//! Hyperbolic points live in the Poincaré disk. Every distance comparison goes
//! through a monotone key (squared distance, or `cosh d` in the disk) so that
//! selection, edges and the post-hoc checks agree bit for bit.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;
use core::fmt;
use core::str::FromStr;

use crate::graph::{bfs, Graph, GraphError};
use crate::rng::XorShift64Star;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum NetError {
    #[error("unknown space kind '{0}' (expected euclidean or poincare)")]
    InvalidKind(String),
    #[error("radius must be positive and finite")]
    InvalidRadius,
    #[error("point count must be at least 1")]
    InvalidCount,
    #[error("scale must be positive and finite")]
    InvalidScale,
    #[error("cloud is empty")]
    EmptyCloud,
    #[error("point {0} is not a finite point of the space (Poincaré points need |z| < 1)")]
    InvalidPoint(usize),
    #[error("ε-net is disconnected ({components} components); the cloud is too sparse for this ε")]
    Disconnected { components: usize },
    #[error("net does not belong to this cloud")]
    ForeignNet,
}

impl NetError {
    pub fn code(&self) -> &'static str {
        match self {
            NetError::InvalidKind(_) => "E_INVALID_KIND",
            NetError::InvalidRadius => "E_INVALID_RADIUS",
            NetError::InvalidCount => "E_INVALID_COUNT",
            NetError::InvalidScale => "E_INVALID_SCALE",
            NetError::EmptyCloud => "E_EMPTY_CLOUD",
            NetError::InvalidPoint(_) => "E_INVALID_POINT",
            NetError::Disconnected { .. } => "E_DISCONNECTED",
            NetError::ForeignNet => "E_FOREIGN_NET",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpaceKind {
    Euclidean,
    /// The hyperbolic plane in the Poincaré disk model.
    Poincare,
}

impl fmt::Display for SpaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SpaceKind::Euclidean => "euclidean",
            SpaceKind::Poincare => "poincare",
        })
    }
}

impl FromStr for SpaceKind {
    type Err = NetError;

    fn from_str(s: &str) -> Result<Self, NetError> {
        match s.trim().to_ascii_lowercase().as_str() {
            "euclidean" | "euclid" | "plane" => Ok(SpaceKind::Euclidean),
            "poincare" | "poincare-disk" | "poincaré" | "hyperbolic" => Ok(SpaceKind::Poincare),
            other => Err(NetError::InvalidKind(other.into())),
        }
    }
}

/// A finite sample of the Euclidean plane or the Poincaré disk.
#[derive(Debug, Clone, PartialEq)]
pub struct PointCloud {
    kind: SpaceKind,
    radius: f64,
    points: Vec<[f64; 2]>,
    /// `1 − |z|²` for Poincaré points.
    conformal: Vec<f64>,
}

impl PointCloud {
    /// Wraps explicit coordinates; the nominal radius is the largest distance
    /// from the origin.
    pub fn new(kind: SpaceKind, points: Vec<[f64; 2]>) -> Result<Self, NetError> {
        if points.is_empty() {
            return Err(NetError::EmptyCloud);
        }
        let mut conformal = Vec::new();
        for (i, p) in points.iter().enumerate() {
            if !p[0].is_finite() || !p[1].is_finite() {
                return Err(NetError::InvalidPoint(i));
            }
            if kind == SpaceKind::Poincare {
                let q = 1.0 - (p[0] * p[0] + p[1] * p[1]);
                if q.is_nan() || q <= 0.0 {
                    return Err(NetError::InvalidPoint(i));
                }
                conformal.push(q);
            }
        }
        let mut cloud = PointCloud { kind, radius: 0.0, points, conformal };
        cloud.radius = (0..cloud.len()).map(|i| cloud.origin_distance(i)).fold(0.0, f64::max);
        Ok(cloud)
    }

    /// Overrides the nominal radius (the radius of the sampled disk).
    pub fn with_radius(mut self, radius: f64) -> Result<Self, NetError> {
        if !(radius > 0.0 && radius.is_finite()) {
            return Err(NetError::InvalidRadius);
        }
        self.radius = radius;
        Ok(self)
    }

    pub fn kind(&self) -> SpaceKind {
        self.kind
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[[f64; 2]] {
        &self.points
    }

    pub fn point(&self, i: usize) -> [f64; 2] {
        self.points[i]
    }

    /// Monotone proxy of `d(i, j)`: squared distance, or `cosh d` in the disk.
    #[inline]
    fn key(&self, i: usize, j: usize) -> f64 {
        let [x1, y1] = self.points[i];
        let [x2, y2] = self.points[j];
        let sq = (x1 - x2) * (x1 - x2) + (y1 - y2) * (y1 - y2);
        match self.kind {
            SpaceKind::Euclidean => sq,
            SpaceKind::Poincare => 1.0 + 2.0 * sq / (self.conformal[i] * self.conformal[j]),
        }
    }

    #[inline]
    fn key_of(&self, d: f64) -> f64 {
        match self.kind {
            SpaceKind::Euclidean => d * d,
            SpaceKind::Poincare => libm::cosh(d),
        }
    }

    fn distance_of_key(&self, k: f64) -> f64 {
        match self.kind {
            SpaceKind::Euclidean => libm::sqrt(k),
            SpaceKind::Poincare => libm::acosh(k.max(1.0)),
        }
    }

    /// Exact distance in the ambient space.
    pub fn distance(&self, i: usize, j: usize) -> f64 {
        if i == j {
            return 0.0;
        }
        self.distance_of_key(self.key(i, j))
    }

    /// `d(i, j) < s`, decided on the same key as every other comparison.
    pub fn closer_than(&self, i: usize, j: usize, s: f64) -> bool {
        self.key(i, j) < self.key_of(s)
    }

    /// `d(i, j) ≤ s`.
    pub fn within(&self, i: usize, j: usize, s: f64) -> bool {
        self.key(i, j) <= self.key_of(s)
    }

    /// Distance to the origin of the model.
    pub fn origin_distance(&self, i: usize) -> f64 {
        let [x, y] = self.points[i];
        let r = libm::sqrt(x * x + y * y);
        match self.kind {
            SpaceKind::Euclidean => r,
            SpaceKind::Poincare => 2.0 * libm::atanh(r),
        }
    }

    fn angle(&self, i: usize) -> f64 {
        let [x, y] = self.points[i];
        let t = libm::atan2(y, x);
        if t < 0.0 {
            t + 2.0 * PI
        } else {
            t
        }
    }
}

/// Samples `count` points uniformly (with respect to area) from the disk of
/// the given radius around the origin.
///
/// Each point draws `u` then `v` from [`XorShift64Star`]; the radius comes from
/// the inverse area CDF (`R√u` in the plane, `acosh(1 + u(cosh R − 1))` in the
/// hyperbolic plane) and the angle is `2πv`.
pub fn sample_space(
    kind: SpaceKind,
    radius: f64,
    count: usize,
    seed: u64,
) -> Result<PointCloud, NetError> {
    if !(radius > 0.0 && radius.is_finite()) {
        return Err(NetError::InvalidRadius);
    }
    if count == 0 {
        return Err(NetError::InvalidCount);
    }
    let mut rng = XorShift64Star::new(seed);
    let cosh_r = libm::cosh(radius);
    let mut points = Vec::with_capacity(count);
    for _ in 0..count {
        let u = rng.next_f64();
        let v = rng.next_f64();
        let theta = 2.0 * PI * v;
        let r = match kind {
            SpaceKind::Euclidean => radius * libm::sqrt(u),
            SpaceKind::Poincare => {
                let rho = libm::acosh(1.0 + u * (cosh_r - 1.0));
                libm::tanh(rho / 2.0)
            }
        };
        points.push([r * libm::cos(theta), r * libm::sin(theta)]);
    }
    PointCloud::new(kind, points)?.with_radius(radius)
}

/// Bucket index answering "which indexed points might lie within `scale`".
///
/// Plane: square cells of side `scale`. Disk: annuli of hyperbolic width
/// `scale`, each cut into sectors whose inner arc is at least `scale` long.
struct BucketIndex {
    scale: f64,
    kind: SpaceKind,
    // plane
    side: usize,
    offset: f64,
    // disk: per band (sector count, first cell)
    bands: Vec<(usize, usize)>,
    cells: Vec<Vec<usize>>,
}

impl BucketIndex {
    fn new(cloud: &PointCloud, scale: f64) -> Self {
        let extent = (0..cloud.len())
            .map(|i| cloud.origin_distance(i))
            .fold(cloud.radius, f64::max);
        match cloud.kind {
            SpaceKind::Euclidean => {
                let side = (libm::ceil(2.0 * extent / scale) as usize + 1).min(1 << 12);
                let offset = extent;
                BucketIndex {
                    scale: scale.max(2.0 * extent / side as f64),
                    kind: cloud.kind,
                    side,
                    offset,
                    bands: Vec::new(),
                    cells: vec![Vec::new(); side * side],
                }
            }
            SpaceKind::Poincare => {
                let band_count = libm::floor(extent / scale) as usize + 1;
                let mut bands = Vec::with_capacity(band_count);
                let mut total = 0;
                for b in 0..band_count {
                    let inner = libm::sinh(b as f64 * scale) * 2.0 * PI / scale;
                    let sectors = (libm::floor(inner) as usize).clamp(1, 1 << 16);
                    bands.push((sectors, total));
                    total += sectors;
                }
                BucketIndex {
                    scale,
                    kind: cloud.kind,
                    side: 0,
                    offset: 0.0,
                    bands,
                    cells: vec![Vec::new(); total],
                }
            }
        }
    }

    fn plane_cell(&self, p: [f64; 2]) -> (usize, usize) {
        let f = |x: f64| {
            (libm::floor((x + self.offset) / self.scale).max(0.0) as usize).min(self.side - 1)
        };
        (f(p[0]), f(p[1]))
    }

    fn disk_cell(&self, cloud: &PointCloud, i: usize) -> (usize, usize) {
        let band = (libm::floor(cloud.origin_distance(i) / self.scale) as usize)
            .min(self.bands.len() - 1);
        let sectors = self.bands[band].0;
        let sector =
            (libm::floor(cloud.angle(i) / (2.0 * PI) * sectors as f64) as usize).min(sectors - 1);
        (band, sector)
    }

    fn insert(&mut self, cloud: &PointCloud, i: usize) {
        let cell = match self.kind {
            SpaceKind::Euclidean => {
                let (cx, cy) = self.plane_cell(cloud.points[i]);
                cy * self.side + cx
            }
            SpaceKind::Poincare => {
                let (band, sector) = self.disk_cell(cloud, i);
                self.bands[band].1 + sector
            }
        };
        self.cells[cell].push(i);
    }

    /// Calls `visit` on every indexed point that may lie within `scale` of
    /// point `i`; stops early when `visit` returns `true`.
    fn for_candidates(
        &self,
        cloud: &PointCloud,
        i: usize,
        mut visit: impl FnMut(usize) -> bool,
    ) -> bool {
        match self.kind {
            SpaceKind::Euclidean => {
                let (cx, cy) = self.plane_cell(cloud.points[i]);
                for y in cy.saturating_sub(1)..=(cy + 1).min(self.side - 1) {
                    for x in cx.saturating_sub(1)..=(cx + 1).min(self.side - 1) {
                        for &j in &self.cells[y * self.side + x] {
                            if visit(j) {
                                return true;
                            }
                        }
                    }
                }
                false
            }
            SpaceKind::Poincare => {
                let rho = cloud.origin_distance(i);
                let theta = cloud.angle(i);
                let (band, _) = self.disk_cell(cloud, i);
                let slack = libm::cosh(self.scale) - 1.0;
                for b in band.saturating_sub(1)..=(band + 1).min(self.bands.len() - 1) {
                    let (sectors, first) = self.bands[b];
                    let rho_lo = b as f64 * self.scale;
                    let denom = libm::sinh(rho) * libm::sinh(rho_lo);
                    // sinh ρ sinh ρ' (1 − cos Δθ) ≤ cosh s − 1 bounds the angle gap
                    let full = denom <= 0.0 || slack / denom >= 2.0;
                    let width = 2.0 * PI / sectors as f64;
                    let (start, count) = if full {
                        (0i64, sectors)
                    } else {
                        let gap = libm::acos(1.0 - slack / denom) * (1.0 + 1e-9) + 1e-12;
                        let lo = libm::floor((theta - gap) / width) as i64;
                        let hi = libm::floor((theta + gap) / width) as i64;
                        (lo, ((hi - lo + 1) as usize).min(sectors))
                    };
                    for k in 0..count as i64 {
                        let sector = (start + k).rem_euclid(sectors as i64) as usize;
                        for &j in &self.cells[first + sector] {
                            if visit(j) {
                                return true;
                            }
                        }
                    }
                }
                false
            }
        }
    }
}

/// Greedy r-approximation: scans points in index order and keeps a point iff
/// it is at distance `≥ r` from every point kept so far.
///
/// The result is a maximal r-separated set, so the r-balls around it cover the
/// cloud.
pub fn r_approximation(cloud: &PointCloud, r: f64) -> Result<Vec<usize>, NetError> {
    if !(r > 0.0 && r.is_finite()) {
        return Err(NetError::InvalidScale);
    }
    let mut index = BucketIndex::new(cloud, r);
    let mut selected = Vec::new();
    for i in 0..cloud.len() {
        let blocked = index.for_candidates(cloud, i, |j| cloud.closer_than(i, j, r));
        if !blocked {
            index.insert(cloud, i);
            selected.push(i);
        }
    }
    Ok(selected)
}

/// An ε-net: the r-approximation at scale ε with edges between selected
/// points at distance in `(0, 2ε]`.
#[derive(Debug, Clone, PartialEq)]
pub struct NetResult {
    pub epsilon: f64,
    /// Cloud indices of the net vertices; vertex `k` of the graph is
    /// `selected[k]`.
    pub selected: Vec<usize>,
    /// Net points within `2ε` of the sampled disk's rim form the frontier.
    pub graph: Graph,
    /// Largest distance from a cloud point to its nearest net point.
    pub covering_radius: f64,
    /// Maximum degree.
    pub mu: usize,
}

pub fn epsilon_net(cloud: &PointCloud, epsilon: f64) -> Result<NetResult, NetError> {
    let selected = r_approximation(cloud, epsilon)?;
    let mut net_index = BucketIndex::new(cloud, 2.0 * epsilon);
    for &i in &selected {
        net_index.insert(cloud, i);
    }
    let mut position = vec![usize::MAX; cloud.len()];
    for (k, &i) in selected.iter().enumerate() {
        position[i] = k;
    }

    let mut edges = Vec::new();
    for (k, &i) in selected.iter().enumerate() {
        net_index.for_candidates(cloud, i, |j| {
            let l = position[j];
            if l > k && cloud.within(i, j, 2.0 * epsilon) {
                edges.push((k, l));
            }
            false
        });
    }
    edges.sort_unstable();

    let mut covering_key = cloud.key_of(0.0);
    let mut cover_index = BucketIndex::new(cloud, epsilon);
    for &i in &selected {
        cover_index.insert(cloud, i);
    }
    for i in 0..cloud.len() {
        let mut best = f64::INFINITY;
        cover_index.for_candidates(cloud, i, |j| {
            best = best.min(cloud.key(i, j));
            false
        });
        covering_key = covering_key.max(best);
    }

    let rim = cloud.radius - 2.0 * epsilon;
    let frontier: Vec<usize> = selected
        .iter()
        .enumerate()
        .filter(|&(_, &i)| cloud.origin_distance(i) > rim)
        .map(|(k, _)| k)
        .collect();
    let graph = Graph::from_edges(selected.len(), &edges)
        .map_err(|e| match e {
            GraphError::Disconnected { components } => NetError::Disconnected { components },
            _ => unreachable!("net edges are simple and in range"),
        })?
        .with_frontier(frontier)
        .expect("frontier indices are net vertices");
    let mu = uniformity(&graph);
    Ok(NetResult {
        epsilon,
        selected,
        graph,
        covering_radius: cloud.distance_of_key(covering_key),
        mu,
    })
}

/// μ: the maximum vertex degree.
pub fn uniformity(graph: &Graph) -> usize {
    graph.max_degree()
}

/// Net vertex closest to the origin of the model (ties to the lower index).
pub fn central_vertex(cloud: &PointCloud, net: &NetResult) -> usize {
    let mut best = 0;
    for k in 1..net.selected.len() {
        if cloud.origin_distance(net.selected[k]) < cloud.origin_distance(net.selected[best]) {
            best = k;
        }
    }
    best
}

/// Distances of one sampled pair of net vertices.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QiPair {
    pub u: usize,
    pub v: usize,
    /// Ambient distance between the underlying cloud points.
    pub d_x: f64,
    /// `ε ·` hop distance in the net.
    pub d_y: f64,
}

/// Quasi-isometry certificate for the inclusion of the net into the cloud.
#[derive(Debug, Clone, PartialEq)]
pub struct QIReport {
    pub alpha: f64,
    pub beta: f64,
    pub epsilon_full: f64,
    pub sample_size: usize,
    pub pairs: Vec<QiPair>,
}

impl QIReport {
    /// Whether every recorded pair satisfies `α⁻¹d_X − β ≤ d_Y ≤ αd_X + β`.
    pub fn holds(&self) -> bool {
        self.pairs.iter().all(|p| {
            p.d_x / self.alpha - self.beta <= p.d_y && p.d_y <= self.alpha * p.d_x + self.beta
        })
    }
}

/// Number of points on the α grid.
pub const QI_GRID_POINTS: usize = 100;

/// Fits `(α, β)` to sampled net-vertex pairs.
///
/// `α_max` is the largest two-sided distortion ratio over the sample; the scan
/// walks a uniform 100-point grid on `[1, α_max]` and keeps the smallest `α`
/// whose minimal feasible `β` is at most `2ε` (`α_max` itself always works with
/// `β = 0`). When the net has at most `pair_sample_size` pairs, all are used.
pub fn qi_constants(
    cloud: &PointCloud,
    net: &NetResult,
    pair_sample_size: usize,
    seed: u64,
) -> Result<QIReport, NetError> {
    let m = net.selected.len();
    if net.selected.iter().any(|&i| i >= cloud.len()) || net.graph.n() != m {
        return Err(NetError::ForeignNet);
    }
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    let total = m * (m.saturating_sub(1)) / 2;
    if total <= pair_sample_size {
        for u in 0..m {
            for v in u + 1..m {
                pairs.push((u, v));
            }
        }
    } else {
        let mut rng = XorShift64Star::new(seed);
        while pairs.len() < pair_sample_size {
            let u = rng.below(m);
            let mut v = rng.below(m - 1);
            if v >= u {
                v += 1;
            }
            pairs.push((u.min(v), u.max(v)));
        }
        pairs.sort_unstable();
    }

    let eps = net.epsilon;
    let mut sample = Vec::with_capacity(pairs.len());
    let mut current: Option<(usize, Vec<u32>)> = None;
    for &(u, v) in &pairs {
        if current.as_ref().map(|c| c.0) != Some(u) {
            current = Some((u, bfs(&net.graph, u)));
        }
        let hops = current.as_ref().expect("set above").1[v];
        sample.push(QiPair {
            u,
            v,
            d_x: cloud.distance(net.selected[u], net.selected[v]),
            d_y: eps * f64::from(hops),
        });
    }

    let alpha_max = sample
        .iter()
        .map(|p| (p.d_y / p.d_x).max(p.d_x / p.d_y))
        .fold(1.0, f64::max);
    let beta_at = |alpha: f64| {
        sample.iter().fold(0.0f64, |b, p| {
            b.max(p.d_y - alpha * p.d_x).max(p.d_x / alpha - p.d_y)
        })
    };
    let mut alpha = alpha_max;
    let mut beta = beta_at(alpha_max);
    for k in 0..QI_GRID_POINTS {
        let a = 1.0 + (alpha_max - 1.0) * k as f64 / (QI_GRID_POINTS - 1) as f64;
        let b = beta_at(a);
        if b <= 2.0 * eps {
            alpha = a;
            beta = b;
            break;
        }
    }
    // absorb rounding in the products above
    beta += 1e-12 * (1.0 + beta + alpha);

    Ok(QIReport {
        alpha,
        beta,
        epsilon_full: net.covering_radius,
        sample_size: sample.len(),
        pairs: sample,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn line(xs: &[f64]) -> PointCloud {
        PointCloud::new(SpaceKind::Euclidean, xs.iter().map(|&x| [x, 0.0]).collect()).unwrap()
    }

    #[test]
    fn greedy_on_line() {
        let c = line(&[0.0, 0.5, 1.0, 1.5, 2.0]);
        assert_eq!(r_approximation(&c, 1.0).unwrap(), [0, 2, 4]);
        assert_eq!(r_approximation(&c, 10.0).unwrap(), [0]);
        assert_eq!(r_approximation(&c, 0.0), Err(NetError::InvalidScale));
    }

    #[test]
    fn net_on_line() {
        let c = line(&[0.0, 1.0, 2.0, 4.0]);
        let net = epsilon_net(&c, 1.0).unwrap();
        assert_eq!(net.selected, [0, 1, 2, 3]);
        assert_eq!(net.graph.edges().collect::<Vec<_>>(), [(0, 1), (0, 2), (1, 2), (2, 3)]);
        assert_eq!(net.mu, 3);
        assert_eq!(net.covering_radius, 0.0);

        let two = line(&[0.0, 3.0]);
        assert_eq!(
            epsilon_net(&two, 1.0).unwrap_err(),
            NetError::Disconnected { components: 2 }
        );
    }

    #[test]
    fn sampling_is_deterministic_and_in_disk() {
        let a = sample_space(SpaceKind::Poincare, 6.0, 500, 7).unwrap();
        let b = sample_space(SpaceKind::Poincare, 6.0, 500, 7).unwrap();
        assert_eq!(a, b);
        assert!(a.points().iter().all(|p| p[0] * p[0] + p[1] * p[1] < 1.0));
        assert!((0..a.len()).all(|i| a.origin_distance(i) <= 6.0 + 1e-9));
        let single = sample_space(SpaceKind::Euclidean, 10.0, 1, 1).unwrap();
        assert_eq!(single.len(), 1);
        assert_eq!(sample_space(SpaceKind::Euclidean, 0.0, 1, 1), Err(NetError::InvalidRadius));
        assert_eq!(sample_space(SpaceKind::Euclidean, 1.0, 0, 1), Err(NetError::InvalidCount));
    }

    #[test]
    fn poincare_distance_matches_radius() {
        let c = PointCloud::new(SpaceKind::Poincare, vec![[0.0, 0.0], [0.5, 0.0], [-0.5, 0.0]])
            .unwrap();
        let rho = 2.0 * libm::atanh(0.5);
        assert!((c.distance(0, 1) - rho).abs() < 1e-12);
        assert!((c.distance(1, 2) - 2.0 * rho).abs() < 1e-9);
        assert!(PointCloud::new(SpaceKind::Poincare, vec![[1.0, 0.0]]).is_err());
    }

    #[test]
    fn kinds_parse() {
        assert_eq!("poincare-disk".parse::<SpaceKind>().unwrap(), SpaceKind::Poincare);
        assert_eq!("Euclidean".parse::<SpaceKind>().unwrap(), SpaceKind::Euclidean);
        assert_eq!("torus".parse::<SpaceKind>().unwrap_err().code(), "E_INVALID_KIND");
    }

    #[test]
    fn indexed_scan_matches_brute_force() {
        for kind in [SpaceKind::Euclidean, SpaceKind::Poincare] {
            let c = sample_space(kind, 3.0, 1500, 11).unwrap();
            let fast = r_approximation(&c, 0.4).unwrap();
            let mut slow: Vec<usize> = Vec::new();
            for i in 0..c.len() {
                if slow.iter().all(|&j| !c.closer_than(i, j, 0.4)) {
                    slow.push(i);
                }
            }
            assert_eq!(fast, slow, "{kind}");
            let net = epsilon_net(&c, 0.4).unwrap();
            let mut brute = Vec::new();
            for a in 0..fast.len() {
                for b in a + 1..fast.len() {
                    if c.within(fast[a], fast[b], 0.8) {
                        brute.push((a, b));
                    }
                }
            }
            assert_eq!(net.graph.edges().collect::<Vec<_>>(), brute);
            assert!(net.covering_radius < 0.4);
        }
    }

    #[test]
    fn collinear_qi() {
        // spacing just above ε: the net is a path and hops track distance
        let xs: Vec<f64> = (0..30).map(|i| 0.51 * i as f64).collect();
        let c = line(&xs);
        let net = epsilon_net(&c, 0.5).unwrap();
        assert_eq!(net.mu, 2);
        let rep = qi_constants(&c, &net, 10_000, 1).unwrap();
        assert!(rep.holds());
        assert_eq!(rep.alpha, 1.0);
        assert!(rep.beta <= 1.0);
        assert_eq!(rep.sample_size, 435);
    }
}
