// SPDX-License-Identifier: Apache-2.0

//! Combinatorial Cheeger ratios `|∂A| / |A|` over finite windows of an ambient
//! graph, Cheeger profiles on growing balls, and the Dirichlet bottom
//! eigenvalue.
//!
//! A finite graph always has `h = 0` (take `A = V`), so the infimum over finite
//! sets of an infinite graph is simulated by searching `A` inside a window `W`
//! whose vertices keep their full neighbourhood in the ambient truncation, and
//! measuring `∂A` in the ambient graph.

mod spectral;

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::graph::{bfs, Graph};
use crate::Rational;

pub use spectral::{dirichlet_lambda1, SpectralReport, MAX_OUTER_ITERATIONS};

/// Windows up to this size are enumerated subset by subset.
pub const EXACT_WINDOW_LIMIT: usize = 24;
/// Largest number of subsets the exact search will visit.
pub const EXACT_SUBSET_BUDGET: u64 = 1 << 24;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CheegerError {
    #[error("candidate set is empty")]
    EmptySet,
    #[error("window is empty")]
    EmptyWindow,
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("window contains frontier vertex {0}; its neighbourhood is truncated")]
    FrontierInWindow(usize),
    #[error(
        "window of {size} vertices with size cap {size_cap} exceeds exact enumeration; \
         use cheeger_upper_bounds"
    )]
    WindowTooLarge { size: usize, size_cap: usize },
    #[error("radius {radius} exceeds the truncation margin {margin} around the centre")]
    RadiusExceedsMargin { radius: u32, margin: u32 },
    #[error("radii must be strictly increasing")]
    RadiiNotIncreasing,
    #[error("window has an empty ambient boundary; the Dirichlet operator is singular")]
    EmptyBoundary,
    #[error("tolerance must be positive")]
    BadTolerance,
    #[error("no convergence after {iterations} iterations (residual {residual:e})")]
    NoConvergence { iterations: usize, residual: f64 },
    #[error("trend classification needs at least two positive radii")]
    TooFewPoints,
}

impl CheegerError {
    pub fn code(&self) -> &'static str {
        match self {
            CheegerError::EmptySet => "E_EMPTY_SET",
            CheegerError::EmptyWindow => "E_EMPTY_WINDOW",
            CheegerError::VertexOutOfRange { .. } => "E_VERTEX_RANGE",
            CheegerError::FrontierInWindow(_) => "E_FRONTIER_IN_WINDOW",
            CheegerError::WindowTooLarge { .. } => "E_CAPACITY",
            CheegerError::RadiusExceedsMargin { .. } => "E_RADIUS_MARGIN",
            CheegerError::RadiiNotIncreasing => "E_RADII_ORDER",
            CheegerError::EmptyBoundary => "E_EMPTY_BOUNDARY",
            CheegerError::BadTolerance => "E_TOLERANCE",
            CheegerError::NoConvergence { .. } => "E_NO_CONVERGENCE",
            CheegerError::TooFewPoints => "E_TOO_FEW_POINTS",
        }
    }
}

/// Search region for candidate sets inside an ambient graph.
#[derive(Debug, Clone)]
pub struct Window<'g> {
    graph: &'g Graph,
    members: Vec<usize>,
}

impl<'g> Window<'g> {
    /// Sorted, deduplicated window; frontier vertices are rejected.
    pub fn new(graph: &'g Graph, mut members: Vec<usize>) -> Result<Self, CheegerError> {
        members.sort_unstable();
        members.dedup();
        if members.is_empty() {
            return Err(CheegerError::EmptyWindow);
        }
        if let Some(&v) = members.last().filter(|&&v| v >= graph.n()) {
            return Err(CheegerError::VertexOutOfRange { vertex: v, n: graph.n() });
        }
        if let Some(&f) = members.iter().find(|&&v| graph.is_frontier(v)) {
            return Err(CheegerError::FrontierInWindow(f));
        }
        Ok(Window { graph, members })
    }

    /// The closed ball `B(v, r)`; needs `B(v, r + 1)` inside the truncation,
    /// i.e. no frontier vertex within distance `r` of `v`.
    pub fn ball(graph: &'g Graph, v: usize, r: u32) -> Result<Self, CheegerError> {
        if v >= graph.n() {
            return Err(CheegerError::VertexOutOfRange { vertex: v, n: graph.n() });
        }
        let row = bfs(graph, v);
        check_margin(graph, &row, r)?;
        let members = (0..graph.n()).filter(|&w| row[w] <= r).collect();
        Window::new(graph, members)
    }

    /// Every non-frontier vertex.
    pub fn interior(graph: &'g Graph) -> Result<Self, CheegerError> {
        Window::new(graph, (0..graph.n()).filter(|&v| !graph.is_frontier(v)).collect())
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    fn mask(&self) -> Vec<bool> {
        let mut mask = vec![false; self.graph.n()];
        for &v in &self.members {
            mask[v] = true;
        }
        mask
    }
}

fn check_margin(graph: &Graph, row: &[u32], r: u32) -> Result<(), CheegerError> {
    if let Some(margin) = graph.frontier().iter().map(|&f| row[f]).min() {
        if margin <= r {
            return Err(CheegerError::RadiusExceedsMargin { radius: r, margin });
        }
    }
    Ok(())
}

/// Exterior vertex boundary `∂A = {v ∉ A : d(v, A) = 1}`, sorted.
pub fn boundary_of(graph: &Graph, set: &[usize]) -> Result<Vec<usize>, CheegerError> {
    if set.is_empty() {
        return Err(CheegerError::EmptySet);
    }
    let n = graph.n();
    if let Some(&v) = set.iter().find(|&&v| v >= n) {
        return Err(CheegerError::VertexOutOfRange { vertex: v, n });
    }
    let mut in_set = vec![false; n];
    for &v in set {
        in_set[v] = true;
    }
    let mut boundary = vec![false; n];
    for &v in set {
        for &w in graph.neighbors(v) {
            boundary[w] |= !in_set[w];
        }
    }
    Ok((0..n).filter(|&v| boundary[v]).collect())
}

/// A set `A` together with its boundary and ratio.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheegerWitness {
    /// Sorted.
    pub set: Vec<usize>,
    /// Sorted exterior boundary in the ambient graph.
    pub boundary: Vec<usize>,
    /// `|∂A| / |A|`.
    pub ratio: Rational,
    /// Exact optimum over the searched window (otherwise an upper bound on h).
    pub exact: bool,
}

impl CheegerWitness {
    fn from_set(graph: &Graph, set: Vec<usize>, exact: bool) -> Self {
        let boundary = boundary_of(graph, &set).expect("candidate sets are nonempty");
        let ratio = Rational::new(boundary.len() as u64, set.len() as u64);
        CheegerWitness { set, boundary, ratio, exact }
    }

    /// Checks the stored boundary and ratio against the ambient graph.
    pub fn is_consistent(&self, graph: &Graph) -> bool {
        match boundary_of(graph, &self.set) {
            Ok(b) => {
                b == self.boundary
                    && self.ratio == Rational::new(b.len() as u64, self.set.len() as u64)
            }
            Err(_) => false,
        }
    }
}

/// Ratio `b/a` ordering by cross-multiplication.
#[inline]
fn cmp_ratio(b1: u64, a1: u64, b2: u64, a2: u64) -> Ordering {
    (u128::from(b1) * u128::from(a2)).cmp(&(u128::from(b2) * u128::from(a1)))
}

/// Lexicographic order of the sorted vertex lists encoded by two masks over a
/// sorted window (bit `i` ↔ `i`-th smallest member).
fn cmp_mask_lex(a: u64, b: u64) -> Ordering {
    let diff = a ^ b;
    if diff == 0 {
        return Ordering::Equal;
    }
    let low = diff.trailing_zeros();
    let above = |m: u64| low < 63 && (m >> (low + 1)) != 0;
    if a & (1 << low) != 0 {
        // a has the first differing element; b is smaller only if it ends there
        if above(b) {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    } else if above(a) {
        Ordering::Greater
    } else {
        Ordering::Less
    }
}

fn binomial_sum(m: usize, cap: usize) -> u64 {
    let mut total: u128 = 0;
    let mut c: u128 = 1;
    for k in 1..=cap.min(m) {
        c = c * (m - k + 1) as u128 / k as u128;
        total += c;
        if total > u128::from(u64::MAX) {
            return u64::MAX;
        }
    }
    total as u64
}

/// Exact minimizer of `|∂A|/|A|` over nonempty `A ⊆ W` with `|A| ≤ size_cap`.
///
/// Ties go to the lexicographically smallest sorted `A`. Windows of up to
/// [`EXACT_WINDOW_LIMIT`] vertices are walked in Gray-code order with
/// incremental boundary counts; larger windows are accepted only when the
/// number of subsets within the size cap fits [`EXACT_SUBSET_BUDGET`].
pub fn cheeger_exact_window(
    window: &Window<'_>,
    size_cap: usize,
) -> Result<CheegerWitness, CheegerError> {
    let m = window.len();
    let size_cap = size_cap.clamp(1, m);
    if m <= EXACT_WINDOW_LIMIT {
        return Ok(gray_code_search(window, size_cap));
    }
    if binomial_sum(m, size_cap) > EXACT_SUBSET_BUDGET {
        return Err(CheegerError::WindowTooLarge { size: m, size_cap });
    }
    Ok(combination_search(window, size_cap))
}

fn gray_code_search(window: &Window<'_>, size_cap: usize) -> CheegerWitness {
    let graph = window.graph;
    let members = window.members();
    let m = members.len();

    // local indices: window members first, then the rest of the closed
    // neighbourhood
    let mut local = alloc::collections::BTreeMap::new();
    for (i, &v) in members.iter().enumerate() {
        local.insert(v, i);
    }
    let mut adjacency: Vec<Vec<usize>> = Vec::with_capacity(m);
    for &v in members {
        let mut list = Vec::with_capacity(graph.degree(v));
        for &w in graph.neighbors(v) {
            let next = local.len();
            list.push(*local.entry(w).or_insert(next));
        }
        adjacency.push(list);
    }
    let universe = local.len();
    let mut count = vec![0u32; universe];
    let mut in_set = vec![false; universe];
    let mut boundary = 0u64;
    let mut size = 0u64;
    let mut mask = 0u64;
    let mut best: Option<(u64, u64, u64)> = None; // (|∂A|, |A|, mask)

    for step in 1u64..(1u64 << m) {
        let bit = step.trailing_zeros() as usize;
        mask ^= 1 << bit;
        if in_set[bit] {
            in_set[bit] = false;
            size -= 1;
            for &u in &adjacency[bit] {
                count[u] -= 1;
                if count[u] == 0 && !in_set[u] {
                    boundary -= 1;
                }
            }
            if count[bit] > 0 {
                boundary += 1;
            }
        } else {
            in_set[bit] = true;
            size += 1;
            if count[bit] > 0 {
                boundary -= 1;
            }
            for &u in &adjacency[bit] {
                count[u] += 1;
                if count[u] == 1 && !in_set[u] {
                    boundary += 1;
                }
            }
        }
        if size as usize > size_cap {
            continue;
        }
        let better = match best {
            None => true,
            Some((bb, ba, bm)) => match cmp_ratio(boundary, size, bb, ba) {
                Ordering::Less => true,
                Ordering::Equal => cmp_mask_lex(mask, bm) == Ordering::Less,
                Ordering::Greater => false,
            },
        };
        if better {
            best = Some((boundary, size, mask));
        }
    }
    let (_, _, mask) = best.expect("window is nonempty");
    let set = (0..m).filter(|&i| mask & (1 << i) != 0).map(|i| members[i]).collect();
    CheegerWitness::from_set(graph, set, true)
}

fn combination_search(window: &Window<'_>, size_cap: usize) -> CheegerWitness {
    let graph = window.graph;
    let members = window.members();
    let m = members.len();
    let mut stamp = vec![0u64; graph.n()];
    let mut in_set = vec![0u64; graph.n()];
    let mut epoch = 0u64;
    let mut best: Option<(u64, u64, Vec<usize>)> = None;

    for k in 1..=size_cap {
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            epoch += 1;
            for &i in &idx {
                in_set[members[i]] = epoch;
            }
            let mut boundary = 0u64;
            for &i in &idx {
                for &w in graph.neighbors(members[i]) {
                    if in_set[w] != epoch && stamp[w] != epoch {
                        stamp[w] = epoch;
                        boundary += 1;
                    }
                }
            }
            let size = k as u64;
            let better = match &best {
                None => true,
                Some((bb, ba, set)) => match cmp_ratio(boundary, size, *bb, *ba) {
                    Ordering::Less => true,
                    Ordering::Equal => idx.iter().map(|&i| members[i]).lt(set.iter().copied()),
                    Ordering::Greater => false,
                },
            };
            if better {
                best = Some((boundary, size, idx.iter().map(|&i| members[i]).collect()));
            }
            // next combination in lexicographic order
            let mut pos = k;
            while pos > 0 && idx[pos - 1] == m - k + pos - 1 {
                pos -= 1;
            }
            if pos == 0 {
                break;
            }
            idx[pos - 1] += 1;
            for j in pos..k {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    let (_, _, set) = best.expect("window is nonempty");
    CheegerWitness::from_set(graph, set, true)
}

/// Candidate sets for certified upper bounds on h.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CandidateFamily {
    /// Closed balls `B(c, k)` for `k ≤ max_radius`, around the given centres or
    /// around every region vertex.
    Balls { max_radius: u32, centers: Option<Vec<usize>> },
    /// Vertex sets of the lexicographically first geodesic between each pair
    /// of region vertices.
    Segments,
    /// Pendant paths: from each leaf, the longest run through degree-2
    /// vertices that stays inside the region (the teeth of a comb).
    Pendant,
}

/// Best (smallest-ratio, then lexicographically smallest) witness over the
/// given families; always flagged as an upper bound.
///
/// Candidates must lie inside `region`, which defaults to every non-frontier
/// vertex.
pub fn cheeger_upper_bounds(
    graph: &Graph,
    families: &[CandidateFamily],
    region: Option<&Window<'_>>,
) -> Result<CheegerWitness, CheegerError> {
    let owned;
    let region = match region {
        Some(r) => r,
        None => {
            owned = Window::interior(graph)?;
            &owned
        }
    };
    let mask = region.mask();
    let mut search = UpperBoundSearch::new(graph);
    for family in families {
        match family {
            CandidateFamily::Balls { max_radius, centers } => {
                let all;
                let centers = match centers {
                    Some(c) => c.as_slice(),
                    None => {
                        all = region.members().to_vec();
                        &all
                    }
                };
                for &c in centers.iter().filter(|&&c| c < graph.n() && mask[c]) {
                    search.balls(c, *max_radius, &mask);
                }
            }
            CandidateFamily::Segments => search.segments(region.members(), &mask),
            CandidateFamily::Pendant => search.pendant(&mask),
        }
    }
    let set = match search.best {
        Some((_, _, set)) => set,
        // every family offers at least the singleton of a region vertex
        None => alloc::vec![region.members()[0]],
    };
    Ok(CheegerWitness::from_set(graph, set, false))
}

struct UpperBoundSearch<'g> {
    graph: &'g Graph,
    best: Option<(u64, u64, Vec<usize>)>,
    stamp: Vec<u64>,
    in_set: Vec<u64>,
    epoch: u64,
}

impl<'g> UpperBoundSearch<'g> {
    fn new(graph: &'g Graph) -> Self {
        UpperBoundSearch {
            graph,
            best: None,
            stamp: vec![0; graph.n()],
            in_set: vec![0; graph.n()],
            epoch: 0,
        }
    }

    fn boundary_size(&mut self, set: &[usize]) -> u64 {
        self.epoch += 1;
        let epoch = self.epoch;
        for &v in set {
            self.in_set[v] = epoch;
        }
        let mut count = 0;
        for &v in set {
            for &w in self.graph.neighbors(v) {
                if self.in_set[w] != epoch && self.stamp[w] != epoch {
                    self.stamp[w] = epoch;
                    count += 1;
                }
            }
        }
        count
    }

    fn offer(&mut self, boundary: u64, mut set: Vec<usize>) {
        let size = set.len() as u64;
        let better = match &self.best {
            None => true,
            Some((bb, ba, best)) => match cmp_ratio(boundary, size, *bb, *ba) {
                Ordering::Less => true,
                Ordering::Equal => {
                    set.sort_unstable();
                    set < *best
                }
                Ordering::Greater => false,
            },
        };
        if better {
            set.sort_unstable();
            self.best = Some((boundary, size, set));
        }
    }

    fn balls(&mut self, center: usize, max_radius: u32, region: &[bool]) {
        // breadth-first layers; the boundary of B(c, k) is exactly layer k + 1
        self.epoch += 1;
        let epoch = self.epoch;
        self.stamp[center] = epoch;
        let mut layer = alloc::vec![center];
        let mut ball: Vec<usize> = Vec::new();
        for _ in 0..=max_radius {
            if layer.iter().any(|&v| !region[v]) {
                return;
            }
            ball.extend_from_slice(&layer);
            let mut next = Vec::new();
            for &v in &layer {
                for &w in self.graph.neighbors(v) {
                    if self.stamp[w] != epoch {
                        self.stamp[w] = epoch;
                        next.push(w);
                    }
                }
            }
            self.offer(next.len() as u64, ball.clone());
            if next.is_empty() {
                return;
            }
            layer = next;
        }
    }

    fn segments(&mut self, members: &[usize], region: &[bool]) {
        for (i, &w) in members.iter().enumerate() {
            let to_w = bfs(self.graph, w);
            for &u in &members[..i] {
                let mut path = alloc::vec![u];
                let mut cur = u;
                let mut inside = true;
                while cur != w {
                    let want = to_w[cur] - 1;
                    cur = *self
                        .graph
                        .neighbors(cur)
                        .iter()
                        .find(|&&x| to_w[x] == want)
                        .expect("geodesic step exists");
                    if !region[cur] {
                        inside = false;
                        break;
                    }
                    path.push(cur);
                }
                if inside {
                    let b = self.boundary_size(&path);
                    self.offer(b, path);
                }
            }
        }
    }

    fn pendant(&mut self, region: &[bool]) {
        let graph = self.graph;
        for leaf in (0..graph.n()).filter(|&v| graph.degree(v) == 1 && region[v]) {
            let mut run = alloc::vec![leaf];
            let mut prev = leaf;
            let mut cur = graph.neighbors(leaf)[0];
            while graph.degree(cur) == 2 && region[cur] {
                run.push(cur);
                let next = graph.neighbors(cur).iter().copied().find(|&x| x != prev);
                prev = cur;
                match next {
                    Some(x) => cur = x,
                    None => break,
                }
            }
            if graph.degree(cur) == 1 && region[cur] && cur != leaf && !run.contains(&cur) {
                // the whole graph is a path
                run.push(cur);
            }
            let b = self.boundary_size(&run);
            self.offer(b, run);
        }
    }
}

/// How each window of a profile is searched.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ProfileMethod {
    /// Exact when the window has at most [`EXACT_WINDOW_LIMIT`] vertices,
    /// candidate-family upper bounds otherwise.
    #[default]
    Auto,
    Exact,
    UpperBound,
}

/// Windows up to this size also try every pairwise geodesic segment.
pub const SEGMENT_WINDOW_LIMIT: usize = 200;
/// Windows up to this size try balls around every member; larger windows only
/// around the profile centre.
pub const ALL_CENTERS_WINDOW_LIMIT: usize = 600;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProfilePoint {
    pub radius: u32,
    pub window_size: usize,
    pub witness: CheegerWitness,
}

/// Best Cheeger witness inside each ball `B(v, r)` for increasing `r`.
pub fn cheeger_profile(
    graph: &Graph,
    v: usize,
    radii: &[u32],
    method: ProfileMethod,
) -> Result<Vec<ProfilePoint>, CheegerError> {
    if radii.windows(2).any(|w| w[0] >= w[1]) {
        return Err(CheegerError::RadiiNotIncreasing);
    }
    if v >= graph.n() {
        return Err(CheegerError::VertexOutOfRange { vertex: v, n: graph.n() });
    }
    let row = bfs(graph, v);
    if let Some(&r) = radii.last() {
        check_margin(graph, &row, r)?;
    }
    let mut out = Vec::with_capacity(radii.len());
    for &r in radii {
        let window = Window::new(graph, (0..graph.n()).filter(|&w| row[w] <= r).collect())?;
        let exact = match method {
            ProfileMethod::Exact => true,
            ProfileMethod::UpperBound => false,
            ProfileMethod::Auto => window.len() <= EXACT_WINDOW_LIMIT,
        };
        let witness = if exact {
            cheeger_exact_window(&window, window.len())?
        } else {
            cheeger_upper_bounds(graph, &window_families(&window, v, r), Some(&window))?
        };
        out.push(ProfilePoint { radius: r, window_size: window.len(), witness });
    }
    Ok(out)
}

fn window_families(window: &Window<'_>, v: usize, r: u32) -> Vec<CandidateFamily> {
    let centers = if window.len() <= ALL_CENTERS_WINDOW_LIMIT {
        None
    } else {
        Some(alloc::vec![v])
    };
    let mut families = alloc::vec![
        CandidateFamily::Balls { max_radius: r, centers },
        CandidateFamily::Pendant,
    ];
    if window.len() <= SEGMENT_WINDOW_LIMIT {
        families.push(CandidateFamily::Segments);
    }
    families
}

/// Empirical trend of a Cheeger profile.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Trend {
    BoundedBelow,
    Decaying,
}

/// A profile decaying like `r^{-p}` with `p` at or above this is classified
/// as decaying.
pub const DECAY_EXPONENT_THRESHOLD: f64 = 0.5;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrendReport {
    pub trend: Trend,
    /// Log-log decay exponent between the middle and the last radius.
    pub exponent: f64,
}

/// Classifies `(radius, ratio)` data by the log-log decay exponent
/// `p = −ln(h_last / h_mid) / ln(r_last / r_mid)`, taken between the middle and
/// the last positive radius. `p ≥ 0.5` (or a zero ratio) is decaying.
///
/// This is an empirical label over the available radii, not a proof that the
/// infinite graph has `h > 0`.
pub fn classify_profile(points: &[(u32, Rational)]) -> Result<TrendReport, CheegerError> {
    let positive: Vec<_> = points.iter().filter(|(r, _)| *r > 0).collect();
    if positive.len() < 2 {
        return Err(CheegerError::TooFewPoints);
    }
    let (r_last, h_last) = *positive[positive.len() - 1];
    let (r_mid, h_mid) = *positive[(positive.len() - 1) / 2];
    let to_f64 = |q: Rational| *q.numer() as f64 / *q.denom() as f64;
    let exponent = if *h_last.numer() == 0 {
        f64::INFINITY
    } else {
        -libm::log(to_f64(h_last) / to_f64(h_mid)) / libm::log(f64::from(r_last) / f64::from(r_mid))
    };
    let trend = if exponent >= DECAY_EXPONENT_THRESHOLD {
        Trend::Decaying
    } else {
        Trend::BoundedBelow
    };
    Ok(TrendReport { trend, exponent })
}

/// Exact `h = k − 2` of the infinite `k`-regular tree, when the graph is a
/// truncation of one: acyclic, with every non-frontier vertex of degree `k`.
///
/// A finite vertex set `A` with `c` components in that tree has
/// `|∂A| = (k − 2)|A| + 2c`, so the infimum is `k − 2`.
pub fn regular_tree_cheeger(graph: &Graph) -> Option<Rational> {
    if graph.edge_count() + 1 != graph.n() {
        return None;
    }
    let mut interior = (0..graph.n()).filter(|&v| !graph.is_frontier(v));
    let k = graph.degree(interior.next()?);
    if k < 2 || interior.any(|v| graph.degree(v) != k) {
        return None;
    }
    Some(Rational::from_integer(k as u64 - 2))
}

/// BFS layer sizes from `v` up to `max_depth`, used by callers that only need
/// ball volumes and sphere sizes.
pub fn layer_sizes(graph: &Graph, v: usize, max_depth: u32) -> Vec<usize> {
    let mut sizes = alloc::vec![0usize; max_depth as usize + 1];
    let mut depth = vec![u32::MAX; graph.n()];
    let mut queue = VecDeque::new();
    depth[v] = 0;
    queue.push_back(v);
    while let Some(u) = queue.pop_front() {
        sizes[depth[u] as usize] += 1;
        if depth[u] == max_depth {
            continue;
        }
        for &w in graph.neighbors(u) {
            if depth[w] == u32::MAX {
                depth[w] = depth[u] + 1;
                queue.push_back(w);
            }
        }
    }
    sizes
}
