// SPDX-License-Identifier: Apache-2.0

//! Finite-depth stand-in for the boundary at infinity: the sphere `S(o, r)`,
//! its Gromov products, the visual metric `a^{−(ξ|ξ′)_o}` and a scan for the
//! smallest uniform-perfectness constant.

use alloc::vec::Vec;

use crate::graph::DistMatrix;
use crate::hyperbolicity::{gromov_table, GromovTable};

/// Default visual parameter.
pub const DEFAULT_VISUAL_A: f64 = 2.0;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum BoundaryError {
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("sphere of radius {radius} around {base} is empty")]
    EmptySphere { base: usize, radius: u32 },
    #[error("visual parameter must satisfy a > 1 (got {0})")]
    InvalidParameter(f64),
    #[error("ε₀ must be positive (got {0})")]
    InvalidEpsilon0(f64),
    #[error("distance matrix has no points")]
    NoPoints,
}

impl BoundaryError {
    pub fn code(&self) -> &'static str {
        match self {
            BoundaryError::VertexOutOfRange { .. } => "E_VERTEX_RANGE",
            BoundaryError::EmptySphere { .. } => "E_EMPTY_SPHERE",
            BoundaryError::InvalidParameter(_) => "E_VISUAL_PARAMETER",
            BoundaryError::InvalidEpsilon0(_) => "E_EPSILON0",
            BoundaryError::NoPoints => "E_NO_POINTS",
        }
    }
}

/// Representatives of boundary points at depth `r`: the sphere `S(o, r)`,
/// sorted by index.
pub fn boundary_points(dist: &DistMatrix, o: usize, r: u32) -> Result<Vec<usize>, BoundaryError> {
    if o >= dist.n() {
        return Err(BoundaryError::VertexOutOfRange { vertex: o, n: dist.n() });
    }
    let sphere = dist.sphere(o, r);
    if sphere.is_empty() {
        return Err(BoundaryError::EmptySphere { base: o, radius: r });
    }
    Ok(sphere)
}

/// Symmetric matrix of boundary distances.
#[derive(Debug, Clone, PartialEq)]
pub struct VisualMatrix {
    n: usize,
    data: Vec<f64>,
}

impl VisualMatrix {
    /// Row-major values; `None` unless the matrix is square.
    pub fn from_rows(n: usize, data: Vec<f64>) -> Option<Self> {
        (data.len() == n * n).then_some(VisualMatrix { n, data })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    /// Every entry multiplied by `factor`.
    pub fn scaled(&self, factor: f64) -> VisualMatrix {
        VisualMatrix {
            n: self.n,
            data: self.data.iter().map(|v| v * factor).collect(),
        }
    }
}

/// `d_a(ξ, ξ′) = a^{−(ξ|ξ′)_o}` off the diagonal, `0` on it.
pub fn visual_metric(table: &GromovTable, a: f64) -> Result<VisualMatrix, BoundaryError> {
    if !(a > 1.0 && a.is_finite()) {
        return Err(BoundaryError::InvalidParameter(a));
    }
    let n = table.n();
    let mut data = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            data.push(if i == j {
                0.0
            } else {
                libm::pow(a, -table.get(i, j).as_f64())
            });
        }
    }
    Ok(VisualMatrix { n, data })
}

/// The depth-`r` boundary seen from `o`.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundaryApprox {
    pub base: usize,
    pub depth: u32,
    pub representatives: Vec<usize>,
    /// Gromov products among the representatives, in their order.
    pub products: GromovTable,
    pub a: f64,
    pub visual: VisualMatrix,
    /// `a^{−r}`: the value `(ξ|ξ)_o = r` would give on the diagonal.
    pub depth_scale: f64,
}

pub fn boundary_approx(
    dist: &DistMatrix,
    o: usize,
    r: u32,
    a: f64,
) -> Result<BoundaryApprox, BoundaryError> {
    let representatives = boundary_points(dist, o, r)?;
    let products = gromov_table(dist, o).restrict(&representatives);
    let visual = visual_metric(&products, a)?;
    Ok(BoundaryApprox {
        base: o,
        depth: r,
        representatives,
        products,
        a,
        visual,
        depth_scale: libm::pow(a, -f64::from(r)),
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct PerfectnessReport {
    /// `S*(x)` per point; `f64::INFINITY` when no finite constant works.
    pub per_point: Vec<f64>,
    /// Maximum of `per_point`.
    pub s_star: f64,
    /// Smallest positive off-diagonal distance.
    pub resolution: f64,
    pub epsilon0: f64,
    /// Finite `S*` on a space with at least two points.
    pub uniformly_perfect: bool,
    /// Fewer than two points.
    pub degenerate: bool,
}

/// Smallest `S` such that for every point `x` and every `ε` with
/// `resolution · S < ε ≤ ε₀` some `y` has `ε/S < d(x, y) ≤ ε` (as an
/// infimum: at the reported value the left inequality may hold with equality).
///
/// For a point whose distinct distances up to `ε₀` are `v₁ < … < v_k`, the
/// constraint is the largest of the gaps `v_{i+1}/v_i`, the top gap `ε₀/v_k`
/// and the bottom gap `v₁/resolution`. A point with fewer than two distinct
/// distances has no finite constant: one scale cannot serve every ε.
/// `ε₀` defaults to the largest off-diagonal distance.
pub fn uniform_perfectness_scan(
    matrix: &VisualMatrix,
    epsilon0: Option<f64>,
) -> Result<PerfectnessReport, BoundaryError> {
    let n = matrix.n();
    if n == 0 {
        return Err(BoundaryError::NoPoints);
    }
    let off_diagonal = || {
        (0..n).flat_map(move |i| (0..n).filter(move |&j| j != i).map(move |j| matrix.get(i, j)))
    };
    let resolution = off_diagonal().filter(|&v| v > 0.0).fold(f64::INFINITY, f64::min);
    let eps0 = match epsilon0 {
        Some(e) if e.is_nan() || e <= 0.0 => return Err(BoundaryError::InvalidEpsilon0(e)),
        Some(e) => e,
        None => off_diagonal().fold(0.0, f64::max),
    };
    if n < 2 {
        return Ok(PerfectnessReport {
            per_point: alloc::vec![f64::INFINITY],
            s_star: f64::INFINITY,
            resolution,
            epsilon0: eps0,
            uniformly_perfect: false,
            degenerate: true,
        });
    }

    let mut per_point = Vec::with_capacity(n);
    let mut values = Vec::with_capacity(n);
    for i in 0..n {
        values.clear();
        values.extend(
            matrix
                .row(i)
                .iter()
                .enumerate()
                .filter(|&(j, &v)| j != i && v > 0.0 && v <= eps0)
                .map(|(_, &v)| v),
        );
        values.sort_unstable_by(f64::total_cmp);
        values.dedup();
        let s = if values.len() < 2 {
            f64::INFINITY
        } else {
            let gaps = values.windows(2).map(|w| w[1] / w[0]).fold(1.0, f64::max);
            gaps.max(eps0 / values[values.len() - 1]).max(values[0] / resolution)
        };
        per_point.push(s);
    }
    let s_star = per_point.iter().copied().fold(1.0, f64::max);
    Ok(PerfectnessReport {
        per_point,
        s_star,
        resolution,
        epsilon0: eps0,
        uniformly_perfect: s_star.is_finite(),
        degenerate: false,
    })
}
