// SPDX-License-Identifier: Apache-2.0

//! Poles on finite truncations.
//!
//! Geodesic rays from `v` are approximated by geodesics from `v` to the sphere
//! `S(v, r)`; their union is the ray hull `K_r`. The margin measures how far
//! the inner ball `B(v, r − buffer)` strays from `K_r`. A pole shows up as a
//! margin that stops growing.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{bfs, Graph};
use crate::{HalfInt, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PoleError {
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("sphere of radius {radius} around {base} is empty")]
    EmptySphere { base: usize, radius: u32 },
    #[error("buffer {buffer} exceeds radius {radius}")]
    BufferTooLarge { buffer: u32, radius: u32 },
    #[error("verdict needs at least 3 radii, got {0}")]
    TooFewRadii(usize),
    #[error("radii must be strictly increasing")]
    RadiiNotIncreasing,
    #[error("the bound needs a positive Cheeger constant")]
    NonPositiveCheeger,
    #[error("the bound needs a degree bound μ ≥ 1")]
    InvalidDegree,
    #[error("bound overflows 64-bit rationals")]
    Overflow,
}

impl PoleError {
    pub fn code(&self) -> &'static str {
        match self {
            PoleError::VertexOutOfRange { .. } => "E_VERTEX_RANGE",
            PoleError::EmptySphere { .. } => "E_EMPTY_SPHERE",
            PoleError::BufferTooLarge { .. } => "E_BUFFER",
            PoleError::TooFewRadii(_) => "E_TOO_FEW_RADII",
            PoleError::RadiiNotIncreasing => "E_RADII_ORDER",
            PoleError::NonPositiveCheeger => "E_NONPOSITIVE_H",
            PoleError::InvalidDegree => "E_INVALID_DEGREE",
            PoleError::Overflow => "E_OVERFLOW",
        }
    }
}

/// Vertices on some geodesic from `v` to the sphere `S(v, r)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RayHull {
    pub v: usize,
    pub r: u32,
    /// Sorted hull vertices.
    pub hull: Vec<usize>,
    /// Hop distances from `v`.
    pub depth: Vec<u32>,
}

impl RayHull {
    pub fn contains(&self, w: usize) -> bool {
        self.hull.binary_search(&w).is_ok()
    }
}

/// Hull by a backward sweep over the BFS layers of `v`: a vertex at depth
/// `k < r` is on a geodesic to `S(v, r)` iff one of its depth-`k+1`
/// neighbours is.
pub fn ray_hull(graph: &Graph, v: usize, r: u32) -> Result<RayHull, PoleError> {
    if v >= graph.n() {
        return Err(PoleError::VertexOutOfRange { vertex: v, n: graph.n() });
    }
    let depth = bfs(graph, v);
    let mut layers: Vec<Vec<usize>> = vec![Vec::new(); r as usize + 1];
    for (w, &d) in depth.iter().enumerate() {
        if d <= r {
            layers[d as usize].push(w);
        }
    }
    if layers[r as usize].is_empty() {
        return Err(PoleError::EmptySphere { base: v, radius: r });
    }
    let mut in_hull = vec![false; graph.n()];
    for &s in &layers[r as usize] {
        in_hull[s] = true;
    }
    for k in (0..r as usize).rev() {
        for &w in &layers[k] {
            in_hull[w] = graph
                .neighbors(w)
                .iter()
                .any(|&u| in_hull[u] && depth[u] as usize == k + 1);
        }
    }
    let hull = (0..graph.n()).filter(|&w| in_hull[w]).collect();
    Ok(RayHull { v, r, hull, depth })
}

/// `max_{w ∈ B(v, r − buffer)} d(w, K_r)`, distances in the whole graph.
pub fn pole_margin(graph: &Graph, hull: &RayHull, buffer: u32) -> Result<u32, PoleError> {
    if buffer > hull.r {
        return Err(PoleError::BufferTooLarge { buffer, radius: hull.r });
    }
    let mut to_hull = vec![u32::MAX; graph.n()];
    let mut queue: VecDeque<usize> = hull.hull.iter().copied().collect();
    for &k in &hull.hull {
        to_hull[k] = 0;
    }
    while let Some(u) = queue.pop_front() {
        for &w in graph.neighbors(u) {
            if to_hull[w] == u32::MAX {
                to_hull[w] = to_hull[u] + 1;
                queue.push_back(w);
            }
        }
    }
    let inner = hull.r - buffer;
    Ok((0..graph.n())
        .filter(|&w| hull.depth[w] <= inner)
        .map(|w| to_hull[w])
        .max()
        .unwrap_or(0))
}

/// Default buffer `⌊r/4⌋`.
pub fn default_buffer(r: u32) -> u32 {
    r / 4
}

/// `(r, margin(r))` for each radius, with a fixed buffer or the default.
pub fn pole_series(
    graph: &Graph,
    v: usize,
    radii: &[u32],
    buffer: Option<u32>,
) -> Result<Vec<(u32, u32)>, PoleError> {
    if radii.windows(2).any(|w| w[0] >= w[1]) {
        return Err(PoleError::RadiiNotIncreasing);
    }
    radii
        .iter()
        .map(|&r| {
            let hull = ray_hull(graph, v, r)?;
            let margin = pole_margin(graph, &hull, buffer.unwrap_or_else(|| default_buffer(r)))?;
            Ok((r, margin))
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PoleVerdict {
    pub pole_like: bool,
    /// The stabilized margin, when pole-like.
    pub m_estimate: Option<u32>,
    /// Margin growth per unit radius between the first and last radius.
    pub slope: f64,
}

/// Pole-like iff the last three margins are equal.
pub fn pole_verdict(series: &[(u32, u32)]) -> Result<PoleVerdict, PoleError> {
    if series.len() < 3 {
        return Err(PoleError::TooFewRadii(series.len()));
    }
    if series.windows(2).any(|w| w[0].0 >= w[1].0) {
        return Err(PoleError::RadiiNotIncreasing);
    }
    let tail = &series[series.len() - 3..];
    let pole_like = tail.iter().all(|&(_, m)| m == tail[0].1);
    let (r0, m0) = series[0];
    let (r1, m1) = series[series.len() - 1];
    let slope = (f64::from(m1) - f64::from(m0)) / f64::from(r1 - r0);
    Ok(PoleVerdict {
        pole_like,
        m_estimate: pole_like.then_some(tail[0].1),
        slope,
    })
}

/// `M = ⌊δ_th⌋ + h⁻¹ μ^⌊δ_th⌋` with its inputs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TheoremBound {
    pub delta_th: HalfInt,
    pub h: Rational,
    pub mu: u64,
    pub m_bound: Rational,
}

impl TheoremBound {
    pub fn recomputes(&self) -> bool {
        theorem_bound(self.delta_th, self.h, self.mu).map(|b| b.m_bound) == Ok(self.m_bound)
    }
}

pub fn theorem_bound(delta_th: HalfInt, h: Rational, mu: u64) -> Result<TheoremBound, PoleError> {
    if *h.numer() == 0 {
        return Err(PoleError::NonPositiveCheeger);
    }
    if mu == 0 {
        return Err(PoleError::InvalidDegree);
    }
    let k = delta_th.floor();
    let power = u128::from(mu).checked_pow(k).ok_or(PoleError::Overflow)?;
    // k + den·μ^k / num over the common denominator num
    let (num, den) = (u128::from(*h.numer()), u128::from(*h.denom()));
    let top = u128::from(k)
        .checked_mul(num)
        .and_then(|a| den.checked_mul(power).and_then(|b| a.checked_add(b)))
        .ok_or(PoleError::Overflow)?;
    let g = gcd(top, num);
    let (top, bottom) = (top / g, num / g);
    let m_bound = Rational::new(
        u64::try_from(top).map_err(|_| PoleError::Overflow)?,
        u64::try_from(bottom).map_err(|_| PoleError::Overflow)?,
    );
    Ok(TheoremBound { delta_th, h, mu, m_bound })
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.max(1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::gen_family;

    fn family(s: &str) -> Graph {
        gen_family(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn tree_hull_is_whole_ball() {
        let g = family("tree:3,5");
        let hull = ray_hull(&g, 0, 5).unwrap();
        assert_eq!(hull.hull.len(), g.n());
        for r in 2..=5 {
            let h = ray_hull(&g, 0, r).unwrap();
            assert_eq!(pole_margin(&g, &h, r / 4).unwrap(), 0);
        }
    }

    #[test]
    fn path_from_end() {
        let g = family("path:12");
        let hull = ray_hull(&g, 0, 12).unwrap();
        assert_eq!(hull.hull, (0..13).collect::<Vec<_>>());
        assert_eq!(
            ray_hull(&g, 0, 13).unwrap_err(),
            PoleError::EmptySphere { base: 0, radius: 13 }
        );
    }

    #[test]
    fn comb_teeth_outside_hull() {
        let g = family("comb:40,0.5");
        let r = 12;
        let hull = ray_hull(&g, 0, r).unwrap();
        for i in 0..=40usize {
            let len = i / 2;
            // first tooth vertex at spine i
            let tooth: Vec<usize> = (0..g.n())
                .filter(|&w| g.label(w).is_some_and(|l| l.starts_with(&alloc::format!("t{i}."))))
                .collect();
            assert_eq!(tooth.len(), len);
            let reaches = i + len >= r as usize && i < r as usize;
            assert_eq!(tooth.iter().any(|&w| hull.contains(w)), reaches, "tooth {i}");
        }
        let series = pole_series(&g, 0, &[12, 16, 20, 24], None).unwrap();
        assert_eq!(series, [(12, 3), (16, 4), (20, 5), (24, 6)]);
        let verdict = pole_verdict(&series).unwrap();
        assert!(!verdict.pole_like && verdict.m_estimate.is_none());
        assert!((verdict.slope - 0.25).abs() < 1e-12);
    }

    #[test]
    fn ladder_from_corner() {
        let g = family("ladder:40");
        let series = pole_series(&g, 0, &[8, 12, 16, 20], None).unwrap();
        assert!(series.iter().all(|&(_, m)| m <= 1));
        assert!(pole_verdict(&series).unwrap().pole_like);
    }

    #[test]
    fn verdict_rules() {
        let v = pole_verdict(&[(1, 0), (2, 0), (3, 0), (4, 0)]).unwrap();
        assert_eq!((v.pole_like, v.m_estimate), (true, Some(0)));
        let v = pole_verdict(&[(4, 1), (5, 1), (6, 1)]).unwrap();
        assert_eq!(v.m_estimate, Some(1));
        assert_eq!(pole_verdict(&[(1, 0), (2, 0)]).unwrap_err(), PoleError::TooFewRadii(2));
    }

    #[test]
    fn bound_arithmetic() {
        let b = theorem_bound(HalfInt::ZERO, Rational::new(1, 1), 3).unwrap();
        assert_eq!(b.m_bound, Rational::new(1, 1));
        let b = theorem_bound(HalfInt::ZERO, Rational::new(1, 2), 2).unwrap();
        assert_eq!(b.m_bound, Rational::new(2, 1));
        let b = theorem_bound(HalfInt::from_doubled(5), Rational::new(2, 3), 3).unwrap();
        // ⌊5/2⌋ = 2: 2 + (3/2)·9
        assert_eq!(b.m_bound, Rational::new(31, 2));
        assert!(b.recomputes());
        assert_eq!(
            theorem_bound(HalfInt::ZERO, Rational::new(0, 1), 3).unwrap_err(),
            PoleError::NonPositiveCheeger
        );
        assert_eq!(
            theorem_bound(HalfInt::from_int(200), Rational::new(1, 1), 3).unwrap_err(),
            PoleError::Overflow
        );
    }
}
