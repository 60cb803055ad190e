// SPDX-License-Identifier: Apache-2.0

//! Gromov products, the sharp four-point constant δ and lower bounds on the
//! thin-triangle constant δ_th, all on the vertex set with the hop metric.
//!
//! Vertex values can differ from the values on the full metric graph (edge
//! interiors included) by a bounded additive amount; only vertex values are
//! reported.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{geodesics_between, DistMatrix, Geodesic, Graph};
use crate::rng::XorShift64Star;
use crate::HalfInt;

/// Up to this many vertices δ is computed by the exhaustive quadruple scan.
pub const FULL_SCAN_LIMIT: usize = 400;

/// Gromov products `(x|y)_o` for a fixed base point, stored doubled.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GromovTable {
    base: usize,
    n: usize,
    doubled: Vec<u32>,
}

impl GromovTable {
    pub fn base(&self) -> usize {
        self.base
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, x: usize, y: usize) -> HalfInt {
        HalfInt::from_doubled(self.doubled[x * self.n + y])
    }

    #[inline]
    fn row(&self, x: usize) -> &[u32] {
        &self.doubled[x * self.n..(x + 1) * self.n]
    }

    /// Products among `points` only, in the given order.
    pub fn restrict(&self, points: &[usize]) -> GromovTable {
        let mut doubled = Vec::with_capacity(points.len() * points.len());
        for &x in points {
            let row = self.row(x);
            doubled.extend(points.iter().map(|&y| row[y]));
        }
        GromovTable {
            base: self.base,
            n: points.len(),
            doubled,
        }
    }
}

/// `(x|y)_o = ½(d(x,o) + d(y,o) − d(x,y))` for all pairs.
///
/// # Panics
/// If `o` is not a vertex.
pub fn gromov_table(dist: &DistMatrix, o: usize) -> GromovTable {
    assert!(o < dist.n(), "base point {o} out of range");
    let n = dist.n();
    let base_row = dist.row(o);
    let mut doubled = Vec::with_capacity(n * n);
    for x in 0..n {
        let row = dist.row(x);
        let dxo = base_row[x];
        doubled.extend((0..n).map(|y| dxo + base_row[y] - row[y]));
    }
    GromovTable { base: o, n, doubled }
}

/// A quadruple attaining the reported δ value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaWitness {
    /// `min{(x|z)_o, (z|y)_o} − (x|y)_o` on the witness; a lower bound on δ.
    pub value: HalfInt,
    /// `[x, y, z, o]`.
    pub witness: [usize; 4],
    /// Proven upper bound on δ (equal to `value` when exact).
    pub upper: HalfInt,
    pub exact: bool,
}

/// Recomputes `min{(x|z)_o, (z|y)_o} − (x|y)_o` (doubled, may be negative).
pub fn quadruple_value(dist: &DistMatrix, [x, y, z, o]: [usize; 4]) -> i64 {
    let product = |a: usize, b: usize| {
        i64::from(dist.get(a, o)) + i64::from(dist.get(b, o)) - i64::from(dist.get(a, b))
    };
    product(x, z).min(product(z, y)) - product(x, y)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DeltaOptions {
    /// Exhaustive scan up to this many vertices, fixed base point above.
    pub full_scan_limit: usize,
    /// Base point for the fixed-base scan.
    pub base: usize,
}

impl Default for DeltaOptions {
    fn default() -> Self {
        DeltaOptions {
            full_scan_limit: FULL_SCAN_LIMIT,
            base: 0,
        }
    }
}

/// Sharp four-point constant δ with the default options.
pub fn delta_four_point(dist: &DistMatrix) -> DeltaWitness {
    delta_four_point_with(dist, DeltaOptions::default())
}

/// Four-point δ.
///
/// The fixed-base value δ_o always runs first. Since δ_o ≤ δ ≤ 2δ_o, a zero
/// there settles δ = 0 at any size. Otherwise graphs up to
/// `full_scan_limit` vertices get the exhaustive scan; larger graphs report
/// δ_o as a lower bound with `upper = 2δ_o`.
///
/// Among maximizing quadruples the lexicographically smallest witness is
/// reported.
///
/// # Panics
/// If the matrix is empty.
pub fn delta_four_point_with(dist: &DistMatrix, opts: DeltaOptions) -> DeltaWitness {
    let n = dist.n();
    assert!(n > 0, "empty distance matrix");
    let base = opts.base.min(n - 1);
    let fixed = delta_fixed_base(dist, base);
    if fixed.value == HalfInt::ZERO {
        return DeltaWitness {
            value: HalfInt::ZERO,
            witness: [0; 4],
            upper: HalfInt::ZERO,
            exact: true,
        };
    }
    if n > opts.full_scan_limit {
        return fixed;
    }
    exhaustive_scan(dist, fixed.value.doubled(), canonical(dist, fixed.witness))
}

/// δ_o for one base point: max over `x, y, z` of
/// `min{(x|z)_o, (z|y)_o} − (x|y)_o`. Reported with `upper = 2δ_o`.
pub fn delta_fixed_base(dist: &DistMatrix, o: usize) -> DeltaWitness {
    let table = gromov_table(dist, o);
    let n = table.n;
    let base_row = dist.row(o);
    let mut best = 0u32;
    let mut witness = [0, 0, 0, o];
    for x in 0..n {
        let gx = table.row(x);
        for y in x + 1..n {
            let gxy = gx[y];
            // (x|z)_o ≤ d(x,o) and (z|y)_o ≤ d(y,o)
            let bound = 2 * base_row[x].min(base_row[y]);
            if bound <= gxy || bound - gxy <= best {
                continue;
            }
            let gy = table.row(y);
            let reach = gx.iter().zip(gy).map(|(&a, &b)| a.min(b)).max().unwrap_or(0);
            if reach > gxy && reach - gxy > best {
                best = reach - gxy;
                let z = (0..n)
                    .find(|&z| gx[z].min(gy[z]) == reach)
                    .expect("maximizer exists");
                witness = [x, y, z, o];
            }
        }
    }
    DeltaWitness {
        value: HalfInt::from_doubled(best),
        witness,
        upper: HalfInt::from_doubled(2 * best),
        exact: best == 0,
    }
}

/// The lexicographically smallest of the eight orderings of a witness that
/// share its value: `x` is the smallest vertex, `y` its partner in the
/// largest pair-sum, `z < o` the remaining pair.
fn canonical(dist: &DistMatrix, w: [usize; 4]) -> [usize; 4] {
    let [x, y, z, o] = w;
    let (p, q) = ((x.min(y), x.max(y)), (z.min(o), z.max(o)));
    let (first, second) = if p.0 <= q.0 { (p, q) } else { (q, p) };
    let c = [first.0, first.1, second.0, second.1];
    debug_assert_eq!(quadruple_value(dist, c), quadruple_value(dist, w));
    c
}

fn exhaustive_scan(dist: &DistMatrix, start: u32, start_witness: [usize; 4]) -> DeltaWitness {
    let n = dist.n();
    let mut best = start;
    let mut witness = start_witness;
    // A quadruple's doubled value (largest minus middle pair-sum) is at most
    // twice each of its six distances, so pairs closer than best/2 are skipped.
    for i in 0..n {
        let ri = dist.row(i);
        for j in i + 1..n {
            let dij = ri[j];
            if 2 * dij < best {
                continue;
            }
            let rj = dist.row(j);
            for k in j + 1..n {
                let (dik, djk) = (ri[k], rj[k]);
                if 2 * dik.min(djk) < best {
                    continue;
                }
                let rk = dist.row(k);
                for l in k + 1..n {
                    let (dil, djl, dkl) = (ri[l], rj[l], rk[l]);
                    let s1 = dij + dkl;
                    let s2 = dik + djl;
                    let s3 = dil + djk;
                    let (largest, middle) = top_two(s1, s2, s3);
                    let v = largest - middle;
                    if v < best || v == 0 {
                        continue;
                    }
                    // the pairing attaining the largest sum becomes (x,y),(z,o)
                    let w = if s1 == largest {
                        [i, j, k, l]
                    } else if s2 == largest {
                        [i, k, j, l]
                    } else {
                        [i, l, j, k]
                    };
                    if v > best || w < witness {
                        best = v;
                        witness = w;
                    }
                }
            }
        }
    }
    DeltaWitness {
        value: HalfInt::from_doubled(best),
        witness,
        upper: HalfInt::from_doubled(best),
        exact: true,
    }
}

#[inline]
fn top_two(a: u32, b: u32, c: u32) -> (u32, u32) {
    let (hi, lo) = if a >= b { (a, b) } else { (b, a) };
    if c >= hi {
        (c, hi)
    } else {
        (hi, lo.max(c))
    }
}

/// Lower bound on δ_th with the triangle realizing it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThinWitness {
    /// Distance from `point` to the union of the two sides not containing it.
    pub value: u32,
    /// True when every triple and every geodesic was examined.
    pub exact: bool,
    pub triangle: [usize; 3],
    /// Sides `[x₁x₂], [x₂x₃], [x₃x₁]` of the realizing geodesic triangle.
    pub sides: [Geodesic; 3],
    pub point: usize,
    /// Index into `sides` of the side carrying `point`.
    pub point_side: usize,
    pub triangles_examined: usize,
}

impl ThinWitness {
    /// Recomputes the distance from the side point to the other two sides.
    pub fn recompute(&self, dist: &DistMatrix) -> u32 {
        point_to_sides(dist, self.point, &self.sides, self.point_side)
    }
}

fn point_to_sides(dist: &DistMatrix, p: usize, sides: &[Geodesic; 3], own: usize) -> u32 {
    let row = dist.row(p);
    (0..3)
        .filter(|&s| s != own)
        .flat_map(|s| sides[s].vertices().iter().map(|&q| row[q]))
        .min()
        .unwrap_or(0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ThinOptions {
    /// Maximum number of vertex triples examined.
    pub triangle_cap: usize,
    /// Maximum number of geodesics enumerated per side.
    pub geodesic_cap: usize,
    /// Graphs this small always get every triple.
    pub all_triples_below: usize,
    pub seed: u64,
}

impl Default for ThinOptions {
    fn default() -> Self {
        ThinOptions {
            triangle_cap: 200_000,
            geodesic_cap: 64,
            all_triples_below: 60,
            seed: 0x7417_0000,
        }
    }
}

/// Lower bound on the thin-triangle constant over a deterministic sample of
/// geodesic triangles; exact when nothing was capped.
///
/// All triples (bigons included) are examined when the graph has at most
/// `all_triples_below` vertices or the number of triples fits the cap;
/// otherwise pairs are drawn stratified by their distance and completed by a
/// pseudo-random third vertex.
///
/// Trees are settled without a scan: geodesics are unique and every geodesic
/// triangle is a tripod, so each side lies in the union of the other two.
pub fn delta_thin(graph: &Graph, dist: &DistMatrix, opts: ThinOptions) -> ThinWitness {
    let n = graph.n();
    if graph.edge_count() + 1 == n {
        return ThinState::new(graph, dist, opts.geodesic_cap).finish(true);
    }
    let triples = n * (n + 1) * (n + 2) / 6;
    let exhaustive = n <= opts.all_triples_below || triples <= opts.triangle_cap;
    let mut state = ThinState::new(graph, dist, opts.geodesic_cap);
    if exhaustive {
        for a in 0..n {
            for b in a..n {
                for c in b..n {
                    state.triangle([a, b, c]);
                }
            }
        }
    } else {
        for t in stratified_triples(dist, opts.triangle_cap, opts.seed) {
            state.triangle(t);
        }
    }
    let exact = exhaustive && !state.geodesics_truncated;
    state.finish(exact)
}

/// Pairs are bucketed by distance with an equal quota per distance value, each
/// completed by a uniformly drawn third vertex; rare distances may underfill.
fn stratified_triples(dist: &DistMatrix, cap: usize, seed: u64) -> Vec<[usize; 3]> {
    let n = dist.n();
    let diam = dist.diameter() as usize;
    let quota = (cap / diam.max(1)).max(1);
    let mut filled = vec![0usize; diam + 1];
    let mut rng = XorShift64Star::new(seed);
    let mut out = Vec::with_capacity(cap);
    let attempts = cap.saturating_mul(8);
    for _ in 0..attempts {
        if out.len() >= cap {
            break;
        }
        let (x, y) = (rng.below(n), rng.below(n));
        let d = dist.get(x, y) as usize;
        if d == 0 || filled[d] >= quota {
            continue;
        }
        filled[d] += 1;
        let z = rng.below(n);
        let mut t = [x, y, z];
        t.sort_unstable();
        out.push(t);
    }
    out
}

/// Value, triangle, sides, point, side index.
type ThinBest = (u32, [usize; 3], [Geodesic; 3], usize, usize);

struct ThinState<'a> {
    graph: &'a Graph,
    dist: &'a DistMatrix,
    geodesic_cap: usize,
    geodesics_truncated: bool,
    best: Option<ThinBest>,
    examined: usize,
}

impl<'a> ThinState<'a> {
    fn new(graph: &'a Graph, dist: &'a DistMatrix, geodesic_cap: usize) -> Self {
        ThinState {
            graph,
            dist,
            geodesic_cap,
            geodesics_truncated: false,
            best: None,
            examined: 0,
        }
    }

    fn best_value(&self) -> u32 {
        self.best.as_ref().map_or(0, |b| b.0)
    }

    fn triangle(&mut self, t: [usize; 3]) {
        self.examined += 1;
        let ends = [(t[0], t[1]), (t[1], t[2]), (t[2], t[0])];
        // a point on a side of length L is within ⌊L/2⌋ of that side's ends,
        // which lie on the other two sides
        let longest = ends.iter().map(|&(a, b)| self.dist.get(a, b)).max().unwrap_or(0);
        if longest / 2 <= self.best_value() {
            return;
        }
        let sides: Vec<Vec<Geodesic>> = ends
            .iter()
            .map(|&(a, b)| {
                let g = geodesics_between(self.graph, self.dist, a, b, self.geodesic_cap);
                self.geodesics_truncated |= g.truncated;
                g.paths
            })
            .collect();
        // For a point p on side s, the worst choice of the other two sides is
        // made independently per side: maximize d(p, side) for each.
        let farthest = |side: usize, p: usize| -> (u32, usize) {
            let row = self.dist.row(p);
            sides[side]
                .iter()
                .enumerate()
                .map(|(gi, g)| (g.vertices().iter().map(|&q| row[q]).min().unwrap_or(0), gi))
                .fold((0, 0), |best, cur| if cur.0 > best.0 { cur } else { best })
        };
        for s in 0..3 {
            let (o1, o2) = ((s + 1) % 3, (s + 2) % 3);
            for g in &sides[s] {
                for &p in g.vertices() {
                    let (d1, g1) = farthest(o1, p);
                    let (d2, g2) = farthest(o2, p);
                    let v = d1.min(d2);
                    if v > self.best_value() {
                        let mut chosen: [Geodesic; 3] = Default::default();
                        chosen[s] = g.clone();
                        chosen[o1] = sides[o1][g1].clone();
                        chosen[o2] = sides[o2][g2].clone();
                        self.best = Some((v, t, chosen, p, s));
                    }
                }
            }
        }
    }

    fn finish(self, exact: bool) -> ThinWitness {
        match self.best {
            Some((value, triangle, sides, point, point_side)) => ThinWitness {
                value,
                exact,
                triangle,
                sides,
                point,
                point_side,
                triangles_examined: self.examined,
            },
            None => ThinWitness {
                value: 0,
                exact,
                triangle: [0; 3],
                sides: [
                    Geodesic(vec![0]),
                    Geodesic(vec![0]),
                    Geodesic(vec![0]),
                ],
                point: 0,
                point_side: 0,
                triangles_examined: self.examined,
            },
        }
    }
}
