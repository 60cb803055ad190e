// SPDX-License-Identifier: Apache-2.0

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use super::Graph;

/// Hop distances from `source` to every vertex.
pub fn bfs(graph: &Graph, source: usize) -> Vec<u32> {
    let mut dist = vec![u32::MAX; graph.n()];
    let mut queue = VecDeque::with_capacity(graph.n());
    dist[source] = 0;
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        let next = dist[u] + 1;
        for &w in graph.neighbors(u) {
            if dist[w] == u32::MAX {
                dist[w] = next;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Exact all-pairs hop distances, one breadth-first search per source.
pub fn apsp(graph: &Graph) -> DistMatrix {
    let n = graph.n();
    let mut data = Vec::with_capacity(n * n);
    for source in 0..n {
        data.extend_from_slice(&bfs(graph, source));
    }
    DistMatrix { n, data }
}

/// Ambient hop distances among `vertices` only (in the given order), one
/// breadth-first search per listed vertex; avoids the full matrix on large
/// graphs.
pub fn distances_among(graph: &Graph, vertices: &[usize]) -> DistMatrix {
    let m = vertices.len();
    let mut data = Vec::with_capacity(m * m);
    for &u in vertices {
        let row = bfs(graph, u);
        data.extend(vertices.iter().map(|&v| row[v]));
    }
    DistMatrix { n: m, data }
}

/// Dense `n × n` matrix of hop distances.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistMatrix {
    n: usize,
    data: Vec<u32>,
}

impl DistMatrix {
    /// Wraps a row-major matrix without checking the metric axioms; see
    /// [`DistMatrix::check_metric`].
    pub fn from_rows(n: usize, data: Vec<u32>) -> Option<Self> {
        (data.len() == n * n).then_some(DistMatrix { n, data })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.data[u * self.n + v]
    }

    #[inline]
    pub fn row(&self, u: usize) -> &[u32] {
        &self.data[u * self.n..(u + 1) * self.n]
    }

    pub fn eccentricity(&self, v: usize) -> u32 {
        self.row(v).iter().copied().max().unwrap_or(0)
    }

    pub fn diameter(&self) -> u32 {
        self.data.iter().copied().max().unwrap_or(0)
    }

    /// Closed ball `{w : d(v, w) ≤ k}`, sorted.
    pub fn ball(&self, v: usize, k: u32) -> Vec<usize> {
        (0..self.n).filter(|&w| self.get(v, w) <= k).collect()
    }

    /// Sphere `S(v, k) = {w : d(v, w) = k}`, sorted.
    pub fn sphere(&self, v: usize, k: u32) -> Vec<usize> {
        (0..self.n).filter(|&w| self.get(v, w) == k).collect()
    }

    /// The ambient metric restricted to `vertices` (in the given order).
    pub fn restrict(&self, vertices: &[usize]) -> DistMatrix {
        let m = vertices.len();
        let mut data = Vec::with_capacity(m * m);
        for &u in vertices {
            let row = self.row(u);
            data.extend(vertices.iter().map(|&v| row[v]));
        }
        DistMatrix { n: m, data }
    }

    /// Checks symmetry, identity of indiscernibles and the triangle
    /// inequality; returns the first violating triple `(u, v, w)`.
    pub fn check_metric(&self) -> Result<(), (usize, usize, usize)> {
        let n = self.n;
        for u in 0..n {
            for v in 0..n {
                let d = self.get(u, v);
                if d != self.get(v, u) || ((d == 0) != (u == v)) {
                    return Err((u, v, v));
                }
            }
        }
        for u in 0..n {
            for v in 0..n {
                let duv = self.get(u, v);
                for w in 0..n {
                    if self.get(u, w) > duv + self.get(v, w) {
                        return Err((u, v, w));
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_graph;

    #[test]
    fn path_and_cycle_distances() {
        let p3 = build_graph(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(apsp(&p3).get(0, 2), 2);

        let c5 = build_graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let d = apsp(&c5);
        assert_eq!(d.get(0, 3), 2);
        assert_eq!(d.diameter(), 2);
        assert!(d.check_metric().is_ok());
    }

    #[test]
    fn balls_spheres_restrict() {
        let p = build_graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let d = apsp(&p);
        assert_eq!(d.ball(2, 1), [1, 2, 3]);
        assert_eq!(d.sphere(2, 2), [0, 4]);
        let sub = d.restrict(&[0, 4]);
        assert_eq!(sub.get(0, 1), 4);
        assert_eq!(distances_among(&p, &[0, 4]), sub);
        assert_eq!(d.eccentricity(0), 4);
    }

    #[test]
    fn broken_metric_detected() {
        let m = DistMatrix::from_rows(3, vec![0, 1, 5, 1, 0, 1, 5, 1, 0]).unwrap();
        assert!(m.check_metric().is_err());
    }
}
