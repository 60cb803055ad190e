// SPDX-License-Identifier: Apache-2.0

#![allow(dead_code)]

use coarse_core::graph::{build_graph, gen_family, Family, Graph};
use coarse_core::rng::XorShift64Star;

/// Random connected graph: a random recursive tree plus `extra` chords.
pub fn random_connected(n: usize, extra: usize, seed: u64) -> Graph {
    let mut rng = XorShift64Star::new(seed);
    let mut edges = Vec::new();
    let mut present = std::collections::BTreeSet::new();
    for v in 1..n {
        let u = rng.below(v);
        edges.push((u, v));
        present.insert((u, v));
    }
    for _ in 0..extra * 4 {
        if edges.len() >= n - 1 + extra {
            break;
        }
        let (a, b) = (rng.below(n), rng.below(n));
        let (u, v) = (a.min(b), a.max(b));
        if u != v && present.insert((u, v)) {
            edges.push((u, v));
        }
    }
    build_graph(n, &edges).expect("connected by construction")
}

/// Relabels vertices by `perm` (vertex `v` becomes `perm[v]`), frontier included.
pub fn relabel(g: &Graph, perm: &[usize]) -> Graph {
    let edges: Vec<_> = g.edges().map(|(u, v)| (perm[u], perm[v])).collect();
    let frontier = g.frontier().iter().map(|&f| perm[f]).collect();
    build_graph(g.n(), &edges).unwrap().with_frontier(frontier).unwrap()
}

pub fn small_families() -> Vec<Graph> {
    [
        "path:12",
        "cycle:9",
        "tree:3,3",
        "tree:4,2",
        "grid:5,5",
        "ladder:8",
        "comb:8,0.5",
    ]
    .iter()
    .map(|s| gen_family(&s.parse::<Family>().unwrap()).unwrap())
    .collect()
}

/// Floyd–Warshall, independent of the BFS implementation.
pub fn floyd(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.n();
    let inf = u32::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = 0;
    }
    for (u, v) in g.edges() {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = d[i][k] + d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    d
}
