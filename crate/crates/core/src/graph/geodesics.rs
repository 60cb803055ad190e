// SPDX-License-Identifier: Apache-2.0

use alloc::vec::Vec;

use super::{DistMatrix, Graph};

/// Lattice-like graphs have exponentially many geodesics; enumeration stops here
/// unless the caller asks for more.
pub const DEFAULT_GEODESIC_CAP: usize = 10_000;

/// A shortest path `p₀ … p_L`, stored as its vertex sequence.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Geodesic(pub Vec<usize>);

impl Geodesic {
    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn start(&self) -> usize {
        self.0[0]
    }

    pub fn end(&self) -> usize {
        self.0[self.0.len() - 1]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Geodesics {
    /// In lexicographic order of vertex sequences.
    pub paths: Vec<Geodesic>,
    /// More geodesics exist than were returned.
    pub truncated: bool,
}

/// Enumerates geodesics from `u` to `v` in lexicographic order, stopping after
/// `cap` of them. `cap` is clamped to at least 1.
pub fn geodesics_between(
    graph: &Graph,
    dist: &DistMatrix,
    u: usize,
    v: usize,
    cap: usize,
) -> Geodesics {
    let cap = cap.max(1);
    let target_row = dist.row(v);
    let length = target_row[u] as usize;
    let mut paths = Vec::new();
    let mut truncated = false;

    // Depth-first walk over the shortest-path DAG towards v; neighbour lists are
    // sorted, so paths come out in lexicographic order.
    let mut path = Vec::with_capacity(length + 1);
    let mut cursor: Vec<usize> = Vec::with_capacity(length + 1);
    path.push(u);
    cursor.push(0);
    while let Some(&cur) = path.last() {
        if path.len() == length + 1 {
            if paths.len() == cap {
                truncated = true;
                break;
            }
            paths.push(Geodesic(path.clone()));
            path.pop();
            cursor.pop();
            continue;
        }
        let want = target_row[cur] - 1;
        let neighbors = graph.neighbors(cur);
        let top = cursor.last_mut().expect("cursor tracks path");
        let mut next = None;
        while *top < neighbors.len() {
            let w = neighbors[*top];
            *top += 1;
            if target_row[w] == want {
                next = Some(w);
                break;
            }
        }
        match next {
            Some(w) => {
                path.push(w);
                cursor.push(0);
            }
            None => {
                path.pop();
                cursor.pop();
            }
        }
    }
    Geodesics { paths, truncated }
}
