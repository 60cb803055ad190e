// SPDX-License-Identifier: Apache-2.0

//! Undirected unweighted connected graphs and their hop metric.

mod distance;
mod families;
mod geodesics;

use alloc::collections::VecDeque;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

pub use distance::{apsp, bfs, distances_among, DistMatrix};
pub use families::{gen_family, Family};
pub use geodesics::{geodesics_between, Geodesic, Geodesics, DEFAULT_GEODESIC_CAP};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("graph has no vertices")]
    Empty,
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("graph is disconnected ({components} components)")]
    Disconnected { components: usize },
    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },
    #[error("invalid family: {0}")]
    InvalidFamily(String),
}

impl GraphError {
    pub fn code(&self) -> &'static str {
        match self {
            GraphError::Empty => "E_EMPTY_GRAPH",
            GraphError::VertexOutOfRange { .. } => "E_VERTEX_RANGE",
            GraphError::SelfLoop(_) => "E_SELF_LOOP",
            GraphError::DuplicateEdge(..) => "E_DUPLICATE_EDGE",
            GraphError::Disconnected { .. } => "E_DISCONNECTED",
            GraphError::LabelCount { .. } => "E_LABEL_COUNT",
            GraphError::InvalidFamily(_) => "E_INVALID_FAMILY",
        }
    }
}

/// A connected simple graph on vertices `0..n`.
///
/// The optional frontier lists vertices whose neighbourhood was cut off when
/// the graph was produced as a finite truncation of an infinite graph (the
/// leaves of a tree ball, the border of a grid, ...). Analyses that simulate the
/// infinite graph never put frontier vertices inside a candidate set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
    frontier: Vec<usize>,
}

impl Graph {
    /// Builds and validates a graph; see [`build_graph`].
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for (u, list) in adjacency.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::DuplicateEdge(u.min(w[0]), u.max(w[0])));
            }
        }
        let graph = Graph {
            adjacency,
            labels: None,
            frontier: Vec::new(),
        };
        let components = graph.component_count();
        if components != 1 {
            return Err(GraphError::Disconnected { components });
        }
        Ok(graph)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, GraphError> {
        if labels.len() != self.n() {
            return Err(GraphError::LabelCount {
                expected: self.n(),
                got: labels.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn with_frontier(mut self, mut frontier: Vec<usize>) -> Result<Self, GraphError> {
        frontier.sort_unstable();
        frontier.dedup();
        if let Some(&v) = frontier.last() {
            if v >= self.n() {
                return Err(GraphError::VertexOutOfRange {
                    vertex: v,
                    n: self.n(),
                });
            }
        }
        self.frontier = frontier;
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// μ: the largest vertex degree.
    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    /// Sorted frontier vertices (empty when the graph is the whole space).
    pub fn frontier(&self) -> &[usize] {
        &self.frontier
    }

    pub fn is_frontier(&self, v: usize) -> bool {
        self.frontier.binary_search(&v).is_ok()
    }

    /// Hop distance from `v` to the nearest frontier vertex, if any exist.
    pub fn frontier_distance(&self, v: usize) -> Option<u32> {
        if self.frontier.is_empty() {
            return None;
        }
        let row = bfs(self, v);
        self.frontier.iter().map(|&f| row[f]).min()
    }

    fn component_count(&self) -> usize {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut queue = VecDeque::new();
        let mut components = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            components += 1;
            seen[start] = true;
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adjacency[u] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        components
    }
}

/// Builds a normalized graph from an edge list on `n` vertices.
///
/// Rejects self-loops, duplicate edges and disconnected input.
pub fn build_graph(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
    Graph::from_edges(n, edges)
}
