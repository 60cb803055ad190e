// SPDX-License-Identifier: Apache-2.0

//! Deterministic generators for the control families.
//!
//! Each generated graph is read as a finite truncation of an infinite model and
//! carries its frontier: path ↔ ℤ (both ends), tree ↔ the k-regular tree
//! (the leaves), grid ↔ ℤ² (the border), ladder ↔ ℕ × {0, 1} (the last rung),
//! comb ↔ the comb over ℕ (the far spine end). Cycles are finite and have no
//! frontier.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq)]
pub enum Family {
    /// `n` edges on vertices `0..=n`.
    Path(usize),
    /// `n ≥ 3` vertices.
    Cycle(usize),
    /// Ball of radius `depth` around a vertex of the `arity`-regular tree.
    Tree { arity: usize, depth: usize },
    /// `rows × cols` lattice, vertex `r * cols + c`.
    Grid { rows: usize, cols: usize },
    /// Two rails of `n` vertices joined by rungs; rail 0 is `0..n`, rail 1 is `n..2n`.
    Ladder(usize),
    /// Spine `0..=n` with a pendant path of length `⌊slope · i⌋` at spine vertex `i`.
    Comb { spine: usize, slope: f64 },
}

fn invalid(msg: impl Into<String>) -> GraphError {
    GraphError::InvalidFamily(msg.into())
}

/// Generates the labelled graph (with frontier) for a family.
pub fn gen_family(family: &Family) -> Result<Graph, GraphError> {
    match *family {
        Family::Path(n) => path(n),
        Family::Cycle(n) => cycle(n),
        Family::Tree { arity, depth } => tree(arity, depth),
        Family::Grid { rows, cols } => grid(rows, cols),
        Family::Ladder(n) => ladder(n),
        Family::Comb { spine, slope } => comb(spine, slope),
    }
}

fn numbered(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

fn path(n: usize) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(invalid("path length must be positive"));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, i + 1)).collect();
    Graph::from_edges(n + 1, &edges)?
        .with_labels(numbered(n + 1))?
        .with_frontier(alloc::vec![0, n])
}

fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(invalid("cycle needs at least 3 vertices"));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges)?.with_labels(numbered(n))
}

fn tree(arity: usize, depth: usize) -> Result<Graph, GraphError> {
    if arity < 2 || depth == 0 {
        return Err(invalid("tree needs arity >= 2 and depth >= 1"));
    }
    let mut labels = alloc::vec![String::from("r")];
    let mut edges = Vec::new();
    let mut level = alloc::vec![0usize];
    for d in 0..depth {
        let children = if d == 0 { arity } else { arity - 1 };
        let mut next = Vec::with_capacity(level.len() * children);
        for &parent in &level {
            for c in 0..children {
                let id = labels.len();
                labels.push(format!("{}.{}", labels[parent], c));
                edges.push((parent, id));
                next.push(id);
            }
        }
        level = next;
    }
    Graph::from_edges(labels.len(), &edges)?
        .with_labels(labels)?
        .with_frontier(level)
}

fn grid(rows: usize, cols: usize) -> Result<Graph, GraphError> {
    if rows == 0 || cols == 0 {
        return Err(invalid("grid sides must be positive"));
    }
    let id = |r: usize, c: usize| r * cols + c;
    let mut edges = Vec::new();
    let mut labels = Vec::with_capacity(rows * cols);
    let mut frontier = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            labels.push(format!("{r},{c}"));
            if r == 0 || c == 0 || r + 1 == rows || c + 1 == cols {
                frontier.push(id(r, c));
            }
            if c + 1 < cols {
                edges.push((id(r, c), id(r, c + 1)));
            }
            if r + 1 < rows {
                edges.push((id(r, c), id(r + 1, c)));
            }
        }
    }
    Graph::from_edges(rows * cols, &edges)?
        .with_labels(labels)?
        .with_frontier(frontier)
}

fn ladder(n: usize) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(invalid("ladder needs at least one rung"));
    }
    let mut edges = Vec::new();
    for i in 0..n {
        edges.push((i, n + i));
        if i + 1 < n {
            edges.push((i, i + 1));
            edges.push((n + i, n + i + 1));
        }
    }
    let labels = (0..2 * n)
        .map(|v| format!("{},{}", v % n, v / n))
        .collect();
    Graph::from_edges(2 * n, &edges)?
        .with_labels(labels)?
        .with_frontier(alloc::vec![n - 1, 2 * n - 1])
}

/// Tooth length at spine vertex `i`.
pub(crate) fn tooth_length(slope: f64, i: usize) -> usize {
    libm::floor(slope * i as f64) as usize
}

fn comb(spine: usize, slope: f64) -> Result<Graph, GraphError> {
    if spine == 0 || !slope.is_finite() || slope < 0.0 {
        return Err(invalid("comb needs a positive spine and a finite slope >= 0"));
    }
    let mut labels: Vec<String> = (0..=spine).map(|i| format!("s{i}")).collect();
    let mut edges: Vec<_> = (0..spine).map(|i| (i, i + 1)).collect();
    for i in 0..=spine {
        let mut prev = i;
        for j in 1..=tooth_length(slope, i) {
            let id = labels.len();
            labels.push(format!("t{i}.{j}"));
            edges.push((prev, id));
            prev = id;
        }
    }
    Graph::from_edges(labels.len(), &edges)?
        .with_labels(labels)?
        .with_frontier(alloc::vec![spine])
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Path(n) => write!(f, "path:{n}"),
            Family::Cycle(n) => write!(f, "cycle:{n}"),
            Family::Tree { arity, depth } => write!(f, "tree:{arity},{depth}"),
            Family::Grid { rows, cols } => write!(f, "grid:{rows},{cols}"),
            Family::Ladder(n) => write!(f, "ladder:{n}"),
            Family::Comb { spine, slope } => write!(f, "comb:{spine},{slope}"),
        }
    }
}

/// Parses `name:args`, e.g. `tree:3,5`, `grid:4,4`, `comb:40,0.5`, `path:60`.
/// Parentheses are accepted in place of the colon: `tree(3,5)`.
impl FromStr for Family {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let (name, args) = match s.find([':', '(']) {
            Some(i) => (&s[..i], s[i + 1..].trim_end_matches(')')),
            None => return Err(invalid(format!("missing arguments in '{s}'"))),
        };
        let parts: Vec<&str> = args.split(',').map(str::trim).collect();
        let int = |i: usize| -> Result<usize, GraphError> {
            parts
                .get(i)
                .and_then(|p| p.parse().ok())
                .ok_or_else(|| invalid(format!("bad integer argument {i} in '{s}'")))
        };
        let arity = |k: usize| -> Result<(), GraphError> {
            if parts.len() == k {
                Ok(())
            } else {
                Err(invalid(format!("'{name}' takes {k} argument(s)")))
            }
        };
        match name {
            "path" => arity(1).and(int(0)).map(Family::Path),
            "cycle" => arity(1).and(int(0)).map(Family::Cycle),
            "ladder" => arity(1).and(int(0)).map(Family::Ladder),
            "tree" => {
                arity(2)?;
                Ok(Family::Tree { arity: int(0)?, depth: int(1)? })
            }
            "grid" => {
                arity(2)?;
                Ok(Family::Grid { rows: int(0)?, cols: int(1)? })
            }
            "comb" => {
                arity(2)?;
                let slope = parts[1]
                    .parse()
                    .map_err(|_| invalid(format!("bad slope in '{s}'")))?;
                Ok(Family::Comb { spine: int(0)?, slope })
            }
            other => Err(invalid(format!("unknown family '{other}'"))),
        }
    }
}
