// SPDX-License-Identifier: Apache-2.0

//! Graph, cloud and report file formats.

use std::io::Write;
use std::path::Path;

use coarse_core::graph::Graph;
use coarse_core::nets::{NetResult, PointCloud, SpaceKind};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

/// `{n, edges, labels?, frontier?}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub frontier: Option<Vec<usize>>,
}

impl GraphJson {
    pub fn from_graph(g: &Graph) -> Self {
        GraphJson {
            n: g.n(),
            edges: g.edges().map(|(u, v)| [u, v]).collect(),
            labels: g.labels().map(<[String]>::to_vec),
            frontier: (!g.frontier().is_empty()).then(|| g.frontier().to_vec()),
        }
    }

    pub fn to_graph(&self) -> Result<Graph> {
        let edges: Vec<(usize, usize)> = self.edges.iter().map(|e| (e[0], e[1])).collect();
        let mut g = Graph::from_edges(self.n, &edges)?;
        if let Some(labels) = &self.labels {
            g = g.with_labels(labels.clone())?;
        }
        if let Some(frontier) = &self.frontier {
            g = g.with_frontier(frontier.clone())?;
        }
        Ok(g)
    }
}

/// Edge list: one `u v` (or `u,v`) pair per line. `#` starts a comment;
/// the directives `# n <count>` and `# frontier <v> <v> ...` set the vertex
/// count (for isolated trailing vertices) and the frontier.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut frontier: Vec<usize> = Vec::new();
    let mut edges = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if let Some(comment) = line.strip_prefix('#') {
            let mut words = comment.split_whitespace();
            match words.next() {
                Some("n") => {
                    let value = words.next().and_then(|w| w.parse().ok());
                    n = Some(value.ok_or_else(|| {
                        CliError::parse(format!("line {}: bad vertex count", lineno + 1))
                    })?);
                }
                Some("frontier") => {
                    for w in words {
                        frontier.push(w.parse().map_err(|_| {
                            CliError::parse(format!("line {}: bad frontier vertex '{w}'", lineno + 1))
                        })?);
                    }
                }
                _ => {}
            }
            continue;
        }
        let body = line.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let fields: Vec<&str> = body
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .collect();
        let parsed: Vec<usize> = fields.iter().filter_map(|f| f.parse().ok()).collect();
        if fields.len() != 2 || parsed.len() != 2 {
            return Err(CliError::parse(format!(
                "line {}: expected two vertex indices, got '{body}'",
                lineno + 1
            )));
        }
        edges.push((parsed[0], parsed[1]));
    }
    let n = n.unwrap_or_else(|| edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0));
    Ok(Graph::from_edges(n, &edges)?.with_frontier(frontier)?)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("# n {}\n", g.n());
    if !g.frontier().is_empty() {
        let list: Vec<String> = g.frontier().iter().map(usize::to_string).collect();
        out.push_str(&format!("# frontier {}\n", list.join(" ")));
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Reads a graph; `.json` files use [`GraphJson`], anything else the edge list.
pub fn read_graph(path: &Path) -> Result<Graph> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::new("io", "E_IO", format!("{}: {e}", path.display())))?;
    if path.extension().is_some_and(|e| e == "json") {
        serde_json::from_str::<GraphJson>(&text)?.to_graph()
    } else {
        parse_edge_list(&text)
    }
}

/// Cloud CSV: `# kind: <euclidean|poincare>` and `# radius: <R>` comment
/// lines, then an `x,y` header and one point per row.
pub fn write_cloud(cloud: &PointCloud) -> Result<String> {
    let mut out = format!("# kind: {}\n# radius: {}\n", cloud.kind(), cloud.radius());
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["x", "y"])?;
    for p in cloud.points() {
        w.write_record([p[0].to_string(), p[1].to_string()])?;
    }
    out.push_str(&into_string(w)?);
    Ok(out)
}

pub fn parse_cloud(text: &str) -> Result<PointCloud> {
    let mut kind = None;
    let mut radius = None;
    let mut body = String::new();
    for line in text.lines() {
        match line.trim().strip_prefix('#') {
            Some(comment) => {
                if let Some((key, value)) = comment.split_once(':') {
                    match key.trim() {
                        "kind" => kind = Some(value.trim().parse::<SpaceKind>()?),
                        "radius" => {
                            radius = Some(value.trim().parse::<f64>().map_err(|_| {
                                CliError::parse(format!("bad cloud radius '{}'", value.trim()))
                            })?)
                        }
                        _ => {}
                    }
                }
            }
            None => {
                body.push_str(line);
                body.push('\n');
            }
        }
    }
    let kind = kind.ok_or_else(|| CliError::parse("cloud file lacks a '# kind:' line"))?;
    let mut points = Vec::new();
    for record in csv::Reader::from_reader(body.as_bytes()).deserialize::<(f64, f64)>() {
        let (x, y) = record?;
        points.push([x, y]);
    }
    let cloud = PointCloud::new(kind, points)?;
    Ok(match radius {
        Some(r) => cloud.with_radius(r)?,
        None => cloud,
    })
}

pub fn read_cloud(path: &Path) -> Result<PointCloud> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::new("io", "E_IO", format!("{}: {e}", path.display())))?;
    parse_cloud(&text)
}

/// `vertex,cloud_index,x,y` for each net vertex.
pub fn write_net_mapping(cloud: &PointCloud, net: &NetResult) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["vertex", "cloud_index", "x", "y"])?;
    for (k, &i) in net.selected.iter().enumerate() {
        let p = cloud.point(i);
        w.write_record([k.to_string(), i.to_string(), p[0].to_string(), p[1].to_string()])?;
    }
    into_string(w)
}

/// Serializes rows with a header through the csv writer.
pub fn csv_table<R: Serialize>(rows: &[R]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.serialize(row)?;
    }
    into_string(w)
}

fn into_string(w: csv::Writer<Vec<u8>>) -> Result<String> {
    let bytes = w.into_inner().map_err(|e| CliError::new("io", "E_IO", e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::parse(e.to_string()))
}

pub fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

/// Writes through a temporary file in the target directory and renames it
/// into place, so readers never see a partial file.
pub fn write_atomic(path: &Path, contents: &[u8]) -> Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    std::fs::create_dir_all(dir)?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(contents)?;
    tmp.flush()?;
    tmp.persist(path).map_err(|e| CliError::from(e.error))?;
    Ok(())
}
