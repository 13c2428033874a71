//! Undirected simple graphs on labeled vertices `0..n` and the edge-list
//! text format used to exchange them.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::error::{Error, Result};

/// An undirected simple graph on `n` labeled vertices.
///
/// Neighbor lists are kept sorted so adjacency queries are a binary search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<Vec<u32>>,
    edge_count: usize,
}

impl SimpleGraph {
    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        SimpleGraph {
            n,
            adj: alloc::vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    /// The complete graph on `n` vertices.
    pub fn complete(n: usize) -> Self {
        let adj = (0..n)
            .map(|u| (0..n as u32).filter(|&v| v as usize != u).collect())
            .collect();
        SimpleGraph {
            n,
            adj,
            edge_count: n * n.saturating_sub(1) / 2,
        }
    }

    /// Builds a graph from an edge list, rejecting self-loops, duplicate
    /// edges (in either orientation) and out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = SimpleGraph::empty(n);
        for (u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        g.finish();
        Ok(g)
    }

    /// Builds a graph from edges already known to be valid and distinct.
    /// Used by samplers that generate each pair at most once.
    pub(crate) fn from_unique_edges(n: usize, edges: &[(u32, u32)]) -> Self {
        let mut adj = alloc::vec![Vec::new(); n];
        for &(u, v) in edges {
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        let mut g = SimpleGraph {
            n,
            adj,
            edge_count: edges.len(),
        };
        g.finish();
        g
    }

    fn try_add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::InvalidGraph(format!(
                "edge {u}-{v} has an endpoint outside 0..{}",
                self.n
            )));
        }
        if u == v {
            return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
        }
        if self.adj[u].contains(&(v as u32)) {
            return Err(Error::InvalidGraph(format!("duplicate edge {u}-{v}")));
        }
        self.adj[u].push(v as u32);
        self.adj[v].push(u as u32);
        self.edge_count += 1;
        Ok(())
    }

    fn finish(&mut self) {
        for list in &mut self.adj {
            list.sort_unstable();
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[u].iter().map(|&v| v as usize)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&(v as u32)).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .map(|&v| v as usize)
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    /// Edge density `2|E| / (n(n-1))`; `None` when `n < 2`.
    pub fn density(&self) -> Option<f64> {
        if self.n < 2 {
            return None;
        }
        let pairs = (self.n * (self.n - 1)) as f64 / 2.0;
        Some(self.edge_count as f64 / pairs)
    }

    /// The graph with vertex `u` renamed to `perm[u]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n, "permutation length must equal n");
        let edges: Vec<(u32, u32)> = self
            .edges()
            .map(|(u, v)| (perm[u] as u32, perm[v] as u32))
            .collect();
        SimpleGraph::from_unique_edges(self.n, &edges)
    }

    /// The subgraph induced on `vertices`, with `vertices[i]` becoming vertex `i`.
    pub fn induced(&self, vertices: &[usize]) -> Self {
        let mut index = alloc::vec![u32::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i as u32;
        }
        let mut edges = Vec::new();
        for (i, &v) in vertices.iter().enumerate() {
            for w in self.neighbors(v) {
                let j = index[w];
                if j != u32::MAX && (i as u32) < j {
                    edges.push((i as u32, j));
                }
            }
        }
        SimpleGraph::from_unique_edges(vertices.len(), &edges)
    }

    /// Parses the edge-list text format: one edge per line as two
    /// whitespace-separated 0-based vertex ids, with an optional first
    /// line `n=<count>` declaring the vertex count. Blank lines and lines
    /// starting with `#` are ignored.
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut declared: Option<usize> = None;
        let mut edges: Vec<(usize, usize, usize)> = Vec::new();
        let mut seen_content = false;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(rest) = line.strip_prefix("n=") {
                if seen_content {
                    return Err(parse_err(line_no, "n=<count> must be the first line"));
                }
                let n = rest
                    .trim()
                    .parse::<usize>()
                    .map_err(|_| parse_err(line_no, "n=<count> needs a nonnegative integer"))?;
                declared = Some(n);
                seen_content = true;
                continue;
            }
            seen_content = true;
            let mut fields = line.split_whitespace();
            let (Some(a), Some(b), None) = (fields.next(), fields.next(), fields.next()) else {
                return Err(parse_err(
                    line_no,
                    &format!("expected two vertex ids, got {line:?}"),
                ));
            };
            let u = parse_vertex(a, line_no)?;
            let v = parse_vertex(b, line_no)?;
            edges.push((u, v, line_no));
        }

        let max_id = edges.iter().map(|&(u, v, _)| u.max(v) + 1).max().unwrap_or(0);
        let n = match declared {
            Some(n) if n < max_id => {
                return Err(Error::InvalidGraph(format!(
                    "declared n={n} but vertex id {} appears",
                    max_id - 1
                )))
            }
            Some(n) => n,
            None => max_id,
        };
        let mut g = SimpleGraph::empty(n);
        for (u, v, line_no) in edges {
            g.try_add_edge(u, v).map_err(|e| match e {
                Error::InvalidGraph(msg) => Error::Parse {
                    line: line_no,
                    message: msg,
                },
                other => other,
            })?;
        }
        g.finish();
        Ok(g)
    }

    /// Serializes in the edge-list format, always emitting the `n=` header.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "n={}", self.n);
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }
}

fn parse_err(line: usize, message: &str) -> Error {
    Error::Parse {
        line,
        message: String::from(message),
    }
}

fn parse_vertex(field: &str, line: usize) -> Result<usize> {
    field
        .parse::<usize>()
        .map_err(|_| parse_err(line, &format!("{field:?} is not a vertex id")))
}
