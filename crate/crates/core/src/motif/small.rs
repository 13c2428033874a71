use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Hard cap on motif size; adjacency rows are `u16` bitmasks and
/// canonical keys fit in 66 bits.
pub const MAX_MOTIF_VERTICES: usize = 12;

/// A small simple graph stored as adjacency bitmasks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SmallGraph {
    v: usize,
    adj: [u16; MAX_MOTIF_VERTICES],
}

impl SmallGraph {
    /// Edgeless graph on `v` vertices.
    pub fn new(v: usize) -> Result<Self> {
        if v > MAX_MOTIF_VERTICES {
            return Err(Error::CapExceeded {
                what: "motif vertex count",
                value: v as u64,
                cap: MAX_MOTIF_VERTICES as u64,
            });
        }
        Ok(SmallGraph {
            v,
            adj: [0; MAX_MOTIF_VERTICES],
        })
    }

    pub fn from_edges(v: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = SmallGraph::new(v)?;
        for &(a, b) in edges {
            if a >= v || b >= v {
                return Err(Error::InvalidGraph(format!("edge {a}-{b} outside 0..{v}")));
            }
            if a == b {
                return Err(Error::InvalidGraph(format!("self-loop at {a}")));
            }
            if g.has_edge(a, b) {
                return Err(Error::InvalidGraph(format!("duplicate edge {a}-{b}")));
            }
            g.add_edge(a, b);
        }
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, a: usize, b: usize) {
        self.adj[a] |= 1 << b;
        self.adj[b] |= 1 << a;
    }

    /// Copy with one more isolated vertex; `None` at the size cap.
    pub(crate) fn with_extra_vertex(&self) -> Option<Self> {
        (self.v < MAX_MOTIF_VERTICES).then(|| SmallGraph {
            v: self.v + 1,
            adj: self.adj,
        })
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn e(&self) -> usize {
        self.adj[..self.v].iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a] >> b & 1 == 1
    }

    #[inline]
    pub fn row(&self, a: usize) -> u16 {
        self.adj[a]
    }

    pub fn degree(&self, a: usize) -> usize {
        self.adj[a].count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        (0..self.v).map(|a| self.degree(a)).max().unwrap_or(0)
    }

    /// Edges `(a, b)` with `a < b` in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.v {
            for b in (a + 1)..self.v {
                if self.has_edge(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        if self.v == 0 {
            return true;
        }
        let all: u16 = ((1u32 << self.v) - 1) as u16;
        let mut seen: u16 = 1;
        let mut frontier: u16 = 1;
        while frontier != 0 {
            let mut next = 0;
            let mut f = frontier;
            while f != 0 {
                let a = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[a];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == all
    }

    /// Renames vertex `a` to `perm[a]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let mut out = SmallGraph {
            v: self.v,
            adj: [0; MAX_MOTIF_VERTICES],
        };
        for (a, b) in self.edges() {
            out.add_edge(perm[a], perm[b]);
        }
        out
    }
}
