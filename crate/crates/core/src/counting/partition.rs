use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::motif::SmallGraph;

/// A set partition of `{0..v-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetPartition {
    /// `block_of[a]` is the index of the block containing `a`; blocks are
    /// numbered in order of their smallest element.
    block_of: Vec<usize>,
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    /// Builds from a restricted growth string.
    pub fn from_block_of(block_of: Vec<usize>) -> Self {
        let count = block_of.iter().map(|&b| b + 1).max().unwrap_or(0);
        let mut blocks = alloc::vec![Vec::new(); count];
        for (a, &b) in block_of.iter().enumerate() {
            blocks[b].push(a);
        }
        SetPartition { block_of, blocks }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_of(&self, a: usize) -> usize {
        self.block_of[a]
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Möbius function `μ(0̂, P) = Π_B (−1)^{|B|−1} (|B|−1)!` of the
    /// partition lattice.
    pub fn moebius(&self) -> i64 {
        self.blocks
            .iter()
            .map(|b| {
                let k = b.len() as i64;
                let fact: i64 = (1..k).product();
                if k % 2 == 1 {
                    fact
                } else {
                    -fact
                }
            })
            .product()
    }
}

/// Every set partition of `{0..v-1}`, in restricted-growth order.
pub fn all_partitions(v: usize) -> Vec<SetPartition> {
    let mut out = Vec::new();
    let mut rgs = alloc::vec![0usize; v];
    grow(&mut rgs, 0, 0, &|_, _, _| true, &mut out);
    out
}

/// Partitions of `V(g)` whose blocks contain no edge of `g`. Any other
/// partition produces a looped quotient, which has zero homomorphism
/// number on a zero-diagonal weight table.
pub fn independent_partitions(g: &SmallGraph) -> Vec<SetPartition> {
    let mut out = Vec::new();
    let mut rgs = alloc::vec![0usize; g.v()];
    let allowed = |rgs: &[usize], a: usize, block: usize| {
        (0..a).all(|b| rgs[b] != block || !g.has_edge(a, b))
    };
    grow(&mut rgs, 0, 0, &allowed, &mut out);
    out
}

fn grow<F>(rgs: &mut [usize], a: usize, used: usize, allowed: &F, out: &mut Vec<SetPartition>)
where
    F: Fn(&[usize], usize, usize) -> bool,
{
    if a == rgs.len() {
        out.push(SetPartition::from_block_of(rgs.to_vec()));
        return;
    }
    for block in 0..=used {
        if !allowed(rgs, a, block) {
            continue;
        }
        rgs[a] = block;
        grow(rgs, a + 1, used.max(block + 1), allowed, out);
    }
}

/// A motif with the vertices of each block merged. Parallel edges are
/// recorded as multiplicities; an edge inside a block marks a loop.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientMultigraph {
    pub v: usize,
    pub edge_mults: BTreeMap<(usize, usize), u32>,
    pub has_loop: bool,
}

impl QuotientMultigraph {
    pub fn new(g: &SmallGraph, partition: &SetPartition) -> Self {
        let mut edge_mults = BTreeMap::new();
        let mut has_loop = false;
        for (a, b) in g.edges() {
            let (x, y) = (partition.block_of(a), partition.block_of(b));
            if x == y {
                has_loop = true;
                continue;
            }
            *edge_mults.entry((x.min(y), x.max(y))).or_insert(0) += 1;
        }
        QuotientMultigraph {
            v: partition.block_count(),
            edge_mults,
            has_loop,
        }
    }

    /// A loopless multigraph from explicit edges and multiplicities.
    pub fn from_edges(v: usize, edges: &[((usize, usize), u32)]) -> Self {
        let mut edge_mults = BTreeMap::new();
        let mut has_loop = false;
        for &((a, b), m) in edges {
            if a == b {
                has_loop = true;
            } else {
                *edge_mults.entry((a.min(b), a.max(b))).or_insert(0) += m;
            }
        }
        QuotientMultigraph {
            v,
            edge_mults,
            has_loop,
        }
    }
}
