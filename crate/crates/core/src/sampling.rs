//! Vertex selection and overlapping-subgraph pairs for real networks.

use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{check_correlation, Error, Result};
use crate::graph::SimpleGraph;

/// The `k` highest-degree vertices, ties broken by smaller id, as an
/// induced subgraph relabeled in rank order.
pub fn top_k_by_degree(g: &SimpleGraph, k: usize) -> Result<SimpleGraph> {
    if k > g.n() {
        return Err(Error::InsufficientVertices {
            needed: k,
            available: g.n(),
        });
    }
    let mut ids: Vec<usize> = (0..g.n()).collect();
    ids.sort_by(|&a, &b| g.degree(b).cmp(&g.degree(a)).then(a.cmp(&b)));
    ids.truncate(k);
    Ok(g.induced(&ids))
}

/// Two induced subgraphs of `g` on `n` vertices each sharing
/// `⌊overlap · n⌋` vertices when `correlated` is set, or none otherwise.
/// Each subgraph is relabeled to `0..n` by its own random ordering.
pub fn sample_overlap_pair<R: Rng + ?Sized>(
    g: &SimpleGraph,
    n: usize,
    overlap: f64,
    correlated: bool,
    rng: &mut R,
) -> Result<(SimpleGraph, SimpleGraph)> {
    check_correlation(overlap).map_err(|_| Error::Domain {
        name: "overlap",
        value: overlap,
        expected: "[0, 1]",
    })?;
    let shared = if correlated {
        libm::floor(overlap * n as f64 + 1e-9) as usize
    } else {
        0
    };
    let needed = 2 * n - shared;
    if needed > g.n() {
        return Err(Error::InsufficientVertices {
            needed,
            available: g.n(),
        });
    }
    let mut ids: Vec<usize> = (0..g.n()).collect();
    ids.partial_shuffle(rng, needed);
    let common = &ids[..shared];
    let only1 = &ids[shared..n];
    let only2 = &ids[n..needed];
    let mut s1: Vec<usize> = common.iter().chain(only1).copied().collect();
    let mut s2: Vec<usize> = common.iter().chain(only2).copied().collect();
    s1.shuffle(rng);
    s2.shuffle(rng);
    Ok((g.induced(&s1), g.induced(&s2)))
}
