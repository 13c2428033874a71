//! Finite-size diagnostics for the admissibility conditions of a family.

use alloc::vec::Vec;

use super::{powi, FamilyKind, Motif, MotifFamily};
use crate::error::{Error, Result};

/// Largest edge count accepted by the exhaustive edge-subset scans.
pub const SUBGRAPH_SCAN_EDGE_CAP: usize = 20;

/// Signal score a family must reach for the Chebyshev Type-I bound to be
/// at most 0.01.
pub const SIGNAL_SCORE_TARGET: f64 = 400.0;

/// A subgraph violating a density inequality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgraphWitness {
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
}

/// Pure-data summary of the four admissibility conditions.
#[derive(Debug, Clone, PartialEq)]
pub struct AdmissibilityReport {
    /// Condition 1: every member connected.
    pub connected_ok: bool,
    /// Condition 2 is asymptotic; only `C = max(v, e)` over the family is reported.
    pub size_bound_c: usize,
    /// Condition 3: `Σ ρ^{2e}` at the given `ρ`.
    pub signal_score: f64,
    pub signal_ok: bool,
    /// Smallest `ρ` at which condition 3 passes, if any `ρ ≤ 1` does.
    pub rho_needed: Option<f64>,
    /// Condition 4 surrogate (strict inequality for the special family).
    pub subgraph_ok: bool,
    /// Chebyshev bound `4 / Σ ρ^{2e}` on the Type-I error, capped at 1.
    pub type_one_bound: f64,
}

/// Every nonempty edge subset `M′` of `m` satisfies `d·v(M′) ≥ 2e(M′) + 1`.
/// Returns the first violating subgraph found, or `None` when all pass.
pub fn subgraph_degree_check(m: &Motif, d: usize) -> Result<Option<SubgraphWitness>> {
    scan_subgraphs(m, |v, e| d * v > 2 * e)
}

/// Every nonempty edge subset satisfies `2e(M′) ≤ d·v(M′)`.
pub fn subgraph_density_check(m: &Motif, d: usize) -> Result<Option<SubgraphWitness>> {
    scan_subgraphs(m, |v, e| 2 * e <= d * v)
}

fn scan_subgraphs<F>(m: &Motif, ok: F) -> Result<Option<SubgraphWitness>>
where
    F: Fn(usize, usize) -> bool,
{
    let edges = m.edges();
    if edges.len() > SUBGRAPH_SCAN_EDGE_CAP {
        return Err(Error::CapExceeded {
            what: "edge count for subgraph scan",
            value: edges.len() as u64,
            cap: SUBGRAPH_SCAN_EDGE_CAP as u64,
        });
    }
    let masks: Vec<u16> = edges.iter().map(|&(a, b)| (1 << a) | (1 << b)).collect();
    for subset in 1u32..(1u32 << edges.len()) {
        let mut verts: u16 = 0;
        let mut s = subset;
        while s != 0 {
            verts |= masks[s.trailing_zeros() as usize];
            s &= s - 1;
        }
        let v = verts.count_ones() as usize;
        let e = subset.count_ones() as usize;
        if !ok(v, e) {
            let chosen = (0..edges.len())
                .filter(|i| subset >> i & 1 == 1)
                .map(|i| edges[i])
                .collect();
            return Ok(Some(SubgraphWitness {
                vertices: v,
                edges: chosen,
            }));
        }
    }
    Ok(None)
}

/// Evaluates connectivity, signal score and the subgraph condition at
/// finite size. The special family is checked against the strict
/// inequality `d·v(M′) ≥ 2e(M′)+1`; other families against `2e(M′) ≤ d·v(M′)`.
pub fn admissibility_report(fam: &MotifFamily, rho: f64, d: usize) -> Result<AdmissibilityReport> {
    if fam.is_empty() {
        return Err(Error::Empty("motif family"));
    }
    let connected_ok = fam.iter().all(Motif::is_connected);
    let size_bound_c = fam.iter().map(|m| m.v().max(m.e())).max().unwrap_or(0);
    let signal_score = fam.signal_score(rho);
    let strict = matches!(fam.kind(), FamilyKind::Special { .. });
    let mut subgraph_ok = true;
    for m in fam {
        let witness = if strict {
            subgraph_degree_check(m, d)?
        } else {
            subgraph_density_check(m, d)?
        };
        if witness.is_some() {
            subgraph_ok = false;
            break;
        }
    }
    Ok(AdmissibilityReport {
        connected_ok,
        size_bound_c,
        signal_score,
        signal_ok: signal_score >= SIGNAL_SCORE_TARGET,
        rho_needed: rho_for_signal(fam, SIGNAL_SCORE_TARGET),
        subgraph_ok,
        type_one_bound: (4.0 / signal_score).min(1.0),
    })
}

/// Bisection for the smallest `ρ ∈ (0, 1]` with `Σ ρ^{2e} ≥ target`;
/// the score is increasing in `ρ`.
fn rho_for_signal(fam: &MotifFamily, target: f64) -> Option<f64> {
    let score = |r: f64| -> f64 { fam.iter().map(|m| powi(r, 2 * m.e())).sum() };
    if score(1.0) < target {
        return None;
    }
    let (mut lo, mut hi) = (0.0, 1.0);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if score(mid) >= target {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Some(hi)
}
