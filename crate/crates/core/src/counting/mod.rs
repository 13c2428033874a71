//! Injective homomorphism numbers `inj(M, w)` on weighted complete graphs.
//!
//! Two independent routes are provided. [`inj_bruteforce`] sums over every
//! injective map directly. [`inj_moebius`] inverts `hom(M) = Σ_P inj(M/P)`
//! over the partition lattice,
//!
//! ```text
//! inj(M, w) = Σ_P μ(0̂, P) · hom(M/P, w),
//! ```
//!
//! evaluating each quotient's `hom` by vertex elimination. Partitions that
//! merge adjacent vertices give looped quotients and are skipped, since the
//! weight diagonal is zero.

mod hom;
mod partition;

use alloc::vec::Vec;

pub use hom::{elimination_order, hom_multigraph, FACTOR_TABLE_CAP};
pub use partition::{all_partitions, independent_partitions, QuotientMultigraph, SetPartition};

use crate::error::{Error, Result};
use crate::model::WeightedCompleteGraph;
use crate::motif::{Motif, SmallGraph};

/// Brute force refuses more than this many injective maps.
pub const BRUTE_FORCE_MAP_CAP: u64 = 1_000_000_000;

/// [`Backend::Auto`] uses brute force only up to this many injective maps.
pub const AUTO_BRUTE_FORCE_LIMIT: u64 = 100_000;

/// Which route computes `inj`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Backend {
    #[default]
    Auto,
    BruteForce,
    Moebius,
}

/// `n (n−1) ⋯ (n−k+1)`, saturating at `u64::MAX`.
pub fn falling_factorial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u64);
    }
    acc
}

/// Sum over injective maps `φ: V(m) → [n]` of `Π_{uv ∈ E(m)} w[φ(u)][φ(v)]`.
pub fn inj_bruteforce(m: &Motif, w: &WeightedCompleteGraph) -> Result<f64> {
    inj_bruteforce_graph(m.graph(), w)
}

pub(crate) fn inj_bruteforce_graph(g: &SmallGraph, w: &WeightedCompleteGraph) -> Result<f64> {
    let maps = falling_factorial(w.n(), g.v());
    if maps > BRUTE_FORCE_MAP_CAP {
        return Err(Error::CapExceeded {
            what: "injective maps for brute force (use the Moebius backend)",
            value: maps,
            cap: BRUTE_FORCE_MAP_CAP,
        });
    }
    if maps == 0 {
        return Ok(0.0);
    }
    // Place vertices so that each one after the first has an earlier
    // neighbor when the motif is connected.
    let order = placement_order(g);
    let back: Vec<Vec<usize>> = order
        .iter()
        .enumerate()
        .map(|(i, &a)| (0..i).filter(|&j| g.has_edge(a, order[j])).collect())
        .collect();
    let mut image = alloc::vec![0usize; g.v()];
    let mut used = alloc::vec![false; w.n()];
    Ok(brute_rec(w, &back, 0, &mut image, &mut used))
}

fn brute_rec(
    w: &WeightedCompleteGraph,
    back: &[Vec<usize>],
    depth: usize,
    image: &mut [usize],
    used: &mut [bool],
) -> f64 {
    if depth == back.len() {
        return 1.0;
    }
    let mut total = 0.0;
    for x in 0..w.n() {
        if used[x] {
            continue;
        }
        let mut weight = 1.0;
        for &j in &back[depth] {
            weight *= w.weight(x, image[j]);
        }
        if weight == 0.0 {
            continue;
        }
        image[depth] = x;
        used[x] = true;
        total += weight * brute_rec(w, back, depth + 1, image, used);
        used[x] = false;
    }
    total
}

fn placement_order(g: &SmallGraph) -> Vec<usize> {
    let v = g.v();
    let mut order = Vec::with_capacity(v);
    let mut placed = alloc::vec![false; v];
    while order.len() < v {
        // Prefer the unplaced vertex with the most placed neighbors.
        let next = (0..v)
            .filter(|&a| !placed[a])
            .max_by_key(|&a| {
                let links = order.iter().filter(|&&b| g.has_edge(a, b)).count();
                (links, g.degree(a), usize::MAX - a)
            })
            .expect("unplaced vertex");
        placed[next] = true;
        order.push(next);
    }
    order
}

/// Precomputed Möbius expansion of one motif: the surviving partitions with
/// their coefficients, quotients and elimination orders. Reusable across
/// weight tables.
#[derive(Debug, Clone)]
pub struct MotifCounter {
    v: usize,
    terms: Vec<Term>,
    width: usize,
}

#[derive(Debug, Clone)]
struct Term {
    coefficient: i64,
    quotient: QuotientMultigraph,
    order: Vec<usize>,
}

impl MotifCounter {
    pub fn new(m: &Motif) -> Self {
        Self::from_graph(m.graph())
    }

    pub(crate) fn from_graph(g: &SmallGraph) -> Self {
        let mut terms = Vec::new();
        let mut width = 0;
        for p in independent_partitions(g) {
            let quotient = QuotientMultigraph::new(g, &p);
            let (order, w) = elimination_order(&quotient);
            width = width.max(w);
            terms.push(Term {
                coefficient: p.moebius(),
                quotient,
                order,
            });
        }
        MotifCounter { v: g.v(), terms, width }
    }

    /// Number of loop-free partitions in the expansion.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Largest elimination width over all quotients; a term costs about
    /// `n^{width+1}`.
    pub fn width(&self) -> usize {
        self.width
    }

    pub fn inj(&self, w: &WeightedCompleteGraph) -> Result<f64> {
        // No injective maps exist; the expansion would only cancel to rounding noise.
        if w.n() < self.v {
            return Ok(0.0);
        }
        let mut sum = NeumaierSum::default();
        for t in &self.terms {
            let h = hom::hom_with_order(&t.quotient, w, &t.order)?;
            sum.add(t.coefficient as f64 * h);
        }
        Ok(sum.total())
    }
}

/// `inj(m, w)` through the partition-lattice inversion.
pub fn inj_moebius(m: &Motif, w: &WeightedCompleteGraph) -> Result<f64> {
    MotifCounter::new(m).inj(w)
}

/// `inj(m, w)` by the chosen backend. [`Backend::Auto`] uses brute force
/// for tiny instances and the Möbius route otherwise; both give the same
/// value up to rounding.
pub fn inj(m: &Motif, w: &WeightedCompleteGraph, backend: Backend) -> Result<f64> {
    match backend {
        Backend::BruteForce => inj_bruteforce(m, w),
        Backend::Moebius => inj_moebius(m, w),
        Backend::Auto => {
            if falling_factorial(w.n(), m.v()) <= AUTO_BRUTE_FORCE_LIMIT {
                inj_bruteforce(m, w)
            } else {
                inj_moebius(m, w)
            }
        }
    }
}

/// Compensated summation.
#[derive(Debug, Default, Clone, Copy)]
pub(crate) struct NeumaierSum {
    sum: f64,
    compensation: f64,
}

impl NeumaierSum {
    pub(crate) fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if libm::fabs(self.sum) >= libm::fabs(x) {
            self.compensation += (self.sum - t) + x;
        } else {
            self.compensation += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub(crate) fn total(&self) -> f64 {
        self.sum + self.compensation
    }
}
