//! Independent and correlated Erdős–Rényi models, centering, and the
//! joint law of an aligned edge pair.
//!
//! Every sampler takes the caller's generator explicitly. The harness uses
//! [`TrialRng`] (ChaCha with 8 rounds) seeded per trial, which makes runs
//! bit-reproducible across platforms and thread counts.

use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{check_correlation, check_probability, Error, Result};
use crate::graph::SimpleGraph;

/// The deterministic generator used throughout the experiment harness.
pub type TrialRng = rand_chacha::ChaCha8Rng;

/// Joint law of `(1{uv ∈ G1}, 1{π(u)π(v) ∈ G2})`: a bivariate Bernoulli with
/// both marginals `Bernoulli(p)` and Pearson correlation `rho`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JointEdgeDistribution {
    pub p: f64,
    pub rho: f64,
    pub p11: f64,
    pub p10: f64,
    pub p01: f64,
    pub p00: f64,
}

impl JointEdgeDistribution {
    pub fn new(p: f64, rho: f64) -> Result<Self> {
        check_probability("p", p)?;
        check_correlation(rho)?;
        let var = p * (1.0 - p);
        let p11 = p * p + rho * var;
        let p10 = var * (1.0 - rho);
        let p00 = (1.0 - p) * (1.0 - p) + rho * var;
        Ok(JointEdgeDistribution {
            p,
            rho,
            p11,
            p10,
            p01: p10,
            p00,
        })
    }

    /// Draws one aligned indicator pair.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> (bool, bool) {
        let r: f64 = rng.gen();
        if r < self.p11 {
            (true, true)
        } else if r < self.p11 + self.p10 {
            (true, false)
        } else if r < self.p11 + self.p10 + self.p01 {
            (false, true)
        } else {
            (false, false)
        }
    }

    /// The four outcomes with their probabilities, as `((x, y), prob)`.
    pub fn outcomes(&self) -> [((f64, f64), f64); 4] {
        [
            ((1.0, 1.0), self.p11),
            ((1.0, 0.0), self.p10),
            ((0.0, 1.0), self.p01),
            ((0.0, 0.0), self.p00),
        ]
    }
}

/// Convenience wrapper for [`JointEdgeDistribution::new`].
pub fn joint_edge_probs(p: f64, rho: f64) -> Result<JointEdgeDistribution> {
    JointEdgeDistribution::new(p, rho)
}

/// Samples `G(n, p)`.
pub fn sample_er<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Result<SimpleGraph> {
    check_probability("p", p)?;
    if n == 0 {
        return Err(Error::Domain {
            name: "n",
            value: 0.0,
            expected: "n >= 1",
        });
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen::<f64>() < p {
                edges.push((u as u32, v as u32));
            }
        }
    }
    Ok(SimpleGraph::from_unique_edges(n, &edges))
}

/// A draw from the correlated Erdős–Rényi model together with its latent
/// alignment. `pi` maps `V(g1)` onto `V(g2)`; the test statistic never reads it.
#[derive(Debug, Clone, PartialEq)]
pub struct CorrelatedPair {
    pub g1: SimpleGraph,
    pub g2: SimpleGraph,
    pub pi: Vec<usize>,
}

/// Samples `G(n, p, rho)`: a uniform latent permutation, then an i.i.d.
/// joint outcome per unordered pair assigned to `uv` in `g1` and `π(u)π(v)`
/// in `g2`.
pub fn sample_correlated_pair<R: Rng + ?Sized>(
    n: usize,
    p: f64,
    rho: f64,
    rng: &mut R,
) -> Result<CorrelatedPair> {
    let joint = JointEdgeDistribution::new(p, rho)?;
    if n == 0 {
        return Err(Error::Domain {
            name: "n",
            value: 0.0,
            expected: "n >= 1",
        });
    }
    let mut pi: Vec<usize> = (0..n).collect();
    pi.shuffle(rng);
    let mut e1 = Vec::new();
    let mut e2 = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            let (a, b) = joint.sample(rng);
            if a {
                e1.push((u as u32, v as u32));
            }
            if b {
                e2.push((pi[u] as u32, pi[v] as u32));
            }
        }
    }
    Ok(CorrelatedPair {
        g1: SimpleGraph::from_unique_edges(n, &e1),
        g2: SimpleGraph::from_unique_edges(n, &e2),
        pi,
    })
}

/// Which density to subtract when centering a graph.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Centering {
    /// Subtract a known edge probability.
    KnownDensity(f64),
    /// Subtract the graph's own edge density `2|E|/(n(n-1))`.
    EmpiricalDensity,
}

/// A complete graph with symmetric real weights and zero diagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedCompleteGraph {
    n: usize,
    w: Vec<f64>,
    phat: Option<f64>,
}

impl WeightedCompleteGraph {
    /// Builds weights from `f(u, v)` evaluated once per pair `u < v`.
    pub fn from_fn<F: FnMut(usize, usize) -> f64>(n: usize, mut f: F) -> Self {
        let mut w = alloc::vec![0.0; n * n];
        for u in 0..n {
            for v in (u + 1)..n {
                let x = f(u, v);
                w[u * n + v] = x;
                w[v * n + u] = x;
            }
        }
        WeightedCompleteGraph { n, w, phat: None }
    }

    /// All off-diagonal weights equal `c`.
    pub fn constant(n: usize, c: f64) -> Self {
        Self::from_fn(n, |_, _| c)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn weight(&self, u: usize, v: usize) -> f64 {
        self.w[u * self.n + v]
    }

    /// Row-major `n × n` weight table.
    pub fn as_slice(&self) -> &[f64] {
        &self.w
    }

    /// The centering density, when built by [`center`].
    pub fn phat(&self) -> Option<f64> {
        self.phat
    }

    /// Every weight multiplied by `alpha`.
    pub fn scaled(&self, alpha: f64) -> Self {
        WeightedCompleteGraph {
            n: self.n,
            w: self.w.iter().map(|x| x * alpha).collect(),
            phat: self.phat,
        }
    }

    /// The weights seen through a vertex renaming `u ↦ perm[u]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        let n = self.n;
        let mut w = alloc::vec![0.0; n * n];
        for u in 0..n {
            for v in 0..n {
                w[perm[u] * n + perm[v]] = self.w[u * n + v];
            }
        }
        WeightedCompleteGraph { n, w, phat: self.phat }
    }

    /// Sum of `w[u][v]` over unordered pairs.
    pub fn pair_sum(&self) -> f64 {
        let mut s = 0.0;
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                s += self.weight(u, v);
            }
        }
        s
    }
}

/// Centers `g`: `w[u][v] = 1{uv ∈ E} − q` with `q` known or estimated.
pub fn center(g: &SimpleGraph, mode: Centering) -> Result<WeightedCompleteGraph> {
    let q = match mode {
        Centering::KnownDensity(p) => {
            check_probability("p", p)?;
            p
        }
        Centering::EmpiricalDensity => {
            let q = g.density().ok_or(Error::Domain {
                name: "n",
                value: g.n() as f64,
                expected: "n >= 2 for empirical centering",
            })?;
            if q <= 0.0 || q >= 1.0 {
                return Err(Error::DegenerateDensity { density: q });
            }
            q
        }
    };
    let n = g.n();
    let mut w = alloc::vec![-q; n * n];
    for u in 0..n {
        w[u * n + u] = 0.0;
        for v in g.neighbors(u) {
            w[u * n + v] = 1.0 - q;
        }
    }
    Ok(WeightedCompleteGraph { n, w, phat: Some(q) })
}

/// Exact mixed moments of the centered pair `β = x − p`, `β′ = y − p`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CenteredMoments {
    /// `E[β β′]`
    pub cross: f64,
    /// `E[β² β′]`
    pub square_first: f64,
    /// `E[β β′²]`
    pub square_second: f64,
    /// `E[β² β′²]`
    pub square_both: f64,
}

/// Sums each mixed moment over the four-outcome joint table.
pub fn centered_moment_table(p: f64, rho: f64) -> Result<CenteredMoments> {
    let joint = JointEdgeDistribution::new(p, rho)?;
    let mut m = CenteredMoments {
        cross: 0.0,
        square_first: 0.0,
        square_second: 0.0,
        square_both: 0.0,
    };
    for ((x, y), prob) in joint.outcomes() {
        let (b, c) = (x - p, y - p);
        m.cross += prob * b * c;
        m.square_first += prob * b * b * c;
        m.square_second += prob * b * c * c;
        m.square_both += prob * b * b * c * c;
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn joint_table_examples() {
        let j = joint_edge_probs(0.5, 1.0).unwrap();
        assert_eq!((j.p11, j.p10, j.p01, j.p00), (0.5, 0.0, 0.0, 0.5));
        let j = joint_edge_probs(0.3, 0.0).unwrap();
        assert!((j.p11 - 0.09).abs() < 1e-15);
        let j = joint_edge_probs(0.05, 0.99).unwrap();
        assert!((j.p11 - 0.049525).abs() < 1e-15);
    }

    #[test]
    fn joint_table_domain_errors() {
        assert!(joint_edge_probs(0.0, 0.5).is_err());
        assert!(joint_edge_probs(1.0, 0.5).is_err());
        assert!(joint_edge_probs(0.5, -0.1).is_err());
        assert!(joint_edge_probs(0.5, 1.1).is_err());
        assert!(joint_edge_probs(f64::NAN, 0.5).is_err());
    }

    #[test]
    fn joint_table_frequencies() {
        let j = joint_edge_probs(0.05, 0.99).unwrap();
        let mut rng = TrialRng::seed_from_u64(11);
        let draws = 1_000_000;
        let hits = (0..draws).filter(|_| j.sample(&mut rng) == (true, true)).count();
        let freq = hits as f64 / draws as f64;
        let se = (j.p11 * (1.0 - j.p11) / draws as f64).sqrt();
        assert!((freq - j.p11).abs() < 4.0 * se, "{freq} vs {}", j.p11);
    }

    #[test]
    fn er_sampler_edge_cases() {
        let mut rng = TrialRng::seed_from_u64(1);
        let g = sample_er(4, 1.0 - 1e-12, &mut rng).unwrap();
        assert_eq!(g, SimpleGraph::complete(4));
        assert_eq!(sample_er(1, 0.5, &mut rng).unwrap().edge_count(), 0);
        assert!(sample_er(5, 1.0, &mut rng).is_err());
    }

    #[test]
    fn perfect_correlation_is_a_relabeling() {
        let mut rng = TrialRng::seed_from_u64(5);
        let pair = sample_correlated_pair(30, 0.3, 1.0, &mut rng).unwrap();
        assert_eq!(pair.g1.relabel(&pair.pi), pair.g2);
    }

    #[test]
    fn centering_examples() {
        let g = SimpleGraph::empty(4);
        let w = center(&g, Centering::KnownDensity(0.5)).unwrap();
        for u in 0..4 {
            for v in 0..4 {
                let expect = if u == v { 0.0 } else { -0.5 };
                assert_eq!(w.weight(u, v), expect);
            }
        }
        assert_eq!(
            center(&SimpleGraph::complete(3), Centering::EmpiricalDensity),
            Err(Error::DegenerateDensity { density: 1.0 })
        );
        let g = SimpleGraph::from_edges(3, [(0, 1)]).unwrap();
        let w = center(&g, Centering::EmpiricalDensity).unwrap();
        assert!((w.phat().unwrap() - 1.0 / 3.0).abs() < 1e-15);
        assert!((w.weight(0, 1) - 2.0 / 3.0).abs() < 1e-15);
        assert!((w.weight(1, 2) + 1.0 / 3.0).abs() < 1e-15);
        assert!(w.pair_sum().abs() < 1e-12);
    }

    #[test]
    fn moment_table_examples() {
        let m = centered_moment_table(0.5, 0.7).unwrap();
        assert!(m.square_first.abs() < 1e-15);
        let m = centered_moment_table(0.2, 0.8).unwrap();
        assert!((m.cross - 0.128).abs() < 1e-15);
        let m = centered_moment_table(0.3, 0.0).unwrap();
        assert!((m.square_both - 0.09 * 0.49).abs() < 1e-15);
    }
}
