//! Motif weights, the centered motif-count statistic, and the decision rule.
//!
//! The statistic is the weighted inner product
//!
//! ```text
//! T(G1, G2) = Σ_M ω_M · inj(M, Ḡ1) · inj(M, Ḡ2)
//! ```
//!
//! With the theoretical weights
//! `ω_M = ρ^e (n−v)! / (n! (p(1−p))^e aut(M))` and known-`p` centering,
//! `E_H1[T] = Var_H0[T] = Σ_M ρ^{2e(M)}` and `E_H0[T] = 0`. When all
//! members share one edge count the `ρ`- and `p`-dependent factor is a
//! global constant, so the equal-edge weights `(n−v)! / (n! aut(M))` rank
//! graph pairs identically without knowing `ρ`.

use alloc::vec::Vec;

use crate::counting::{Backend, MotifCounter};
use crate::error::{check_probability, Error, Result};
use crate::graph::SimpleGraph;
use crate::model::{center, Centering, WeightedCompleteGraph};
use crate::motif::{powi, Motif, MotifFamily};

/// How each motif is weighted in the statistic.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum WeightScheme {
    /// The weights under which the moment identities hold exactly.
    FullTheoretical { p: f64, rho: f64 },
    /// `1 / (aut(M) · n(n−1)⋯(n−v+1))`, only for single-edge-count families.
    EqualEdges,
}

impl WeightScheme {
    /// Checks parameters and, for [`WeightScheme::EqualEdges`], that the
    /// family has a single edge count.
    pub fn validate(&self, fam: &MotifFamily) -> Result<()> {
        match *self {
            WeightScheme::FullTheoretical { p, rho } => {
                check_probability("p", p)?;
                if !(rho > 0.0 && rho <= 1.0) {
                    return Err(Error::Domain {
                        name: "rho",
                        value: rho,
                        expected: "(0, 1] for theoretical weights",
                    });
                }
            }
            WeightScheme::EqualEdges => {
                if let Some((min, max)) = fam.edge_count_range() {
                    if min != max {
                        return Err(Error::MixedEdgeCounts { min, max });
                    }
                }
            }
        }
        Ok(())
    }
}

/// `ln(n (n−1) ⋯ (n−k+1))`.
fn log_falling(n: usize, k: usize) -> f64 {
    (0..k).map(|i| libm::log((n - i) as f64)).sum()
}

/// `ω_M` for a graph on `n` vertices. The factorial ratio is a falling
/// factorial product, never a ratio of factorials.
pub fn motif_weight(m: &Motif, scheme: WeightScheme, n: usize) -> Result<f64> {
    if n <= m.v() {
        return Err(Error::Domain {
            name: "n",
            value: n as f64,
            expected: "n > v(M)",
        });
    }
    let mut denom = m.aut() as f64;
    for i in 0..m.v() {
        denom *= (n - i) as f64;
    }
    match scheme {
        WeightScheme::EqualEdges => Ok(1.0 / denom),
        WeightScheme::FullTheoretical { p, rho } => {
            let ratio = rho / (p * (1.0 - p));
            Ok(powi(ratio, m.e()) / denom)
        }
    }
}

/// `ln ω_M`, for families whose weights would under- or overflow.
pub fn log_motif_weight(m: &Motif, scheme: WeightScheme, n: usize) -> Result<f64> {
    if n <= m.v() {
        return Err(Error::Domain {
            name: "n",
            value: n as f64,
            expected: "n > v(M)",
        });
    }
    let base = -libm::log(m.aut() as f64) - log_falling(n, m.v());
    match scheme {
        WeightScheme::EqualEdges => Ok(base),
        WeightScheme::FullTheoretical { p, rho } => {
            Ok(base + m.e() as f64 * (libm::log(rho) - libm::log(p * (1.0 - p))))
        }
    }
}

/// A family prepared for repeated use: Möbius expansions per motif.
#[derive(Debug, Clone)]
pub struct PreparedFamily {
    family: MotifFamily,
    counters: Vec<MotifCounter>,
}

impl PreparedFamily {
    pub fn new(family: MotifFamily) -> Self {
        let counters = family.iter().map(MotifCounter::new).collect();
        PreparedFamily { family, counters }
    }

    pub fn family(&self) -> &MotifFamily {
        &self.family
    }

    /// `inj(M, w)` for every member, in family order.
    pub fn profile(&self, w: &WeightedCompleteGraph, backend: Backend) -> Result<Vec<f64>> {
        self.family
            .iter()
            .zip(&self.counters)
            .map(|(m, c)| match backend {
                Backend::Moebius => c.inj(w),
                other => crate::counting::inj(m, w, other),
            })
            .collect()
    }

    /// Weights for every member at graph size `n`.
    pub fn weights(&self, scheme: WeightScheme, n: usize) -> Result<Vec<f64>> {
        scheme.validate(&self.family)?;
        self.family.iter().map(|m| motif_weight(m, scheme, n)).collect()
    }
}

/// `Σ_M ω_M a_M b_M` from precomputed count profiles.
pub fn combine_profiles(weights: &[f64], a: &[f64], b: &[f64]) -> f64 {
    weights
        .iter()
        .zip(a.iter().zip(b))
        .map(|(w, (x, y))| w * x * y)
        .sum()
}

/// The test statistic on a graph pair. Both graphs are centered with
/// `centering`.
pub fn statistic(
    g1: &SimpleGraph,
    g2: &SimpleGraph,
    fam: &MotifFamily,
    scheme: WeightScheme,
    centering: Centering,
) -> Result<f64> {
    statistic_with_backend(g1, g2, fam, scheme, centering, Backend::Moebius)
}

pub fn statistic_with_backend(
    g1: &SimpleGraph,
    g2: &SimpleGraph,
    fam: &MotifFamily,
    scheme: WeightScheme,
    centering: Centering,
    backend: Backend,
) -> Result<f64> {
    let prepared = PreparedFamily::new(fam.clone());
    prepared_statistic(&prepared, g1, g2, scheme, centering, backend)
}

pub fn prepared_statistic(
    prepared: &PreparedFamily,
    g1: &SimpleGraph,
    g2: &SimpleGraph,
    scheme: WeightScheme,
    centering: Centering,
    backend: Backend,
) -> Result<f64> {
    if g1.n() != g2.n() {
        return Err(Error::SizeMismatch {
            left: g1.n(),
            right: g2.n(),
        });
    }
    if prepared.family().is_empty() {
        return Ok(0.0);
    }
    let weights = prepared.weights(scheme, g1.n())?;
    let a = prepared.profile(&center(g1, centering)?, backend)?;
    let b = prepared.profile(&center(g2, centering)?, backend)?;
    Ok(combine_profiles(&weights, &a, &b))
}

/// `τ = ½ Σ_M ρ^{2e(M)}`, the midpoint of the null and alternative means
/// under the theoretical weights.
pub fn theoretical_threshold(fam: &MotifFamily, rho: f64) -> f64 {
    0.5 * fam.signal_score(rho)
}

/// Outcome of comparing a statistic with a threshold.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DetectionOutcome {
    pub statistic_value: f64,
    pub threshold: Option<f64>,
    pub reject_h0: Option<bool>,
}

/// Rejects the null exactly when `t ≥ τ`.
pub fn decide(t: f64, tau: f64) -> DetectionOutcome {
    DetectionOutcome {
        statistic_value: t,
        threshold: Some(tau),
        reject_h0: Some(t >= tau),
    }
}

/// Baseline statistics built from a single cycle or from the trees of a
/// bounded family, always with equal-edge weights.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Baseline {
    Cycle(usize),
    Tree { n_e: usize, d: usize },
}

impl Baseline {
    pub fn family(&self) -> Result<MotifFamily> {
        match *self {
            Baseline::Cycle(k) => {
                if !(3..=8).contains(&k) {
                    return Err(Error::Domain {
                        name: "cycle length",
                        value: k as f64,
                        expected: "3 <= k <= 8",
                    });
                }
                crate::motif::cycle_family(k)
            }
            Baseline::Tree { n_e, d } => crate::motif::tree_family(n_e, d),
        }
    }
}

pub fn baseline_statistic(
    kind: Baseline,
    g1: &SimpleGraph,
    g2: &SimpleGraph,
    centering: Centering,
) -> Result<f64> {
    statistic(g1, g2, &kind.family()?, WeightScheme::EqualEdges, centering)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{sample_er, TrialRng};
    use crate::motif::enumerate_bounded;
    use rand::SeedableRng;

    #[test]
    fn weight_examples() {
        let c3 = Motif::cycle(3).unwrap();
        let w = motif_weight(&c3, WeightScheme::EqualEdges, 10).unwrap();
        assert!((w - 1.0 / 4320.0).abs() < 1e-18);
        let p4 = Motif::path(4).unwrap();
        let full = WeightScheme::FullTheoretical { p: 0.5, rho: 1.0 };
        let w = motif_weight(&p4, full, 10).unwrap();
        assert!((w - 1.0 / (0.015625 * 10080.0)).abs() < 1e-15);
        let ratio = w / motif_weight(&p4, WeightScheme::EqualEdges, 10).unwrap();
        assert!((ratio - 64.0).abs() < 1e-10);
        assert!(motif_weight(&p4, WeightScheme::EqualEdges, 4).is_err());
    }

    #[test]
    fn log_weight_agrees() {
        let fam = enumerate_bounded(4, 4).unwrap();
        let full = WeightScheme::FullTheoretical { p: 0.05, rho: 0.9 };
        for m in &fam {
            for scheme in [WeightScheme::EqualEdges, full] {
                let w = motif_weight(m, scheme, 100).unwrap();
                let lw = log_motif_weight(m, scheme, 100).unwrap();
                assert!((w.ln() - lw).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn scheme_validation() {
        let mixed = MotifFamily::custom(alloc::vec![Motif::path(3).unwrap(), Motif::cycle(3).unwrap()]);
        assert_eq!(
            WeightScheme::EqualEdges.validate(&mixed),
            Err(Error::MixedEdgeCounts { min: 2, max: 3 })
        );
        let full = WeightScheme::FullTheoretical { p: 0.2, rho: 0.0 };
        assert!(full.validate(&mixed).is_err());
    }

    #[test]
    fn statistic_edge_cases() {
        let mut rng = TrialRng::seed_from_u64(3);
        let g = sample_er(20, 0.3, &mut rng).unwrap();
        let h = sample_er(20, 0.3, &mut rng).unwrap();
        let empty = MotifFamily::custom(Vec::new());
        let c = Centering::EmpiricalDensity;
        assert_eq!(statistic(&g, &h, &empty, WeightScheme::EqualEdges, c).unwrap(), 0.0);
        let fam = enumerate_bounded(3, 3).unwrap();
        assert!(statistic(&g, &g, &fam, WeightScheme::EqualEdges, c).unwrap() >= 0.0);
        let gh = statistic(&g, &h, &fam, WeightScheme::EqualEdges, c).unwrap();
        let hg = statistic(&h, &g, &fam, WeightScheme::EqualEdges, c).unwrap();
        assert!((gh - hg).abs() <= 1e-12 * gh.abs().max(1e-300));
        let small = sample_er(19, 0.3, &mut rng).unwrap();
        assert!(matches!(
            statistic(&g, &small, &fam, WeightScheme::EqualEdges, c),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn thresholds_and_decisions() {
        let fam = enumerate_bounded(3, 2).unwrap();
        assert!((theoretical_threshold(&fam, 0.8) - 0.262144).abs() < 1e-15);
        assert_eq!(theoretical_threshold(&fam, 1.0), 1.0);
        let special = crate::motif::build_special_family(1, 3).unwrap();
        assert!((theoretical_threshold(&special, 0.9) - 0.5 * libm::pow(0.9, 14.0)).abs() < 1e-15);
        assert_eq!(decide(0.5, 0.5).reject_h0, Some(true));
        assert_eq!(decide(0.0, 0.1).reject_h0, Some(false));
        assert_eq!(decide(1.0, 0.5).reject_h0, Some(true));
    }

    #[test]
    fn baselines() {
        let mut rng = TrialRng::seed_from_u64(8);
        let g = sample_er(15, 0.3, &mut rng).unwrap();
        let h = sample_er(15, 0.3, &mut rng).unwrap();
        let c = Centering::EmpiricalDensity;
        let tri = MotifFamily::custom(alloc::vec![Motif::cycle(3).unwrap()]);
        let direct = statistic(&g, &h, &tri, WeightScheme::EqualEdges, c).unwrap();
        let base = baseline_statistic(Baseline::Cycle(3), &g, &h, c).unwrap();
        assert_eq!(direct, base);
        assert!(Baseline::Cycle(9).family().is_err());
        assert_eq!(Baseline::Tree { n_e: 3, d: 2 }.family().unwrap().len(), 1);
    }
}
