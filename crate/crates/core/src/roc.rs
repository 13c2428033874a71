//! Empirical ROC curves, AUC and moment summaries of simulated scores.

use alloc::vec::Vec;

use crate::error::{Error, Result};

/// One operating point: scores `≥ threshold` are called positive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RocPoint {
    pub threshold: f64,
    pub fpr: f64,
    pub tpr: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RocCurve {
    /// Ordered from `threshold = +∞` (0, 0) to `−∞` (1, 1).
    pub points: Vec<RocPoint>,
    pub auc: f64,
}

fn check_scores(name: &'static str, s: &[f64]) -> Result<()> {
    if s.is_empty() {
        return Err(Error::Empty(name));
    }
    if let Some(&x) = s.iter().find(|x| x.is_nan()) {
        return Err(Error::Domain {
            name,
            value: x,
            expected: "scores without NaN",
        });
    }
    Ok(())
}

/// Mann–Whitney AUC, ties counted one half: `P(X1 > X0) + ½ P(X1 = X0)`.
pub fn auc(h0: &[f64], h1: &[f64]) -> Result<f64> {
    check_scores("null scores", h0)?;
    check_scores("alternative scores", h1)?;
    let mut s0 = h0.to_vec();
    s0.sort_unstable_by(f64::total_cmp);
    let mut wins = 0.0;
    for &x in h1 {
        let below = s0.partition_point(|&y| y < x);
        let not_above = s0.partition_point(|&y| y <= x);
        wins += below as f64 + 0.5 * (not_above - below) as f64;
    }
    Ok(wins / (h0.len() as f64 * h1.len() as f64))
}

/// ROC curve with thresholds at the midpoints between distinct observed
/// scores, plus `±∞`.
pub fn roc_auc(h0: &[f64], h1: &[f64]) -> Result<RocCurve> {
    let area = auc(h0, h1)?;
    let mut all: Vec<f64> = h0.iter().chain(h1).copied().collect();
    all.sort_unstable_by(f64::total_cmp);
    all.dedup();
    let mut thresholds = Vec::with_capacity(all.len() + 1);
    thresholds.push(f64::INFINITY);
    for pair in all.windows(2).rev() {
        thresholds.push(0.5 * (pair[0] + pair[1]));
    }
    thresholds.push(f64::NEG_INFINITY);
    let rate = |s: &[f64], t: f64| s.iter().filter(|&&x| x >= t).count() as f64 / s.len() as f64;
    let points = thresholds
        .into_iter()
        .map(|t| RocPoint {
            threshold: t,
            fpr: rate(h0, t),
            tpr: rate(h1, t),
        })
        .collect();
    Ok(RocCurve { points, auc: area })
}

/// Sample mean and unbiased variance.
pub fn mean_var(x: &[f64]) -> Result<(f64, f64)> {
    if x.len() < 2 {
        return Err(Error::Empty("sample with at least two values"));
    }
    let n = x.len() as f64;
    let mean = x.iter().sum::<f64>() / n;
    let var = x.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / (n - 1.0);
    Ok((mean, var))
}

/// Simulated moments of the statistic next to their theoretical values.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MomentReport {
    pub mean_h0: f64,
    pub var_h0: f64,
    pub mean_h1: f64,
    pub se_mean_h0: f64,
    pub se_var_h0: f64,
    pub se_mean_h1: f64,
    /// `Σ ρ^{2e}`: the theoretical `E_H1[T]` and `Var_H0[T]`.
    pub theory: f64,
    pub z_mean_h0: f64,
    pub z_var_h0: f64,
    pub z_mean_h1: f64,
}

impl MomentReport {
    pub fn new(h0: &[f64], h1: &[f64], theory: f64) -> Result<Self> {
        let (m0, v0) = mean_var(h0)?;
        let (m1, v1) = mean_var(h1)?;
        let n0 = h0.len() as f64;
        let n1 = h1.len() as f64;
        let se_m0 = libm::sqrt(v0 / n0);
        let se_m1 = libm::sqrt(v1 / n1);
        // Standard error of the sample variance from the fourth central moment.
        let m4 = h0.iter().map(|x| libm::pow(x - m0, 4.0)).sum::<f64>() / n0;
        let se_v0 = libm::sqrt(((m4 - v0 * v0) / n0).max(0.0));
        let z = |est: f64, target: f64, se: f64| {
            if se > 0.0 {
                (est - target) / se
            } else if est == target {
                0.0
            } else {
                f64::INFINITY
            }
        };
        Ok(MomentReport {
            mean_h0: m0,
            var_h0: v0,
            mean_h1: m1,
            se_mean_h0: se_m0,
            se_var_h0: se_v0,
            se_mean_h1: se_m1,
            theory,
            z_mean_h0: z(m0, 0.0, se_m0),
            z_var_h0: z(v0, theory, se_v0),
            z_mean_h1: z(m1, theory, se_m1),
        })
    }
}
