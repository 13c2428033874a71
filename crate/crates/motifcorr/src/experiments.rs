//! Monte Carlo trials, moment validation and the real-data pipeline.
//!
//! Trial `i` draws from `TrialRng` seeded with `seed ^ i`, stream 0 for the
//! independent pair and stream 1 for the correlated pair, so every score is
//! a function of the configuration alone. Work is spread over the current
//! rayon pool and results are collected in trial order.

use motifcorr_core::motif::MotifFamily;
use motifcorr_core::roc::{mean_var, roc_auc, MomentReport, RocCurve};
use motifcorr_core::statistic::{prepared_statistic, PreparedFamily, WeightScheme};
use motifcorr_core::{
    sample_correlated_pair, sample_er, sample_overlap_pair, top_k_by_degree, Backend, Centering,
    SimpleGraph, TrialRng,
};
use rand::SeedableRng;
use rayon::prelude::*;
use serde::Serialize;

use crate::config::{CenteringSpec, RealDataConfig, SchemeSpec, TrialConfig};
use crate::error::{Error, Result};

/// Statistic values under each hypothesis, in trial order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Scores {
    pub h0: Vec<f64>,
    pub h1: Vec<f64>,
}

/// The generator for one trial and hypothesis.
pub fn trial_rng(seed: u64, trial: u64, stream: u64) -> TrialRng {
    let mut rng = TrialRng::seed_from_u64(seed ^ trial);
    rng.set_stream(stream);
    rng
}

pub fn run_trials(cfg: &TrialConfig) -> Result<Scores> {
    cfg.validate()?;
    let family = cfg.family.build()?;
    run_trials_with_family(cfg, &family)
}

/// [`run_trials`] with an already built family.
pub fn run_trials_with_family(cfg: &TrialConfig, family: &MotifFamily) -> Result<Scores> {
    cfg.validate()?;
    let scheme = cfg.weight_scheme();
    scheme.validate(family)?;
    let prepared = PreparedFamily::new(family.clone());
    let centering = cfg.centering_mode();
    let eval = |g1: &SimpleGraph, g2: &SimpleGraph| {
        prepared_statistic(&prepared, g1, g2, scheme, centering, Backend::Moebius)
    };
    let pairs: Vec<(f64, f64)> = (0..cfg.trials as u64)
        .into_par_iter()
        .map(|i| -> Result<(f64, f64)> {
            let mut r0 = trial_rng(cfg.seed, i, 0);
            let a = sample_er(cfg.n, cfg.p, &mut r0)?;
            let b = sample_er(cfg.n, cfg.p, &mut r0)?;
            let mut r1 = trial_rng(cfg.seed, i, 1);
            let pair = sample_correlated_pair(cfg.n, cfg.p, cfg.rho, &mut r1)?;
            Ok((eval(&a, &b)?, eval(&pair.g1, &pair.g2)?))
        })
        .collect::<Result<_>>()?;
    Ok(Scores {
        h0: pairs.iter().map(|x| x.0).collect(),
        h1: pairs.iter().map(|x| x.1).collect(),
    })
}

/// Checks that the configuration is the one under which the moment
/// identities hold exactly.
pub fn check_theory_config(cfg: &TrialConfig) -> Result<()> {
    if cfg.scheme != SchemeSpec::FullTheoretical {
        return Err(Error::Config(
            "moment validation needs the full_theoretical scheme".into(),
        ));
    }
    if cfg.centering != CenteringSpec::Known {
        return Err(Error::Config(
            "moment validation needs known-density centering".into(),
        ));
    }
    if cfg.rho <= 0.0 {
        return Err(Error::Config("moment validation needs rho > 0".into()));
    }
    if cfg.trials < 2 {
        return Err(Error::Config("moment validation needs at least 2 trials".into()));
    }
    Ok(())
}

pub fn validate_moments(cfg: &TrialConfig) -> Result<(MomentReport, Scores)> {
    check_theory_config(cfg)?;
    let family = cfg.family.build()?;
    let scores = run_trials_with_family(cfg, &family)?;
    let report = MomentReport::new(&scores.h0, &scores.h1, family.signal_score(cfg.rho))?;
    Ok((report, scores))
}

/// Summary statistics of two score samples.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Separation {
    pub mean_h0: f64,
    pub sd_h0: f64,
    pub mean_h1: f64,
    pub sd_h1: f64,
    /// `sqrt((var_h0 + var_h1) / 2)`, the pooled sd for equal sample sizes.
    pub pooled_sd: f64,
    /// `(mean_h1 - mean_h0) / pooled_sd`.
    pub standardized_shift: f64,
}

pub fn separation(s: &Scores) -> Result<Separation> {
    let (m0, v0) = mean_var(&s.h0)?;
    let (m1, v1) = mean_var(&s.h1)?;
    let pooled = ((v0 + v1) / 2.0).sqrt();
    Ok(Separation {
        mean_h0: m0,
        sd_h0: v0.sqrt(),
        mean_h1: m1,
        sd_h1: v1.sqrt(),
        pooled_sd: pooled,
        standardized_shift: (m1 - m0) / pooled,
    })
}

/// One histogram bin with counts per hypothesis.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Bin {
    pub bin_left: f64,
    pub bin_right: f64,
    pub count_h0: usize,
    pub count_h1: usize,
}

/// Equal-width bins over the joint range of both samples.
pub fn histogram(s: &Scores, bins: usize) -> Vec<Bin> {
    let all = s.h0.iter().chain(&s.h1);
    let lo = all.clone().copied().fold(f64::INFINITY, f64::min);
    let hi = all.copied().fold(f64::NEG_INFINITY, f64::max);
    if bins == 0 || !lo.is_finite() || !hi.is_finite() {
        return Vec::new();
    }
    let width = if hi > lo { (hi - lo) / bins as f64 } else { 1.0 };
    let index = |x: f64| (((x - lo) / width) as usize).min(bins - 1);
    let mut out: Vec<Bin> = (0..bins)
        .map(|b| Bin {
            bin_left: lo + b as f64 * width,
            bin_right: lo + (b + 1) as f64 * width,
            count_h0: 0,
            count_h1: 0,
        })
        .collect();
    for &x in &s.h0 {
        out[index(x)].count_h0 += 1;
    }
    for &x in &s.h1 {
        out[index(x)].count_h1 += 1;
    }
    out
}

/// Results at one overlap level of the real-data pipeline.
#[derive(Debug, Clone, PartialEq)]
pub struct OverlapRun {
    pub overlap: f64,
    pub scores: Scores,
    pub roc: RocCurve,
}

/// Samples pairs of `n`-vertex induced subgraphs from the top-`K` core of
/// `network`: disjoint vertex sets under the null, sets sharing
/// `⌊overlap·n⌋` vertices under the alternative. Both graphs are centered
/// by their own empirical density and scored with equal-edge weights.
pub fn run_realdata(network: &SimpleGraph, cfg: &RealDataConfig) -> Result<Vec<OverlapRun>> {
    cfg.validate()?;
    let core_graph = top_k_by_degree(network, cfg.top_k)?;
    let family = cfg.family.build()?;
    WeightScheme::EqualEdges.validate(&family)?;
    let prepared = PreparedFamily::new(family);
    let eval = |(g1, g2): (SimpleGraph, SimpleGraph)| {
        prepared_statistic(
            &prepared,
            &g1,
            &g2,
            WeightScheme::EqualEdges,
            Centering::EmpiricalDensity,
            Backend::Moebius,
        )
    };
    let mut runs = Vec::with_capacity(cfg.overlaps.len());
    for &overlap in &cfg.overlaps {
        let pairs: Vec<(f64, f64)> = (0..cfg.trials as u64)
            .into_par_iter()
            .map(|i| -> Result<(f64, f64)> {
                let mut r0 = trial_rng(cfg.seed, i, 0);
                let null = sample_overlap_pair(&core_graph, cfg.n, overlap, false, &mut r0)?;
                let mut r1 = trial_rng(cfg.seed, i, 1);
                let alt = sample_overlap_pair(&core_graph, cfg.n, overlap, true, &mut r1)?;
                Ok((eval(null)?, eval(alt)?))
            })
            .collect::<Result<_>>()?;
        let scores = Scores {
            h0: pairs.iter().map(|x| x.0).collect(),
            h1: pairs.iter().map(|x| x.1).collect(),
        };
        let roc = roc_auc(&scores.h0, &scores.h1)?;
        runs.push(OverlapRun {
            overlap,
            scores,
            roc,
        });
    }
    Ok(runs)
}
