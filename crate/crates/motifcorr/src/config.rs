//! Serializable experiment configurations.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use motifcorr_core::motif::{build_special_family, enumerate_bounded, MotifFamily};
use motifcorr_core::statistic::{Baseline, WeightScheme};
use motifcorr_core::Centering;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

/// Which motif family a run uses.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FamilySpec {
    Bounded { n_e: usize, d: usize },
    Special { ell: usize, d: usize },
    Cycle { k: usize },
    Tree { n_e: usize, d: usize },
    File { path: PathBuf },
}

impl FamilySpec {
    pub fn build(&self) -> Result<MotifFamily> {
        Ok(match self {
            FamilySpec::Bounded { n_e, d } => enumerate_bounded(*n_e, *d)?,
            FamilySpec::Special { ell, d } => build_special_family(*ell, *d)?,
            FamilySpec::Cycle { k } => Baseline::Cycle(*k).family()?,
            FamilySpec::Tree { n_e, d } => Baseline::Tree { n_e: *n_e, d: *d }.family()?,
            FamilySpec::File { path } => crate::io::load_family(path)?,
        })
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Bounded { n_e, d } => write!(f, "bounded:{n_e}:{d}"),
            FamilySpec::Special { ell, d } => write!(f, "special:{ell}:{d}"),
            FamilySpec::Cycle { k } => write!(f, "cycle:{k}"),
            FamilySpec::Tree { n_e, d } => write!(f, "tree:{n_e}:{d}"),
            FamilySpec::File { path } => write!(f, "file:{}", path.display()),
        }
    }
}

/// `bounded:N_E:D`, `special:ELL:D`, `cycle:K`, `tree:N_E:D` or `file:PATH`.
impl FromStr for FamilySpec {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let (kind, rest) = s.split_once(':').unwrap_or((s, ""));
        if kind == "file" {
            return Ok(FamilySpec::File { path: rest.into() });
        }
        let nums: Vec<usize> = rest
            .split(':')
            .map(|x| x.parse().map_err(|_| format!("bad number {x:?} in family {s:?}")))
            .collect::<std::result::Result<_, _>>()?;
        let want = |k: usize| {
            if nums.len() == k {
                Ok(())
            } else {
                Err(format!("family {s:?} needs {k} numbers"))
            }
        };
        match kind {
            "bounded" => want(2).map(|_| FamilySpec::Bounded { n_e: nums[0], d: nums[1] }),
            "special" => want(2).map(|_| FamilySpec::Special { ell: nums[0], d: nums[1] }),
            "cycle" => want(1).map(|_| FamilySpec::Cycle { k: nums[0] }),
            "tree" => want(2).map(|_| FamilySpec::Tree { n_e: nums[0], d: nums[1] }),
            _ => Err(format!("unknown family kind {kind:?}")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum SchemeSpec {
    /// Theoretical weights at the configured (p, rho).
    FullTheoretical,
    /// Weights without the rho and p factors.
    EqualEdges,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum CenteringSpec {
    /// Subtract the configured p.
    Known,
    /// Subtract each graph's own edge density.
    Empirical,
}

/// One Monte Carlo grid point.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct TrialConfig {
    pub n: usize,
    pub p: f64,
    pub rho: f64,
    pub family: FamilySpec,
    pub scheme: SchemeSpec,
    pub centering: CenteringSpec,
    /// Trials per hypothesis.
    pub trials: usize,
    pub seed: u64,
}

impl Default for TrialConfig {
    fn default() -> Self {
        TrialConfig {
            n: 100,
            p: 0.05,
            rho: 0.99,
            family: FamilySpec::Bounded { n_e: 4, d: 4 },
            scheme: SchemeSpec::EqualEdges,
            centering: CenteringSpec::Empirical,
            trials: 100,
            seed: 0,
        }
    }
}

impl TrialConfig {
    /// The configuration checked by the moment validation by default.
    pub fn validation_default() -> Self {
        TrialConfig {
            n: 30,
            p: 0.2,
            rho: 0.8,
            family: FamilySpec::Bounded { n_e: 3, d: 2 },
            scheme: SchemeSpec::FullTheoretical,
            centering: CenteringSpec::Known,
            trials: 2000,
            seed: 0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(Error::Config("trials must be at least 1".into()));
        }
        if !(self.p > 0.0 && self.p < 1.0) {
            return Err(Error::Config(format!("p = {} must lie in (0, 1)", self.p)));
        }
        if !(0.0..=1.0).contains(&self.rho) {
            return Err(Error::Config(format!("rho = {} must lie in [0, 1]", self.rho)));
        }
        if self.n < 2 {
            return Err(Error::Config("n must be at least 2".into()));
        }
        Ok(())
    }

    pub fn weight_scheme(&self) -> WeightScheme {
        match self.scheme {
            SchemeSpec::FullTheoretical => WeightScheme::FullTheoretical {
                p: self.p,
                rho: self.rho,
            },
            SchemeSpec::EqualEdges => WeightScheme::EqualEdges,
        }
    }

    pub fn centering_mode(&self) -> Centering {
        match self.centering {
            CenteringSpec::Known => Centering::KnownDensity(self.p),
            CenteringSpec::Empirical => Centering::EmpiricalDensity,
        }
    }
}

/// The vertex-overlap pipeline on an edge-list network.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RealDataConfig {
    /// Keep the `top_k` highest-degree vertices of the input network.
    pub top_k: usize,
    /// Vertices per sampled subgraph.
    pub n: usize,
    pub overlaps: Vec<f64>,
    pub family: FamilySpec,
    pub trials: usize,
    pub seed: u64,
}

impl Default for RealDataConfig {
    fn default() -> Self {
        RealDataConfig {
            top_k: 3000,
            n: 100,
            overlaps: vec![0.8, 0.99],
            family: FamilySpec::Bounded { n_e: 4, d: 4 },
            trials: 100,
            seed: 0,
        }
    }
}

impl RealDataConfig {
    pub fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(Error::Config("trials must be at least 1".into()));
        }
        if self.overlaps.is_empty() {
            return Err(Error::Config("overlap grid is empty".into()));
        }
        if let Some(o) = self.overlaps.iter().find(|o| !(0.0..=1.0).contains(*o)) {
            return Err(Error::Config(format!("overlap {o} must lie in [0, 1]")));
        }
        if self.n < 2 || self.n > self.top_k {
            return Err(Error::Config(format!(
                "need 2 <= n <= top_k, got n = {} and top_k = {}",
                self.n, self.top_k
            )));
        }
        Ok(())
    }
}

/// Reads a JSON config of type `T`; missing fields take their defaults.
pub fn load_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    serde_json::from_str(&text).map_err(|e| Error::Format {
        path: path.into(),
        message: e.to_string(),
    })
}

/// SHA-256 of the compact JSON serialization, as lowercase hex.
pub fn config_hash<T: Serialize>(cfg: &T) -> String {
    let json = serde_json::to_vec(cfg).expect("configs serialize");
    hex::encode(Sha256::digest(&json))
}
