//! Experiment harness for motif-count correlation tests: configuration
//! files, Monte Carlo trials, real-network sampling, and CSV/JSON output.
//! The `motifcorr` binary exposes all of it on the command line.

pub mod config;
pub mod error;
pub mod experiments;
pub mod io;

pub use config::{CenteringSpec, FamilySpec, RealDataConfig, SchemeSpec, TrialConfig};
pub use error::{Error, Result};
pub use experiments::{run_realdata, run_trials, validate_moments, Scores};
