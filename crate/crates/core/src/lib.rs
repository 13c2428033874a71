//! Motif-count statistics for detecting correlation between two graphs.
//!
//! Two graphs on `n` vertices are tested for being independent
//! Erdős–Rényi graphs against being a correlated pair under a hidden
//! vertex alignment. The statistic sums, over a family of small motifs,
//! the weighted product of the motif's injective counts in the two
//! centered adjacency matrices. Counts are invariant under relabeling, so
//! the test needs no alignment.
//!
//! The crate is `no_std` with `alloc`. File formats, the experiment
//! harness and the command line live in the `motifcorr` crate.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod counting;
pub mod error;
pub mod graph;
pub mod model;
pub mod motif;
pub mod roc;
pub mod sampling;
pub mod statistic;

pub use counting::{inj, inj_bruteforce, inj_moebius, Backend, MotifCounter};
pub use error::{Error, Result};
pub use graph::SimpleGraph;
pub use model::{
    center, centered_moment_table, joint_edge_probs, sample_correlated_pair, sample_er, Centering,
    CorrelatedPair, JointEdgeDistribution, TrialRng, WeightedCompleteGraph,
};
pub use motif::{
    admissibility_report, build_special_family, enumerate_bounded, family_size_bounds, FamilyKind,
    Motif, MotifFamily,
};
pub use roc::{auc, roc_auc, MomentReport, RocCurve};
pub use sampling::{sample_overlap_pair, top_k_by_degree};
pub use statistic::{
    decide, motif_weight, statistic, theoretical_threshold, DetectionOutcome, PreparedFamily,
    WeightScheme,
};
