use alloc::string::String;

/// Errors raised by the core library.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// A numeric parameter fell outside its admissible domain.
    #[error("{name} = {value} is outside {expected}")]
    Domain {
        name: &'static str,
        value: f64,
        expected: &'static str,
    },
    /// Empirical centering produced density 0 or 1.
    #[error("empirical edge density {density} is degenerate; centered weights would all share one sign")]
    DegenerateDensity { density: f64 },
    /// A configured size guard was exceeded.
    #[error("{what} = {value} exceeds the cap of {cap}")]
    CapExceeded {
        what: &'static str,
        value: u64,
        cap: u64,
    },
    /// Malformed graph input.
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    /// Text input failed to parse.
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    /// A constructed motif violated the invariants of its family.
    #[error("inconsistent construction: {0}")]
    Inconsistent(String),
    /// Two graphs that must share a vertex count do not.
    #[error("vertex counts differ: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    /// Equal-edge weights were requested for a family with several edge counts.
    #[error("equal-edge weights need one common edge count, family has {min}..={max}")]
    MixedEdgeCounts { min: usize, max: usize },
    /// An input that must be nonempty was empty.
    #[error("{0} must be nonempty")]
    Empty(&'static str),
    /// Sampling needs more vertices than the source graph has.
    #[error("need {needed} vertices but the graph has {available}")]
    InsufficientVertices { needed: usize, available: usize },
}

pub type Result<T> = core::result::Result<T, Error>;

pub(crate) fn check_probability(name: &'static str, p: f64) -> Result<()> {
    if p > 0.0 && p < 1.0 {
        Ok(())
    } else {
        Err(Error::Domain {
            name,
            value: p,
            expected: "(0, 1)",
        })
    }
}

pub(crate) fn check_correlation(rho: f64) -> Result<()> {
    if (0.0..=1.0).contains(&rho) {
        Ok(())
    } else {
        Err(Error::Domain {
            name: "rho",
            value: rho,
            expected: "[0, 1]",
        })
    }
}
