//! Motifs, motif families and their diagnostics.
//!
//! A [`Motif`] is stored in canonical labeling, so two motifs compare equal
//! exactly when they are isomorphic. Families come from two constructions:
//! all connected motifs with a fixed edge count and bounded degree
//! ([`enumerate_bounded`]), and the matched-path family of
//! [`build_special_family`].

mod admissibility;
mod canon;
mod enumerate;
mod small;
mod special;

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

pub use admissibility::{
    admissibility_report, subgraph_degree_check, subgraph_density_check, AdmissibilityReport,
    SubgraphWitness,
};
pub use canon::{aut_count, canonical_form, canonical_key, canonical_labeling, CanonicalKey};
pub use enumerate::{
    cycle_family, enumerate_bounded, enumerate_bounded_capped, tree_family, DEFAULT_EDGE_CAP,
};
pub use small::{SmallGraph, MAX_MOTIF_VERTICES};
pub use special::{
    build_special_family, build_special_family_capped, family_size_bounds, special_edge_count,
    special_vertex_count, DEFAULT_LABELED_CAP,
};

use crate::error::{Error, Result};

/// A small graph in canonical labeling with its automorphism count.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Motif {
    graph: SmallGraph,
    key: CanonicalKey,
    aut: u64,
}

impl Motif {
    /// Canonicalizes `g`. Connectivity is not enforced here; the family
    /// constructors only produce connected motifs and
    /// [`admissibility_report`] flags any that are not.
    pub fn new(g: &SmallGraph) -> Self {
        let (key, graph) = canonical_form(g);
        let aut = aut_count(&graph);
        Motif { graph, key, aut }
    }

    pub fn from_edges(v: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Ok(Motif::new(&SmallGraph::from_edges(v, edges)?))
    }

    /// Path with `k` vertices.
    pub fn path(k: usize) -> Result<Self> {
        let edges: Vec<_> = (1..k).map(|i| (i - 1, i)).collect();
        Motif::from_edges(k, &edges)
    }

    /// Cycle with `k ≥ 3` vertices.
    pub fn cycle(k: usize) -> Result<Self> {
        if k < 3 {
            return Err(Error::Domain {
                name: "cycle length",
                value: k as f64,
                expected: "k >= 3",
            });
        }
        let edges: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
        Motif::from_edges(k, &edges)
    }

    /// Star with `leaves` leaves.
    pub fn star(leaves: usize) -> Result<Self> {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Motif::from_edges(leaves + 1, &edges)
    }

    pub fn graph(&self) -> &SmallGraph {
        &self.graph
    }

    pub fn key(&self) -> CanonicalKey {
        self.key
    }

    pub fn aut(&self) -> u64 {
        self.aut
    }

    pub fn v(&self) -> usize {
        self.graph.v()
    }

    pub fn e(&self) -> usize {
        self.graph.e()
    }

    pub fn max_deg(&self) -> usize {
        self.graph.max_degree()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.graph.edges()
    }

    pub fn is_connected(&self) -> bool {
        self.graph.is_connected()
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.e() + 1 == self.v()
    }
}

impl fmt::Display for Motif {
    /// `v=<k>; edges=u1-v1,u2-v2,...` in canonical labeling.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v={}; edges=", self.v())?;
        for (i, (a, b)) in self.edges().into_iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}-{b}")?;
        }
        Ok(())
    }
}

impl FromStr for Motif {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_motif_line(s, 1)
    }
}

fn parse_motif_line(line: &str, line_no: usize) -> Result<Motif> {
    let bad = |msg: String| Error::Parse {
        line: line_no,
        message: msg,
    };
    let (v_part, e_part) = line
        .split_once(';')
        .ok_or_else(|| bad(format!("expected `v=<k>; edges=...`, got {line:?}")))?;
    let v: usize = v_part
        .trim()
        .strip_prefix("v=")
        .and_then(|x| x.trim().parse().ok())
        .ok_or_else(|| bad(format!("bad vertex count in {v_part:?}")))?;
    let list = e_part
        .trim()
        .strip_prefix("edges=")
        .ok_or_else(|| bad(format!("missing `edges=` in {e_part:?}")))?;
    let mut edges = Vec::new();
    for item in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (a, b) = item
            .split_once('-')
            .ok_or_else(|| bad(format!("bad edge {item:?}")))?;
        let a: usize = a.trim().parse().map_err(|_| bad(format!("bad edge {item:?}")))?;
        let b: usize = b.trim().parse().map_err(|_| bad(format!("bad edge {item:?}")))?;
        edges.push((a, b));
    }
    let g = SmallGraph::from_edges(v, &edges).map_err(|e| match e {
        Error::InvalidGraph(m) => bad(m),
        other => other,
    })?;
    Ok(Motif::new(&g))
}

/// How a family was constructed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyKind {
    /// All connected motifs with `n_e` edges and maximum degree at most `d`.
    AllBounded { n_e: usize, d: usize },
    /// The matched-path family with path length `ell` and degree `d`.
    Special { ell: usize, d: usize },
    /// Any other collection of motifs.
    Custom,
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyKind::AllBounded { n_e, d } => write!(f, "bounded n_e={n_e} d={d}"),
            FamilyKind::Special { ell, d } => write!(f, "special ell={ell} d={d}"),
            FamilyKind::Custom => f.write_str("custom"),
        }
    }
}

fn parse_kind(s: &str) -> Option<FamilyKind> {
    let mut parts = s.split_whitespace();
    let name = parts.next()?;
    if name == "custom" {
        return Some(FamilyKind::Custom);
    }
    let mut get = |label: &str| -> Option<usize> {
        parts.next()?.strip_prefix(label)?.strip_prefix('=')?.parse().ok()
    };
    match name {
        "bounded" => Some(FamilyKind::AllBounded {
            n_e: get("n_e")?,
            d: get("d")?,
        }),
        "special" => Some(FamilyKind::Special {
            ell: get("ell")?,
            d: get("d")?,
        }),
        _ => None,
    }
}

/// A set of pairwise non-isomorphic motifs, sorted by canonical key.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MotifFamily {
    motifs: Vec<Motif>,
    kind: FamilyKind,
}

impl MotifFamily {
    /// Sorts by key and removes isomorphic duplicates.
    pub fn new(mut motifs: Vec<Motif>, kind: FamilyKind) -> Self {
        motifs.sort_by_key(|m| m.key());
        motifs.dedup_by_key(|m| m.key());
        MotifFamily { motifs, kind }
    }

    pub fn custom(motifs: Vec<Motif>) -> Self {
        MotifFamily::new(motifs, FamilyKind::Custom)
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn motifs(&self) -> &[Motif] {
        &self.motifs
    }

    pub fn iter(&self) -> core::slice::Iter<'_, Motif> {
        self.motifs.iter()
    }

    pub fn len(&self) -> usize {
        self.motifs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.motifs.is_empty()
    }

    /// Largest edge count among members (0 for an empty family).
    pub fn n_e(&self) -> usize {
        self.motifs.iter().map(Motif::e).max().unwrap_or(0)
    }

    /// Degree bound carried by the construction, if any.
    pub fn d(&self) -> Option<usize> {
        match self.kind {
            FamilyKind::AllBounded { d, .. } | FamilyKind::Special { d, .. } => Some(d),
            FamilyKind::Custom => None,
        }
    }

    /// `(min, max)` edge count over members.
    pub fn edge_count_range(&self) -> Option<(usize, usize)> {
        let min = self.motifs.iter().map(Motif::e).min()?;
        Some((min, self.n_e()))
    }

    pub fn contains(&self, m: &Motif) -> bool {
        self.motifs.binary_search_by_key(&m.key(), Motif::key).is_ok()
    }

    /// `Σ_M ρ^{2e(M)}`.
    pub fn signal_score(&self, rho: f64) -> f64 {
        self.motifs.iter().map(|m| powi(rho, 2 * m.e())).sum()
    }

    /// One motif per line, preceded by a `# family: <kind>` header.
    pub fn to_text(&self) -> String {
        let mut out = format!("# family: {}\n", self.kind);
        for m in &self.motifs {
            out.push_str(&format!("{m}\n"));
        }
        out
    }

    /// Parses [`MotifFamily::to_text`] output. Without a header the family
    /// is [`FamilyKind::Custom`].
    pub fn parse_text(text: &str) -> Result<Self> {
        let mut kind = FamilyKind::Custom;
        let mut motifs = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(comment) = line.strip_prefix('#') {
                if let Some(k) = comment.trim().strip_prefix("family:") {
                    kind = parse_kind(k.trim()).ok_or_else(|| Error::Parse {
                        line: idx + 1,
                        message: format!("unknown family kind {k:?}"),
                    })?;
                }
                continue;
            }
            motifs.push(parse_motif_line(line, idx + 1)?);
        }
        Ok(MotifFamily::new(motifs, kind))
    }
}

impl<'a> IntoIterator for &'a MotifFamily {
    type Item = &'a Motif;
    type IntoIter = core::slice::Iter<'a, Motif>;

    fn into_iter(self) -> Self::IntoIter {
        self.motifs.iter()
    }
}

/// Signal score of a family, `Σ_M ρ^{2e(M)}`.
pub fn signal_score(fam: &MotifFamily, rho: f64) -> f64 {
    fam.signal_score(rho)
}

pub(crate) fn powi(x: f64, k: usize) -> f64 {
    let mut acc = 1.0;
    for _ in 0..k {
        acc *= x;
    }
    acc
}
