use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::canon::canonical_form;
use super::small::SmallGraph;
use super::{CanonicalKey, FamilyKind, Motif, MotifFamily};
use crate::error::{Error, Result};

/// Default upper limit on `n_e` for [`enumerate_bounded`].
pub const DEFAULT_EDGE_CAP: usize = 8;

/// All isomorphism classes of connected simple graphs with exactly `n_e`
/// edges and maximum degree at most `d`.
pub fn enumerate_bounded(n_e: usize, d: usize) -> Result<MotifFamily> {
    enumerate_bounded_capped(n_e, d, DEFAULT_EDGE_CAP)
}

/// [`enumerate_bounded`] with an explicit edge-count cap.
///
/// Classes are grown one edge at a time: every connected graph with `k ≥ 2`
/// edges has an edge whose removal (dropping a vertex left isolated) keeps
/// it connected, and the degree bound is inherited by subgraphs, so
/// extending every `(k-1)`-edge class by one edge reaches every `k`-edge
/// class.
pub fn enumerate_bounded_capped(n_e: usize, d: usize, cap: usize) -> Result<MotifFamily> {
    if n_e == 0 {
        return Err(Error::Domain {
            name: "n_e",
            value: 0.0,
            expected: "n_e >= 1",
        });
    }
    if d == 0 {
        return Err(Error::Domain {
            name: "d",
            value: 0.0,
            expected: "d >= 1",
        });
    }
    if n_e > cap {
        return Err(Error::CapExceeded {
            what: "motif edge count",
            value: n_e as u64,
            cap: cap as u64,
        });
    }
    let seed = SmallGraph::from_edges(2, &[(0, 1)])?;
    let mut level: BTreeMap<CanonicalKey, SmallGraph> = BTreeMap::new();
    let (k, g) = canonical_form(&seed);
    level.insert(k, g);
    for _ in 1..n_e {
        let mut next = BTreeMap::new();
        for g in level.values() {
            for child in extensions(g, d) {
                let (key, form) = canonical_form(&child);
                next.entry(key).or_insert(form);
            }
        }
        level = next;
    }
    let motifs = level.values().map(Motif::new).collect();
    Ok(MotifFamily::new(motifs, FamilyKind::AllBounded { n_e, d }))
}

fn extensions(g: &SmallGraph, d: usize) -> Vec<SmallGraph> {
    let v = g.v();
    let mut out = Vec::new();
    for a in 0..v {
        if g.degree(a) >= d {
            continue;
        }
        for b in (a + 1)..v {
            if g.degree(b) < d && !g.has_edge(a, b) {
                let mut h = *g;
                h.add_edge(a, b);
                out.push(h);
            }
        }
        if let Some(mut h) = g.with_extra_vertex() {
            h.add_edge(a, v);
            out.push(h);
        }
    }
    out
}

/// The singleton family `{C_k}`.
pub fn cycle_family(k: usize) -> Result<MotifFamily> {
    if !(3..=crate::motif::MAX_MOTIF_VERTICES).contains(&k) {
        return Err(Error::Domain {
            name: "cycle length",
            value: k as f64,
            expected: "3 <= k <= 12",
        });
    }
    Ok(MotifFamily::custom(alloc::vec![Motif::cycle(k)?]))
}

/// Trees with `n_e` edges and maximum degree at most `d`.
pub fn tree_family(n_e: usize, d: usize) -> Result<MotifFamily> {
    let all = enumerate_bounded(n_e, d)?;
    let trees = all.iter().filter(|m| m.is_tree()).cloned().collect();
    Ok(MotifFamily::custom(trees))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn paw() -> Motif {
        Motif::from_edges(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap()
    }

    fn spider() -> Motif {
        Motif::from_edges(5, &[(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap()
    }

    #[test]
    fn small_families() {
        let f = enumerate_bounded(3, 2).unwrap();
        assert_eq!(f.len(), 2);
        assert!(f.contains(&Motif::path(4).unwrap()));
        assert!(f.contains(&Motif::cycle(3).unwrap()));

        let f = enumerate_bounded(4, 3).unwrap();
        assert_eq!(f.len(), 4);
        for m in [Motif::path(5).unwrap(), spider(), Motif::cycle(4).unwrap(), paw()] {
            assert!(f.contains(&m), "missing {m}");
        }

        let f = enumerate_bounded(4, 4).unwrap();
        assert_eq!(f.len(), 5);
        assert!(f.contains(&Motif::star(4).unwrap()));

        for d in 1..4 {
            let f = enumerate_bounded(1, d).unwrap();
            assert_eq!(f.len(), 1);
            assert_eq!(f.motifs()[0].e(), 1);
        }
    }

    #[test]
    fn caps_and_domains() {
        assert!(matches!(enumerate_bounded(9, 3), Err(Error::CapExceeded { .. })));
        assert!(enumerate_bounded(0, 3).is_err());
        assert!(enumerate_bounded(3, 0).is_err());
    }

    #[test]
    fn baseline_families() {
        let t = tree_family(3, 2).unwrap();
        assert_eq!(t.motifs(), &[Motif::path(4).unwrap()]);
        let t = tree_family(4, 3).unwrap();
        assert_eq!(t.len(), 2);
        assert!(t.contains(&spider()) && t.contains(&Motif::path(5).unwrap()));
        assert_eq!(cycle_family(3).unwrap().motifs(), &[Motif::cycle(3).unwrap()]);
        assert!(cycle_family(2).is_err());
    }
}
