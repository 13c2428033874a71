//! The matched-path family.
//!
//! Each member has two central vertices, each joined to a pendant extremity
//! vertex and to one end of each of `d − 1` paths on `ell` vertices. Every
//! pair of paths is joined by a perfect matching, one of `ell!` choices, so
//! a member is fixed by a tuple of `C(d−1, 2)` permutations of `S_ell`.
//! Every path vertex ends up with degree `d`: two path or attachment edges
//! plus one matching edge to each of the other `d − 2` paths.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use super::canon::canonical_form;
use super::small::{SmallGraph, MAX_MOTIF_VERTICES};
use super::{FamilyKind, Motif, MotifFamily};
use crate::error::{Error, Result};

/// Default cap on the number of labeled constructions to enumerate.
pub const DEFAULT_LABELED_CAP: u64 = 5_000_000;

/// `N_v = ell(d−1) + 4`.
pub fn special_vertex_count(ell: usize, d: usize) -> usize {
    ell * (d - 1) + 4
}

/// `N_e = C(d,2)·ell + d + 1`.
pub fn special_edge_count(ell: usize, d: usize) -> usize {
    d * (d - 1) / 2 * ell + d + 1
}

pub fn build_special_family(ell: usize, d: usize) -> Result<MotifFamily> {
    build_special_family_capped(ell, d, DEFAULT_LABELED_CAP)
}

/// Builds every labeled realization, checks each one against the family
/// invariants, and deduplicates by isomorphism class.
pub fn build_special_family_capped(ell: usize, d: usize, labeled_cap: u64) -> Result<MotifFamily> {
    if ell == 0 {
        return Err(Error::Domain {
            name: "ell",
            value: 0.0,
            expected: "ell >= 1",
        });
    }
    if d < 3 {
        return Err(Error::Domain {
            name: "d",
            value: d as f64,
            expected: "d >= 3",
        });
    }
    let v = special_vertex_count(ell, d);
    if v > MAX_MOTIF_VERTICES {
        return Err(Error::CapExceeded {
            what: "special motif vertex count",
            value: v as u64,
            cap: MAX_MOTIF_VERTICES as u64,
        });
    }
    let paths = d - 1;
    let pairs: Vec<(usize, usize)> = (0..paths)
        .flat_map(|i| ((i + 1)..paths).map(move |j| (i, j)))
        .collect();
    let perms = permutations(ell);
    let labeled = (perms.len() as u64).checked_pow(pairs.len() as u32);
    match labeled {
        Some(count) if count <= labeled_cap => {}
        _ => {
            return Err(Error::CapExceeded {
                what: "labeled special constructions",
                value: labeled.unwrap_or(u64::MAX),
                cap: labeled_cap,
            })
        }
    }

    // Vertex layout: 0 and 3 are the extremities, 1 and 2 the centrals,
    // path i occupies 4 + i*ell .. 4 + (i+1)*ell.
    let path_vertex = |i: usize, j: usize| 4 + i * ell + j;
    let mut base = SmallGraph::new(v)?;
    base.add_edge(0, 1);
    base.add_edge(2, 3);
    for i in 0..paths {
        base.add_edge(1, path_vertex(i, 0));
        base.add_edge(path_vertex(i, ell - 1), 2);
        for j in 1..ell {
            base.add_edge(path_vertex(i, j - 1), path_vertex(i, j));
        }
    }

    let n_e = special_edge_count(ell, d);
    let mut classes = BTreeMap::new();
    let mut choice = alloc::vec![0usize; pairs.len()];
    loop {
        let mut g = base;
        for (slot, &(a, b)) in pairs.iter().enumerate() {
            let sigma = &perms[choice[slot]];
            for (j, &k) in sigma.iter().enumerate() {
                g.add_edge(path_vertex(a, j), path_vertex(b, k));
            }
        }
        check_member(&g, v, n_e, d)?;
        let (key, form) = canonical_form(&g);
        classes.entry(key).or_insert(form);

        // Mixed-radix increment over the permutation tuple.
        let mut slot = 0;
        loop {
            if slot == choice.len() {
                let motifs = classes.values().map(Motif::new).collect();
                return Ok(MotifFamily::new(motifs, FamilyKind::Special { ell, d }));
            }
            choice[slot] += 1;
            if choice[slot] < perms.len() {
                break;
            }
            choice[slot] = 0;
            slot += 1;
        }
    }
}

fn check_member(g: &SmallGraph, v: usize, n_e: usize, d: usize) -> Result<()> {
    let degrees: Vec<usize> = (0..g.v()).map(|a| g.degree(a)).collect();
    let leaves: Vec<usize> = (0..g.v()).filter(|&a| degrees[a] == 1).collect();
    let leaves_ok = leaves.len() == 2
        && leaves.iter().all(|&a| {
            let nb = g.row(a).trailing_zeros() as usize;
            degrees[nb] == d
        });
    if g.v() != v || g.e() != n_e || g.max_degree() != d || !leaves_ok || !g.is_connected() {
        return Err(Error::Inconsistent(format!(
            "special member has v={}, e={}, degrees {:?}; expected v={v}, e={n_e}, max degree {d}",
            g.v(),
            g.e(),
            degrees
        )));
    }
    Ok(())
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    heap_permute(k, &mut cur, &mut out);
    out.sort();
    out
}

fn heap_permute(k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(cur.clone());
        return;
    }
    for i in 0..k - 1 {
        heap_permute(k - 1, cur, out);
        if k.is_multiple_of(2) {
            cur.swap(i, k - 1);
        } else {
            cur.swap(0, k - 1);
        }
    }
    heap_permute(k - 1, cur, out);
}

/// Lower and upper bounds on the size of the matched-path family with
/// `n_e` edges and degree `d`:
///
/// ```text
/// lower = ½ · (2(n_e−d−1) / (e·d^{d/(d−2)}·(d−1)))^{(d−2)(n_e−d−1)/d}
/// upper =     (2(n_e−d−1) / (d(d−1)))^{(d−2)(n_e−d−1)/d}
/// ```
pub fn family_size_bounds(n_e: usize, d: usize) -> Result<(f64, f64)> {
    if d < 3 {
        return Err(Error::Domain {
            name: "d",
            value: d as f64,
            expected: "d >= 3",
        });
    }
    if n_e < d + 1 {
        return Err(Error::Domain {
            name: "n_e",
            value: n_e as f64,
            expected: "n_e >= d + 1",
        });
    }
    let df = d as f64;
    let excess = (n_e - d - 1) as f64;
    let exponent = (df - 2.0) / df * excess;
    let lower_base =
        2.0 * excess / (core::f64::consts::E * libm::pow(df, df / (df - 2.0)) * (df - 1.0));
    let upper_base = 2.0 * excess / (df * (df - 1.0));
    Ok((
        0.5 * libm::pow(lower_base, exponent),
        libm::pow(upper_base, exponent),
    ))
}
