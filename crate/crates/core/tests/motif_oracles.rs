use std::collections::{BTreeMap, BTreeSet};

use motifcorr_core::motif::{
    aut_count, build_special_family, canonical_key, enumerate_bounded, subgraph_degree_check,
    tree_family, Motif, SmallGraph,
};

fn permutations(k: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for x in 0..used.len() {
            if !used[x] {
                used[x] = true;
                cur.push(x);
                rec(cur, used, out);
                cur.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; k], &mut out);
    out
}

/// Lexicographically smallest adjacency string over all v! relabelings.
fn global_min_form(v: usize, edges: &[(usize, usize)], perms: &[Vec<usize>]) -> Vec<bool> {
    let set: BTreeSet<(usize, usize)> = edges.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
    perms
        .iter()
        .map(|p| {
            // inverse: position i holds original vertex p[i]
            let mut bits = Vec::new();
            for j in 1..v {
                for i in 0..j {
                    let (a, b) = (p[i], p[j]);
                    bits.push(!set.contains(&(a.min(b), a.max(b))));
                }
            }
            bits
        })
        .min()
        .unwrap()
}

fn connected(v: usize, edges: &[(usize, usize)]) -> bool {
    let mut seen = vec![false; v];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(x) = stack.pop() {
        for &(a, b) in edges {
            for (s, t) in [(a, b), (b, a)] {
                if s == x && !seen[t] {
                    seen[t] = true;
                    stack.push(t);
                }
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Isomorphism classes of connected graphs with exactly `e` edges and max
/// degree ≤ d, by exhaustive edge-subset search on `e + 1` vertices.
fn oracle_classes(e: usize, d: usize) -> BTreeSet<(usize, Vec<bool>)> {
    let vmax = e + 1;
    let pairs: Vec<(usize, usize)> = (0..vmax)
        .flat_map(|b| (0..b).map(move |a| (a, b)))
        .collect();
    let mut perms_by_v = BTreeMap::new();
    let mut out = BTreeSet::new();
    let mut choose = |mask: u64| {
        let edges: Vec<(usize, usize)> = (0..pairs.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| pairs[i])
            .collect();
        let mut touched: Vec<usize> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
        touched.sort_unstable();
        touched.dedup();
        let v = touched.len();
        let idx = |x: usize| touched.iter().position(|&t| t == x).unwrap();
        let edges: Vec<(usize, usize)> = edges.iter().map(|&(a, b)| (idx(a), idx(b))).collect();
        let mut deg = vec![0; v];
        for &(a, b) in &edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        if deg.iter().any(|&x| x > d) || !connected(v, &edges) {
            return;
        }
        let perms = perms_by_v.entry(v).or_insert_with(|| permutations(v));
        out.insert((v, global_min_form(v, &edges, perms)));
    };
    for mask in 0u64..(1u64 << pairs.len()) {
        if mask.count_ones() as usize == e {
            choose(mask);
        }
    }
    out
}

#[test]
fn enumeration_matches_exhaustive_oracle() {
    for e in 1..=5 {
        let perms: BTreeMap<usize, Vec<Vec<usize>>> = (1..=e + 1).map(|v| (v, permutations(v))).collect();
        for d in 1..=e.min(4) + 1 {
            let expected = oracle_classes(e, d);
            let fam = match enumerate_bounded(e, d) {
                Ok(f) => f,
                Err(err) => panic!("M({e},{d}): {err}"),
            };
            assert_eq!(fam.len(), expected.len(), "M({e},{d})");
            let got: BTreeSet<(usize, Vec<bool>)> = fam
                .iter()
                .map(|m| (m.v(), global_min_form(m.v(), &m.edges(), &perms[&m.v()])))
                .collect();
            assert_eq!(got, expected, "M({e},{d})");
        }
    }
}

#[test]
fn displayed_family_sizes() {
    assert_eq!(enumerate_bounded(3, 2).unwrap().len(), 2);
    assert_eq!(enumerate_bounded(4, 3).unwrap().len(), 4);
    assert_eq!(enumerate_bounded(4, 4).unwrap().len(), 5);
    assert!(enumerate_bounded(4, 4).unwrap().contains(&Motif::star(4).unwrap()));
}

#[test]
fn families_grow_with_degree_bound() {
    for e in 1..=6 {
        for d in 1..6 {
            let small = enumerate_bounded(e, d).unwrap();
            let big = enumerate_bounded(e, d + 1).unwrap();
            assert!(small.iter().all(|m| big.contains(m)), "M({e},{d}) ⊄ M({e},{})", d + 1);
        }
    }
}

#[test]
fn orbit_stabilizer() {
    for e in 1..=5 {
        for m in &enumerate_bounded(e, e).unwrap() {
            let v = m.v();
            let orbit: BTreeSet<Vec<(usize, usize)>> = permutations(v)
                .iter()
                .map(|p| m.graph().permuted(p).edges())
                .collect();
            let fact: u64 = (1..=v as u64).product();
            assert_eq!(orbit.len() as u64 * m.aut(), fact, "{m}");
            assert_eq!(aut_count(m.graph()), m.aut());
        }
    }
}

#[test]
fn keys_distinguish_and_identify() {
    let fam = enumerate_bounded(6, 6).unwrap();
    let keys: BTreeSet<_> = fam.iter().map(Motif::key).collect();
    assert_eq!(keys.len(), fam.len());
    for m in fam.iter().take(40) {
        let v = m.v();
        let mut p: Vec<usize> = (0..v).rev().collect();
        p.rotate_left(v / 2);
        assert_eq!(canonical_key(&m.graph().permuted(&p)), m.key());
    }
}

#[test]
fn tree_families() {
    let t = tree_family(3, 2).unwrap();
    assert_eq!(t.len(), 1);
    assert!(t.contains(&Motif::path(4).unwrap()));
    let t = tree_family(4, 3).unwrap();
    assert_eq!(t.len(), 2);
    assert!(t.contains(&Motif::path(5).unwrap()));
    let spider = Motif::from_edges(5, &[(0, 1), (1, 2), (0, 3), (0, 4)]).unwrap();
    assert!(t.contains(&spider));
}

#[test]
fn special_members_pass_structure_checks() {
    for (ell, d) in [(1, 3), (2, 3), (1, 4)] {
        let fam = build_special_family(ell, d).unwrap();
        assert!(!fam.is_empty());
        for m in &fam {
            assert_eq!(m.v(), ell * (d - 1) + 4);
            assert_eq!(m.e(), d * (d - 1) / 2 * ell + d + 1);
            assert_eq!(m.max_deg(), d);
            let g: &SmallGraph = m.graph();
            let ones = (0..m.v()).filter(|&a| g.degree(a) == 1).count();
            assert_eq!(ones, 2);
            assert!(m.is_connected());
            assert!(subgraph_degree_check(m, d).unwrap().is_none());
        }
    }
}
