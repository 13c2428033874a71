use motifcorr_core::counting::{inj_bruteforce, inj_moebius, MotifCounter};
use motifcorr_core::motif::{enumerate_bounded, Motif};
use motifcorr_core::{center, Centering, SimpleGraph, TrialRng, WeightedCompleteGraph};
use rand::{Rng, SeedableRng};

fn random_w(n: usize, seed: u64) -> WeightedCompleteGraph {
    let mut rng = TrialRng::seed_from_u64(seed);
    WeightedCompleteGraph::from_fn(n, |_, _| rng.gen_range(-1.0..1.0))
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs()).max(1e-300)
}

fn all_motifs_up_to(e_max: usize) -> Vec<Motif> {
    (1..=e_max)
        .flat_map(|e| enumerate_bounded(e, e).unwrap().motifs().to_vec())
        .collect()
}

#[test]
fn moebius_matches_brute_force_grid() {
    let motifs = all_motifs_up_to(5);
    let mut instances = 0;
    let mut worst: f64 = 0.0;
    for n in 5..=8 {
        for seed in 0..10 {
            let w = random_w(n, 1000 * n as u64 + seed);
            for m in &motifs {
                let a = inj_bruteforce(m, &w).unwrap();
                let b = MotifCounter::new(m).inj(&w).unwrap();
                // Absolute floor: small-n counts can cancel to near zero.
                let scale = a.abs().max(1e-6);
                worst = worst.max((a - b).abs() / scale);
                instances += 1;
            }
        }
    }
    assert!(instances >= 400, "{instances}");
    assert!(worst < 1e-9, "worst relative error {worst}");
}

#[test]
fn relabeling_invariance() {
    let w = random_w(9, 5);
    let mut rng = TrialRng::seed_from_u64(6);
    let mut perm: Vec<usize> = (0..9).collect();
    for _ in 0..5 {
        rand::seq::SliceRandom::shuffle(perm.as_mut_slice(), &mut rng);
        let wp = w.relabel(&perm);
        for m in all_motifs_up_to(4) {
            assert!(rel(inj_moebius(&m, &w).unwrap(), inj_moebius(&m, &wp).unwrap()) < 1e-9);
        }
    }
}

#[test]
fn homogeneous_scaling() {
    let w = random_w(8, 11);
    let alpha = -1.7;
    for m in all_motifs_up_to(5) {
        let base = inj_moebius(&m, &w).unwrap();
        let scaled = inj_moebius(&m, &w.scaled(alpha)).unwrap();
        let expect = base * alpha.powi(m.e() as i32);
        assert!((scaled - expect).abs() <= 1e-9 * expect.abs().max(1e-6), "{m}");
    }
}

#[test]
fn unweighted_counts_are_labeled_copies() {
    // Triangles in K4 minus an edge: 2 triangles, each hit by 6 maps.
    let g = SimpleGraph::from_edges(4, [(0, 1), (1, 2), (0, 2), (1, 3), (2, 3)]).unwrap();
    let w = WeightedCompleteGraph::from_fn(4, |u, v| if g.has_edge(u, v) { 1.0 } else { 0.0 });
    let tri = Motif::cycle(3).unwrap();
    assert!((inj_moebius(&tri, &w).unwrap() - 12.0).abs() < 1e-9);
    assert_eq!(inj_bruteforce(&tri, &w).unwrap(), 12.0);
    // C4 appears once, 8 maps.
    let c4 = Motif::cycle(4).unwrap();
    assert!((inj_moebius(&c4, &w).unwrap() - 8.0).abs() < 1e-9);
}

#[test]
fn larger_n_agreement() {
    let mut rng = TrialRng::seed_from_u64(77);
    let g = motifcorr_core::sample_er(25, 0.3, &mut rng).unwrap();
    let w = center(&g, Centering::EmpiricalDensity).unwrap();
    for m in enumerate_bounded(4, 4).unwrap().iter() {
        let a = inj_bruteforce(m, &w).unwrap();
        let b = inj_moebius(m, &w).unwrap();
        assert!(rel(a, b) < 1e-7, "{m}: {a} vs {b}");
    }
}
