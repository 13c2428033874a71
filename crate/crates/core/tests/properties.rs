use motifcorr_core::motif::{canonical_key, enumerate_bounded, Motif, SmallGraph};
use motifcorr_core::roc::{auc, roc_auc};
use motifcorr_core::statistic::{statistic, WeightScheme};
use motifcorr_core::{Centering, SimpleGraph};
use proptest::prelude::*;

fn small_graph() -> impl Strategy<Value = SmallGraph> {
    (2usize..=7).prop_flat_map(|v| {
        let pairs = v * (v - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for b in 1..v {
                for a in 0..b {
                    if bits[k] {
                        edges.push((a, b));
                    }
                    k += 1;
                }
            }
            SmallGraph::from_edges(v, &edges).unwrap()
        })
    })
}

fn simple_graph(n: usize) -> impl Strategy<Value = SimpleGraph> {
    proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
        let mut edges = Vec::new();
        let mut k = 0;
        for u in 0..n {
            for v in u + 1..n {
                if bits[k] {
                    edges.push((u, v));
                }
                k += 1;
            }
        }
        SimpleGraph::from_edges(n, edges).unwrap()
    })
}

proptest! {
    #[test]
    fn key_is_label_invariant(g in small_graph(), seed in any::<u64>()) {
        let v = g.v();
        let mut perm: Vec<usize> = (0..v).collect();
        let mut s = seed;
        for i in (1..v).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let h = g.permuted(&perm);
        prop_assert_eq!(canonical_key(&g), canonical_key(&h));
        prop_assert_eq!(Motif::new(&g).aut(), Motif::new(&h).aut());
    }

    #[test]
    fn motif_text_round_trip(g in small_graph()) {
        let m = Motif::new(&g);
        let back: Motif = m.to_string().parse().unwrap();
        prop_assert_eq!(back.key(), m.key());
    }

    #[test]
    fn edge_list_round_trip(g in simple_graph(9)) {
        let back = SimpleGraph::parse_edge_list(&g.to_edge_list()).unwrap();
        prop_assert_eq!(back, g);
    }

    #[test]
    fn statistic_is_symmetric(a in simple_graph(10), b in simple_graph(10)) {
        let fam = enumerate_bounded(3, 3).unwrap();
        let c = Centering::KnownDensity(0.4);
        let ab = statistic(&a, &b, &fam, WeightScheme::EqualEdges, c).unwrap();
        let ba = statistic(&b, &a, &fam, WeightScheme::EqualEdges, c).unwrap();
        prop_assert!((ab - ba).abs() <= 1e-12 * ab.abs().max(1e-12));
    }

    #[test]
    fn schemes_differ_by_constant(a in simple_graph(9), b in simple_graph(9)) {
        let fam = enumerate_bounded(3, 3).unwrap();
        let c = Centering::KnownDensity(0.3);
        let eq = statistic(&a, &b, &fam, WeightScheme::EqualEdges, c).unwrap();
        let full = statistic(&a, &b, &fam, WeightScheme::FullTheoretical { p: 0.3, rho: 0.7 }, c).unwrap();
        let k = (0.7f64 / 0.21).powi(3);
        prop_assert!((full - k * eq).abs() <= 1e-9 * full.abs().max(1e-12));
    }

    #[test]
    fn auc_matches_pairwise_oracle(
        h0 in proptest::collection::vec(-5i32..5, 1..30),
        h1 in proptest::collection::vec(-5i32..5, 1..30),
    ) {
        let s0: Vec<f64> = h0.iter().map(|&x| x as f64 * 0.5).collect();
        let s1: Vec<f64> = h1.iter().map(|&x| x as f64 * 0.5).collect();
        let mut wins = 0.0;
        for &y in &s1 {
            for &x in &s0 {
                wins += if y > x { 1.0 } else if y == x { 0.5 } else { 0.0 };
            }
        }
        let oracle = wins / (s0.len() * s1.len()) as f64;
        prop_assert!((auc(&s0, &s1).unwrap() - oracle).abs() < 1e-12);
        let curve = roc_auc(&s0, &s1).unwrap();
        prop_assert!((curve.auc - oracle).abs() < 1e-12);
        let trap: f64 = curve.points.windows(2)
            .map(|w| (w[1].fpr - w[0].fpr) * 0.5 * (w[0].tpr + w[1].tpr))
            .sum();
        prop_assert!((trap - oracle).abs() < 1e-12);
    }
}

#[test]
fn roc_examples() {
    assert_eq!(auc(&[0.0, 1.0], &[2.0, 3.0]).unwrap(), 1.0);
    assert_eq!(auc(&[1.0, 2.0, 2.0], &[2.0, 1.0, 2.0]).unwrap(), 0.5);
    assert_eq!(auc(&[1.0, 3.0], &[2.0, 4.0]).unwrap(), 0.75);
    assert!(roc_auc(&[], &[1.0]).is_err());
}
