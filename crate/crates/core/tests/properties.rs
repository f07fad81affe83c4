use hdensity::bounds::build_bound_poly;
use hdensity::graphs::{
    all_connected_graphs, canonical_graph6, construct_family, enumerate_regular_range, parse_graph6, write_graph6,
    Family, Graph,
};
use hdensity::homomorphism::{hom_count, hom_via_inj_sum, inj_count, inj_via_moebius};
use hdensity::spectral::{eval_poly_sum, trace_power, traces};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn graph(max_order: usize) -> impl Strategy<Value = Graph> {
    (1..=max_order).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            let edges: Vec<(usize, usize)> = pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e).collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn connected_pattern(max_order: usize) -> impl Strategy<Value = Graph> {
    let patterns: Vec<Graph> = (1..=max_order).flat_map(|n| all_connected_graphs(n).unwrap()).collect();
    prop::sample::select(patterns)
}

fn cycle(k: usize) -> Graph {
    construct_family(&Family::Cycle(k)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn inversion_round_trips(h in connected_pattern(5), g in graph(7)) {
        prop_assert_eq!(hom_via_inj_sum(&h, &g).unwrap(), hom_count(&h, &g));
        prop_assert_eq!(inj_via_moebius(&h, &g).unwrap(), inj_count(&h, &g) as i128);
    }

    #[test]
    fn traces_count_closed_walks(g in graph(9), k in 3usize..=8) {
        prop_assert_eq!(trace_power(&g, k).unwrap(), hom_count(&cycle(k), &g) as i128);
    }

    #[test]
    fn double_cover(g in graph(7), h in connected_pattern(5)) {
        let cover = g.bipartite_double_cover();
        prop_assert!(cover.is_bipartite());
        let (a, b) = (traces(&g, 8).unwrap(), traces(&cover, 8).unwrap());
        for k in 0..=8 {
            prop_assert_eq!(b[k], if k % 2 == 1 { 0 } else { 2 * a[k] });
        }
        if h.is_bipartite() {
            prop_assert!(inj_count(&h, &cover) >= 2 * inj_count(&h, &g));
        }
    }

    #[test]
    fn graph6_round_trip(g in graph(70)) {
        let s = write_graph6(&g);
        let back = parse_graph6(&s).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(write_graph6(&back), s);
    }

    #[test]
    fn canonical_form_ignores_labels(g in graph(9), seed in any::<u64>()) {
        let n = g.order();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        prop_assert_eq!(canonical_graph6(&g.relabel(&perm)).unwrap(), canonical_graph6(&g).unwrap());
    }
}

#[test]
fn bounds_dominate_counts_on_quintic_graphs() {
    let corpus = enumerate_regular_range(6..=10, 5, true).unwrap();
    for h in (3..=5).flat_map(|n| all_connected_graphs(n).unwrap()).filter(|h| !h.is_tree()) {
        let cert = build_bound_poly(&h, None).unwrap();
        for g in &corpus {
            let sum = eval_poly_sum(&cert.poly, g, 5).unwrap();
            let inj = BigRational::from_integer(BigInt::from(inj_count(&h, g)));
            assert!(sum >= inj, "{} on {}", write_graph6(&h), write_graph6(g));
        }
    }
}
