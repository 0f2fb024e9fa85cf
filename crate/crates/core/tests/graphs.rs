mod common;

use proptest::prelude::*;
use vat_core::graph::{
    balanced_blowup, blowup, canonical_labeling, canonicalize, construct, contains_subgraph, is_isomorphic,
};
use vat_core::{BlowupSpec, Family, Graph};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = common::all_pairs(n);
        proptest::collection::vec(any::<bool>(), pairs.len()).prop_map(move |bits| {
            let edges: Vec<_> = pairs.iter().zip(bits).filter(|(_, b)| *b).map(|(e, _)| *e).collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn arb_perm(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #[test]
    fn canonical_form_is_relabelling_invariant(
        (g, perm) in arb_graph(9).prop_flat_map(|g| { let n = g.order(); (Just(g), arb_perm(n)) })
    ) {
        let h = g.permuted(&perm);
        prop_assert_eq!(canonicalize(&g), canonicalize(&h));
        let lab = canonical_labeling(&g);
        prop_assert_eq!(g.permuted(&lab), canonicalize(&g));
    }

    #[test]
    fn isomorphism_agrees_with_permutation_scan(a in arb_graph(5), b in arb_graph(5)) {
        prop_assert_eq!(is_isomorphic(&a, &b), common::brute_isomorphic(&a, &b));
    }

    #[test]
    fn graph6_round_trip(g in arb_graph(70)) {
        let s = g.to_graph6();
        prop_assert!(s.bytes().all(|b| (63..=126).contains(&b)));
        prop_assert_eq!(Graph::from_graph6(&s).unwrap(), g);
    }

    #[test]
    fn containment_agrees_with_injection_scan(host in arb_graph(6), pattern in arb_graph(4)) {
        let found = contains_subgraph(&host, &pattern).unwrap();
        let brute = common::brute_injective_homs(&pattern, &host) > 0;
        prop_assert_eq!(found.is_some(), brute);
        if let Some(e) = found {
            prop_assert!(e.is_valid(&pattern, &host));
        }
    }

    #[test]
    fn balanced_blowup_sizes(base in arb_graph(6).prop_filter("non-empty", |g| g.order() > 0), extra in 0usize..30) {
        let n = base.order() + extra;
        let spec = balanced_blowup(&base, n).unwrap();
        let sizes = spec.part_sizes();
        prop_assert_eq!(sizes.iter().sum::<usize>(), n);
        prop_assert!(sizes.iter().max().unwrap() - sizes.iter().min().unwrap() <= 1);
        prop_assert!(sizes.windows(2).all(|w| w[0] >= w[1]));
    }

    #[test]
    fn blowup_edges_follow_parts(base in arb_graph(5), sizes in proptest::collection::vec(0usize..4, 5)) {
        let sizes = sizes[..base.order()].to_vec();
        let spec = BlowupSpec::new(base.clone(), sizes.clone()).unwrap();
        let g = blowup(&spec);
        let expected: usize = base.edges().iter().map(|&(u, v)| sizes[u] * sizes[v]).sum();
        prop_assert_eq!(g.edge_count(), expected);
        let part = spec.part_of();
        for (x, y) in g.edges() {
            prop_assert!(base.has_edge(part[x], part[y]));
        }
    }
}

#[test]
fn unit_blowup_is_the_base() {
    for base in vat_core::enumeration::graphs_up_to(5, &Default::default()).unwrap() {
        let spec = BlowupSpec::new(base.clone(), vec![1; base.order()]).unwrap();
        assert_eq!(blowup(&spec), base);
    }
}

#[test]
fn canonical_form_matches_brute_certificate_classes() {
    // two graphs share a canonical form exactly when they share the brute
    // certificate; checked over every labelled graph on 5 vertices
    use std::collections::HashMap;
    let mut by_cert: HashMap<Vec<(usize, usize)>, Graph> = HashMap::new();
    let mut by_canon: HashMap<Graph, Vec<(usize, usize)>> = HashMap::new();
    for g in common::labelled_graphs(5) {
        let cert = common::brute_certificate(&g);
        let canon = canonicalize(&g);
        if let Some(prev) = by_cert.insert(cert.clone(), canon.clone()) {
            assert_eq!(prev, canon);
        }
        if let Some(prev) = by_canon.insert(canon, cert.clone()) {
            assert_eq!(prev, cert);
        }
    }
    assert_eq!(by_cert.len(), 34);
}

#[test]
fn canonical_form_separates_regular_graphs() {
    // C_6 and two triangles, the prism and K_{3,3}: same degree sequences
    let c6 = construct(Family::Cycle, &[6]).unwrap();
    let two_k3 = construct(Family::Complete, &[3]).unwrap().disjoint_union(&construct(Family::Complete, &[3]).unwrap());
    assert_ne!(canonicalize(&c6), canonicalize(&two_k3));
    let prism = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]).unwrap();
    let k33 = construct(Family::CompleteBipartite, &[3, 3]).unwrap();
    assert_ne!(canonicalize(&prism), canonicalize(&k33));
    assert!(!common::brute_isomorphic(&prism, &k33));
}

#[test]
fn malformed_graph6_reports_offsets() {
    for (s, offset) in [("D?", 2), ("", 0), ("D?\u{7f}??", 2), ("~?", 2)] {
        match Graph::from_graph6(s) {
            Err(vat_core::Error::Graph6 { offset: o, .. }) => assert_eq!(o, offset, "{s:?}"),
            other => panic!("{s:?}: {other:?}"),
        }
    }
}
