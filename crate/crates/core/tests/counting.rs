mod common;

use proptest::prelude::*;
use vat_core::counting::{automorphism_count, closed_form_kab, closed_form_odd_cycle_blowup, count_copies};
use vat_core::enumeration::graphs_up_to;
use vat_core::graph::{blowup, construct};
use vat_core::{BigUint, BlowupSpec, Family, Graph};

#[test]
fn automorphisms_match_permutation_scan() {
    for g in graphs_up_to(5, &Default::default()).unwrap() {
        let ident: Vec<usize> = (0..g.order()).collect();
        let target = common::edge_set(&g, &ident);
        let brute = common::permutations(g.order())
            .iter()
            .filter(|p| common::edge_set(&g, p) == target)
            .count();
        assert_eq!(automorphism_count(&g).unwrap(), brute as u128, "{g}");
    }
}

#[test]
fn copies_match_distinct_edge_sets() {
    // distinct images of injective homomorphisms, collected as edge sets
    let hosts = [
        construct(Family::Complete, &[5]).unwrap(),
        construct(Family::CompleteBipartite, &[2, 3]).unwrap(),
        construct(Family::Cycle, &[6]).unwrap(),
    ];
    for h in graphs_up_to(4, &Default::default()).unwrap().into_iter().filter(|h| h.order() > 0) {
        for host in &hosts {
            let mut images = std::collections::BTreeSet::new();
            for perm in common::permutations(host.order()) {
                let map = &perm[..h.order()];
                if h.edges().iter().all(|&(u, v)| host.has_edge(map[u], map[v])) {
                    let mut vs: Vec<usize> = map.to_vec();
                    vs.sort();
                    images.insert((vs, common::edge_set(&h, map)));
                }
            }
            // a copy is a (vertex set, edge set) pair
            assert_eq!(count_copies(&h, host).unwrap(), BigUint::from(images.len()), "{h} in {host}");
        }
    }
}

#[test]
fn kab_closed_form_agrees_with_search() {
    for a in 1..=3 {
        for b in 1..=3 {
            for s in 1..=5 {
                for t in 1..=5 {
                    let pattern = construct(Family::CompleteBipartite, &[a, b]).unwrap();
                    let host = construct(Family::CompleteBipartite, &[s, t]).unwrap();
                    assert_eq!(
                        closed_form_kab(a as u64, b as u64, s as u64, t as u64).unwrap(),
                        count_copies(&pattern, &host).unwrap(),
                        "K_{a},{b} in K_{s},{t}"
                    );
                }
            }
        }
    }
}

proptest! {
    #[test]
    fn odd_cycle_blowup_closed_form(k in 1usize..3, sizes in proptest::collection::vec(1usize..4, 5)) {
        let sizes = sizes[..2 * k + 1].to_vec();
        let base = construct(Family::Cycle, &[2 * k as i64 + 1]).unwrap();
        let host = blowup(&BlowupSpec::new(base.clone(), sizes.clone()).unwrap());
        let sizes64: Vec<u64> = sizes.iter().map(|&s| s as u64).collect();
        prop_assert_eq!(closed_form_odd_cycle_blowup(k, &sizes64).unwrap(), count_copies(&base, &host).unwrap());
    }

    #[test]
    fn counts_grow_with_the_host(h_idx in 0usize..11, edges in proptest::collection::vec((0usize..6, 0usize..6), 0..12), extra in (0usize..6, 0usize..6)) {
        let patterns = graphs_up_to(4, &Default::default()).unwrap();
        let patterns: Vec<&Graph> = patterns.iter().filter(|g| g.order() == 4).collect();
        let h = patterns[h_idx % patterns.len()];
        let edges: Vec<_> = edges.into_iter().filter(|(u, v)| u != v).collect();
        let g = Graph::from_edges(6, &edges).unwrap();
        prop_assume!(extra.0 != extra.1);
        let bigger = g.with_edge(extra.0, extra.1).unwrap();
        prop_assert!(count_copies(h, &bigger).unwrap() >= count_copies(h, &g).unwrap());
    }
}
