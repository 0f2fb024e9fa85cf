mod common;

use vat_core::enumeration::{graphs_up_to, TuranFunction};
use vat_core::framework::{
    find_very_abstract_number, lemma_containment_check, transfer_check, very_abstract_evidence, BlowupDecomposition,
    Builtin, Candidate, Class, Decomposition, GeneratorFamily, Membership, Partition, Verdict, Window,
};
use vat_core::graph::construct;
use vat_core::params::{hom_exists, p_value};
use vat_core::{BigUint, Family, Graph, Limits};

fn g(f: Family, p: &[i64]) -> Graph {
    construct(f, p).unwrap()
}

#[test]
fn blowup_levels_are_the_least_hom_target() {
    let l = Limits::default();
    let bases = vec![(1, g(Family::Complete, &[2])), (2, g(Family::Cycle, &[5])), (3, g(Family::Complete, &[3]))];
    let d = BlowupDecomposition::new("k2-c5-k3", bases.clone());
    for f in graphs_up_to(5, &l).unwrap() {
        let expected = bases
            .iter()
            .find(|(_, b)| hom_exists(&f, b).unwrap().is_some())
            .map_or(Class::Discard, |(level, _)| Class::Level(*level));
        assert_eq!(d.classify(&f, &l).unwrap(), expected, "{f}");
    }
}

#[test]
fn generators_sit_at_their_level() {
    let l = Limits::default();
    for n in 1..=10 {
        for gf in [Builtin::B1, Builtin::B2] {
            for level in gf.levels(n) {
                let gen = gf.generate(n, level).unwrap();
                assert_eq!(gen.order(), n);
                assert_eq!(gf.classify(&gen, &l).unwrap(), Class::Level(level), "{gen}");
            }
        }
    }
}

#[test]
fn lemma_hypothesis_holds_for_builtins() {
    let l = Limits::default();
    assert!(lemma_containment_check(&Builtin::B1, &[0, 1, 2, 3], &[4, 6, 9], &l).passed);
    assert!(lemma_containment_check(&Builtin::B2, &[-3, -2, -1], &[7, 9, 12], &l).passed);
}

#[test]
fn rainbow_number_is_p_for_bipartite_patterns() {
    let l = Limits::default();
    let window = Window::new(4, 9).unwrap();
    for f in [g(Family::Cycle, &[4]), g(Family::Path, &[4]), g(Family::CompleteBipartite, &[2, 3])] {
        let p = Partition::rainbow(f.clone());
        let r = find_very_abstract_number(&p, &Builtin::B1, &Builtin::B1, window, &l).unwrap();
        assert_eq!(r.verdict, Verdict::Supported, "{f}: {r:?}");
        assert_eq!(r.k, Candidate::Finite(p_value(&f).unwrap() as i64), "{f}");
    }
}

#[test]
fn evidence_checks_generators_against_brute_membership() {
    // independent of the pruned colouring search
    let c4 = g(Family::Cycle, &[4]);
    let p = Partition::rainbow(c4.clone());
    for n in 4..=6 {
        for level in Builtin::B1.levels(n) {
            let gen = Builtin::B1.generate(n, level).unwrap();
            let expected = if common::brute_rainbow_allowed(&gen, &c4) {
                Membership::Allowed
            } else {
                Membership::Forbidden
            };
            assert_eq!(p.allowed(&gen), expected, "{gen}");
        }
    }
}

#[test]
fn wrong_candidates_are_refuted() {
    let l = Limits::default();
    let p = Partition::rainbow(g(Family::Complete, &[3]));
    let w = Window::new(3, 9).unwrap();
    assert_eq!(
        very_abstract_evidence(&p, &Builtin::B2, &Builtin::B2, Candidate::Finite(-1), w, &l).unwrap().verdict,
        Verdict::Supported
    );
    for k in [Candidate::Finite(-2), Candidate::Infinite] {
        let r = very_abstract_evidence(&p, &Builtin::B2, &Builtin::B2, k, w, &l).unwrap();
        assert_eq!(r.verdict, Verdict::Refuted, "{k}");
    }
}

#[test]
fn transfer_lower_bound_holds() {
    let l = Limits::default();
    let c4 = g(Family::Cycle, &[4]);
    let p = Partition::rainbow(c4);
    let w = Window::new(5, 7).unwrap();
    let ev = very_abstract_evidence(&p, &Builtin::B1, &Builtin::B1, Candidate::Finite(2), Window::new(4, 9).unwrap(), &l)
        .unwrap();
    let h = TuranFunction::CopyCount(g(Family::CompleteBipartite, &[1, 3]));
    let r = transfer_check(&p, &Builtin::B1, &h, &ev, w, &l).unwrap();
    assert!(r.passed);
    for e in &r.entries {
        assert_eq!(e.generator_allowed, Membership::Allowed);
        assert_eq!(e.h_generator, Some(vat_core::counting::binomial(e.n as u64 - 1, 3)));
        // the extremal witness really is allowed, by exhaustive colouring
        let w = Graph::from_graph6(&e.extremal.witnesses[0]).unwrap();
        if w.edge_count() <= 10 {
            assert!(common::brute_rainbow_allowed(&w, &g(Family::Cycle, &[4])));
        }
        assert!(e.extremal.value.as_ref().unwrap() >= &BigUint::from(1u32));
    }
}

#[test]
fn transfer_skips_infinite_numbers() {
    let l = Limits::default();
    let p = Partition::all();
    let w = Window::new(3, 5).unwrap();
    let ev = very_abstract_evidence(&p, &Builtin::B1, &Builtin::B1, Candidate::Infinite, w, &l).unwrap();
    let r = transfer_check(&p, &Builtin::B1, &TuranFunction::EdgeCount, &ev, w, &l).unwrap();
    assert!(r.skipped.is_some() && r.entries.is_empty());
}

#[test]
fn memo_is_shared_across_threads() {
    use rayon::prelude::*;
    let l = Limits::default();
    let p = Partition::rainbow(g(Family::Cycle, &[4]));
    let graphs = graphs_up_to(5, &l).unwrap();
    let a: Vec<Membership> = graphs.par_iter().map(|x| p.allowed(x)).collect();
    let b: Vec<Membership> = graphs.iter().map(|x| p.allowed(x)).collect();
    assert_eq!(a, b);
    assert_eq!(p.memo_len(), graphs.len());
}
