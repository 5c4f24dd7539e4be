//! Exhaustive sweeps of the Mycielskian structure over the small-graph corpus.

mod common;

use common::corpus;
use mycdist_core::automorphism::{enumerate_automorphisms, orbit_of};
use mycdist_core::distinguishing::{distinguishing_number, is_distinguishing};
use mycdist_core::mycielskian::{build_mycielskian, validate_facts};
use mycdist_core::{Coloring, Graph, StarShape};

#[test]
fn facts_hold_on_corpus() {
    for g in corpus(7) {
        for t in 1..=3 {
            let (h, layout) = build_mycielskian(&g, t).unwrap();
            assert_eq!(h.order(), (t + 1) * g.order() + 1);
            let report = validate_facts(&g, t, &h, &layout).unwrap();
            assert!(report.all_passed(), "{g:?} t={t}: {report:?}");
            assert_eq!(h.induced_subgraph(&layout.level_vertices(0)), g);
        }
    }
}

#[test]
fn disconnected_sources_have_only_the_root_as_cut_vertex() {
    for g in corpus(6).into_iter().filter(|g| !g.is_connected()) {
        for t in 1..=2 {
            let (h, layout) = build_mycielskian(&g, t).unwrap();
            assert_eq!(h.cut_vertices(), vec![layout.root()], "{g:?} t={t}");
            assert_eq!(orbit_of(&h, layout.root()).unwrap(), vec![layout.root()]);
        }
    }
}

#[test]
fn root_orbits() {
    for g in corpus(6) {
        for t in 1..=2 {
            let (h, layout) = build_mycielskian(&g, t).unwrap();
            let w = layout.root();
            let orbit = orbit_of(&h, w).unwrap();
            match g.classify_star() {
                _ if g.order() == 2 && g.edge_count() == 1 => {
                    assert_eq!(orbit, (0..h.order()).collect::<Vec<_>>());
                }
                StarShape::Star { m, center } if m != 1 => {
                    let shadow = layout.vertex(center, t);
                    assert!(orbit.iter().all(|&v| v == w || v == shadow), "{g:?} t={t}");
                    if t == 1 && (2..=5).contains(&m) {
                        assert_eq!(orbit, vec![shadow, w]);
                    }
                }
                _ => assert_eq!(orbit, vec![w], "{g:?} t={t}"),
            }
        }
    }
}

#[test]
fn group_axioms_on_mycielskians() {
    for g in corpus(4) {
        for t in 1..=2 {
            let (h, _) = build_mycielskian(&g, t).unwrap();
            let listing = enumerate_automorphisms(&h).unwrap();
            if listing.len() <= 10_000 {
                assert!(listing.satisfies_group_axioms(), "{g:?} t={t}");
            }
        }
    }
}

#[test]
fn certificates_are_tight_on_twins() {
    for g in corpus(6) {
        let r = distinguishing_number(&g, None).unwrap();
        assert!(is_distinguishing(&g, &r.certificate).unwrap());
        if let Some(pair) = g.twin_classes().into_iter().find(|c| c.len() >= 2) {
            let mut colors = r.certificate.colors().to_vec();
            colors[pair[1]] = colors[pair[0]];
            let collapsed = Coloring::new(colors, r.value).unwrap();
            assert!(!is_distinguishing(&g, &collapsed).unwrap(), "{g:?}");
        }
    }
}

#[test]
fn edgeless_sources_meet_the_twin_bound() {
    for n in 1..=4 {
        for t in 1..=2 {
            let (h, _) = build_mycielskian(&Graph::empty(n), t).unwrap();
            let r = distinguishing_number(&h, None).unwrap();
            let twins = mycdist_core::distinguishing::twin_lower_bound(&h);
            assert!(r.value >= twins);
            if t * n > 1 {
                assert_eq!(r.value, t * n, "n={n} t={t}");
            }
        }
    }
}
