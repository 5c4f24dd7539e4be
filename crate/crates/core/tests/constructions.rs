mod common;

use common::{canonical_colorings, corpus};
use mycdist_core::constructions::{
    isolate_case_coloring, kn_base_coloring, lift_coloring, predict_dist, star_case_coloring,
    star_coloring, CaseTag, PredictionKind,
};
use mycdist_core::distinguishing::{distinguishing_number, is_distinguishing};
use mycdist_core::mycielskian::build_mycielskian;
use mycdist_core::{Coloring, Graph, StarShape};

fn assert_distinguishes(g: &Graph, t: usize, c: &Coloring) {
    let (h, _) = build_mycielskian(g, t).unwrap();
    assert!(is_distinguishing(&h, c).unwrap(), "{g:?} t={t} {c:?}");
}

#[test]
fn star_grid() {
    for m in 2..=5 {
        for t in 1..=3 {
            let c = star_case_coloring(m, t).unwrap();
            assert_eq!(c.distinct_colors(), m);
            assert_distinguishes(&Graph::star(m), t, &c);
        }
    }
}

#[test]
fn kn_grid() {
    for n in 3..=6 {
        for t in 1..=3 {
            if t == 3 && n > 4 {
                continue;
            }
            let (k, c) = kn_base_coloring(n, t).unwrap();
            assert!(k.pow(t as u32 + 1) >= n && (k - 1).pow(t as u32 + 1) < n);
            assert_eq!(c.distinct_colors(), k);
            assert_distinguishes(&Graph::complete(n), t, &c);
        }
    }
}

#[test]
fn kn_palette_is_optimal() {
    for n in 3..=5 {
        for t in 1..=2 {
            let (k, _) = kn_base_coloring(n, t).unwrap();
            let (h, _) = build_mycielskian(&Graph::complete(n), t).unwrap();
            for colors in canonical_colorings(h.order(), k - 1) {
                let c = Coloring::new(colors, k - 1).unwrap();
                assert!(!is_distinguishing(&h, &c).unwrap(), "n={n} t={t}");
            }
        }
    }
}

/// Runs whichever construction applies to `(g, t)` over the corpus, checking
/// every output.
#[test]
fn corpus_grid() {
    let mut counts = [0usize; 3];
    for g in corpus(6) {
        let dist = distinguishing_number(&g, None).unwrap();
        for t in 1..=2 {
            let prediction = predict_dist(&g, t, dist.value).unwrap();
            match prediction.case {
                CaseTag::IsolateDominated => {
                    let c = isolate_case_coloring(&g, t, &dist.certificate).unwrap();
                    assert_eq!(c.distinct_colors(), prediction.value);
                    assert_distinguishes(&g, t, &c);
                    counts[0] += 1;
                }
                CaseTag::Generic => match g.classify_star() {
                    StarShape::Star { m, .. } if m >= 2 => {
                        assert_distinguishes(&g, t, &star_coloring(&g, t).unwrap());
                        counts[1] += 1;
                    }
                    _ => {
                        for w_color in [1, dist.value] {
                            let c = lift_coloring(&g, t, &dist.certificate, w_color).unwrap();
                            assert!(c.distinct_colors() <= dist.value);
                            assert_distinguishes(&g, t, &c);
                        }
                        counts[2] += 1;
                    }
                },
                _ => {}
            }
        }
    }
    assert!(counts.iter().all(|&c| c > 0), "{counts:?}");
}

#[test]
fn predictions_hold_on_corpus() {
    for g in corpus(6) {
        let dist_g = distinguishing_number(&g, None).unwrap().value;
        for t in 1..=2 {
            let prediction = predict_dist(&g, t, dist_g).unwrap();
            assert_eq!(
                prediction.kind == PredictionKind::UpperBound,
                prediction.case == CaseTag::Generic
            );
            let (h, _) = build_mycielskian(&g, t).unwrap();
            let measured = distinguishing_number(&h, None).unwrap().value;
            assert!(
                prediction.admits(measured),
                "{g:?} t={t}: {prediction:?} vs {measured}"
            );
        }
    }
}

#[test]
fn complete_graph_law() {
    for n in 3..=6 {
        for t in 1..=2 {
            let (k, _) = kn_base_coloring(n, t).unwrap();
            let (h, _) = build_mycielskian(&Graph::complete(n), t).unwrap();
            assert_eq!(
                distinguishing_number(&h, None).unwrap().value,
                k,
                "n={n} t={t}"
            );
            if t == 1 {
                assert_eq!(k, (1..).find(|r| r * r >= n).unwrap());
            }
        }
    }
}
