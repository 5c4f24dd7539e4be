//! Fast paths checked against exhaustive reference computations on every
//! graph of the small-graph corpus.

use mycdist_core::automorphism::{
    enumerate_automorphisms, enumerate_automorphisms_naive, group_summary, is_automorphism,
};
use mycdist_core::distinguishing::{
    distinguishing_number, distinguishing_number_bruteforce, is_distinguishing,
};
use mycdist_core::graph6::parse_graph6;
use mycdist_core::Graph;

const CORPUS: &str = include_str!("../../../corpus/graphs_upto7.g6");

fn corpus() -> Vec<Graph> {
    CORPUS
        .lines()
        .map(|line| parse_graph6(line.as_bytes()).unwrap())
        .collect()
}

#[test]
fn corpus_has_every_graph_up_to_seven_vertices() {
    let counts = corpus().iter().fold([0usize; 8], |mut acc, g| {
        acc[g.order()] += 1;
        acc
    });
    assert_eq!(counts, [0, 1, 2, 4, 11, 34, 156, 1044]);
}

#[test]
fn listing_matches_naive_filter() {
    for g in corpus() {
        let fast = enumerate_automorphisms(&g).unwrap();
        let naive = enumerate_automorphisms_naive(&g).unwrap();
        assert_eq!(fast.elements(), naive.elements(), "{g:?}");
        assert!(fast.satisfies_group_axioms());
        for p in fast.elements() {
            assert!(is_automorphism(&g, p).unwrap());
        }
        let summary = group_summary(&g, None).unwrap();
        assert_eq!(summary.order, fast.len() as u128);
    }
}

#[test]
fn distinguishing_number_matches_bruteforce() {
    for g in corpus() {
        let fast = distinguishing_number(&g, None).unwrap();
        let slow = distinguishing_number_bruteforce(&g).unwrap();
        assert_eq!(fast.value, slow.value, "{g:?}");
        assert_eq!(fast.certificate.distinct_colors(), fast.value);
        assert!(is_distinguishing(&g, &fast.certificate).unwrap());
    }
}

#[test]
fn one_color_exactly_when_group_is_trivial() {
    for g in corpus() {
        let trivial = enumerate_automorphisms(&g).unwrap().len() == 1;
        assert_eq!(
            distinguishing_number(&g, None).unwrap().value == 1,
            trivial,
            "{g:?}"
        );
    }
}
