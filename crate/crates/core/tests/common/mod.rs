#![allow(dead_code)]

use mycdist_core::graph6::parse_graph6;
use mycdist_core::Graph;
use proptest::prelude::*;

pub const UPTO7: &str = include_str!("../../../../corpus/graphs_upto7.g6");

pub fn corpus(max_n: usize) -> Vec<Graph> {
    UPTO7
        .lines()
        .map(|line| parse_graph6(line.as_bytes()).unwrap())
        .filter(|g| g.order() <= max_n)
        .collect()
}

/// Random simple graph on `1..=max_n` vertices.
pub fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut idx = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[idx] {
                        edges.push((u, v));
                    }
                    idx += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

/// All restricted growth strings of length `n` over at most `k` values.
pub fn canonical_colorings(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, n: usize, k: usize, used: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for c in 1..=k.min(used + 1) {
            prefix.push(c);
            go(prefix, n, k, used.max(c), out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if k > 0 || n == 0 {
        go(&mut Vec::new(), n, k, 0, &mut out);
    }
    out
}
