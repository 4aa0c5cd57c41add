//! Shared strategies and brute-force helpers for unit tests.

use proptest::prelude::*;

use crate::graph::Graph;

pub fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut g = Graph::empty(n);
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if bits[k] {
                g.add_edge(u, v);
            }
            k += 1;
        }
    }
    g
}

/// Arbitrary labelled graphs on 1..=8 nodes.
pub fn arb_graph() -> impl Strategy<Value = Graph> {
    arb_graph_up_to(8)
}

pub fn arb_graph_up_to(max_n: usize) -> impl Strategy<Value = Graph> {
    (1usize..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2)
            .prop_map(move |bits| graph_from_bits(n, &bits))
    })
}

/// Every subset of `0..n` as a bitmask, checked for being a clique.
pub fn brute_force_cliques(g: &Graph) -> Vec<u32> {
    let n = g.n();
    (1u32..1 << n)
        .filter(|&s| {
            (0..n).all(|u| {
                s >> u & 1 == 0 || (u + 1..n).all(|v| s >> v & 1 == 0 || g.has_edge(u, v))
            })
        })
        .collect()
}

pub fn brute_force_maximal_cliques(g: &Graph) -> Vec<Vec<usize>> {
    let cliques = brute_force_cliques(g);
    let mut out: Vec<Vec<usize>> = cliques
        .iter()
        .filter(|&&s| !cliques.iter().any(|&t| t != s && t & s == s))
        .map(|&s| (0..g.n()).filter(|&v| s >> v & 1 == 1).collect())
        .collect();
    out.sort();
    out
}
