//! Benchmark inputs shared by the criterion benches.

use closedpack::generators::{clique_cycle_family, connected_graphs, cycle, pyramid, three_sun, web, wheel};
use closedpack::Graph;

/// Named graphs of increasing size.
pub fn named_graphs() -> Vec<(&'static str, Graph)> {
    vec![
        ("three_sun", three_sun()),
        ("pyramid_3", pyramid(3).unwrap()),
        ("wheel_10", wheel(10).unwrap()),
        ("cycle_10", cycle(10).unwrap()),
        ("clique_cycle_2", clique_cycle_family(2).unwrap()),
        ("web_12_3", web(12, 3).unwrap()),
    ]
}

/// Every connected graph on `n` nodes.
pub fn census(n: usize) -> Vec<Graph> {
    connected_graphs(n).unwrap().collect()
}
