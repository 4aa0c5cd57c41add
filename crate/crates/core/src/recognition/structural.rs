use itertools::Itertools;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::sync::OnceLock;

use super::{DominatedSubgraph, Method, RecognitionCertificate, Witness};
use crate::generators::{cycle, three_sun};
use crate::graph::{is_isomorphic, Graph};

/// Members of the obstruction set T.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum TMember {
    C4,
    C5,
    C6,
    S3,
}

impl TMember {
    pub const ALL: [TMember; 4] = [TMember::C4, TMember::C5, TMember::C6, TMember::S3];

    pub fn graph(self) -> &'static Graph {
        static GRAPHS: OnceLock<[Graph; 4]> = OnceLock::new();
        let all = GRAPHS.get_or_init(|| {
            [
                cycle(4).expect("C4"),
                cycle(5).expect("C5"),
                cycle(6).expect("C6"),
                three_sun(),
            ]
        });
        &all[self as usize]
    }
}

impl fmt::Display for TMember {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Which member of T, if any, the graph `h` is.
pub fn classify_t_member(h: &Graph) -> Option<TMember> {
    let degrees = h.degrees();
    match h.n() {
        4..=6 if degrees.iter().all(|&d| d == 2) && h.is_connected() => Some(match h.n() {
            4 => TMember::C4,
            5 => TMember::C5,
            _ => TMember::C6,
        }),
        6 if h.edge_count() == 9 && is_isomorphic(h, TMember::S3.graph()) => Some(TMember::S3),
        _ => None,
    }
}

/// Every induced subgraph isomorphic to a member of T, by subset size and
/// then lexicographically.
pub fn t_subgraphs(g: &Graph) -> Vec<(TMember, Vec<usize>)> {
    let mut out = Vec::new();
    for size in 4..=6 {
        for nodes in (0..g.n()).combinations(size) {
            // Cheap filters before building the induced subgraph: each node
            // of a member of T has 2 or 4 neighbours inside it.
            let inside = |v: usize| nodes.iter().filter(|&&u| g.has_edge(u, v)).count();
            if nodes.iter().any(|&v| !matches!(inside(v), 2 | 4)) {
                continue;
            }
            let h = g.induced_subgraph(&nodes).expect("valid subset");
            if let Some(member) = classify_t_member(&h) {
                out.push((member, nodes));
            }
        }
    }
    out
}

/// Smallest node outside `nodes` adjacent to all of them.
pub fn external_dominator(g: &Graph, nodes: &[usize]) -> Option<usize> {
    (0..g.n()).find(|&v| !nodes.contains(&v) && nodes.iter().all(|&u| g.has_edge(u, v)))
}

/// Accepts `g` iff each induced C4, C5, C6 and 3-sun has a node outside it
/// adjacent to all of its nodes. The negative witness is the first
/// undominated one in [`t_subgraphs`] order.
pub fn find_t_obstruction(g: &Graph) -> RecognitionCertificate {
    let mut subgraphs = Vec::new();
    for (member, nodes) in t_subgraphs(g) {
        match external_dominator(g, &nodes) {
            Some(dominator) => subgraphs.push(DominatedSubgraph {
                member,
                nodes,
                dominator,
            }),
            None => {
                return RecognitionCertificate {
                    method: Method::Structural,
                    verdict: false,
                    witness: Witness::TObstruction { member, nodes },
                }
            }
        }
    }
    RecognitionCertificate {
        method: Method::Structural,
        verdict: true,
        witness: Witness::Dominated { subgraphs },
    }
}
