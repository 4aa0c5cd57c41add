use serde::{Deserialize, Serialize};

use crate::error::{check_cap, Result};
use crate::graph::{find_induced_cycle, Graph};
use crate::labels;

/// Node cap for odd hole and antihole search.
pub const MAX_PERFECT_GRAPH_NODES: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OddKind {
    Hole,
    Antihole,
}

/// An odd hole of the graph, or an odd hole of its complement.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OddWitness {
    pub kind: OddKind,
    #[serde(with = "labels::many")]
    pub cycle: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphPerfection {
    pub perfect: bool,
    pub witness: Option<OddWitness>,
}

/// A chordless cycle of odd length at least 5. The cycle starts at its
/// smallest node and its second node is smaller than its last.
pub fn find_odd_hole(g: &Graph) -> Result<Option<Vec<usize>>> {
    check_cap("graph nodes", MAX_PERFECT_GRAPH_NODES, g.n())?;
    Ok(find_induced_cycle(g, 5, |c| c.len() % 2 == 1))
}

/// Perfect means no odd hole and no odd antihole.
pub fn is_perfect_graph(g: &Graph) -> Result<GraphPerfection> {
    let witness = match find_odd_hole(g)? {
        Some(cycle) => Some(OddWitness { kind: OddKind::Hole, cycle }),
        None => find_odd_hole(&g.complement())?.map(|cycle| OddWitness {
            kind: OddKind::Antihole,
            cycle,
        }),
    };
    Ok(GraphPerfection {
        perfect: witness.is_none(),
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::generators::{antiweb, complete, cycle, path, web};
    use crate::testutil::arb_graph;
    use itertools::Itertools;
    use proptest::prelude::*;

    fn is_chordless_cycle(g: &Graph, c: &[usize]) -> bool {
        let k = c.len();
        (0..k).all(|i| {
            (0..k).all(|j| {
                let d = (i + k - j) % k;
                g.has_edge(c[i], c[j]) == (d == 1 || d == k - 1)
            })
        })
    }

    /// Looks at every node subset of odd size at least 5 and asks whether
    /// it induces a 2-regular connected graph.
    fn has_odd_hole_by_subsets(g: &Graph) -> bool {
        (5..=g.n()).step_by(2).any(|size| {
            (0..g.n()).combinations(size).any(|s| {
                let h = g.induced_subgraph(&s).unwrap();
                h.degrees().iter().all(|&d| d == 2) && h.is_connected()
            })
        })
    }

    #[test]
    fn named_graphs() {
        assert_eq!(find_odd_hole(&cycle(5).unwrap()).unwrap(), Some(vec![0, 1, 2, 3, 4]));
        assert_eq!(find_odd_hole(&cycle(6).unwrap()).unwrap(), None);
        assert_eq!(find_odd_hole(&path(8).unwrap()).unwrap(), None);
        // W_7^2 is the complement of C_7: imperfect through an antihole only.
        let w72 = web(7, 2).unwrap();
        assert_eq!(find_odd_hole(&w72).unwrap(), None);
        let verdict = is_perfect_graph(&w72).unwrap();
        assert_eq!(verdict.witness.unwrap().kind, OddKind::Antihole);
        let hole = find_odd_hole(&web(9, 2).unwrap()).unwrap().unwrap();
        assert!(is_chordless_cycle(&web(9, 2).unwrap(), &hole));
        assert!(is_perfect_graph(&web(6, 2).unwrap()).unwrap().perfect);
        assert!(is_perfect_graph(&complete(7).unwrap()).unwrap().perfect);
        let c7bar = antiweb(7, 1).unwrap();
        let verdict = is_perfect_graph(&c7bar).unwrap();
        assert_eq!(verdict.witness.unwrap().kind, OddKind::Antihole);
    }

    #[test]
    fn cap() {
        assert!(matches!(
            find_odd_hole(&cycle(17).unwrap()),
            Err(Error::CapExceeded { .. })
        ));
        assert!(find_odd_hole(&cycle(16).unwrap()).unwrap().is_none());
    }

    #[test]
    fn witness_serializes_with_labels() {
        let v = is_perfect_graph(&cycle(5).unwrap()).unwrap();
        assert_eq!(
            serde_json::to_string(&v).unwrap(),
            r#"{"perfect":false,"witness":{"kind":"hole","cycle":[1,2,3,4,5]}}"#
        );
    }

    proptest! {
        #[test]
        fn hole_search_matches_subsets(g in arb_graph()) {
            let found = find_odd_hole(&g).unwrap();
            prop_assert_eq!(found.is_some(), has_odd_hole_by_subsets(&g));
            if let Some(c) = found {
                prop_assert!(c.len() % 2 == 1 && c.len() >= 5);
                prop_assert!(is_chordless_cycle(&g, &c));
            }
        }

        #[test]
        fn perfection_is_self_complementary(g in arb_graph()) {
            prop_assert_eq!(
                is_perfect_graph(&g).unwrap().perfect,
                is_perfect_graph(&g.complement()).unwrap().perfect
            );
        }
    }
}
