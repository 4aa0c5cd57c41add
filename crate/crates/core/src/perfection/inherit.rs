use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use super::{is_perfect_graph, MAX_PERFECT_GRAPH_NODES};
use crate::error::{check_cap, Result};
use crate::graph::{closed_neighbourhood_matrix, Graph};
use crate::recognition::clique_graph;

/// Evaluation of the inherited-imperfection rule on `(G, G')`, where `G'`
/// is the subgraph induced by a node subset `V'` and `U` is the rest.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct InheritanceCheck {
    /// The clique graph of N[G'] is imperfect.
    pub sub_clique_graph_imperfect: bool,
    /// Every `v` in `V'` has `N(v) ⊆ N(w)` for some `w` in `U`.
    pub statement_hypothesis: bool,
    /// Every `v` in `U` has `N(v) ∩ V' ⊆ N[w]` for some `w` in `V'`.
    pub proof_hypothesis: bool,
    pub readings_diverge: bool,
    /// The clique graph of N[G] restricted to `V'` equals that of N[G'].
    pub restriction_matches: bool,
    /// `sub_clique_graph_imperfect` and `proof_hypothesis`.
    pub applicable: bool,
    pub clique_graph_imperfect: bool,
    /// Not applicable, or the clique graph of N[G] is indeed imperfect.
    pub consistent: bool,
}

/// Checks whether the clique graph of N[G] is imperfect alongside the two
/// readings of the hypothesis that should force it.
pub fn check_inherited_imperfection(g: &Graph, sub: &[usize]) -> Result<InheritanceCheck> {
    check_cap("graph nodes", MAX_PERFECT_GRAPH_NODES, g.n())?;
    let h = g.induced_subgraph(sub)?;
    let n = g.n();
    let mut inside = FixedBitSet::with_capacity(n);
    inside.extend(sub.iter().copied());
    let outside: Vec<usize> = (0..n).filter(|&v| !inside.contains(v)).collect();

    let statement_hypothesis = sub
        .iter()
        .all(|&v| outside.iter().any(|&w| g.neighbours(v).is_subset(g.neighbours(w))));
    let proof_hypothesis = outside.iter().all(|&v| {
        let mut seen = g.neighbours(v).clone();
        seen.intersect_with(&inside);
        sub.iter().any(|&w| seen.is_subset(&g.closed_neighbourhood(w)))
    });

    let q = clique_graph(&closed_neighbourhood_matrix(g))?;
    let sub_q = clique_graph(&closed_neighbourhood_matrix(&h))?;
    let restriction_matches = q.induced_subgraph(sub)? == sub_q;
    let sub_clique_graph_imperfect = !is_perfect_graph(&sub_q)?.perfect;
    let clique_graph_imperfect = !is_perfect_graph(&q)?.perfect;
    let applicable = sub_clique_graph_imperfect && proof_hypothesis;
    Ok(InheritanceCheck {
        sub_clique_graph_imperfect,
        statement_hypothesis,
        proof_hypothesis,
        readings_diverge: statement_hypothesis != proof_hypothesis,
        restriction_matches,
        applicable,
        clique_graph_imperfect,
        consistent: !applicable || clique_graph_imperfect,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{clique_cycle_family, complete, cycle};
    use crate::testutil::arb_graph;
    use proptest::prelude::*;

    #[test]
    fn whole_graph_as_subgraph() {
        let g = clique_cycle_family(2).unwrap();
        let all: Vec<usize> = (0..g.n()).collect();
        let c = check_inherited_imperfection(&g, &all).unwrap();
        assert!(c.applicable && c.clique_graph_imperfect && c.consistent);

        let c9 = cycle(9).unwrap();
        let c = check_inherited_imperfection(&c9, &(0..9).collect::<Vec<_>>()).unwrap();
        assert!(c.applicable && c.clique_graph_imperfect);
        // U is empty, so the statement reading fails for lack of any w.
        assert!(c.readings_diverge);
    }

    #[test]
    fn complete_graph_is_never_applicable() {
        let k5 = complete(5).unwrap();
        for sub in [vec![0], vec![0, 2], vec![1, 2, 3, 4], vec![0, 1, 2, 3, 4]] {
            let c = check_inherited_imperfection(&k5, &sub).unwrap();
            assert!(!c.sub_clique_graph_imperfect && !c.applicable && c.consistent);
        }
    }

    #[test]
    fn hole_with_pendant_dominated_neighbours() {
        // C7 plus a node 7 adjacent to 0 and 1: N(7) ∩ V' = {0, 1} ⊆ N[0].
        let mut g = Graph::empty(8);
        for (u, v) in cycle(7).unwrap().edges() {
            g.add_edge(u, v);
        }
        g.add_edge(7, 0);
        g.add_edge(7, 1);
        let c = check_inherited_imperfection(&g, &(0..7).collect::<Vec<_>>()).unwrap();
        assert!(c.proof_hypothesis && c.restriction_matches && c.applicable);
        assert!(c.clique_graph_imperfect);
    }

    #[test]
    fn bad_subsets_are_errors() {
        let g = cycle(5).unwrap();
        assert!(check_inherited_imperfection(&g, &[]).is_err());
        assert!(check_inherited_imperfection(&g, &[5]).is_err());
    }

    proptest! {
        #[test]
        fn proof_reading_is_sound(g in arb_graph(), mask in any::<u8>()) {
            let sub: Vec<usize> = (0..g.n()).filter(|&v| mask >> v & 1 == 1).collect();
            prop_assume!(!sub.is_empty());
            let c = check_inherited_imperfection(&g, &sub).unwrap();
            prop_assert!(!c.proof_hypothesis || c.restriction_matches);
            prop_assert!(c.consistent);
        }
    }
}
