use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::require_positive_k;
use crate::error::{check_cap, Result};
use crate::graph::{closed_neighbourhood_matrix, Graph};
use crate::perfection::{polytope_vertices_capped, rational_string, RationalPoint};

/// Node cap for the vertex-based LP relaxation.
pub const MAX_LP_NODES: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LpSolution {
    #[serde(with = "rational_string")]
    pub value: BigRational,
    /// An optimal point of `{x >= 0 : N[G] x <= k}`.
    pub point: RationalPoint,
}

/// `k L^R_1(G)`, the optimum of `max 1.x` over `N[G] x <= k, x >= 0`.
pub fn lp_relaxation_value(g: &Graph, k: u64) -> Result<BigRational> {
    solve_lp_relaxation(g, k).map(|s| s.value)
}

/// Maximizes over the vertices of `P(N[G])` and scales by `k`. The upper
/// bounds of `P` are implied by the unit diagonal, so this is the same
/// polytope as `{x >= 0 : N[G] x <= 1}`. The point returned is the
/// smallest optimal vertex, scaled.
pub fn solve_lp_relaxation(g: &Graph, k: u64) -> Result<LpSolution> {
    require_positive_k(k)?;
    check_cap("LP nodes", MAX_LP_NODES, g.n())?;
    let vertices = polytope_vertices_capped(&closed_neighbourhood_matrix(g), MAX_LP_NODES)?;
    let mut best: Option<(BigRational, &RationalPoint)> = None;
    for v in &vertices {
        let s = v.sum();
        if best.as_ref().is_none_or(|(b, _)| s > *b) {
            best = Some((s, v));
        }
    }
    let (value, point) = best.unwrap_or((BigRational::zero(), &vertices[0]));
    Ok(LpSolution {
        value: value * BigRational::from_integer(k.into()),
        point: point.scaled(k),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, three_sun};
    use crate::testutil::arb_graph_up_to;
    use proptest::prelude::*;

    fn q(p: i64, d: i64) -> BigRational {
        BigRational::new(p.into(), d.into())
    }

    #[test]
    fn named_values() {
        let c4 = cycle(4).unwrap();
        assert_eq!(lp_relaxation_value(&c4, 1).unwrap(), q(4, 3));
        assert_eq!(lp_relaxation_value(&c4, 3).unwrap(), q(4, 1));
        for n in 1..=6 {
            assert_eq!(lp_relaxation_value(&complete(n).unwrap(), 1).unwrap(), q(1, 1));
        }
        let s = solve_lp_relaxation(&three_sun(), 2).unwrap();
        assert_eq!(s.point.sum(), s.value);
        assert_eq!(
            serde_json::to_value(solve_lp_relaxation(&c4, 1).unwrap()).unwrap()["value"],
            "4/3"
        );
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn scales_linearly_and_point_is_feasible(g in arb_graph_up_to(7), k in 1u64..=5) {
            let one = solve_lp_relaxation(&g, 1).unwrap();
            let many = solve_lp_relaxation(&g, k).unwrap();
            prop_assert_eq!(&many.value, &(&one.value * BigRational::from_integer(k.into())));
            let kk = BigRational::from_integer(k.into());
            for v in 0..g.n() {
                let load: BigRational = g.closed_neighbourhood(v).ones().map(|w| many.point.0[w].clone()).sum();
                prop_assert!(load <= kk);
            }
        }
    }
}
