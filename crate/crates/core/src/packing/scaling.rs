use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::{lp, solve_kpf, solve_limited_packing};
use crate::error::Result;
use crate::graph::{closed_neighbourhood_matrix, Graph};
use crate::perfection::{is_perfect_matrix, option_rational_string};

/// `L_{k}(G)` next to `k L_1(G)`, with the LP value and whether N[G] is
/// perfect when those are within reach.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScalingReport {
    pub k: u64,
    pub kpf: u64,
    pub limited_1: u64,
    pub limited_k: u64,
    pub k_times_limited_1: u64,
    /// `L^R_1(G)`, present up to the LP node cap.
    #[serde(default, with = "option_rational_string", skip_serializing_if = "Option::is_none")]
    pub lp_1: Option<BigRational>,
    /// Whether N[G] is perfect, present up to the LP node cap.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix_perfect: Option<bool>,
    /// `L_{k} == k L_1`.
    pub equality: bool,
    /// `L_{k} >= k L_1` and `L_k <= L_{k}`.
    pub inequalities_hold: bool,
    /// Not perfect, or equality holds.
    pub implication_holds: bool,
}

pub fn check_scaling_identity(g: &Graph, k: u64) -> Result<ScalingReport> {
    let kpf = solve_kpf(g, k)?.optimum;
    let limited_1 = solve_limited_packing(g, 1)?.optimum;
    let limited_k = solve_limited_packing(g, k)?.optimum;
    let (lp_1, matrix_perfect) = if g.n() <= lp::MAX_LP_NODES {
        (
            Some(lp::lp_relaxation_value(g, 1)?),
            Some(is_perfect_matrix(&closed_neighbourhood_matrix(g))?.perfect),
        )
    } else {
        (None, None)
    };
    let k_times_limited_1 = k * limited_1;
    let equality = kpf == k_times_limited_1;
    Ok(ScalingReport {
        k,
        kpf,
        limited_1,
        limited_k,
        k_times_limited_1,
        lp_1,
        matrix_perfect,
        equality,
        inequalities_hold: kpf >= k_times_limited_1 && limited_k <= kpf,
        implication_holds: matrix_perfect != Some(true) || equality,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cycle, three_sun, wheel};

    #[test]
    fn named_graphs() {
        let r = check_scaling_identity(&wheel(6).unwrap(), 3).unwrap();
        assert!(r.equality && r.matrix_perfect == Some(true) && r.implication_holds);

        let r = check_scaling_identity(&three_sun(), 3).unwrap();
        assert_eq!((r.kpf, r.limited_1), (4, 1));
        assert!(!r.equality && r.inequalities_hold && r.implication_holds);
        assert_eq!(r.matrix_perfect, Some(false));

        let r = check_scaling_identity(&cycle(4).unwrap(), 2).unwrap();
        assert!(r.equality && r.matrix_perfect == Some(false));
    }

    #[test]
    fn c4_values() {
        let c4 = cycle(4).unwrap();
        for k in 1..=9u64 {
            let r = check_scaling_identity(&c4, k).unwrap();
            assert_eq!(r.kpf, 4 * k / 3, "k = {k}");
            // 3 L_{k} <= 4k sums the four constraints; (2,1,1,1) reaches 5 at k = 4.
            assert_eq!(r.equality, k <= 2);
        }
    }

    #[test]
    fn json_round_trip() {
        let r = check_scaling_identity(&cycle(4).unwrap(), 3).unwrap();
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.contains(r#""lp_1":"4/3""#));
        assert_eq!(serde_json::from_str::<ScalingReport>(&json).unwrap(), r);
        let big = check_scaling_identity(&cycle(11).unwrap(), 2).unwrap();
        assert!(!serde_json::to_string(&big).unwrap().contains("lp_1"));
    }
}
