use super::{branching_order, require_positive_k, PackingFunction, SolveResult, SolveStats, Variant};
use crate::error::{check_cap, Result};
use crate::graph::Graph;

/// Cap on the number of assignments scanned by the brute-force solver.
pub const MAX_BRUTEFORCE_ASSIGNMENTS: u128 = 100_000_000;

/// `L_{k}(G)` by scanning all of `{0..k}^n`.
pub fn solve_kpf_bruteforce(g: &Graph, k: u64) -> Result<SolveResult> {
    solve_bruteforce(g, k, Variant::Kpf)
}

/// Scans every assignment, keeping the best one and, among equal totals,
/// the lexicographically largest in branching order.
pub fn solve_bruteforce(g: &Graph, k: u64, variant: Variant) -> Result<SolveResult> {
    require_positive_k(k)?;
    let n = g.n();
    let cap = variant.value_cap(k);
    let count = (cap as u128 + 1).checked_pow(n as u32).unwrap_or(u128::MAX);
    check_cap("brute-force assignments", MAX_BRUTEFORCE_ASSIGNMENTS as usize, count.min(usize::MAX as u128) as usize)?;

    let order = branching_order(g);
    let closed: Vec<Vec<usize>> = (0..n).map(|v| g.closed_neighbourhood(v).ones().collect()).collect();
    // Digits in branching order; the first digit is most significant.
    let mut digits = vec![0u64; n];
    let mut values = vec![0u64; n];
    let mut best: Option<(u64, Vec<u64>)> = None;
    let mut explored = 0u64;
    loop {
        explored += 1;
        for (i, &v) in order.iter().enumerate() {
            values[v] = digits[i];
        }
        let feasible = closed.iter().all(|nb| nb.iter().map(|&w| values[w]).sum::<u64>() <= k);
        if feasible {
            let total: u64 = digits.iter().sum();
            let better = match &best {
                None => true,
                Some((b, d)) => total > *b || (total == *b && digits > *d),
            };
            if better {
                best = Some((total, digits.clone()));
            }
        }
        let Some(i) = (0..n).rev().find(|&i| digits[i] < cap) else { break };
        digits[i] += 1;
        digits[i + 1..].iter_mut().for_each(|d| *d = 0);
    }

    let (optimum, digits) = best.expect("the zero function is feasible");
    let mut values = vec![0u64; n];
    for (i, &v) in order.iter().enumerate() {
        values[v] = digits[i];
    }
    Ok(SolveResult {
        variant,
        optimum,
        witness: PackingFunction::new(values, k),
        node_order: order,
        stats: SolveStats {
            explored,
            root_lp_bound: None,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::generators::{cycle, path, three_sun};

    #[test]
    fn named_values() {
        assert_eq!(solve_kpf_bruteforce(&cycle(4).unwrap(), 3).unwrap().optimum, 4);
        assert_eq!(solve_kpf_bruteforce(&path(2).unwrap(), 5).unwrap().optimum, 5);
        assert_eq!(solve_kpf_bruteforce(&three_sun(), 1).unwrap().optimum, 1);
        let r = solve_kpf_bruteforce(&cycle(4).unwrap(), 1).unwrap();
        assert_eq!(r.stats.explored, 16);
        assert_eq!(r.witness.values, vec![1, 0, 0, 0]);
    }

    #[test]
    fn cap() {
        // 10^8 assignments is allowed, one more node is not.
        assert!(matches!(
            solve_kpf_bruteforce(&cycle(9).unwrap(), 9),
            Err(Error::CapExceeded { .. })
        ));
        assert!(solve_bruteforce(&path(16).unwrap(), 3, Variant::Limited).is_ok());
    }
}
