use std::ops::ControlFlow;

use super::{lp, require_positive_k, PackingFunction, SolveResult, SolveStats, Variant};
use crate::error::{check_cap, Result};
use crate::graph::Graph;

/// Node cap for the branch-and-bound solvers.
pub const MAX_SOLVER_NODES: usize = 24;

/// Nodes by descending degree, ties by label.
pub fn branching_order(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    order
}

/// `L_{k}(G)` with an optimal witness.
pub fn solve_kpf(g: &Graph, k: u64) -> Result<SolveResult> {
    solve(g, k, Variant::Kpf)
}

/// `L_k(G)` with an optimal witness.
pub fn solve_limited_packing(g: &Graph, k: u64) -> Result<SolveResult> {
    solve(g, k, Variant::Limited)
}

/// Depth-first branch-and-bound over the nodes in [`branching_order`],
/// trying the largest feasible value first. The first optimum reached is
/// the lexicographically largest one, and only strict improvements replace
/// the incumbent, so that is the witness returned.
pub fn solve(g: &Graph, k: u64, variant: Variant) -> Result<SolveResult> {
    require_positive_k(k)?;
    check_cap("solver nodes", MAX_SOLVER_NODES, g.n())?;
    let order = branching_order(g);
    let root_lp_bound = if g.n() <= lp::MAX_LP_NODES {
        let value = lp::lp_relaxation_value(g, k)?;
        Some(value.floor().to_integer().try_into().expect("bound fits in u64"))
    } else {
        None
    };

    let mut search = Search::new(g, k, variant, &order);
    search.target = root_lp_bound;
    let _ = search.dfs(0, 0);
    let explored = search.explored;
    let (optimum, values) = search.best.expect("the zero function is always reached");
    Ok(SolveResult {
        variant,
        optimum,
        witness: PackingFunction::new(values, k),
        node_order: order,
        stats: SolveStats {
            explored,
            root_lp_bound,
        },
    })
}

struct Search<'a> {
    closed: Vec<Vec<usize>>,
    order: &'a [usize],
    value_cap: u64,
    residual: Vec<u64>,
    values: Vec<u64>,
    /// Nodes whose closed neighbourhood meets `order[i..]`, as a bitmask.
    reach: Vec<u32>,
    /// Smallest closed neighbourhood among `order[i..]`.
    min_size: Vec<u64>,
    best: Option<(u64, Vec<u64>)>,
    target: Option<u64>,
    explored: u64,
}

impl<'a> Search<'a> {
    fn new(g: &Graph, k: u64, variant: Variant, order: &'a [usize]) -> Self {
        let n = g.n();
        let closed: Vec<Vec<usize>> = (0..n).map(|v| g.closed_neighbourhood(v).ones().collect()).collect();
        let mut reach = vec![0u32; n + 1];
        let mut min_size = vec![u64::MAX; n + 1];
        for i in (0..n).rev() {
            let u = order[i];
            reach[i] = closed[u].iter().fold(reach[i + 1], |m, &w| m | 1 << w);
            min_size[i] = min_size[i + 1].min(closed[u].len() as u64);
        }
        Search {
            closed,
            order,
            value_cap: variant.value_cap(k),
            residual: vec![k; n],
            values: vec![0; n],
            reach,
            min_size,
            best: None,
            target: None,
            explored: 0,
        }
    }

    fn cap(&self, u: usize) -> u64 {
        self.closed[u]
            .iter()
            .map(|&w| self.residual[w])
            .min()
            .unwrap_or(0)
            .min(self.value_cap)
    }

    /// An upper bound on what `order[i..]` can still add: every remaining
    /// value is at most its cap, and each unit placed on `u` uses
    /// `|N[u]|` units of residual capacity in the reachable neighbourhoods.
    fn bound(&self, i: usize) -> u64 {
        let caps: u64 = self.order[i..].iter().map(|&u| self.cap(u)).sum();
        let mask = self.reach[i];
        let residual: u64 = (0..self.residual.len())
            .filter(|&w| mask >> w & 1 == 1)
            .map(|w| self.residual[w])
            .sum();
        caps.min(residual / self.min_size[i])
    }

    fn dfs(&mut self, i: usize, sum: u64) -> ControlFlow<()> {
        self.explored += 1;
        if i == self.order.len() {
            if self.best.as_ref().is_none_or(|(b, _)| sum > *b) {
                self.best = Some((sum, self.values.clone()));
                if Some(sum) == self.target {
                    return ControlFlow::Break(());
                }
            }
            return ControlFlow::Continue(());
        }
        if let Some((b, _)) = &self.best {
            if sum + self.bound(i) <= *b {
                return ControlFlow::Continue(());
            }
        }
        let u = self.order[i];
        for value in (0..=self.cap(u)).rev() {
            self.values[u] = value;
            for &w in &self.closed[u] {
                self.residual[w] -= value;
            }
            let flow = self.dfs(i + 1, sum + value);
            for &w in &self.closed[u] {
                self.residual[w] += value;
            }
            flow?;
        }
        self.values[u] = 0;
        ControlFlow::Continue(())
    }
}
