//! Exact {k}-packing and k-limited packing numbers, the LP relaxation, and
//! the comparison `L_{k}(G)` against `k L_1(G)`.
//!
//! A {k}-packing function assigns nonnegative integers to nodes so that
//! every closed neighbourhood sums to at most `k`; a k-limited packing is
//! the 0/1 version.

mod bnb;
mod brute;
mod lp;
mod scaling;

pub use bnb::{branching_order, solve, solve_kpf, solve_limited_packing, MAX_SOLVER_NODES};
pub use brute::{solve_bruteforce, solve_kpf_bruteforce, MAX_BRUTEFORCE_ASSIGNMENTS};
pub use lp::{lp_relaxation_value, solve_lp_relaxation, LpSolution, MAX_LP_NODES};
pub use scaling::{check_scaling_identity, ScalingReport};

use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::labels;

/// Integer packing variant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    /// Values in `0..=k`.
    Kpf,
    /// Values in `{0, 1}`.
    Limited,
}

impl Variant {
    fn value_cap(self, k: u64) -> u64 {
        match self {
            Variant::Kpf => k,
            Variant::Limited => 1,
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Kpf => "kpf",
            Variant::Limited => "limited",
        })
    }
}

impl FromStr for Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Variant> {
        match s {
            "kpf" => Ok(Variant::Kpf),
            "limited" => Ok(Variant::Limited),
            other => Err(Error::InvalidParameter(format!("unknown variant `{other}`"))),
        }
    }
}

/// Node values indexed by node, with the bound `k` and their total.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PackingFunction {
    pub values: Vec<u64>,
    pub k: u64,
    pub objective: u64,
}

impl PackingFunction {
    pub fn new(values: Vec<u64>, k: u64) -> Self {
        let objective = values.iter().sum();
        PackingFunction { values, k, objective }
    }

    /// Every closed neighbourhood sums to at most `k`, the objective is
    /// the total, and for the limited variant every value is 0 or 1.
    pub fn is_feasible(&self, g: &Graph, variant: Variant) -> bool {
        self.values.len() == g.n()
            && self.objective == self.values.iter().sum::<u64>()
            && self.values.iter().all(|&v| v <= variant.value_cap(self.k))
            && (0..g.n()).all(|v| {
                g.closed_neighbourhood(v).ones().map(|w| self.values[w]).sum::<u64>() <= self.k
            })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveStats {
    /// Search tree nodes visited (assignments scanned, for brute force).
    pub explored: u64,
    /// `floor(k L^R_1)` when it was computed to stop the search early.
    pub root_lp_bound: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveResult {
    pub variant: Variant,
    pub optimum: u64,
    pub witness: PackingFunction,
    /// Nodes in branching order. Among optimal witnesses the one returned
    /// is lexicographically largest when read in this order.
    #[serde(with = "labels::many")]
    pub node_order: Vec<usize>,
    pub stats: SolveStats,
}

pub(crate) fn require_positive_k(k: u64) -> Result<()> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    Ok(())
}
