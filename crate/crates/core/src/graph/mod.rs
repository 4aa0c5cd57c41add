//! Simple undirected graphs stored as per-node neighbour bitsets.
//!
//! Nodes are indexed `0..n` in code. Every text format and JSON report
//! shows them 1-based, so node `i` carries the label `i + 1`.

mod cliques;
mod cycles;
mod format;
mod iso;
mod matrix;

pub use cliques::maximal_cliques;
pub use cycles::{find_induced_cycle, for_each_induced_cycle};
pub use iso::{is_isomorphic, isomorphism};
pub use matrix::{closed_neighbourhood_matrix, BinaryMatrix};

use fixedbitset::FixedBitSet;
use std::fmt;

use crate::error::{Error, Result};

/// A simple undirected graph on nodes `0..n`, `n >= 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<FixedBitSet>,
}

impl Graph {
    /// The edgeless graph on `n` nodes.
    ///
    /// Panics if `n == 0`.
    pub fn empty(n: usize) -> Self {
        assert!(n >= 1, "a graph needs at least one node");
        Graph {
            adj: vec![FixedBitSet::with_capacity(n); n],
        }
    }

    /// Builds a graph from zero-based edge pairs. Self-loops and
    /// out-of-range endpoints are rejected; repeated pairs collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("graph needs n >= 1".into()));
        }
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::NodeOutOfRange { label: w + 1, n });
                }
            }
            if u == v {
                return Err(Error::InvalidParameter(format!("self-loop at node {}", u + 1)));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Panics on a self-loop or an out-of-range node.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert_ne!(u, v, "self-loop at node {u}");
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u].set(v, false);
        self.adj[v].set(u, false);
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones(..)).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// Open neighbourhood N(v).
    #[inline]
    pub fn neighbours(&self, v: usize) -> &FixedBitSet {
        &self.adj[v]
    }

    /// Closed neighbourhood N[v] = N(v) ∪ {v}.
    pub fn closed_neighbourhood(&self, v: usize) -> FixedBitSet {
        let mut s = self.adj[v].clone();
        s.insert(v);
        s
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n()).map(|v| self.degree(v)).collect()
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n() {
            out.extend(self.adj[u].ones().filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut g = Graph::empty(n);
        for u in 0..n {
            let mut row = self.adj[u].clone();
            row.toggle_range(..);
            row.set(u, false);
            g.adj[u] = row;
        }
        g
    }

    /// The subgraph induced by `nodes`, relabelled so that `nodes[i]`
    /// becomes node `i`.
    pub fn induced_subgraph(&self, nodes: &[usize]) -> Result<Graph> {
        if nodes.is_empty() {
            return Err(Error::EmptySubset);
        }
        let mut seen = FixedBitSet::with_capacity(self.n());
        for &v in nodes {
            if v >= self.n() {
                return Err(Error::NodeOutOfRange {
                    label: v + 1,
                    n: self.n(),
                });
            }
            if seen.put(v) {
                return Err(Error::InvalidParameter(format!("node {} repeated in subset", v + 1)));
            }
        }
        let mut g = Graph::empty(nodes.len());
        for (i, &u) in nodes.iter().enumerate() {
            for (j, &v) in nodes.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        Ok(g)
    }

    /// Nodes adjacent to every other node.
    pub fn universal_nodes(&self) -> Vec<usize> {
        let n = self.n();
        (0..n).filter(|&v| self.degree(v) == n - 1).collect()
    }

    pub fn is_connected(&self) -> bool {
        let n = self.n();
        let mut seen = FixedBitSet::with_capacity(n);
        let mut stack = vec![0];
        seen.insert(0);
        while let Some(u) = stack.pop() {
            for v in self.adj[u].ones() {
                if !seen.put(v) {
                    stack.push(v);
                }
            }
        }
        seen.count_ones(..) == n
    }

    /// Chordality via maximum cardinality search followed by a perfect
    /// elimination ordering check.
    pub fn is_chordal(&self) -> bool {
        let n = self.n();
        // MCS numbers vertices from n-1 down to 0; `order[i]` is the i-th
        // vertex of the elimination ordering.
        let mut weight = vec![0usize; n];
        let mut numbered = FixedBitSet::with_capacity(n);
        let mut order = vec![0; n];
        for slot in (0..n).rev() {
            let v = (0..n)
                .filter(|&v| !numbered.contains(v))
                .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
                .expect("unnumbered vertex remains");
            numbered.insert(v);
            order[slot] = v;
            for u in self.adj[v].ones() {
                if !numbered.contains(u) {
                    weight[u] += 1;
                }
            }
        }
        let mut position = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            position[v] = i;
        }
        // For each v, its later neighbours minus the earliest of them must be
        // adjacent to that earliest one.
        for &v in &order {
            let later: Vec<usize> = self.adj[v]
                .ones()
                .filter(|&u| position[u] > position[v])
                .collect();
            if let Some(&parent) = later.iter().min_by_key(|&&u| position[u]) {
                if later.iter().any(|&u| u != parent && !self.has_edge(parent, u)) {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<(usize, usize)> = self.edges().into_iter().map(|(u, v)| (u + 1, v + 1)).collect();
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &edges)
            .finish()
    }
}
