//! The clique graph of a 0/1 matrix and three independent recognizers for
//! extended clique-node matrices, plus total balancedness.
//!
//! A matrix is an extended clique-node matrix when it contains every
//! maximal clique of some graph as a row and every other row is a clique
//! of that graph. The graph is then necessarily the clique graph of the
//! matrix, which is how the clique-based recognizer decides it. The
//! pattern recognizer instead looks for three rows that read `J - I` on
//! three columns and demands a row covering every column on which the
//! three rows agree. The structural recognizer works on a graph directly
//! and asks that every induced C4, C5, C6 or 3-sun has a common neighbour
//! outside it.

mod balanced;
mod by_cliques;
mod pattern;
mod structural;

pub use balanced::{find_cycle_submatrix, is_totally_balanced, MAX_BALANCED_COLS};
pub use by_cliques::is_extended_clique_node_by_cliques;
pub use pattern::{is_extended_clique_node_by_pattern, maximal_pattern_extensions};
pub use structural::{classify_t_member, external_dominator, find_t_obstruction, t_subgraphs, TMember};

use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{closed_neighbourhood_matrix, BinaryMatrix, Graph};
use crate::labels;

/// G_Q(M): one node per column, with `ij` an edge when some row has ones
/// in both columns.
pub fn clique_graph(m: &BinaryMatrix) -> Result<Graph> {
    m.require_no_zero_column()?;
    if m.n_cols() == 0 {
        return Err(Error::InvalidParameter("matrix has no columns".into()));
    }
    let mut g = Graph::empty(m.n_cols());
    for row in m.rows() {
        let support: Vec<usize> = row.ones().collect();
        for (i, &u) in support.iter().enumerate() {
            for &v in &support[i + 1..] {
                g.add_edge(u, v);
            }
        }
    }
    Ok(g)
}

/// Which recognizer produced a certificate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Cliques,
    Pattern,
    Structural,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Cliques, Method::Pattern, Method::Structural];
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Cliques => "cliques",
            Method::Pattern => "pattern",
            Method::Structural => "structural",
        })
    }
}

impl FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Method> {
        match s {
            "cliques" => Ok(Method::Cliques),
            "pattern" => Ok(Method::Pattern),
            "structural" => Ok(Method::Structural),
            other => Err(Error::InvalidParameter(format!("unknown method `{other}`"))),
        }
    }
}

/// A maximal clique of the clique graph and the row equal to it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueRow {
    #[serde(with = "labels::many")]
    pub clique: Vec<usize>,
    #[serde(with = "labels::one")]
    pub row: usize,
}

/// A maximal pattern extension (see [`maximal_pattern_extensions`]) and a
/// row with ones on all of it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoveredColumns {
    #[serde(with = "labels::many")]
    pub columns: Vec<usize>,
    #[serde(with = "labels::one")]
    pub row: usize,
}

/// An induced member of T and a node outside it adjacent to all of it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DominatedSubgraph {
    pub member: TMember,
    #[serde(with = "labels::many")]
    pub nodes: Vec<usize>,
    #[serde(with = "labels::one")]
    pub dominator: usize,
}

/// Evidence for a recognizer verdict. Node, row and column indices are
/// zero-based in memory and 1-based when serialized.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// Every maximal clique of the clique graph equals some row.
    CoveringRows { covers: Vec<CliqueRow> },
    /// A maximal clique of the clique graph that is no row.
    UncoveredClique {
        #[serde(with = "labels::many")]
        clique: Vec<usize>,
    },
    /// Every maximal pattern extension has a covering row.
    CoveredPatterns { covers: Vec<CoveredColumns> },
    /// Rows `rows[i]` are zero in `columns[i]` for `i < 3` and one in every
    /// other listed column; no row has ones in all listed columns.
    Pattern {
        #[serde(with = "labels::many")]
        rows: Vec<usize>,
        #[serde(with = "labels::many")]
        columns: Vec<usize>,
    },
    /// Every induced member of T has an outside common neighbour.
    Dominated { subgraphs: Vec<DominatedSubgraph> },
    /// An induced member of T with no outside common neighbour.
    TObstruction {
        member: TMember,
        #[serde(with = "labels::many")]
        nodes: Vec<usize>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecognitionCertificate {
    pub method: Method,
    pub verdict: bool,
    pub witness: Witness,
}

/// Runs `method` on N[G].
pub fn recognize_graph(g: &Graph, method: Method) -> Result<RecognitionCertificate> {
    match method {
        Method::Cliques => is_extended_clique_node_by_cliques(&closed_neighbourhood_matrix(g)),
        Method::Pattern => is_extended_clique_node_by_pattern(&closed_neighbourhood_matrix(g)),
        Method::Structural => Ok(find_t_obstruction(g)),
    }
}

/// Runs `method` on a matrix. The structural method needs the matrix to
/// be the closed neighbourhood matrix of a graph.
pub fn recognize_matrix(m: &BinaryMatrix, method: Method) -> Result<RecognitionCertificate> {
    match method {
        Method::Cliques => is_extended_clique_node_by_cliques(m),
        Method::Pattern => is_extended_clique_node_by_pattern(m),
        Method::Structural => {
            let g = graph_of_closed_neighbourhood_matrix(m).ok_or_else(|| {
                Error::InvalidParameter(
                    "structural method needs a symmetric matrix with unit diagonal".into(),
                )
            })?;
            Ok(find_t_obstruction(&g))
        }
    }
}

/// The graph `G` with `N[G] == m`, when `m` is symmetric with unit diagonal.
pub fn graph_of_closed_neighbourhood_matrix(m: &BinaryMatrix) -> Option<Graph> {
    if !m.is_symmetric() || m.n_rows() == 0 || !(0..m.n_rows()).all(|i| m.get(i, i)) {
        return None;
    }
    let mut g = Graph::empty(m.n_rows());
    for i in 0..m.n_rows() {
        for j in m.row(i).ones().filter(|&j| j > i) {
            g.add_edge(i, j);
        }
    }
    Some(g)
}
