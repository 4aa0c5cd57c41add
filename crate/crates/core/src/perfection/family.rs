use serde::{Deserialize, Serialize};

use super::{is_perfect_graph, is_perfect_matrix_capped, GraphPerfection, MatrixPerfection};
use super::{DEFAULT_MAX_VERTEX_DIM, MAX_PERFECT_GRAPH_NODES};
use crate::error::{check_cap, Result};
use crate::graph::{closed_neighbourhood_matrix, Graph};
use crate::recognition::{
    clique_graph, is_extended_clique_node_by_cliques, is_extended_clique_node_by_pattern,
    RecognitionCertificate,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    /// Above this many nodes the vertex enumeration cross-check is skipped.
    pub max_vertex_dim: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_vertex_dim: DEFAULT_MAX_VERTEX_DIM,
        }
    }
}

/// Both extended clique-node recognizers run on N[G].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtendedCliqueNode {
    pub verdict: bool,
    pub cliques: RecognitionCertificate,
    pub pattern: RecognitionCertificate,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PerfectionReport {
    pub extended_clique_node: ExtendedCliqueNode,
    /// Perfection of the clique graph of N[G].
    pub clique_graph: GraphPerfection,
    /// Vertex enumeration of P(N[G]); absent above the dimension limit.
    pub matrix: Option<MatrixPerfection>,
    pub in_family_f: bool,
    /// The recognizers agree with each other and, when present, with the
    /// vertex enumeration.
    pub agrees: bool,
}

/// Decides whether N[G] is perfect as "extended clique-node and perfect
/// clique graph", and checks that against the vertices of P(N[G]).
pub fn family_f_membership(g: &Graph, limits: &Limits) -> Result<PerfectionReport> {
    check_cap("graph nodes", MAX_PERFECT_GRAPH_NODES, g.n())?;
    let m = closed_neighbourhood_matrix(g);
    let cliques = is_extended_clique_node_by_cliques(&m)?;
    let pattern = is_extended_clique_node_by_pattern(&m)?;
    let clique_graph = is_perfect_graph(&clique_graph(&m)?)?;
    let matrix = if g.n() <= limits.max_vertex_dim {
        Some(is_perfect_matrix_capped(&m, limits.max_vertex_dim)?)
    } else {
        None
    };

    let in_family_f = cliques.verdict && clique_graph.perfect;
    let agrees = cliques.verdict == pattern.verdict
        && matrix.as_ref().is_none_or(|mp| mp.perfect == in_family_f);
    Ok(PerfectionReport {
        extended_clique_node: ExtendedCliqueNode {
            verdict: cliques.verdict,
            cliques,
            pattern,
        },
        clique_graph,
        matrix,
        in_family_f,
        agrees,
    })
}
