use crate::error::{check_cap, Result};
use crate::graph::{find_induced_cycle, BinaryMatrix, Graph};

/// Column cap for [`is_totally_balanced`].
pub const MAX_BALANCED_COLS: usize = 16;

/// Rows and columns of a square submatrix that is the node-edge incidence
/// matrix of a cycle of length at least 3, listed in cycle order:
/// row `rows[i]` has ones exactly in columns `cols[i-1]` and `cols[i]`
/// (indices mod the length) among the listed columns.
///
/// Such submatrices are exactly the chordless cycles of length `2k >= 6`
/// in the bipartite row-column incidence graph.
pub fn find_cycle_submatrix(m: &BinaryMatrix) -> Result<Option<(Vec<usize>, Vec<usize>)>> {
    check_cap("matrix columns", MAX_BALANCED_COLS, m.n_cols())?;
    let rows = m.n_rows();
    if rows == 0 || m.n_cols() == 0 {
        return Ok(None);
    }
    // Nodes 0..rows are rows, rows.. are columns.
    let mut b = Graph::empty(rows + m.n_cols());
    for r in 0..rows {
        for c in m.row(r).ones() {
            b.add_edge(r, rows + c);
        }
    }
    let Some(cycle) = find_induced_cycle(&b, 6, |_| true) else {
        return Ok(None);
    };
    // The cycle starts at its smallest node, which is a row.
    let len = cycle.len();
    let row_nodes: Vec<usize> = cycle.iter().step_by(2).copied().collect();
    let cols: Vec<usize> = cycle.iter().skip(1).step_by(2).map(|&c| c - rows).collect();
    debug_assert_eq!(row_nodes.len() * 2, len);
    Ok(Some((row_nodes, cols)))
}

/// True iff no submatrix of `m` is the incidence matrix of a cycle of
/// length at least 3.
pub fn is_totally_balanced(m: &BinaryMatrix) -> Result<bool> {
    Ok(find_cycle_submatrix(m)?.is_none())
}
