use std::collections::HashMap;

use super::{clique_graph, CliqueRow, Method, RecognitionCertificate, Witness};
use crate::error::Result;
use crate::graph::{maximal_cliques, BinaryMatrix};

/// Accepts `m` iff every maximal clique of its clique graph is the support
/// of some row. The negative witness is the first uncovered clique in
/// lexicographic order.
pub fn is_extended_clique_node_by_cliques(m: &BinaryMatrix) -> Result<RecognitionCertificate> {
    m.require_no_zero_row()?;
    let q = clique_graph(m)?;

    let mut row_of: HashMap<Vec<usize>, usize> = HashMap::new();
    for (r, row) in m.rows().enumerate() {
        row_of.entry(row.ones().collect()).or_insert(r);
    }

    let mut covers = Vec::new();
    for clique in maximal_cliques(&q) {
        match row_of.get(&clique) {
            Some(&row) => covers.push(CliqueRow { clique, row }),
            None => {
                return Ok(RecognitionCertificate {
                    method: Method::Cliques,
                    verdict: false,
                    witness: Witness::UncoveredClique { clique },
                })
            }
        }
    }
    Ok(RecognitionCertificate {
        method: Method::Cliques,
        verdict: true,
        witness: Witness::CoveringRows { covers },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::generators::{complete, cycle, three_sun};
    use crate::graph::closed_neighbourhood_matrix;

    #[test]
    fn c4_is_rejected_with_the_whole_clique() {
        let cert = is_extended_clique_node_by_cliques(&closed_neighbourhood_matrix(&cycle(4).unwrap())).unwrap();
        assert!(!cert.verdict);
        assert_eq!(cert.witness, Witness::UncoveredClique { clique: vec![0, 1, 2, 3] });
    }

    #[test]
    fn complete_is_accepted() {
        for n in 1..6 {
            let cert = is_extended_clique_node_by_cliques(&closed_neighbourhood_matrix(&complete(n).unwrap())).unwrap();
            assert!(cert.verdict);
            match cert.witness {
                Witness::CoveringRows { covers } => {
                    assert_eq!(covers, vec![CliqueRow { clique: (0..n).collect(), row: 0 }])
                }
                other => panic!("unexpected witness {other:?}"),
            }
        }
    }

    #[test]
    fn three_sun_is_rejected() {
        let cert = is_extended_clique_node_by_cliques(&closed_neighbourhood_matrix(&three_sun())).unwrap();
        assert!(!cert.verdict);
        assert_eq!(cert.witness, Witness::UncoveredClique { clique: (0..6).collect() });
    }

    #[test]
    fn zero_rows_and_columns_are_errors() {
        let m = BinaryMatrix::from_rows_str(&["11", "00"]).unwrap();
        assert_eq!(is_extended_clique_node_by_cliques(&m), Err(Error::ZeroRow(1)));
        let m = BinaryMatrix::from_rows_str(&["10"]).unwrap();
        assert_eq!(is_extended_clique_node_by_cliques(&m), Err(Error::ZeroColumn(1)));
    }
}
