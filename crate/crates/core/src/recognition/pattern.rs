use fixedbitset::FixedBitSet;
use std::collections::BTreeMap;

use super::{CoveredColumns, Method, RecognitionCertificate, Witness};
use crate::error::Result;
use crate::graph::BinaryMatrix;

/// One occurrence of the `J - I` pattern: `rows[i]` is zero in
/// `zeros[i]` and one in the other two of `zeros`. `columns` is the
/// maximal extension, `zeros` plus every column where all three rows are
/// one, in ascending order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternOccurrence {
    pub rows: [usize; 3],
    pub zeros: [usize; 3],
    pub columns: Vec<usize>,
}

/// Every `J - I` occurrence over unordered row triples, rows ascending,
/// then zero columns ascending.
pub fn maximal_pattern_extensions(m: &BinaryMatrix) -> Vec<PatternOccurrence> {
    let mut out = Vec::new();
    for_each_occurrence(m, |occ| {
        out.push(occ);
        true
    });
    out
}

/// Calls `f` for each occurrence until it returns false.
fn for_each_occurrence(m: &BinaryMatrix, mut f: impl FnMut(PatternOccurrence) -> bool) {
    let rows = m.n_rows();
    for r1 in 0..rows {
        for r2 in r1 + 1..rows {
            let mut both12 = m.row(r1).clone();
            both12.intersect_with(m.row(r2));
            for r3 in r2 + 1..rows {
                let (a1, a2, a3) = (m.row(r1), m.row(r2), m.row(r3));
                // zero in r1, one in r2 and r3
                let z1 = only_outside(a2, a3, a1);
                let z2 = only_outside(a1, a3, a2);
                let z3 = only_outside(a1, a2, a3);
                if z1.is_clear() || z2.is_clear() || z3.is_clear() {
                    continue;
                }
                let mut common = both12.clone();
                common.intersect_with(a3);
                for c1 in z1.ones() {
                    for c2 in z2.ones() {
                        for c3 in z3.ones() {
                            let mut cols = common.clone();
                            cols.insert(c1);
                            cols.insert(c2);
                            cols.insert(c3);
                            let occ = PatternOccurrence {
                                rows: [r1, r2, r3],
                                zeros: [c1, c2, c3],
                                columns: cols.ones().collect(),
                            };
                            if !f(occ) {
                                return;
                            }
                        }
                    }
                }
            }
        }
    }
}

/// Columns in both `a` and `b` but not in `without`.
fn only_outside(a: &FixedBitSet, b: &FixedBitSet, without: &FixedBitSet) -> FixedBitSet {
    let mut s = a.clone();
    s.intersect_with(b);
    s.difference_with(without);
    s
}

fn covering_row(m: &BinaryMatrix, columns: &[usize]) -> Option<usize> {
    m.rows().position(|row| columns.iter().all(|&c| row.contains(c)))
}

/// Accepts `m` iff every `J - I` occurrence on three rows has a row with
/// ones on its whole maximal extension. A row covering the maximal
/// extension covers every smaller pattern on the same three rows, so only
/// maximal extensions are checked.
pub fn is_extended_clique_node_by_pattern(m: &BinaryMatrix) -> Result<RecognitionCertificate> {
    m.require_no_zero_column()?;
    m.require_no_zero_row()?;

    let mut covered: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    let mut violation = None;
    for_each_occurrence(m, |occ| {
        if covered.contains_key(&occ.columns) {
            return true;
        }
        match covering_row(m, &occ.columns) {
            Some(r) => {
                covered.insert(occ.columns, r);
                true
            }
            None => {
                violation = Some(occ);
                false
            }
        }
    });

    let witness = match violation {
        Some(occ) => {
            let mut columns = occ.zeros.to_vec();
            columns.extend(occ.columns.iter().filter(|c| !occ.zeros.contains(c)));
            Witness::Pattern {
                rows: occ.rows.to_vec(),
                columns,
            }
        }
        None => Witness::CoveredPatterns {
            covers: covered
                .into_iter()
                .map(|(columns, row)| CoveredColumns { columns, row })
                .collect(),
        },
    };
    Ok(RecognitionCertificate {
        method: Method::Pattern,
        verdict: matches!(witness, Witness::CoveredPatterns { .. }),
        witness,
    })
}
