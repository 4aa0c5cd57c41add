use fixedbitset::FixedBitSet;
use std::fmt;

use super::Graph;
use crate::error::{Error, Result};

/// A dense 0/1 matrix stored as one bitset per row.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryMatrix {
    cols: usize,
    rows: Vec<FixedBitSet>,
}

impl BinaryMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        BinaryMatrix {
            cols,
            rows: vec![FixedBitSet::with_capacity(cols); rows],
        }
    }

    /// Builds a matrix from the supports of its rows.
    pub fn from_supports<I, R>(cols: usize, supports: I) -> Result<Self>
    where
        I: IntoIterator<Item = R>,
        R: IntoIterator<Item = usize>,
    {
        let mut rows = Vec::new();
        for support in supports {
            let mut row = FixedBitSet::with_capacity(cols);
            for c in support {
                if c >= cols {
                    return Err(Error::InvalidParameter(format!(
                        "column {} outside 1..={cols}",
                        c + 1
                    )));
                }
                row.insert(c);
            }
            rows.push(row);
        }
        Ok(BinaryMatrix { cols, rows })
    }

    /// Parses rows of `0`/`1` characters; all rows must have equal length.
    pub fn from_rows_str(rows: &[&str]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut m = BinaryMatrix::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(Error::Parse {
                    line: i + 1,
                    msg: format!("expected {cols} entries, found {}", r.len()),
                });
            }
            for (j, ch) in r.chars().enumerate() {
                match ch {
                    '0' => {}
                    '1' => m.rows[i].insert(j),
                    other => {
                        return Err(Error::Parse {
                            line: i + 1,
                            msg: format!("unexpected character {other:?}"),
                        })
                    }
                }
            }
        }
        Ok(m)
    }

    /// The all-ones matrix J minus the identity, of order `n`.
    pub fn j_minus_i(n: usize) -> Self {
        let mut m = Self::ones(n, n);
        for i in 0..n {
            m.rows[i].set(i, false);
        }
        m
    }

    pub fn ones(rows: usize, cols: usize) -> Self {
        let mut full = FixedBitSet::with_capacity(cols);
        full.insert_range(..);
        BinaryMatrix {
            cols,
            rows: vec![full; rows],
        }
    }

    #[inline]
    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn n_cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        self.rows[r].contains(c)
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        self.rows[r].set(c, value);
    }

    /// Support of row `r` (the columns holding a one).
    #[inline]
    pub fn row(&self, r: usize) -> &FixedBitSet {
        &self.rows[r]
    }

    pub fn rows(&self) -> impl Iterator<Item = &FixedBitSet> {
        self.rows.iter()
    }

    pub fn push_row(&mut self, support: FixedBitSet) {
        assert_eq!(support.len(), self.cols);
        self.rows.push(support);
    }

    pub fn is_square(&self) -> bool {
        self.n_rows() == self.cols
    }

    pub fn transpose(&self) -> BinaryMatrix {
        let mut t = BinaryMatrix::zeros(self.cols, self.n_rows());
        for (r, row) in self.rows.iter().enumerate() {
            for c in row.ones() {
                t.rows[c].insert(r);
            }
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && *self == self.transpose()
    }

    pub fn column_sums(&self) -> Vec<usize> {
        let mut sums = vec![0; self.cols];
        for row in &self.rows {
            for c in row.ones() {
                sums[c] += 1;
            }
        }
        sums
    }

    /// First all-zero column, if any.
    pub fn zero_column(&self) -> Option<usize> {
        self.column_sums().iter().position(|&s| s == 0)
    }

    pub(crate) fn require_no_zero_column(&self) -> Result<()> {
        match self.zero_column() {
            Some(c) => Err(Error::ZeroColumn(c)),
            None => Ok(()),
        }
    }

    pub(crate) fn require_no_zero_row(&self) -> Result<()> {
        match self.rows.iter().position(|r| r.is_clear()) {
            Some(r) => Err(Error::ZeroRow(r)),
            None => Ok(()),
        }
    }

    /// True when the two matrices have the same multiset of rows.
    pub fn equal_up_to_row_permutation(&self, other: &BinaryMatrix) -> bool {
        if self.cols != other.cols || self.n_rows() != other.n_rows() {
            return false;
        }
        let mut a: Vec<Vec<usize>> = self.rows.iter().map(|r| r.ones().collect()).collect();
        let mut b: Vec<Vec<usize>> = other.rows.iter().map(|r| r.ones().collect()).collect();
        a.sort();
        b.sort();
        a == b
    }
}

impl fmt::Display for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            for c in 0..self.cols {
                f.write_str(if row.contains(c) { "1" } else { "0" })?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl fmt::Debug for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BinaryMatrix {}x{}", self.n_rows(), self.cols)?;
        fmt::Display::fmt(self, f)
    }
}

/// N[G]: row and column `v` both index node `v`; entry `(i, j)` is one iff
/// `i == j` or `ij` is an edge.
pub fn closed_neighbourhood_matrix(g: &Graph) -> BinaryMatrix {
    BinaryMatrix {
        cols: g.n(),
        rows: (0..g.n()).map(|v| g.closed_neighbourhood(v)).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle};
    use crate::testutil::arb_graph;
    use proptest::prelude::*;

    #[test]
    fn complete_gives_all_ones() {
        assert_eq!(closed_neighbourhood_matrix(&complete(3).unwrap()), BinaryMatrix::ones(3, 3));
    }

    #[test]
    fn c4_gives_j_minus_i_up_to_rows() {
        // Row v of N[C4] misses exactly the antipodal node.
        let m = closed_neighbourhood_matrix(&cycle(4).unwrap());
        assert!(m.equal_up_to_row_permutation(&BinaryMatrix::j_minus_i(4)));
    }

    #[test]
    fn parse_rows() {
        let m = BinaryMatrix::from_rows_str(&["101", "010"]).unwrap();
        assert!(m.get(0, 2) && m.get(1, 1) && !m.get(1, 0));
        assert!(BinaryMatrix::from_rows_str(&["10", "1"]).is_err());
        assert!(BinaryMatrix::from_rows_str(&["12"]).is_err());
    }

    #[test]
    fn zero_column_detection() {
        let m = BinaryMatrix::from_rows_str(&["10", "10"]).unwrap();
        assert_eq!(m.require_no_zero_column(), Err(Error::ZeroColumn(1)));
    }

    proptest! {
        #[test]
        fn closed_neighbourhood_shape(g in arb_graph()) {
            let m = closed_neighbourhood_matrix(&g);
            prop_assert!(m.is_symmetric());
            for v in 0..g.n() {
                prop_assert!(m.get(v, v));
                prop_assert_eq!(m.row(v).count_ones(..), g.degree(v) + 1);
                for u in 0..g.n() {
                    prop_assert_eq!(m.get(v, u), u == v || g.has_edge(u, v));
                }
            }
        }
    }
}
