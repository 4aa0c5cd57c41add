use fixedbitset::FixedBitSet;
use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{CheckedDiv, CheckedMul, CheckedSub, One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};

use super::RationalPoint;
use crate::error::{check_cap, Result};
use crate::graph::BinaryMatrix;

/// Default column cap for vertex enumeration.
pub const DEFAULT_MAX_VERTEX_DIM: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixPerfection {
    pub perfect: bool,
    /// The lexicographically smallest fractional vertex, when not perfect.
    pub fractional_vertex: Option<RationalPoint>,
}

/// Every vertex of `P(m)`, sorted, with the default column cap.
pub fn polytope_vertices(m: &BinaryMatrix) -> Result<Vec<RationalPoint>> {
    polytope_vertices_capped(m, DEFAULT_MAX_VERTEX_DIM)
}

/// Every vertex of `P(m) = {x in [0,1]^n : m x <= 1}`, sorted.
///
/// A vertex `x` splits into its fractional support `F = {j : 0 < x_j < 1}`
/// and the rest, which sits at bounds. The rows tight at `x` that meet `F`
/// determine `x_F` (the bounds only pin the other coordinates), so `x_F`
/// solves some nonsingular `|F| x |F|` system `m[R, F] y = 1`. A row that
/// meets both `F` and a coordinate at 1 would be violated, so the ones
/// form a packing on the columns sharing no row with `F`. Conversely each
/// such strictly fractional `y` combined with each such packing is a
/// vertex. This enumerates the same square subsystems as choosing `n`
/// tight constraints out of `3n`, skipping the ones that cannot yield a
/// new vertex.
pub fn polytope_vertices_capped(m: &BinaryMatrix, max_dim: usize) -> Result<Vec<RationalPoint>> {
    check_cap("polytope dimension", max_dim, m.n_cols())?;
    let n = m.n_cols();
    let conflicts = conflict_sets(m);
    let mut out = Vec::new();

    let mut parts = fractional_parts(m);
    parts.insert(Vec::new(), BTreeSet::from([Vec::new()]));
    for (support, solutions) in &parts {
        let mut allowed = FixedBitSet::with_capacity(n);
        allowed.insert_range(..);
        for &j in support {
            allowed.difference_with(&conflicts[j]);
        }
        let packings = packings(&conflicts, &allowed);
        for y in solutions {
            for ones in &packings {
                let mut x = RationalPoint::zeros(n);
                for (&j, v) in support.iter().zip(y) {
                    x.0[j] = v.clone();
                }
                for &j in ones {
                    x.0[j] = BigRational::one();
                }
                out.push(x);
            }
        }
    }
    out.sort();
    Ok(out)
}

pub fn is_perfect_matrix(m: &BinaryMatrix) -> Result<MatrixPerfection> {
    is_perfect_matrix_capped(m, DEFAULT_MAX_VERTEX_DIM)
}

/// `m` is perfect iff `P(m)` has only 0/1 vertices.
pub fn is_perfect_matrix_capped(m: &BinaryMatrix, max_dim: usize) -> Result<MatrixPerfection> {
    m.require_no_zero_column()?;
    check_cap("polytope dimension", max_dim, m.n_cols())?;
    let n = m.n_cols();
    // With no ones added, each fractional part is itself a vertex and is
    // the smallest vertex sharing that part.
    let witness = fractional_parts(m)
        .into_iter()
        .flat_map(|(support, solutions)| {
            solutions.into_iter().map(move |y| {
                let mut x = RationalPoint::zeros(n);
                for (&j, v) in support.iter().zip(y) {
                    x.0[j] = v;
                }
                x
            })
        })
        .min();
    Ok(MatrixPerfection {
        perfect: witness.is_none(),
        fractional_vertex: witness,
    })
}

/// For each column `j`, the columns sharing a row with `j`, plus `j`.
fn conflict_sets(m: &BinaryMatrix) -> Vec<FixedBitSet> {
    let n = m.n_cols();
    let mut out: Vec<FixedBitSet> = (0..n)
        .map(|j| {
            let mut s = FixedBitSet::with_capacity(n);
            s.insert(j);
            s
        })
        .collect();
    for row in m.rows() {
        for j in row.ones() {
            out[j].union_with(row);
        }
    }
    out
}

/// All sets of `allowed` columns, no two sharing a row.
fn packings(conflicts: &[FixedBitSet], allowed: &FixedBitSet) -> Vec<Vec<usize>> {
    fn grow(
        conflicts: &[FixedBitSet],
        open: &FixedBitSet,
        from: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        out.push(current.clone());
        for j in open.ones().filter(|&j| j >= from) {
            let mut next = open.clone();
            next.difference_with(&conflicts[j]);
            current.push(j);
            grow(conflicts, &next, j + 1, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    grow(conflicts, allowed, 0, &mut Vec::new(), &mut out);
    out
}

/// For each nonempty column set `F`, the distinct `y in (0,1)^F` solving a
/// nonsingular `m[R, F] y = 1` and satisfying every row of `m`.
fn fractional_parts(m: &BinaryMatrix) -> BTreeMap<Vec<usize>, BTreeSet<Vec<BigRational>>> {
    let n = m.n_cols();
    let mut out = BTreeMap::new();
    for size in 1..=n {
        for support in (0..n).combinations(size) {
            // Distinct restrictions of the rows meeting F; equal ones would
            // make the system singular.
            let restricted: BTreeSet<Vec<bool>> = m
                .rows()
                .map(|row| support.iter().map(|&j| row.contains(j)).collect::<Vec<bool>>())
                .filter(|r| r.iter().any(|&b| b))
                .collect();
            if restricted.len() < size {
                continue;
            }
            let restricted: Vec<Vec<bool>> = restricted.into_iter().collect();
            let mut found = BTreeSet::new();
            for chosen in restricted.iter().combinations(size) {
                let Some((det, nums)) = solve_unit_rhs(&chosen) else {
                    continue;
                };
                if nums.iter().any(|v| !v.is_positive() || *v >= det) {
                    continue;
                }
                let feasible = restricted.iter().all(|r| {
                    let lhs: BigInt = r.iter().zip(&nums).filter(|(&b, _)| b).map(|(_, v)| v).sum();
                    lhs <= det
                });
                if feasible {
                    found.insert(
                        nums.into_iter()
                            .map(|v| BigRational::new(v, det.clone()))
                            .collect::<Vec<_>>(),
                    );
                }
            }
            if !found.is_empty() {
                out.insert(support, found);
            }
        }
    }
    out
}

/// Solves `a y = 1` exactly, returning `(det, numerators)` with `det > 0`
/// and `y_j = numerators[j] / det`, or `None` when `a` is singular.
fn solve_unit_rhs(a: &[&Vec<bool>]) -> Option<(BigInt, Vec<BigInt>)> {
    let as_i64: Vec<Vec<i64>> = augmented(a);
    match bareiss_jordan(as_i64) {
        Ok(sol) => sol.map(|(d, v)| (BigInt::from(d), v.into_iter().map(BigInt::from).collect())),
        // i64 overflow: redo with arbitrary precision.
        Err(Overflow) => bareiss_jordan(augmented::<BigInt>(a)).expect("BigInt does not overflow"),
    }
}

fn augmented<T: Zero + One>(a: &[&Vec<bool>]) -> Vec<Vec<T>> {
    a.iter()
        .map(|row| {
            let mut r: Vec<T> = row.iter().map(|&b| if b { T::one() } else { T::zero() }).collect();
            r.push(T::one());
            r
        })
        .collect()
}

#[derive(Debug)]
struct Overflow;

/// Fraction-free Gauss-Jordan elimination on an `f x (f+1)` augmented
/// matrix. After step `k` every entry is a `(k+1) x (k+1)` minor, so the
/// divisions by the previous pivot are exact; at the end the left block
/// is `det * I` up to sign.
fn bareiss_jordan<T>(mut a: Vec<Vec<T>>) -> std::result::Result<Option<(T, Vec<T>)>, Overflow>
where
    T: Clone + Signed + CheckedMul + CheckedSub + CheckedDiv,
{
    let f = a.len();
    let mut prev = T::one();
    for k in 0..f {
        let Some(p) = (k..f).find(|&i| !a[i][k].is_zero()) else {
            return Ok(None);
        };
        a.swap(k, p);
        for i in 0..f {
            if i == k {
                continue;
            }
            for j in 0..=f {
                if j == k {
                    continue;
                }
                let left = a[k][k].checked_mul(&a[i][j]).ok_or(Overflow)?;
                let right = a[i][k].checked_mul(&a[k][j]).ok_or(Overflow)?;
                let diff = left.checked_sub(&right).ok_or(Overflow)?;
                a[i][j] = diff.checked_div(&prev).ok_or(Overflow)?;
            }
            a[i][k] = T::zero();
        }
        prev = a[k][k].clone();
    }
    let mut nums: Vec<T> = a.into_iter().map(|mut row| row.pop().expect("augmented")).collect();
    if prev.is_negative() {
        prev = -prev;
        for v in &mut nums {
            *v = -v.clone();
        }
    }
    Ok(Some((prev, nums)))
}
