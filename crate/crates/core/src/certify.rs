//! Independent re-checking of the certificates produced by the
//! recognizers, the perfection oracles and the solvers.

use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::BTreeSet;

use crate::graph::{maximal_cliques, BinaryMatrix, Graph};
use crate::packing::{PackingFunction, Variant};
use crate::perfection::{
    is_perfect_graph, is_perfect_matrix_capped, GraphPerfection, MatrixPerfection, OddKind,
    OddWitness, RationalPoint,
};
use crate::recognition::{
    classify_t_member, clique_graph, graph_of_closed_neighbourhood_matrix,
    maximal_pattern_extensions, t_subgraphs, Method, RecognitionCertificate, Witness,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("certificate rejected: {0}")]
pub struct Rejected(pub String);

type Check = std::result::Result<(), Rejected>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(Rejected(msg()))
    }
}

fn in_range(items: &[usize], n: usize, what: &str) -> Check {
    ensure(items.iter().all(|&i| i < n), || format!("{what} index out of range"))
}

fn is_clique(g: &Graph, nodes: &[usize]) -> bool {
    nodes
        .iter()
        .enumerate()
        .all(|(i, &u)| nodes[i + 1..].iter().all(|&v| u != v && g.has_edge(u, v)))
}

fn is_maximal_clique(g: &Graph, nodes: &[usize]) -> bool {
    is_clique(g, nodes)
        && !(0..g.n()).any(|v| !nodes.contains(&v) && nodes.iter().all(|&u| g.has_edge(u, v)))
}

fn row_support(m: &BinaryMatrix, r: usize) -> Vec<usize> {
    m.row(r).ones().collect()
}

/// Re-checks a recognizer certificate against the matrix it was computed
/// for. Structural certificates need `m` to be a closed neighbourhood
/// matrix.
pub fn verify_recognition(m: &BinaryMatrix, cert: &RecognitionCertificate) -> Check {
    let q = clique_graph(m).map_err(|e| Rejected(e.to_string()))?;
    let (rows, cols) = (m.n_rows(), m.n_cols());
    match (&cert.witness, cert.method, cert.verdict) {
        (Witness::CoveringRows { covers }, Method::Cliques, true) => {
            for c in covers {
                in_range(&c.clique, cols, "column")?;
                in_range(&[c.row], rows, "row")?;
                ensure(row_support(m, c.row) == c.clique, || {
                    format!("row {} is not the clique {:?}", c.row + 1, labels(&c.clique))
                })?;
            }
            let listed: BTreeSet<&Vec<usize>> = covers.iter().map(|c| &c.clique).collect();
            let all = maximal_cliques(&q);
            ensure(all.iter().all(|c| listed.contains(c)) && listed.len() == all.len(), || {
                "covers are not exactly the maximal cliques of the clique graph".into()
            })
        }
        (Witness::UncoveredClique { clique }, Method::Cliques, false) => {
            in_range(clique, cols, "column")?;
            ensure(is_maximal_clique(&q, clique), || {
                format!("{:?} is not a maximal clique of the clique graph", labels(clique))
            })?;
            ensure((0..rows).all(|r| row_support(m, r) != *clique), || {
                format!("some row equals {:?}", labels(clique))
            })
        }
        (Witness::CoveredPatterns { covers }, Method::Pattern, true) => {
            for c in covers {
                in_range(&c.columns, cols, "column")?;
                in_range(&[c.row], rows, "row")?;
                ensure(c.columns.iter().all(|&j| m.get(c.row, j)), || {
                    format!("row {} does not cover {:?}", c.row + 1, labels(&c.columns))
                })?;
            }
            let listed: BTreeSet<&Vec<usize>> = covers.iter().map(|c| &c.columns).collect();
            let all: BTreeSet<Vec<usize>> =
                maximal_pattern_extensions(m).into_iter().map(|o| o.columns).collect();
            ensure(listed.len() == all.len() && all.iter().all(|c| listed.contains(c)), || {
                "covers are not exactly the maximal pattern extensions".into()
            })
        }
        (Witness::Pattern { rows: pr, columns }, Method::Pattern, false) => {
            ensure(pr.len() == 3 && columns.len() >= 3, || "pattern needs 3 rows and 3 columns".into())?;
            in_range(pr, rows, "row")?;
            in_range(columns, cols, "column")?;
            ensure(columns.iter().collect::<BTreeSet<_>>().len() == columns.len(), || {
                "repeated column".into()
            })?;
            for (i, &r) in pr.iter().enumerate() {
                for (j, &c) in columns.iter().enumerate() {
                    ensure(m.get(r, c) == (i != j), || {
                        format!("row {} column {} breaks the pattern", r + 1, c + 1)
                    })?;
                }
            }
            ensure((0..rows).all(|r| !columns.iter().all(|&c| m.get(r, c))), || {
                format!("some row covers {:?}", labels(columns))
            })
        }
        (Witness::Dominated { subgraphs }, Method::Structural, true) => {
            let g = structural_graph(m)?;
            for s in subgraphs {
                check_member(&g, s.member, &s.nodes)?;
                in_range(&[s.dominator], g.n(), "node")?;
                ensure(
                    !s.nodes.contains(&s.dominator) && s.nodes.iter().all(|&u| g.has_edge(u, s.dominator)),
                    || format!("{} does not dominate {:?}", s.dominator + 1, labels(&s.nodes)),
                )?;
            }
            let listed: BTreeSet<&Vec<usize>> = subgraphs.iter().map(|s| &s.nodes).collect();
            let all = t_subgraphs(&g);
            ensure(listed.len() == all.len() && all.iter().all(|(_, n)| listed.contains(n)), || {
                "listed subgraphs are not every induced member of T".into()
            })
        }
        (Witness::TObstruction { member, nodes }, Method::Structural, false) => {
            let g = structural_graph(m)?;
            check_member(&g, *member, nodes)?;
            ensure(
                !(0..g.n()).any(|v| !nodes.contains(&v) && nodes.iter().all(|&u| g.has_edge(u, v))),
                || format!("{:?} has a dominating node", labels(nodes)),
            )
        }
        _ => Err(Rejected(format!(
            "witness kind does not fit method {} with verdict {}",
            cert.method, cert.verdict
        ))),
    }
}

fn structural_graph(m: &BinaryMatrix) -> std::result::Result<Graph, Rejected> {
    graph_of_closed_neighbourhood_matrix(m)
        .ok_or_else(|| Rejected("matrix is not a closed neighbourhood matrix".into()))
}

fn check_member(g: &Graph, member: crate::recognition::TMember, nodes: &[usize]) -> Check {
    in_range(nodes, g.n(), "node")?;
    let h = g
        .induced_subgraph(nodes)
        .map_err(|e| Rejected(e.to_string()))?;
    ensure(classify_t_member(&h) == Some(member), || {
        format!("{:?} does not induce {member}", labels(nodes))
    })
}

fn labels(v: &[usize]) -> Vec<usize> {
    v.iter().map(|x| x + 1).collect()
}

/// The cycle is an induced odd cycle of length at least 5 in `g`, or in
/// its complement for an antihole.
pub fn verify_odd_witness(g: &Graph, w: &OddWitness) -> Check {
    let h = match w.kind {
        OddKind::Hole => g.clone(),
        OddKind::Antihole => g.complement(),
    };
    let c = &w.cycle;
    let k = c.len();
    ensure(k >= 5 && k % 2 == 1, || format!("cycle length {k} is not odd and at least 5"))?;
    in_range(c, h.n(), "node")?;
    ensure(c.iter().collect::<BTreeSet<_>>().len() == k, || "repeated node".into())?;
    for i in 0..k {
        for j in i + 1..k {
            let consecutive = j == i + 1 || (i == 0 && j == k - 1);
            ensure(h.has_edge(c[i], c[j]) == consecutive, || {
                format!("nodes {} and {} break the cycle", c[i] + 1, c[j] + 1)
            })?;
        }
    }
    Ok(())
}

/// A witness must check out; a claim of perfection is recomputed.
pub fn verify_graph_perfection(g: &Graph, p: &GraphPerfection) -> Check {
    match &p.witness {
        Some(w) => {
            ensure(!p.perfect, || "perfect graph with a witness".into())?;
            verify_odd_witness(g, w)
        }
        None => {
            let again = is_perfect_graph(g).map_err(|e| Rejected(e.to_string()))?;
            ensure(p.perfect && again.perfect, || "graph has an odd hole or antihole".into())
        }
    }
}

/// `x` lies in `P(m)`, is not integral, and is tight on `n` linearly
/// independent constraints.
pub fn verify_fractional_vertex(m: &BinaryMatrix, x: &RationalPoint) -> Check {
    let n = m.n_cols();
    ensure(x.len() == n, || format!("point has {} coordinates, expected {n}", x.len()))?;
    ensure(!x.is_integral(), || "point is integral".into())?;
    let zero = BigRational::zero();
    let one = BigRational::one();
    let mut tight: Vec<Vec<BigRational>> = Vec::new();
    for row in m.rows() {
        let load: BigRational = row.ones().map(|j| x.0[j].clone()).sum();
        ensure(load <= one, || "a row constraint is violated".into())?;
        if load == one {
            tight.push((0..n).map(|j| if row.contains(j) { one.clone() } else { zero.clone() }).collect());
        }
    }
    for (j, v) in x.0.iter().enumerate() {
        ensure(*v >= zero && *v <= one, || format!("coordinate {} outside [0, 1]", j + 1))?;
        if *v == zero || *v == one {
            tight.push((0..n).map(|i| if i == j { one.clone() } else { zero.clone() }).collect());
        }
    }
    ensure(rank(tight) == n, || "point is not a vertex".into())
}

fn rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let factor = &rows[i][c] / &rows[r][c];
                for j in c..cols {
                    let t = &factor * &rows[r][j];
                    rows[i][j] -= t;
                }
            }
        }
        r += 1;
    }
    r
}

/// A fractional vertex must check out; a claim of perfection is recomputed
/// with the given column cap.
pub fn verify_matrix_perfection(m: &BinaryMatrix, p: &MatrixPerfection, max_dim: usize) -> Check {
    match &p.fractional_vertex {
        Some(x) => {
            ensure(!p.perfect, || "perfect matrix with a fractional vertex".into())?;
            verify_fractional_vertex(m, x)
        }
        None => {
            let again = is_perfect_matrix_capped(m, max_dim).map_err(|e| Rejected(e.to_string()))?;
            ensure(p.perfect && again.perfect, || "matrix has a fractional vertex".into())
        }
    }
}

/// The function is feasible for its variant and reaches `optimum`.
pub fn verify_packing(g: &Graph, variant: Variant, f: &PackingFunction, optimum: u64) -> Check {
    ensure(f.is_feasible(g, variant), || "packing function is infeasible".into())?;
    ensure(f.objective == optimum, || {
        format!("objective {} differs from optimum {optimum}", f.objective)
    })
}
