//! Constructors for the graph and matrix families used throughout the
//! crate, plus the connected-graph census for exhaustive checks.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{is_isomorphic, BinaryMatrix, Graph};

/// Largest `n` accepted by [`connected_graphs`].
pub const MAX_CENSUS_NODES: usize = 8;

/// Number of connected graphs on `n` nodes up to isomorphism (OEIS A001349).
pub const CONNECTED_GRAPH_COUNTS: [usize; MAX_CENSUS_NODES + 1] = [0, 1, 1, 2, 6, 21, 112, 853, 11117];

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}

/// K_n.
pub fn complete(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(invalid("complete graph needs n >= 1"));
    }
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v);
        }
    }
    Ok(g)
}

/// C_n with edges `i(i+1)` and `1n`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(invalid("cycle needs n >= 3"));
    }
    let mut g = path(n)?;
    g.add_edge(0, n - 1);
    Ok(g)
}

/// P_n, the path on `n` nodes.
pub fn path(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(invalid("path needs n >= 1"));
    }
    let mut g = Graph::empty(n);
    for i in 1..n {
        g.add_edge(i - 1, i);
    }
    Ok(g)
}

/// W_n: a cycle on nodes `1..n-1` and a hub, node `n`, adjacent to all.
pub fn wheel(n: usize) -> Result<Graph> {
    if n < 4 {
        return Err(invalid("wheel needs n >= 4"));
    }
    let rim = cycle(n - 1)?;
    let mut g = Graph::empty(n);
    for (u, v) in rim.edges() {
        g.add_edge(u, v);
    }
    for v in 0..n - 1 {
        g.add_edge(v, n - 1);
    }
    Ok(g)
}

/// Adds a node adjacent to every existing node.
pub fn cone(g: &Graph) -> Graph {
    let n = g.n();
    let mut h = Graph::empty(n + 1);
    for (u, v) in g.edges() {
        h.add_edge(u, v);
    }
    for v in 0..n {
        h.add_edge(v, n);
    }
    h
}

fn circular_distance(i: usize, j: usize, n: usize) -> usize {
    let d = i.abs_diff(j);
    d.min(n - d)
}

/// W_n^k: `ij` is an edge iff `i != j` and their circular distance is at most `k`.
pub fn web(n: usize, k: usize) -> Result<Graph> {
    if n < 2 || k < 1 {
        return Err(invalid(format!("web needs n >= 2 and k >= 1, got n={n}, k={k}")));
    }
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if circular_distance(u, v, n) <= k {
                g.add_edge(u, v);
            }
        }
    }
    Ok(g)
}

/// Complement of [`web`].
pub fn antiweb(n: usize, k: usize) -> Result<Graph> {
    Ok(web(n, k)?.complement())
}

/// The 3-sun S_3: inner triangle `{1,2,3}`, outer nodes `4 ~ {1,2}`,
/// `5 ~ {2,3}`, `6 ~ {3,1}`.
pub fn three_sun() -> Graph {
    Graph::from_edges(
        6,
        &[(0, 1), (1, 2), (0, 2), (3, 0), (3, 1), (4, 1), (4, 2), (5, 2), (5, 0)],
    )
    .expect("static edge list")
}

/// The `j`-pyramid: the 3-sun plus `j` edges among the outer nodes, taken
/// in the order 4-5, 4-6, 5-6.
pub fn pyramid(j: usize) -> Result<Graph> {
    if !(1..=3).contains(&j) {
        return Err(invalid(format!("pyramid needs j in 1..=3, got {j}")));
    }
    let mut g = three_sun();
    for &(u, v) in [(3, 4), (3, 5), (4, 5)].iter().take(j) {
        g.add_edge(u, v);
    }
    Ok(g)
}

/// C_n^k: row `i` has ones in columns `i+1, ..., i+k` taken mod `n`
/// (1-based, residue 0 read as `n`).
pub fn circulant_matrix(n: usize, k: usize) -> Result<BinaryMatrix> {
    if n < 2 || k < 1 || k > n - 1 {
        return Err(invalid(format!("circulant needs 1 <= k <= n-1, got n={n}, k={k}")));
    }
    // 0-based row r is 1-based row r+1, covering 1-based columns r+2..=r+k+1.
    BinaryMatrix::from_supports(n, (0..n).map(|r| (1..=k).map(move |d| (r + d) % n)))
}

/// The chordal graph on `4k+2` nodes whose even nodes form a clique and
/// whose odd node `i` is adjacent exactly to `i-1` and `i+1` (circularly).
pub fn clique_cycle_family(k: usize) -> Result<Graph> {
    if k < 1 {
        return Err(invalid("clique-cycle family needs k >= 1"));
    }
    let n = 4 * k + 2;
    let mut g = Graph::empty(n);
    // 1-based label l is node l-1, so even labels are odd indices.
    let evens: Vec<usize> = (1..n).step_by(2).collect();
    for (a, &u) in evens.iter().enumerate() {
        for &v in &evens[a + 1..] {
            g.add_edge(u, v);
        }
    }
    for odd in (0..n).step_by(2) {
        g.add_edge(odd, (odd + 1) % n);
        g.add_edge(odd, (odd + n - 1) % n);
    }
    Ok(g)
}

/// One representative per isomorphism class of connected graphs on `n`
/// nodes, `1 <= n <= 8`.
///
/// Every connected graph on `n` nodes has a non-cut vertex, so it arises
/// from a connected graph on `n-1` nodes by adding a node with a nonempty
/// neighbourhood. Candidates are bucketed by an isomorphism invariant and
/// deduplicated with [`is_isomorphic`] inside each bucket.
pub fn connected_graphs(n: usize) -> Result<std::vec::IntoIter<Graph>> {
    if !(1..=MAX_CENSUS_NODES).contains(&n) {
        return Err(Error::CapExceeded {
            what: "census node count",
            limit: MAX_CENSUS_NODES,
            actual: n,
        });
    }
    let mut level = vec![Graph::empty(1)];
    for size in 2..=n {
        level = extend_census(&level, size);
    }
    Ok(level.into_iter())
}

/// All connected graphs on `1..=max_n` nodes, smallest first.
pub fn connected_graphs_up_to(max_n: usize) -> Result<Vec<Graph>> {
    if max_n > MAX_CENSUS_NODES {
        return Err(Error::CapExceeded {
            what: "census node count",
            limit: MAX_CENSUS_NODES,
            actual: max_n,
        });
    }
    let mut out = Vec::new();
    let mut level = vec![Graph::empty(1)];
    if max_n >= 1 {
        out.extend(level.iter().cloned());
    }
    for size in 2..=max_n {
        level = extend_census(&level, size);
        out.extend(level.iter().cloned());
    }
    Ok(out)
}

fn extend_census(previous: &[Graph], size: usize) -> Vec<Graph> {
    let mut buckets: HashMap<Vec<(usize, Vec<usize>)>, Vec<Graph>> = HashMap::new();
    let mut order = Vec::new();
    for base in previous {
        for mask in 1u32..1 << (size - 1) {
            let mut g = Graph::empty(size);
            for (u, v) in base.edges() {
                g.add_edge(u, v);
            }
            for v in 0..size - 1 {
                if mask >> v & 1 == 1 {
                    g.add_edge(v, size - 1);
                }
            }
            let key = invariant_key(&g);
            let bucket = buckets.entry(key.clone()).or_default();
            if !bucket.iter().any(|h| is_isomorphic(h, &g)) {
                bucket.push(g.clone());
                order.push(g);
            }
        }
    }
    order
}

/// Sorted (degree, sorted neighbour degrees) pairs.
fn invariant_key(g: &Graph) -> Vec<(usize, Vec<usize>)> {
    let deg = g.degrees();
    let mut key: Vec<(usize, Vec<usize>)> = (0..g.n())
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbours(v).ones().map(|u| deg[u]).collect();
            nd.sort_unstable();
            (deg[v], nd)
        })
        .collect();
    key.sort();
    key
}

/// A named graph or matrix family with its integer parameters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", content = "parameters", rename_all = "snake_case")]
pub enum FamilySpec {
    Complete(usize),
    Cycle(usize),
    Path(usize),
    Wheel(usize),
    Web(usize, usize),
    Antiweb(usize, usize),
    ThreeSun,
    Pyramid(usize),
    CliqueCycle(usize),
    CirculantMatrix(usize, usize),
}

/// What a [`FamilySpec`] materializes to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Generated {
    Graph(Graph),
    Matrix(BinaryMatrix),
}

impl FamilySpec {
    /// Parses a family name (as accepted on the command line) and its
    /// parameters.
    pub fn parse(name: &str, params: &[usize]) -> Result<FamilySpec> {
        let arity = |want: usize| -> Result<()> {
            if params.len() == want {
                Ok(())
            } else {
                Err(invalid(format!(
                    "family `{name}` takes {want} parameter(s), got {}",
                    params.len()
                )))
            }
        };
        let spec = match name {
            "complete" => {
                arity(1)?;
                FamilySpec::Complete(params[0])
            }
            "cycle" => {
                arity(1)?;
                FamilySpec::Cycle(params[0])
            }
            "path" => {
                arity(1)?;
                FamilySpec::Path(params[0])
            }
            "wheel" => {
                arity(1)?;
                FamilySpec::Wheel(params[0])
            }
            "web" => {
                arity(2)?;
                FamilySpec::Web(params[0], params[1])
            }
            "antiweb" => {
                arity(2)?;
                FamilySpec::Antiweb(params[0], params[1])
            }
            "three-sun" | "three_sun" => {
                arity(0)?;
                FamilySpec::ThreeSun
            }
            "pyramid" => {
                arity(1)?;
                FamilySpec::Pyramid(params[0])
            }
            "clique-cycle" | "clique_cycle" => {
                arity(1)?;
                FamilySpec::CliqueCycle(params[0])
            }
            "circulant" | "circulant_matrix" => {
                arity(2)?;
                FamilySpec::CirculantMatrix(params[0], params[1])
            }
            other => return Err(invalid(format!("unknown family `{other}`"))),
        };
        spec.build()?;
        Ok(spec)
    }

    pub fn build(&self) -> Result<Generated> {
        use FamilySpec::*;
        Ok(match *self {
            Complete(n) => Generated::Graph(complete(n)?),
            Cycle(n) => Generated::Graph(cycle(n)?),
            Path(n) => Generated::Graph(path(n)?),
            Wheel(n) => Generated::Graph(wheel(n)?),
            Web(n, k) => Generated::Graph(web(n, k)?),
            Antiweb(n, k) => Generated::Graph(antiweb(n, k)?),
            ThreeSun => Generated::Graph(three_sun()),
            Pyramid(j) => Generated::Graph(pyramid(j)?),
            CliqueCycle(k) => Generated::Graph(clique_cycle_family(k)?),
            CirculantMatrix(n, k) => Generated::Matrix(circulant_matrix(n, k)?),
        })
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FamilySpec::*;
        match self {
            Complete(n) => write!(f, "complete {n}"),
            Cycle(n) => write!(f, "cycle {n}"),
            Path(n) => write!(f, "path {n}"),
            Wheel(n) => write!(f, "wheel {n}"),
            Web(n, k) => write!(f, "web {n} {k}"),
            Antiweb(n, k) => write!(f, "antiweb {n} {k}"),
            ThreeSun => write!(f, "three-sun"),
            Pyramid(j) => write!(f, "pyramid {j}"),
            CliqueCycle(k) => write!(f, "clique-cycle {k}"),
            CirculantMatrix(n, k) => write!(f, "circulant {n} {k}"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// `"web 7 2"`, `"three-sun"`, ...
    fn from_str(s: &str) -> Result<FamilySpec> {
        let mut words = s.split_whitespace();
        let name = words.next().ok_or_else(|| invalid("empty family spec"))?;
        let params = words
            .map(|w| w.parse::<usize>().map_err(|_| invalid(format!("bad parameter {w:?}"))))
            .collect::<Result<Vec<_>>>()?;
        FamilySpec::parse(name, &params)
    }
}
