//! Exhaustive verification suites over small graphs. Graphs are checked
//! in parallel on the current rayon pool; results keep census order.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

use crate::error::{check_cap, Error, Result};
use crate::generators::{connected_graphs, web, CONNECTED_GRAPH_COUNTS, MAX_CENSUS_NODES};
use crate::graph::{closed_neighbourhood_matrix, Graph};
use crate::labels;
use crate::packing::{check_scaling_identity, MAX_LP_NODES};
use crate::perfection::{family_f_membership, is_perfect_graph, is_perfect_matrix, Limits, MAX_PERFECT_GRAPH_NODES};
use crate::recognition::{clique_graph, recognize_graph, Method};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    /// The three extended clique-node recognizers agree.
    TheoremMain,
    /// Vertex enumeration agrees with "extended clique-node and perfect
    /// clique graph".
    Chvatal,
    /// Perfect N[G] gives `L_{k} = k L_1`; `L_{k} >= k L_1 >= ...` always.
    Suf2,
    /// A web is in F iff it is complete.
    Webs,
    /// Connected graph counts.
    Census,
}

impl Suite {
    pub const ALL: [Suite; 5] = [Suite::TheoremMain, Suite::Chvatal, Suite::Suf2, Suite::Webs, Suite::Census];

    pub fn default_max_n(self) -> usize {
        match self {
            Suite::TheoremMain | Suite::Census => 7,
            Suite::Chvatal | Suite::Suf2 => 6,
            Suite::Webs => 12,
        }
    }

    fn max_n_cap(self) -> usize {
        match self {
            Suite::Webs => MAX_PERFECT_GRAPH_NODES,
            Suite::Chvatal | Suite::Suf2 => MAX_LP_NODES.min(MAX_CENSUS_NODES),
            _ => MAX_CENSUS_NODES,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::TheoremMain => "theorem-main",
            Suite::Chvatal => "chvatal",
            Suite::Suf2 => "suf2",
            Suite::Webs => "webs",
            Suite::Census => "census",
        })
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.to_string() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown suite `{s}`")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteOptions {
    pub max_n: Option<usize>,
    /// Values of `k` for the packing suite.
    pub ks: Vec<u64>,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            max_n: None,
            ks: vec![2, 3, 4],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub nodes: usize,
    #[serde(with = "labels::pairs")]
    pub edges: Vec<(usize, usize)>,
    pub detail: String,
}

impl Counterexample {
    fn new(g: &Graph, detail: String) -> Self {
        Counterexample {
            nodes: g.n(),
            edges: g.edges(),
            detail,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteOutcome {
    pub suite: Suite,
    pub max_n: usize,
    /// Graphs (or, for the census, node counts) checked.
    pub checked: usize,
    pub passed: bool,
    pub failures: Vec<Counterexample>,
}

pub fn run_suite(suite: Suite, options: &SuiteOptions) -> Result<SuiteOutcome> {
    let max_n = options.max_n.unwrap_or(suite.default_max_n());
    check_cap("suite nodes", suite.max_n_cap(), max_n)?;
    if max_n == 0 {
        return Err(Error::InvalidParameter("max-n must be at least 1".into()));
    }
    if options.ks.contains(&0) {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    let (checked, failures) = match suite {
        Suite::Census => census(max_n)?,
        Suite::Webs => {
            let webs: Vec<(usize, usize, Graph)> = (2..=max_n)
                .flat_map(|n| (1..=4).map(move |k| (n, k)))
                .map(|(n, k)| web(n, k).map(|g| (n, k, g)))
                .collect::<Result<_>>()?;
            let results: Vec<Option<Counterexample>> = webs
                .par_iter()
                .map(|(n, k, g)| check_web(*n, *k, g))
                .collect::<Result<_>>()?;
            (webs.len(), results.into_iter().flatten().collect())
        }
        _ => {
            let graphs: Vec<Graph> = (1..=max_n)
                .map(connected_graphs)
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .flatten()
                .collect();
            let results: Vec<Option<Counterexample>> = graphs
                .par_iter()
                .map(|g| match suite {
                    Suite::TheoremMain => check_recognizers(g),
                    Suite::Chvatal => check_chvatal(g),
                    _ => check_scaling(g, &options.ks),
                })
                .collect::<Result<_>>()?;
            (graphs.len(), results.into_iter().flatten().collect())
        }
    };
    Ok(SuiteOutcome {
        suite,
        max_n,
        checked,
        passed: failures.is_empty(),
        failures,
    })
}

fn check_recognizers(g: &Graph) -> Result<Option<Counterexample>> {
    let verdicts = Method::ALL
        .iter()
        .map(|&m| recognize_graph(g, m).map(|c| c.verdict))
        .collect::<Result<Vec<_>>>()?;
    if verdicts.iter().all(|&v| v == verdicts[0]) {
        return Ok(None);
    }
    let detail = Method::ALL
        .iter()
        .zip(&verdicts)
        .map(|(m, v)| format!("{m}={v}"))
        .collect::<Vec<_>>()
        .join(" ");
    Ok(Some(Counterexample::new(g, detail)))
}

fn check_chvatal(g: &Graph) -> Result<Option<Counterexample>> {
    let m = closed_neighbourhood_matrix(g);
    let matrix = is_perfect_matrix(&m)?.perfect;
    let ecn = recognize_graph(g, Method::Cliques)?.verdict;
    let q = is_perfect_graph(&clique_graph(&m)?)?.perfect;
    Ok((matrix != (ecn && q)).then(|| {
        Counterexample::new(
            g,
            format!("matrix_perfect={matrix} extended_clique_node={ecn} clique_graph_perfect={q}"),
        )
    }))
}

fn check_scaling(g: &Graph, ks: &[u64]) -> Result<Option<Counterexample>> {
    for &k in ks {
        let r = check_scaling_identity(g, k)?;
        if !r.inequalities_hold || !r.implication_holds {
            return Ok(Some(Counterexample::new(
                g,
                format!(
                    "k={k} kpf={} k*L_1={} L_k={} matrix_perfect={:?}",
                    r.kpf, r.k_times_limited_1, r.limited_k, r.matrix_perfect
                ),
            )));
        }
    }
    Ok(None)
}

fn check_web(n: usize, k: usize, g: &Graph) -> Result<Option<Counterexample>> {
    let r = family_f_membership(g, &Limits::default())?;
    let expected = n <= 2 * k + 1;
    Ok((r.in_family_f != expected || !r.agrees).then(|| {
        Counterexample::new(
            g,
            format!("web({n},{k}) in_family_f={} expected={expected} agrees={}", r.in_family_f, r.agrees),
        )
    }))
}

fn census(max_n: usize) -> Result<(usize, Vec<Counterexample>)> {
    let mut failures = Vec::new();
    for n in 1..=max_n {
        let graphs: Vec<Graph> = connected_graphs(n)?.collect();
        if let Some(g) = graphs.iter().find(|g| !g.is_connected() || g.n() != n) {
            failures.push(Counterexample::new(g, format!("not a connected graph on {n} nodes")));
        }
        if graphs.len() != CONNECTED_GRAPH_COUNTS[n] {
            failures.push(Counterexample {
                nodes: n,
                edges: Vec::new(),
                detail: format!("{} graphs on {n} nodes, expected {}", graphs.len(), CONNECTED_GRAPH_COUNTS[n]),
            });
        }
    }
    Ok((max_n, failures))
}
