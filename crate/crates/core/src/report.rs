//! The combined analysis of one graph, and its re-verification.

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::certify::{
    verify_graph_perfection, verify_matrix_perfection, verify_packing, verify_recognition, Rejected,
};
use crate::error::Result;
use crate::generators::FamilySpec;
use crate::graph::{closed_neighbourhood_matrix, Graph};
use crate::labels;
use crate::packing::{self, PackingFunction, Variant, MAX_LP_NODES};
use crate::perfection::{
    family_f_membership, option_rational_string, GraphPerfection, Limits, MatrixPerfection,
};
use crate::recognition::{clique_graph, recognize_graph, Method, RecognitionCertificate};

pub const SCHEMA_VERSION: u32 = 1;

/// Where the analysed graph came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum InputDescriptor {
    Family { spec: FamilySpec },
    File { sha256: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueGraphSummary {
    #[serde(with = "labels::pairs")]
    pub edges: Vec<(usize, usize)>,
    pub complete: bool,
    pub perfection: GraphPerfection,
}

/// Packing numbers for one `k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PackingValues {
    pub k: u64,
    /// `L_1`
    pub limited_1: u64,
    /// `L_k`
    pub limited_k: u64,
    /// `L_{k}`
    pub kpf: u64,
    /// `L^R_1`, up to the LP node cap.
    #[serde(default, with = "option_rational_string")]
    pub lp_1: Option<BigRational>,
    pub limited_1_witness: PackingFunction,
    pub limited_k_witness: PackingFunction,
    pub kpf_witness: PackingFunction,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub schema: u32,
    pub input: InputDescriptor,
    pub nodes: usize,
    pub edges: usize,
    /// One certificate per recognizer, in [`Method::ALL`] order.
    pub recognition: Vec<RecognitionCertificate>,
    pub extended_clique_node: bool,
    pub clique_graph: CliqueGraphSummary,
    pub matrix: Option<MatrixPerfection>,
    pub in_family_f: bool,
    pub agrees: bool,
    pub packing: Vec<PackingValues>,
}

pub fn analyze(g: &Graph, input: InputDescriptor, ks: &[u64], limits: &Limits) -> Result<AnalysisReport> {
    let family = family_f_membership(g, limits)?;
    let recognition = Method::ALL
        .iter()
        .map(|&method| recognize_graph(g, method))
        .collect::<Result<Vec<_>>>()?;
    let q = clique_graph(&closed_neighbourhood_matrix(g))?;
    let n = g.n();
    let lp_1 = if n <= MAX_LP_NODES {
        Some(packing::lp_relaxation_value(g, 1)?)
    } else {
        None
    };
    let limited_1 = packing::solve_limited_packing(g, 1)?;
    let packing = ks
        .iter()
        .map(|&k| {
            let limited_k = packing::solve_limited_packing(g, k)?;
            let kpf = packing::solve_kpf(g, k)?;
            Ok(PackingValues {
                k,
                limited_1: limited_1.optimum,
                limited_k: limited_k.optimum,
                kpf: kpf.optimum,
                lp_1: lp_1.clone(),
                limited_1_witness: limited_1.witness.clone(),
                limited_k_witness: limited_k.witness,
                kpf_witness: kpf.witness,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(AnalysisReport {
        schema: SCHEMA_VERSION,
        input,
        nodes: n,
        edges: g.edge_count(),
        recognition,
        extended_clique_node: family.extended_clique_node.verdict,
        clique_graph: CliqueGraphSummary {
            complete: q.edge_count() == n * (n - 1) / 2,
            edges: q.edges(),
            perfection: family.clique_graph,
        },
        matrix: family.matrix,
        in_family_f: family.in_family_f,
        agrees: family.agrees,
        packing,
    })
}

/// One line of a report re-verification.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub check: String,
    pub ok: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

/// Re-checks every certificate in `report` against `g`. Optimality of the
/// packing values is not certified; their witnesses are checked for
/// feasibility and objective.
pub fn verify_report(g: &Graph, report: &AnalysisReport, max_vertex_dim: usize) -> Vec<CheckOutcome> {
    let m = closed_neighbourhood_matrix(g);
    let mut out = Vec::new();
    let mut push = |check: String, result: std::result::Result<(), Rejected>| {
        out.push(CheckOutcome {
            check,
            ok: result.is_ok(),
            reason: result.err().map(|r| r.0),
        })
    };

    push(
        "shape".into(),
        if report.nodes == g.n() && report.edges == g.edge_count() && report.schema == SCHEMA_VERSION {
            Ok(())
        } else {
            Err(Rejected("node count, edge count or schema differs from the input".into()))
        },
    );
    for cert in &report.recognition {
        push(format!("recognition/{}", cert.method), verify_recognition(&m, cert));
    }
    let q = clique_graph(&m);
    push(
        "clique_graph".into(),
        match &q {
            Ok(q) if q.edges() == report.clique_graph.edges => {
                verify_graph_perfection(q, &report.clique_graph.perfection)
            }
            _ => Err(Rejected("clique graph edges differ".into())),
        },
    );
    if let Some(mp) = &report.matrix {
        push("matrix".into(), verify_matrix_perfection(&m, mp, max_vertex_dim));
    }
    let cliques = report.recognition.iter().find(|c| c.method == Method::Cliques);
    push(
        "in_family_f".into(),
        if cliques.is_some_and(|c| c.verdict == report.extended_clique_node)
            && report.in_family_f == (report.extended_clique_node && report.clique_graph.perfection.perfect)
        {
            Ok(())
        } else {
            Err(Rejected("verdicts are inconsistent".into()))
        },
    );
    for p in &report.packing {
        let k = p.k;
        push(
            format!("packing/k={k}/limited_1"),
            check_witness(g, Variant::Limited, &p.limited_1_witness, p.limited_1, 1),
        );
        push(
            format!("packing/k={k}/limited_k"),
            check_witness(g, Variant::Limited, &p.limited_k_witness, p.limited_k, k),
        );
        push(format!("packing/k={k}/kpf"), check_witness(g, Variant::Kpf, &p.kpf_witness, p.kpf, k));
    }
    out
}

fn check_witness(g: &Graph, variant: Variant, f: &PackingFunction, optimum: u64, k: u64) -> std::result::Result<(), Rejected> {
    if f.k != k {
        return Err(Rejected(format!("witness bound {} differs from k = {k}", f.k)));
    }
    verify_packing(g, variant, f, optimum)
}
