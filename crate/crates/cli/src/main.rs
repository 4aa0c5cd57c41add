mod error;
mod input;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use closedpack::certify::{verify_graph_perfection, verify_matrix_perfection, verify_packing, verify_recognition, Rejected};
use closedpack::packing::{self, LpSolution, Variant};
use closedpack::perfection::{
    family_f_membership, is_perfect_graph, is_perfect_matrix_capped, polytope_vertices_capped, Limits,
    PerfectionReport, DEFAULT_MAX_VERTEX_DIM,
};
use closedpack::recognition::{clique_graph, recognize_matrix};
use closedpack::report::{analyze, verify_report, CheckOutcome};
use closedpack::suites::{run_suite, Suite, SuiteOptions};
use closedpack::{
    closed_neighbourhood_matrix, AnalysisReport, BinaryMatrix, FamilySpec, Generated, Graph, Method,
    RecognitionCertificate, SolveResult,
};

use error::{CliError, Result};
use input::{Input, InputArgs};

#[derive(Debug, Parser)]
#[command(name = "closedpack", version, about = "Exact {k}-packing numbers and perfect closed neighbourhood matrices")]
struct Cli {
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write a generated graph or matrix in text format.
    Gen {
        /// complete, cycle, path, wheel, web, antiweb, three-sun, pyramid,
        /// clique-cycle or circulant.
        family: String,
        params: Vec<usize>,
        /// Write the closed neighbourhood matrix of a graph family.
        #[arg(long)]
        matrix: bool,
    },
    /// Compute a packing number with an optimal witness.
    Solve {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        k: u64,
        #[arg(long, value_enum, default_value_t = VariantArg::Kpf)]
        variant: VariantArg,
        /// Also run the brute-force solver and compare.
        #[arg(long)]
        oracle: bool,
    },
    /// Decide whether a matrix (or N[G]) is an extended clique-node matrix.
    Recognize {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = MethodArg::All)]
        method: MethodArg,
    },
    /// Decide perfection of N[G] or of a matrix.
    Perfection {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = DEFAULT_MAX_VERTEX_DIM)]
        max_vertex_dim: usize,
        /// Include every vertex of P(M) as exact p/q strings.
        #[arg(long)]
        emit_vertices: bool,
    },
    /// Full report on a graph.
    Analyze {
        #[command(flatten)]
        input: InputArgs,
        /// Values of k for the packing numbers.
        #[arg(long, value_delimiter = ',', default_values_t = [1u64])]
        k: Vec<u64>,
        #[arg(long, default_value_t = DEFAULT_MAX_VERTEX_DIM)]
        max_vertex_dim: usize,
    },
    /// Run an exhaustive verification suite.
    Verify {
        #[arg(value_enum)]
        suite: SuiteArg,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long, value_delimiter = ',', default_values_t = [2u64, 3, 4])]
        k: Vec<u64>,
        /// Worker threads (0 uses every core).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Print the outcome as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Re-check the certificates in a JSON document against its input.
    VerifyCertificate {
        #[arg(long)]
        certificate: PathBuf,
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = DEFAULT_MAX_VERTEX_DIM)]
        max_vertex_dim: usize,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum VariantArg {
    Kpf,
    Limited,
    Lp,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MethodArg {
    Cliques,
    Pattern,
    Structural,
    All,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SuiteArg {
    TheoremMain,
    Chvatal,
    Suf2,
    Webs,
    Census,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::TheoremMain => Suite::TheoremMain,
            SuiteArg::Chvatal => Suite::Chvatal,
            SuiteArg::Suf2 => Suite::Suf2,
            SuiteArg::Webs => Suite::Webs,
            SuiteArg::Census => Suite::Census,
        }
    }
}

/// What a command produced, and whether it counts as success.
struct Output {
    text: String,
    ok: bool,
}

impl Output {
    fn json<T: Serialize>(value: &T, ok: bool) -> Result<Output> {
        let mut text = serde_json::to_string_pretty(value)?;
        text.push('\n');
        Ok(Output { text, ok })
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command).and_then(|out| emit(cli.output.as_ref(), &out).map(|_| out.ok)) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn emit(path: Option<&PathBuf>, out: &Output) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, &out.text).map_err(|source| CliError::Io { path: p.clone(), source }),
        None => std::io::stdout()
            .write_all(out.text.as_bytes())
            .map_err(|source| CliError::Io { path: "<stdout>".into(), source }),
    }
}

fn run(command: Command) -> Result<Output> {
    match command {
        Command::Gen { family, params, matrix } => gen(&family, &params, matrix),
        Command::Solve { input, k, variant, oracle } => solve(&input, k, variant, oracle),
        Command::Recognize { input, method } => recognize(&input, method),
        Command::Perfection { input, max_vertex_dim, emit_vertices } => {
            perfection(&input, max_vertex_dim, emit_vertices)
        }
        Command::Analyze { input, k, max_vertex_dim } => {
            let (g, descriptor) = input.load_graph()?;
            let start = Instant::now();
            let report = analyze(&g, descriptor, &k, &Limits { max_vertex_dim })?;
            let elapsed = start.elapsed();
            let mut value = serde_json::to_value(&report)?;
            value["timing"] = json!({ "elapsed_ms": elapsed.as_secs_f64() * 1e3 });
            Output::json(&value, true)
        }
        Command::Verify { suite, max_n, k, jobs, json } => {
            let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build()?;
            let options = SuiteOptions { max_n, ks: k };
            let outcome = pool.install(|| run_suite(suite.into(), &options))?;
            if json {
                return Output::json(&outcome, outcome.passed);
            }
            let mut text = format!(
                "{} {}: {} checked up to n = {}, {} failure(s)\n",
                if outcome.passed { "PASS" } else { "FAIL" },
                outcome.suite,
                outcome.checked,
                outcome.max_n,
                outcome.failures.len()
            );
            for f in &outcome.failures {
                let edges: Vec<String> = f.edges.iter().map(|(u, v)| format!("{}-{}", u + 1, v + 1)).collect();
                text += &format!("  n={} edges=[{}] {}\n", f.nodes, edges.join(" "), f.detail);
            }
            Ok(Output { text, ok: outcome.passed })
        }
        Command::VerifyCertificate { certificate, input, max_vertex_dim } => {
            verify_certificate(&certificate, &input, max_vertex_dim)
        }
    }
}

fn gen(family: &str, params: &[usize], matrix: bool) -> Result<Output> {
    let spec = FamilySpec::parse(family, params)?;
    let text = match (spec.build()?, matrix) {
        (Generated::Graph(g), false) => g.to_text(),
        (Generated::Graph(g), true) => closed_neighbourhood_matrix(&g).to_text(),
        (Generated::Matrix(m), _) => m.to_text(),
    };
    Ok(Output { text, ok: true })
}

fn solve(input: &InputArgs, k: u64, variant: VariantArg, oracle: bool) -> Result<Output> {
    let (g, _) = input.load_graph()?;
    let variant = match variant {
        VariantArg::Kpf => Variant::Kpf,
        VariantArg::Limited => Variant::Limited,
        VariantArg::Lp => {
            let LpSolution { value, point } = packing::solve_lp_relaxation(&g, k)?;
            let value = closedpack::perfection::format_rational(&value);
            return Output::json(&json!({ "variant": "lp", "optimum": value, "witness": point }), true);
        }
    };
    let result = packing::solve(&g, k, variant)?;
    let mut value = serde_json::to_value(&result)?;
    let mut ok = true;
    if oracle {
        let brute = packing::solve_bruteforce(&g, k, variant)?;
        ok = brute.optimum == result.optimum;
        value["oracle"] = json!({
            "optimum": brute.optimum,
            "explored": brute.stats.explored,
            "agrees": ok,
        });
    }
    Output::json(&value, ok)
}

fn input_matrix(input: &InputArgs) -> Result<BinaryMatrix> {
    Ok(match input.load()? {
        Input::Graph(g, _) => closed_neighbourhood_matrix(&g),
        Input::Matrix(m) => m,
    })
}

fn recognize(input: &InputArgs, method: MethodArg) -> Result<Output> {
    let m = input_matrix(input)?;
    let one = |method| recognize_matrix(&m, method);
    match method {
        MethodArg::Cliques => Output::json(&one(Method::Cliques)?, true),
        MethodArg::Pattern => Output::json(&one(Method::Pattern)?, true),
        MethodArg::Structural => Output::json(&one(Method::Structural)?, true),
        MethodArg::All => {
            let mut certs = vec![one(Method::Cliques)?, one(Method::Pattern)?];
            // The structural method only applies to closed neighbourhood matrices.
            if let Ok(c) = one(Method::Structural) {
                certs.push(c);
            }
            Output::json(&certs, true)
        }
    }
}

fn perfection(input: &InputArgs, max_vertex_dim: usize, emit_vertices: bool) -> Result<Output> {
    let (mut value, m) = match input.load()? {
        Input::Graph(g, _) => {
            let report = family_f_membership(&g, &Limits { max_vertex_dim })?;
            (serde_json::to_value(&report)?, closed_neighbourhood_matrix(&g))
        }
        Input::Matrix(m) => {
            let matrix = is_perfect_matrix_capped(&m, max_vertex_dim)?;
            let q = is_perfect_graph(&clique_graph(&m)?)?;
            let ecn = recognize_matrix(&m, Method::Cliques)?;
            let in_family = ecn.verdict && q.perfect;
            let value = json!({
                "extended_clique_node": ecn,
                "clique_graph": q,
                "matrix": matrix,
                "agrees": matrix.perfect == in_family,
            });
            (value, m)
        }
    };
    if emit_vertices {
        value["vertices"] = serde_json::to_value(polytope_vertices_capped(&m, max_vertex_dim)?)?;
    }
    Output::json(&value, true)
}

fn outcome(check: &str, result: std::result::Result<(), Rejected>) -> CheckOutcome {
    CheckOutcome {
        check: check.into(),
        ok: result.is_ok(),
        reason: result.err().map(|r| r.0),
    }
}

/// Accepts the JSON written by `analyze`, `recognize`, `perfection` (for a
/// graph) or `solve`.
fn verify_certificate(path: &Path, input: &InputArgs, max_vertex_dim: usize) -> Result<Output> {
    let bytes = input::read_source(path)?;
    let doc: Value = serde_json::from_slice(&bytes)?;
    let loaded = input.load()?;
    let m = match &loaded {
        Input::Graph(g, _) => closed_neighbourhood_matrix(g),
        Input::Matrix(m) => m.clone(),
    };
    let graph = |what: &str| -> Result<&Graph> {
        match &loaded {
            Input::Graph(g, _) => Ok(g),
            Input::Matrix(_) => Err(CliError::Usage(format!("{what} certificates need --graph or --family"))),
        }
    };

    let checks: Vec<CheckOutcome> = if doc.get("schema").is_some() {
        let report: AnalysisReport = serde_json::from_value(doc)?;
        verify_report(graph("analysis")?, &report, max_vertex_dim)
    } else if doc.is_array() {
        let certs: Vec<RecognitionCertificate> = serde_json::from_value(doc)?;
        certs
            .iter()
            .map(|c| outcome(&format!("recognition/{}", c.method), verify_recognition(&m, c)))
            .collect()
    } else if doc.get("witness").is_some_and(|w| w.get("kind").is_some()) {
        let cert: RecognitionCertificate = serde_json::from_value(doc)?;
        vec![outcome(&format!("recognition/{}", cert.method), verify_recognition(&m, &cert))]
    } else if doc.get("in_family_f").is_some() {
        let report: PerfectionReport = serde_json::from_value(doc)?;
        let g = graph("perfection")?;
        let q = clique_graph(&m)?;
        let mut out = vec![
            outcome("recognition/cliques", verify_recognition(&m, &report.extended_clique_node.cliques)),
            outcome("recognition/pattern", verify_recognition(&m, &report.extended_clique_node.pattern)),
            outcome("clique_graph", verify_graph_perfection(&q, &report.clique_graph)),
        ];
        if let Some(mp) = &report.matrix {
            out.push(outcome("matrix", verify_matrix_perfection(&m, mp, max_vertex_dim)));
        }
        let consistent = report.in_family_f == (report.extended_clique_node.verdict && report.clique_graph.perfect)
            && g.n() == m.n_cols();
        out.push(outcome(
            "in_family_f",
            if consistent { Ok(()) } else { Err(Rejected("verdicts are inconsistent".into())) },
        ));
        out
    } else if doc.get("node_order").is_some() {
        let result: SolveResult = serde_json::from_value(doc)?;
        let g = graph("solve")?;
        vec![outcome(
            &format!("packing/{}", result.variant),
            verify_packing(g, result.variant, &result.witness, result.optimum),
        )]
    } else {
        return Err(CliError::Usage("unrecognized certificate document".into()));
    };
    let ok = checks.iter().all(|c| c.ok);
    Output::json(&checks, ok)
}
