//! Acceptance criteria. Each prints one PASS or FAIL line; the process
//! exits non-zero when any criterion fails.

use std::time::{Duration, Instant};

use closedpack::generators::{
    circulant_matrix, clique_cycle_family, complete, cone, connected_graphs, connected_graphs_up_to,
    cycle, path, pyramid, three_sun, web, wheel,
};
use closedpack::graph::{find_induced_cycle, is_isomorphic};
use closedpack::packing::{lp_relaxation_value, solve_kpf, solve_kpf_bruteforce, solve_limited_packing};
use closedpack::perfection::{
    family_f_membership, is_perfect_graph, is_perfect_matrix, polytope_vertices, Limits,
};
use closedpack::recognition::{clique_graph, recognize_graph, recognize_matrix};
use closedpack::{closed_neighbourhood_matrix, Graph, Method, RationalPoint};
use num_rational::BigRational;

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

fn rejected_by_all(g: &Graph) -> bool {
    Method::ALL.iter().all(|&m| !recognize_graph(g, m).unwrap().verdict)
}

fn paper_values() -> Outcome {
    let mut bad = Vec::new();
    let s3 = three_sun();
    let l1 = solve_limited_packing(&s3, 1).unwrap().optimum;
    let l3 = solve_kpf(&s3, 3).unwrap().optimum;
    if (l1, l3) != (1, 4) {
        bad.push(format!("S3: L_1={l1} L_{{3}}={l3}"));
    }
    let c4 = cycle(4).unwrap();
    for k in [1u64, 2, 4, 5] {
        let v = solve_kpf(&c4, k).unwrap().optimum;
        if v != k {
            bad.push(format!("C4: L_{{{k}}}={v}, expected {k}"));
        }
    }
    for n in 4..=6 {
        if !rejected_by_all(&cycle(n).unwrap()) {
            bad.push(format!("N[C{n}] accepted"));
        }
    }
    if !rejected_by_all(&s3) {
        bad.push("N[S3] accepted".into());
    }
    outcome(bad.is_empty(), bad.join("; "))
}

fn recognizer_equivalence() -> Outcome {
    let graphs = connected_graphs_up_to(7).unwrap();
    let mut disagreements = Vec::new();
    for g in &graphs {
        let v: Vec<bool> = Method::ALL.iter().map(|&m| recognize_graph(g, m).unwrap().verdict).collect();
        if v.iter().any(|&x| x != v[0]) {
            disagreements.push((g.clone(), v));
        }
    }
    let mut detail = format!("{} graphs, {} disagreements", graphs.len(), disagreements.len());
    if let Some((g, v)) = disagreements.first() {
        detail += &format!(
            "; first: {g:?} cliques={} pattern={} structural={}",
            v[0], v[1], v[2]
        );
    }
    outcome(disagreements.is_empty(), detail)
}

fn chvatal_cross_check() -> Outcome {
    let graphs = connected_graphs_up_to(6).unwrap();
    let mut bad = 0;
    for g in &graphs {
        let m = closed_neighbourhood_matrix(g);
        let matrix = is_perfect_matrix(&m).unwrap().perfect;
        let ecn = recognize_graph(g, Method::Cliques).unwrap().verdict;
        let q = is_perfect_graph(&clique_graph(&m).unwrap()).unwrap().perfect;
        if matrix != (ecn && q) {
            bad += 1;
        }
    }
    outcome(bad == 0, format!("{} graphs, {bad} mismatches", graphs.len()))
}

fn scaling_on_perfect_matrices() -> Outcome {
    let graphs = connected_graphs_up_to(6).unwrap();
    let mut perfect = 0;
    let mut bad = Vec::new();
    for g in &graphs {
        let is_perfect = is_perfect_matrix(&closed_neighbourhood_matrix(g)).unwrap().perfect;
        perfect += is_perfect as usize;
        let l1 = solve_limited_packing(g, 1).unwrap().optimum;
        for k in [2u64, 3, 4] {
            let kpf = solve_kpf(g, k).unwrap().optimum;
            let lk = solve_limited_packing(g, k).unwrap().optimum;
            if (is_perfect && kpf != k * l1) || kpf < k * l1 || lk > kpf {
                bad.push(format!("{g:?} k={k}"));
            }
        }
    }
    outcome(
        bad.is_empty(),
        format!("{} graphs, {perfect} with perfect N[G], {} violations", graphs.len(), bad.len()),
    )
}

fn circulants() -> Outcome {
    let mut checked = 0;
    let mut bad = Vec::new();
    for n in 4..=13 {
        for k in 1..=3 {
            // The circulant needs k + 1 <= n - 1.
            if k + 1 > n - 1 {
                continue;
            }
            let m = circulant_matrix(n, k + 1).unwrap();
            let expected = n >= 3 * k + 1;
            for method in [Method::Cliques, Method::Pattern] {
                checked += 1;
                if recognize_matrix(&m, method).unwrap().verdict != expected {
                    bad.push(format!("C_{n}^{} by {method}", k + 1));
                }
            }
        }
    }
    outcome(bad.is_empty(), format!("{checked} checks, exceptions: {bad:?}"))
}

fn webs() -> Outcome {
    let mut bad = Vec::new();
    for n in 2..=12 {
        for k in 1..=4 {
            let r = family_f_membership(&web(n, k).unwrap(), &Limits::default()).unwrap();
            if r.in_family_f != (n <= 2 * k + 1) || !r.agrees {
                bad.push(format!("web({n},{k})"));
            }
        }
    }
    let q5 = clique_graph(&closed_neighbourhood_matrix(&cycle(5).unwrap())).unwrap();
    let q6 = clique_graph(&closed_neighbourhood_matrix(&cycle(6).unwrap())).unwrap();
    if !is_isomorphic(&q5, &complete(5).unwrap()) {
        bad.push("G_Q(C5) is not K5".into());
    }
    if !is_isomorphic(&q6, &web(6, 2).unwrap()) {
        bad.push("G_Q(C6) is not W_6^2".into());
    }
    outcome(bad.is_empty(), format!("exceptions: {bad:?}"))
}

/// Every graph on up to 5 labelled nodes.
fn all_small_graphs() -> Vec<Graph> {
    let mut out = Vec::new();
    for n in 1..=5 {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        for mask in 0u32..1 << pairs.len() {
            let mut g = Graph::empty(n);
            for (i, &(u, v)) in pairs.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    g.add_edge(u, v);
                }
            }
            out.push(g);
        }
    }
    out
}

fn universal_nodes_and_wheels() -> Outcome {
    let mut bases = all_small_graphs();
    bases.extend((6..=7).flat_map(|n| connected_graphs(n).unwrap()));
    for n in 3..=11 {
        bases.push(cycle(n).unwrap());
        bases.push(path(n).unwrap());
        bases.extend((2..=4).map(|k| web(n, k).unwrap()));
    }
    bases.push(three_sun());
    bases.extend((1..=3).map(|j| pyramid(j).unwrap()));
    bases.push(clique_cycle_family(1).unwrap());
    let mut graphs: Vec<Graph> = bases.iter().map(cone).filter(|g| g.n() <= 12).collect();
    graphs.extend((1..=12).map(|n| complete(n).unwrap()));
    let wheels: Vec<Graph> = (4..=12).map(|n| wheel(n).unwrap()).collect();

    let mut bad = 0;
    for g in graphs.iter().chain(&wheels) {
        let r = family_f_membership(g, &Limits::default()).unwrap();
        let q = clique_graph(&closed_neighbourhood_matrix(g)).unwrap();
        let n = g.n();
        if !r.in_family_f || !r.agrees || q.edge_count() != n * (n - 1) / 2 {
            bad += 1;
        }
    }
    outcome(bad == 0, format!("{} graphs with a universal node, {bad} failures", graphs.len() + wheels.len()))
}

fn clique_cycle_example() -> Outcome {
    let mut bad = Vec::new();
    for k in 1..=2 {
        if !clique_cycle_family(k).unwrap().is_chordal() {
            bad.push(format!("k={k} not chordal"));
        }
    }
    let g = clique_cycle_family(2).unwrap();
    let q = clique_graph(&closed_neighbourhood_matrix(&g)).unwrap();
    if find_induced_cycle(&q, 5, |c| c.len() == 5).is_none() {
        bad.push("no induced C5 in the clique graph".into());
    }
    if family_f_membership(&g, &Limits::default()).unwrap().in_family_f {
        bad.push("k=2 is in F".into());
    }
    outcome(bad.is_empty(), format!("exceptions: {bad:?}"))
}

fn solver_oracle() -> Outcome {
    let graphs = connected_graphs_up_to(5).unwrap();
    let mut bad = Vec::new();
    for g in &graphs {
        let lp1 = lp_relaxation_value(g, 1).unwrap();
        for k in 1..=4u64 {
            let fast = solve_kpf(g, k).unwrap().optimum;
            let slow = solve_kpf_bruteforce(g, k).unwrap().optimum;
            if fast != slow {
                bad.push(format!("{g:?} k={k}: {fast} vs {slow}"));
            }
            if lp_relaxation_value(g, k).unwrap() != &lp1 * BigRational::from_integer(k.into()) {
                bad.push(format!("{g:?} k={k}: LP scaling"));
            }
        }
    }
    outcome(bad.is_empty(), format!("{} graphs x 4 values of k, {} mismatches", graphs.len(), bad.len()))
}

fn fractional_vertex() -> Outcome {
    let m = closed_neighbourhood_matrix(&cycle(4).unwrap());
    let fractional: Vec<RationalPoint> =
        polytope_vertices(&m).unwrap().into_iter().filter(|p| !p.is_integral()).collect();
    let third = RationalPoint::from_ratios(&[(1, 3); 4]);
    let verdict = is_perfect_matrix(&m).unwrap();
    outcome(
        fractional == vec![third.clone()] && !verdict.perfect && verdict.fractional_vertex == Some(third),
        format!("fractional vertices: {fractional:?}"),
    )
}

fn main() {
    let criteria: [(&str, fn() -> Outcome, Option<Duration>); 10] = [
        ("packing values and rejected cycles", paper_values, Some(Duration::from_secs(1))),
        ("recognizers agree on connected graphs n <= 7", recognizer_equivalence, Some(Duration::from_secs(300))),
        ("vertex enumeration matches two-condition test, n <= 6", chvatal_cross_check, Some(Duration::from_secs(600))),
        ("L_{k} = k L_1 under perfect N[G], n <= 6", scaling_on_perfect_matrices, None),
        ("circulant C_n^(k+1) recognized iff n >= 3k+1", circulants, None),
        ("webs in F iff complete, n <= 12, k <= 4", webs, None),
        ("universal node graphs and wheels in F", universal_nodes_and_wheels, None),
        ("chordal family with imperfect clique graph", clique_cycle_example, None),
        ("branch-and-bound matches brute force, LP scales", solver_oracle, None),
        ("single fractional vertex of P(N[C4])", fractional_vertex, None),
    ];

    let mut failed = 0;
    for (i, (name, run, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let in_time = limit.is_none_or(|l| elapsed <= l);
        let ok = result.ok && in_time;
        failed += !ok as usize;
        let timing = match limit {
            Some(l) => format!("{:.2?} of {:.0?}", elapsed, l),
            None => format!("{elapsed:.2?}"),
        };
        println!(
            "{} criterion {:>2}: {name} [{timing}] {}",
            if ok { "PASS" } else { "FAIL" },
            i + 1,
            result.detail
        );
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
