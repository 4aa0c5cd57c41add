use serde_json::Value;
use std::path::PathBuf;
use std::process::{Command, Output};

fn closedpack(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_closedpack"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("JSON on stdout")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("closedpack-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn write(name: &str, text: &str) -> String {
    let p = scratch(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_owned()
}

#[test]
fn gen_writes_text_formats() {
    let out = closedpack(&["gen", "web", "7", "2"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("7 14\n"));
    assert_eq!(text.lines().count(), 15);

    let out = closedpack(&["gen", "cycle", "4"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "4 4\n1 2\n1 4\n2 3\n3 4\n");

    let out = closedpack(&["gen", "circulant", "7", "3", "--matrix"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("7 7\n0111000\n"));
    assert_eq!(text.lines().count(), 8);

    let path = scratch("c4.txt");
    let out = closedpack(&["gen", "cycle", "4", "--matrix", "--output", path.to_str().unwrap()]);
    assert!(out.status.success() && out.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "4 4\n1101\n1110\n0111\n1011\n");
}

#[test]
fn analyze_named_graphs() {
    let c5 = json(&closedpack(&["analyze", "--family", "cycle 5"]));
    assert_eq!(c5["schema"], 1);
    assert_eq!(c5["in_family_f"], false);
    assert_eq!(c5["clique_graph"]["complete"], true);

    let k4 = json(&closedpack(&["analyze", "--family", "complete 4"]));
    assert_eq!(k4["in_family_f"], true);

    let s3 = json(&closedpack(&["analyze", "--family", "three-sun", "--k", "3"]));
    assert_eq!(s3["packing"][0]["kpf"], 4);
    assert_eq!(s3["packing"][0]["limited_1"], 1);
    assert_eq!(s3["recognition"].as_array().unwrap().len(), 3);
}

#[test]
fn analyze_is_deterministic_apart_from_timing() {
    let graph = write("s3.txt", "6 9\n1 2\n1 3\n1 4\n1 6\n2 3\n2 4\n2 5\n3 5\n3 6\n");
    let run = || {
        let mut v = json(&closedpack(&["analyze", "--graph", &graph, "--k", "1,2,3"]));
        assert!(v["timing"]["elapsed_ms"].is_number());
        v.as_object_mut().unwrap().remove("timing");
        serde_json::to_string(&v).unwrap()
    };
    assert_eq!(run(), run());
    let v: Value = serde_json::from_str(&run()).unwrap();
    assert_eq!(v["input"]["kind"], "file");
    assert_eq!(v["input"]["sha256"].as_str().unwrap().len(), 64);
}

#[test]
fn certificates_round_trip() {
    let graph = write("pyr.txt", &String::from_utf8(closedpack(&["gen", "pyramid", "1"]).stdout).unwrap());
    for (name, args) in [
        ("analyze.json", vec!["analyze", "--graph", &graph, "--k", "2,3"]),
        ("recognize.json", vec!["recognize", "--graph", &graph]),
        ("perfection.json", vec!["perfection", "--graph", &graph]),
        ("solve.json", vec!["solve", "--graph", &graph, "--k", "3"]),
    ] {
        let out = closedpack(&args);
        assert!(out.status.success(), "{name}");
        let cert = write(name, &String::from_utf8(out.stdout).unwrap());
        let check = closedpack(&["verify-certificate", "--certificate", &cert, "--graph", &graph]);
        assert!(check.status.success(), "{name}: {}", String::from_utf8_lossy(&check.stdout));
        assert!(json(&check).as_array().unwrap().iter().all(|c| c["ok"] == true));
    }

    let mut report = json(&closedpack(&["analyze", "--graph", &graph, "--k", "2"]));
    report["packing"][0]["kpf"] = 99.into();
    let cert = write("tampered.json", &report.to_string());
    let check = closedpack(&["verify-certificate", "--certificate", &cert, "--graph", &graph]);
    assert_eq!(check.status.code(), Some(1));

    let garbage = write("garbage.json", "{\"hello\": 1}");
    let check = closedpack(&["verify-certificate", "--certificate", &garbage, "--graph", &graph]);
    assert_eq!(check.status.code(), Some(2));
}

#[test]
fn solve_variants() {
    let out = json(&closedpack(&["solve", "--family", "cycle 4", "--k", "3", "--oracle"]));
    assert_eq!(out["optimum"], 4);
    assert_eq!(out["oracle"]["agrees"], true);
    let lp = json(&closedpack(&["solve", "--family", "cycle 4", "--k", "1", "--variant", "lp"]));
    assert_eq!(lp["optimum"], "4/3");
    assert_eq!(lp["witness"], serde_json::json!(["1/3", "1/3", "1/3", "1/3"]));
    let limited = json(&closedpack(&["solve", "--family", "three-sun", "--k", "3", "--variant", "limited"]));
    assert_eq!(limited["optimum"], 4);
}

#[test]
fn perfection_emits_exact_vertices() {
    let matrix = write("jmi.txt", "4 4\n0111\n1011\n1101\n1110\n");
    let out = json(&closedpack(&["perfection", "--matrix", &matrix, "--emit-vertices"]));
    assert_eq!(out["matrix"]["perfect"], false);
    assert_eq!(out["matrix"]["fractional_vertex"], serde_json::json!(["1/3", "1/3", "1/3", "1/3"]));
    let vertices = out["vertices"].as_array().unwrap();
    assert!(vertices.contains(&serde_json::json!(["1/3", "1/3", "1/3", "1/3"])));
    assert!(vertices.contains(&serde_json::json!(["0/1", "0/1", "0/1", "0/1"])));
}

#[test]
fn exit_codes() {
    let bad = write("bad.txt", "3 2\n1 2\n2 2\n");
    assert_eq!(closedpack(&["analyze", "--graph", &bad]).status.code(), Some(2));
    assert_eq!(closedpack(&["gen", "web", "7"]).status.code(), Some(2));
    assert_eq!(closedpack(&["gen", "cycle", "2"]).status.code(), Some(2));
    assert_eq!(closedpack(&["solve", "--family", "cycle 4", "--k", "0"]).status.code(), Some(2));
    let out = closedpack(&["solve", "--family", "path 25", "--k", "1"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("solver nodes"));
    assert_eq!(
        closedpack(&["perfection", "--family", "cycle 11", "--max-vertex-dim", "10", "--emit-vertices"]).status.code(),
        Some(3)
    );
    assert_eq!(closedpack(&["analyze", "--graph", "/nonexistent/graph.txt"]).status.code(), Some(4));
    assert_eq!(closedpack(&["verify", "census", "--max-n", "9"]).status.code(), Some(3));
}

#[test]
fn verify_suites() {
    let out = closedpack(&["verify", "webs", "--max-n", "12", "--jobs", "2"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("PASS webs"));

    let out = closedpack(&["verify", "suf2", "--max-n", "6", "--k", "2,3", "--json"]);
    assert!(out.status.success());
    assert_eq!(json(&out)["checked"], 143);

    let out = closedpack(&["verify", "census"]);
    assert!(out.status.success());

    // The structural recognizer disagrees with the matrix recognizers on
    // some six- and seven-node graphs; the suite reports them.
    let out = closedpack(&["verify", "theorem-main", "--max-n", "7", "--json"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["checked"], 996);
    assert_eq!(v["failures"].as_array().unwrap().len(), 28);
}
