use std::path::{Path, PathBuf};
use std::process::Command;

use dtgraph::format::WeightsJson;
use dtgraph_core::edge_list::{read_edge_list, write_edge_list};
use dtgraph_core::generators::{gen_random_dt, WeightDistribution};
use dtgraph_core::oracles::brute_min_layers;
use dtgraph_core::rational::int;
use dtgraph_core::weights::verify_dt;
use dtgraph_core::Graph;
use jsonschema::{Resource, Validator};
use serde_json::Value;
use tempfile::TempDir;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn dtgraphs(args: &[&str]) -> Run {
    dtgraphs_env(args, &[])
}

fn dtgraphs_env(args: &[&str], env: &[(&str, &str)]) -> Run {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_dtgraphs"));
    cmd.args(args);
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.output().expect("binary runs");
    Run {
        code: out.status.code().expect("exited normally"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn docs() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../docs")
}

fn load_schema(name: &str) -> Value {
    let text = std::fs::read_to_string(docs().join(format!("{name}.schema.json"))).unwrap();
    serde_json::from_str(&text).unwrap()
}

fn validator(name: &str) -> Validator {
    jsonschema::options()
        .with_resource("urn:dtgraph:weights", Resource::from_contents(load_schema("weights")).unwrap())
        .build(&load_schema(name))
        .unwrap()
}

/// Parses `text` and checks it against the named schema.
fn conforming(name: &str, text: &str) -> Value {
    let value: Value = serde_json::from_str(text).unwrap_or_else(|e| panic!("not JSON ({e}): {text}"));
    let v = validator(name);
    let errors: Vec<String> = v.iter_errors(&value).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{name}: {errors:?}\n{text}");
    value
}

fn write_graph(dir: &TempDir, name: &str, g: &Graph) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, write_edge_list(g)).unwrap();
    path.to_str().unwrap().to_string()
}

fn write_text(dir: &TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

fn c4() -> Graph {
    Graph::new(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap()
}

fn weights_of(report: &Value) -> dtgraph_core::weights::WeightAssignment {
    let w: WeightsJson = serde_json::from_value(report["certificate"]["weights"].clone()).unwrap();
    w.to_assignment().unwrap()
}

#[test]
fn c4_is_rejected_with_a_cycle() {
    let dir = TempDir::new().unwrap();
    let path = write_graph(&dir, "c4.txt", &c4());
    let run = dtgraphs(&["recognize", &path]);
    assert_eq!(run.code, 1, "{}", run.stderr);
    let report = conforming("recognition-report", &run.stdout);
    assert_eq!(report["verdict"], "not-dt");
    assert_eq!(report["certificate"]["kind"], "chordless_cycle");
    assert_eq!(report["certificate"]["witness"]["pattern"], "C4");
}

#[test]
fn k3_is_accepted_with_weights() {
    let dir = TempDir::new().unwrap();
    let path = write_graph(&dir, "k3.txt", &Graph::complete(3));
    let run = dtgraphs(&["recognize", &path, "--verify"]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    let report = conforming("recognition-report", &run.stdout);
    assert_eq!(report["verdict"], "dt");
    assert_eq!(report["verification"]["oracle"], "agree");
    assert!(verify_dt(&Graph::complete(3), &weights_of(&report)).is_ok());
}

#[test]
fn decomposition_certificates_round_trip() {
    let dir = TempDir::new().unwrap();
    let dist = WeightDistribution::uniform(0.2, 4.0, 11);
    let mut decompositions = 0;
    for seed in 0..40u64 {
        let dist = WeightDistribution { seed, ..dist };
        let (g, _) = gen_random_dt(6 + (seed % 20) as usize, &int(2), &int(1), &dist).unwrap();
        let path = write_graph(&dir, "g.txt", &g);
        let run = dtgraphs(&["recognize", &path, "--alpha", "7/2", "--beta", "3/2"]);
        assert_eq!(run.code, 0, "seed {seed}: {}", run.stderr);
        let report = conforming("recognition-report", &run.stdout);
        let wa = weights_of(&report);
        assert_eq!(wa.alpha, dtgraph_core::rational::frac(7, 2));
        assert!(verify_dt(&g, &wa).is_ok());
        decompositions += (report["certificate"]["kind"] == "decomposition") as usize;
    }
    assert!(decompositions > 5);
}

#[test]
fn net_sun_and_disjoint_claws_are_rejected() {
    let dir = TempDir::new().unwrap();
    for (name, kind) in [("net", "net"), ("sun3", "sun")] {
        let out = dir.path().join(name);
        assert_eq!(dtgraphs(&["generate", "named", name, "--out", out.to_str().unwrap()]).code, 0);
        let run = dtgraphs(&["recognize", out.to_str().unwrap(), "--verify"]);
        assert_eq!(run.code, 1);
        assert_eq!(conforming("recognition-report", &run.stdout)["certificate"]["kind"], kind);
    }
    let claws = Graph::new(8, &[(0, 1), (0, 2), (0, 3), (4, 5), (4, 6), (4, 7)]).unwrap();
    let path = write_graph(&dir, "claws.txt", &claws);
    let run = dtgraphs(&["recognize", &path, "--verify"]);
    assert_eq!(run.code, 1);
    let report = conforming("recognition-report", &run.stdout);
    assert_eq!(report["certificate"]["kind"], "disjoint_non_unit_interval");
}

#[test]
fn exhausted_candidates_list_every_attempt() {
    let dir = TempDir::new().unwrap();
    for seed in 0..400u64 {
        let g = dtgraph_core::generators::random_connected(7, seed);
        let cert = dtgraph_core::recognition::recognize(&g);
        if cert.kind() != "no_admissible_partition" {
            continue;
        }
        let path = write_graph(&dir, "g.txt", &g);
        let run = dtgraphs(&["recognize", &path, "--verify"]);
        assert_eq!(run.code, 1);
        let report = conforming("recognition-report", &run.stdout);
        assert!(!report["certificate"]["attempts"].as_array().unwrap().is_empty());
        return;
    }
    panic!("no graph needing the candidate loop found");
}

#[test]
fn malformed_input_exits_2() {
    let dir = TempDir::new().unwrap();
    for (name, text) in [("bad.txt", "x y\n"), ("range.txt", "2 1\n0 5\n"), ("short.txt", "3 2\n0 1\n")] {
        let path = write_text(&dir, name, text);
        let run = dtgraphs(&["recognize", &path]);
        assert_eq!(run.code, 2, "{name}");
        assert!(run.stdout.is_empty());
        assert!(run.stderr.starts_with("error:"), "{}", run.stderr);
    }
    assert_eq!(dtgraphs(&["recognize", "/nonexistent/graph.txt"]).code, 2);
    assert_eq!(dtgraphs(&["recognize"]).code, 2);
    assert_eq!(dtgraphs(&["frobnicate"]).code, 2);
}

#[test]
fn invalid_parameters_are_unsupported() {
    let dir = TempDir::new().unwrap();
    let path = write_graph(&dir, "k3.txt", &Graph::complete(3));
    let run = dtgraphs(&["recognize", &path, "--alpha", "1", "--beta", "2"]);
    assert_eq!(run.code, 2);
    let report = conforming("recognition-report", &run.stdout);
    assert_eq!(report["verdict"], "unsupported");
    assert_eq!(dtgraphs(&["recognize", &path, "--alpha", "two"]).code, 2);
}

#[test]
fn output_is_deterministic_and_parallel_agrees() {
    let dir = TempDir::new().unwrap();
    let (g, _) = gen_random_dt(24, &int(2), &int(1), &WeightDistribution::gaussian(1.5, 1.0, 5)).unwrap();
    let path = write_graph(&dir, "g.txt", &g);
    let a = dtgraphs(&["recognize", &path]);
    let b = dtgraphs(&["recognize", &path]);
    let c = dtgraphs_env(&["recognize", &path, "--parallel"], &[("DTGRAPHS_THREADS", "4")]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
    assert!(!a.stdout.contains("timing"));
}

#[test]
fn timing_is_opt_in() {
    let dir = TempDir::new().unwrap();
    let path = write_graph(&dir, "k3.txt", &Graph::complete(3));
    let run = dtgraphs(&["recognize", &path, "--timing", "--verify"]);
    let report = conforming("recognition-report", &run.stdout);
    assert!(report["timing"]["recognize_ms"].as_f64().unwrap() >= 0.0);
    assert!(report["timing"]["verify_ms"].is_number());
}

#[test]
fn text_mode_and_stdin() {
    let dir = TempDir::new().unwrap();
    let path = write_graph(&dir, "c4.txt", &c4());
    let run = dtgraphs(&["recognize", &path, "--text"]);
    assert_eq!(run.code, 1);
    assert!(run.stdout.starts_with("verdict: not-dt\n"));
    assert!(run.stdout.contains("induced C4"));

    let mut child = Command::new(env!("CARGO_BIN_EXE_dtgraphs"))
        .args(["recognize", "-", "--text"])
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    use std::io::Write;
    child.stdin.take().unwrap().write_all(b"# path\n3 2\n0 1\n1 2\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().starts_with("verdict: dt\n"));
    assert_eq!(dtgraphs(&["recognize", &path, "--text", "--json"]).code, 2);
}

#[test]
fn metrics_of_small_graphs() {
    let dir = TempDir::new().unwrap();
    let k3 = write_graph(&dir, "k3.txt", &Graph::complete(3));
    let run = dtgraphs(&["metrics", &k3, "--auto"]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    let m = conforming("metrics", &run.stdout);
    assert_eq!(m["intersection_number"], 1);
    assert_eq!(m["diameter"], 1);
    assert_eq!(m["clustering"], "1/1");

    let p3 = write_graph(&dir, "p3.txt", &Graph::new(3, &[(0, 1), (1, 2)]).unwrap());
    let m = conforming("metrics", &dtgraphs(&["metrics", &p3, "--auto"]).stdout);
    assert_eq!(m["clustering"], "0/1");
    assert_eq!(m["clustering_decimal"], "0.000000");
    assert_eq!(m["intersection_number"], 2);
    assert_eq!(m["diameter"], 2);

    let empty = write_graph(&dir, "e.txt", &Graph::empty(3));
    let m = conforming("metrics", &dtgraphs(&["metrics", &empty, "--auto"]).stdout);
    assert_eq!(m["intersection_number"], 0);
    assert!(m["clustering"].is_null());
    assert!(m["diameter"].is_null());

    let text = dtgraphs(&["metrics", &k3, "--auto", "--text"]).stdout;
    assert!(text.contains("intersection number: 1"));
}

#[test]
fn metrics_with_supplied_weights() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("fig.txt");
    let out_s = out.to_str().unwrap();
    let run = dtgraphs(&["generate", "dt", "--alpha", "10", "--beta", "2", "--weights", "7,5,4,6,8,9,3", "--out", out_s]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    let weights = format!("{out_s}.weights.json");
    conforming("weights", &std::fs::read_to_string(&weights).unwrap());

    let run = dtgraphs(&["metrics", out_s, "--weights", &weights]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    let m = conforming("metrics", &run.stdout);
    let g = read_edge_list(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(m["intersection_number"], dtgraph_core::oracles::brute_min_edge_clique_cover(&g).unwrap());

    let wrong = write_text(&dir, "wrong.json", r#"{"alpha":"10","beta":"2","weights":["1","1","1","1","1","1","1"]}"#);
    let run = dtgraphs(&["metrics", out_s, "--weights", &wrong]);
    assert_eq!(run.code, 2);
    assert!(run.stderr.contains("do not realize"), "{}", run.stderr);

    let short = write_text(&dir, "short.json", r#"{"alpha":"10","beta":"2","weights":["1"]}"#);
    assert_eq!(dtgraphs(&["metrics", out_s, "--weights", &short]).code, 2);
    assert_eq!(dtgraphs(&["metrics", out_s]).code, 2);
}

#[test]
fn metrics_of_non_dt_reports_the_certificate() {
    let dir = TempDir::new().unwrap();
    let path = write_graph(&dir, "c4.txt", &c4());
    let run = dtgraphs(&["metrics", &path, "--auto"]);
    assert_eq!(run.code, 1);
    assert_eq!(conforming("recognition-report", &run.stdout)["certificate"]["kind"], "chordless_cycle");
}

#[test]
fn generate_examples() {
    let run = dtgraphs(&["generate", "dt", "--alpha", "10", "--beta", "2", "--weights", "5,7,4"]);
    assert_eq!(run.stdout, "3 1\n0 1\n");
    let run = dtgraphs(&["generate", "threshold", "--bits", "0011"]);
    assert_eq!(read_edge_list(&run.stdout).unwrap(), Graph::new(4, &[(0, 2), (1, 2), (0, 3), (1, 3), (2, 3)]).unwrap());
    let run = dtgraphs(&["generate", "named", "C4"]);
    assert_eq!(read_edge_list(&run.stdout).unwrap(), c4());
    let run = dtgraphs(&["generate", "unit-interval", "--weights", "1,2,3"]);
    assert_eq!(read_edge_list(&run.stdout).unwrap(), Graph::new(3, &[(0, 1), (1, 2)]).unwrap());
}

#[test]
fn generate_is_seeded() {
    for family in [
        vec!["dt", "--n", "20"],
        vec!["dt", "--n", "20", "--dist", "gaussian", "--mean", "2", "--sd", "0.5"],
        vec!["threshold", "--n", "12"],
        vec!["unit-interval", "--n", "15"],
        vec!["connected", "--n", "9"],
        vec!["gnp", "--n", "9", "--p", "0.4"],
    ] {
        let with = |seed: &str| {
            let mut args = vec!["generate"];
            args.extend(&family);
            args.extend(["--seed", seed]);
            dtgraphs(&args)
        };
        let (a, b, c) = (with("3"), with("3"), with("4"));
        assert_eq!(a.code, 0, "{family:?}: {}", a.stderr);
        assert_eq!(a.stdout, b.stdout, "{family:?}");
        assert_ne!(a.stdout, c.stdout, "{family:?}");
        read_edge_list(&a.stdout).unwrap();
    }
}

#[test]
fn generate_errors() {
    assert_eq!(dtgraphs(&["generate", "named", "K5"]).code, 2);
    assert_eq!(dtgraphs(&["generate", "threshold", "--bits", "01x"]).code, 2);
    assert_eq!(dtgraphs(&["generate", "threshold", "--bits", ""]).code, 2);
    assert_eq!(dtgraphs(&["generate", "dt", "--alpha", "1", "--beta", "2", "--weights", "1,2"]).code, 2);
    assert_eq!(dtgraphs(&["generate", "dt", "--weights", "1,-2"]).code, 2);
    assert_eq!(dtgraphs(&["generate", "dt", "--n", "4", "--dist", "uniform", "--lo", "3", "--hi", "1"]).code, 2);
    assert_eq!(dtgraphs(&["generate", "gnp", "--n", "4", "--p", "1.5"]).code, 2);
    assert_eq!(dtgraphs(&["generate", "named", "C4", "--weights-out", "/tmp/never.json"]).code, 2);
}

#[test]
fn minlayers_examples() {
    let dir = TempDir::new().unwrap();
    let t = dir.path().join("t.txt");
    dtgraphs(&["generate", "threshold", "--bits", "0101101", "--out", t.to_str().unwrap()]);
    let run = dtgraphs(&["minlayers", t.to_str().unwrap()]);
    assert_eq!(run.code, 0);
    let r = conforming("minlayers", &run.stdout);
    assert_eq!(r["m"], 0);
    assert_eq!(r["max_m"], 5);

    let c4 = write_graph(&dir, "c4.txt", &c4());
    let run = dtgraphs(&["minlayers", &c4, "--text"]);
    assert_eq!(run.code, 1);
    assert_eq!(run.stdout, "none <= 5\n");
    conforming("minlayers", &dtgraphs(&["minlayers", &c4]).stdout);

    // a generated graph whose exhaustive minimum is three layers
    let mut found = false;
    for seed in 0..2000u64 {
        let dist = WeightDistribution::uniform(0.2, 5.0, seed);
        let (g, _) = gen_random_dt(8 + (seed % 3) as usize, &int(2), &int(1), &dist).unwrap();
        if !g.is_connected() || brute_min_layers(&g).unwrap() != Some(3) {
            continue;
        }
        let path = write_graph(&dir, "g.txt", &g);
        let r = conforming("minlayers", &dtgraphs(&["minlayers", &path]).stdout);
        assert_eq!(r["m"], 3);
        assert_eq!(dtgraphs(&["minlayers", &path, "--max-m", "2"]).code, 1);
        found = true;
        break;
    }
    assert!(found);
}
