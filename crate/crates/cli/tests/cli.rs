use std::path::{Path, PathBuf};
use std::process::Command;

use tempfile::TempDir;
use ultragraph_cli::{run, ExitCode, Outcome, SpaceDocument};
use ultragraph_core::{diametrical_graph, random_metric, random_ultrametric, SimpleGraph, SpaceClass};

const S221: &str = "points: a b c\nmatrix:\n0 2 2\n2 0 1\n2 1 0\n";
const C5: &str = "vertices: a b c d e\na b\nb c\nc d\nd e\ne a\n";
const K3: &str = "vertices: a b c\na b\nb c\na c\n";
const NOT_ULTRA: &str = "points: a b c\nmatrix:\n0 2 1\n2 0 3/2\n1 3/2 0\n";

struct Dir(TempDir);

impl Dir {
    fn new() -> Self {
        Dir(tempfile::tempdir().unwrap())
    }

    fn file(&self, name: &str, text: &str) -> String {
        let path: PathBuf = self.0.path().join(name);
        std::fs::write(&path, text).unwrap();
        path.to_string_lossy().into_owned()
    }
}

fn ug(args: &[&str]) -> Outcome {
    run(std::iter::once("ultragraph").chain(args.iter().copied()))
}

fn binary(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_ultragraph")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

fn space_of(text: &str) -> ultragraph_core::FiniteSpace {
    SpaceDocument::parse(text).unwrap().to_space().unwrap()
}

#[test]
fn analyze_ultrametric_triangle() {
    let d = Dir::new();
    let out = ug(&["analyze", &d.file("s.txt", S221)]);
    assert_eq!(out.code, ExitCode::Success);
    assert!(out.stdout.contains("class: Ultrametric"));
    assert!(out.stdout.contains("diameter: 2\n"));
    assert!(out.stdout.contains("complete 2-partite {a} {b, c}"));
    assert!(out.stdout.contains("parts are balls: true"));

    let json: serde_json::Value =
        serde_json::from_str(&ug(&["analyze", "--json", &d.file("s.txt", S221)]).stdout).unwrap();
    assert_eq!(json["class"], "Ultrametric");
    assert_eq!(json["diameter"], "2");
    assert_eq!(json["diametrical_graph"]["parts"], serde_json::json!([["a"], ["b", "c"]]));
    assert_eq!(json["parts_are_balls"], true);
    assert_eq!(json["sweep"]["verdict"], true);
    assert_eq!(json["provenance"]["tool"], ultragraph_cli::tool_id());
}

#[test]
fn predicate_counterexample_on_c5() {
    let d = Dir::new();
    let out = ug(&["predicate", "--counterexample", &d.file("c5.txt", C5)]);
    assert_eq!(out.code, ExitCode::Negative);
    let space = space_of(&out.stdout);
    assert_eq!(space.classify(), SpaceClass::MetricOnly);
    let c5 = ultragraph_cli::graph_file::parse_graph(C5).unwrap();
    assert_eq!(diametrical_graph(&space), c5);

    let report = ug(&["analyze", &d.file("ce.txt", &out.stdout)]);
    assert_eq!(report.code, ExitCode::Success);
    assert!(report.stdout.contains("class: MetricOnly"));
    assert!(report.stdout.contains("diametrical graph: 5 edges, not multipartite"));
}

#[test]
fn predicate_exit_codes() {
    let d = Dir::new();
    let k3 = d.file("k3.txt", K3);
    let yes = ug(&["predicate", &k3]);
    assert_eq!(yes.code, ExitCode::Success);
    assert_eq!(yes.stdout, "predicate: true\n");
    assert_eq!(ug(&["predicate", "--counterexample", &k3]).code, ExitCode::Success);
    let no = ug(&["predicate", "--json", &d.file("c5.txt", C5)]);
    assert_eq!(no.code, ExitCode::Negative);
    let json: serde_json::Value = serde_json::from_str(&no.stdout).unwrap();
    assert_eq!(json["predicate"], false);
    assert_eq!(json["witness"].as_array().unwrap().len(), 3);
    let edgeless = d.file("e.txt", "vertices: a b\n");
    assert_eq!(ug(&["predicate", &edgeless]).code, ExitCode::InputError);
}

#[test]
fn custom_counterexample_sides() {
    let d = Dir::new();
    let c5 = d.file("c5.txt", C5);
    let out = ug(&["predicate", "--counterexample", "--a", "1.1", "--b", "1.9", &c5]);
    assert_eq!(out.code, ExitCode::Negative);
    let values = space_of(&out.stdout).distance_set().to_vec();
    assert!(values.contains(&"11/10".parse().unwrap()));
    assert!(values.contains(&"19/10".parse().unwrap()));
    assert_eq!(ug(&["predicate", "--counterexample", "--a", "3", &c5]).code, ExitCode::InputError);
}

#[test]
fn construct_padic_example() {
    let out = ug(&["construct", "padic", "--p", "3", "--k", "1"]);
    assert_eq!(out.code, ExitCode::Success);
    let doc = SpaceDocument::parse(&out.stdout).unwrap();
    assert_eq!(doc.points.len(), 3);
    for (i, row) in doc.matrix.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            assert_eq!(v.to_string(), if i == j { "0" } else { "1" });
        }
    }
    assert_eq!(doc.meta_value("tool"), Some(ultragraph_cli::tool_id().as_str()));
    assert_eq!(doc.meta_value("command"), Some("ultragraph construct padic --p 3 --k 1"));
    assert_eq!(ug(&["construct", "padic", "--p", "4", "--k", "1"]).code, ExitCode::InputError);
}

#[test]
fn construct_other_kinds() {
    let d = Dir::new();
    let out = ug(&["construct", "chain", "--values", "4,2,1"]);
    assert_eq!(out.code, ExitCode::Success);
    assert_eq!(space_of(&out.stdout).distance_set().len(), 4);
    assert_eq!(ug(&["construct", "chain", "--values", "1,2"]).code, ExitCode::InputError);

    let random = ug(&["construct", "random", "--n", "9", "--levels", "3", "--seed", "11"]);
    assert_eq!(random.code, ExitCode::Success);
    let doc = SpaceDocument::parse(&random.stdout).unwrap();
    assert_eq!(doc.meta_value("seed"), Some("11"));
    assert_eq!(doc.to_space().unwrap(), random_ultrametric(9, 3, 11).unwrap());

    let from_graph = ug(&["construct", "metric-from-graph", &d.file("c5.txt", C5)]);
    assert_eq!(from_graph.code, ExitCode::Success);
    let c5 = ultragraph_cli::graph_file::parse_graph(C5).unwrap();
    assert_eq!(diametrical_graph(&space_of(&from_graph.stdout)), c5);
}

#[test]
fn transforms() {
    let d = Dir::new();
    let s = d.file("s.txt", S221);
    let bounded = ug(&["transform", "bound", "--dstar", "3", &s]);
    assert_eq!(bounded.code, ExitCode::Success);
    let b = d.file("b.txt", &bounded.stdout);
    let back = ug(&["transform", "unbound", "--dstar", "3", &b]);
    assert_eq!(back.code, ExitCode::Success);
    assert_eq!(space_of(&back.stdout), space_of(S221));

    let truncated = ug(&["transform", "truncate", "--r", "1", &s]);
    assert_eq!(truncated.code, ExitCode::Success);
    assert_eq!(space_of(&truncated.stdout).distance_set().len(), 2);

    let bad = d.file("bad.txt", NOT_ULTRA);
    assert_eq!(ug(&["transform", "bound", "--dstar", "3", &bad]).code, ExitCode::InputError);
    assert_eq!(ug(&["transform", "unbound", "--dstar", "2", &s]).code, ExitCode::InputError);
    assert_eq!(ug(&["transform", "truncate", "--r", "0", &s]).code, ExitCode::InputError);
}

#[test]
fn sweep_exit_codes() {
    let d = Dir::new();
    let yes = ug(&["sweep", &d.file("s.txt", S221)]);
    assert_eq!(yes.code, ExitCode::Success);
    assert!(yes.stdout.contains("verdict: ultrametric"));
    let no = ug(&["sweep", "--json", &d.file("n.txt", NOT_ULTRA)]);
    assert_eq!(no.code, ExitCode::Negative);
    let json: serde_json::Value = serde_json::from_str(&no.stdout).unwrap();
    assert_eq!(json["verdict"], false);
    let single = d.file("one.txt", "points: a\nmatrix:\n0\n");
    assert_eq!(ug(&["sweep", &single]).code, ExitCode::InputError);
    assert_eq!(ug(&["analyze", &single]).code, ExitCode::Success);
}

#[test]
fn graph_output() {
    let d = Dir::new();
    let s = d.file("s.txt", S221);
    let out = ug(&["graph", &s]);
    assert_eq!(out.stdout, "vertices: a b c\na b\na c\n");
    let threshold = ug(&["graph", "--threshold", "1", &s]);
    assert_eq!(threshold.stdout, "vertices: a b c\na b\na c\nb c\n");
    assert_eq!(ug(&["graph", "--threshold", "-1", &s]).code, ExitCode::InputError);
}

#[test]
fn dot_is_byte_identical() {
    let d = Dir::new();
    let space = random_metric(8, 5).unwrap();
    let s = d.file("m.txt", &SpaceDocument::from_space(&space, vec![]).emit());
    let first = binary(&["graph", "--dot", &s]);
    let second = binary(&["graph", "--dot", &s]);
    assert_eq!(first.0, 0);
    assert_eq!(first, second);
    assert!(first.1.starts_with(&format!("graph \"G\" {{\n  \"{}\";\n", space.label(0))));
    let edges: Vec<&str> = first.1.lines().filter(|l| l.contains("--")).collect();
    let g: &SimpleGraph = &diametrical_graph(&space);
    assert_eq!(edges.len(), g.edge_count());
}

#[test]
fn compare() {
    let d = Dir::new();
    let a = d.file("a.txt", S221);
    let scaled = d.file("b.txt", "points: x y z\nmatrix:\n0 1/2 7\n1/2 0 7\n7 7 0\n");
    let out = ug(&["compare", &a, &scaled]);
    assert_eq!(out.code, ExitCode::Success);
    assert!(out.stdout.contains("isometric: false\nweakly similar: true\n"));
    assert!(out.stdout.contains("bijection: a->z b->x c->y"), "{}", out.stdout);

    let json: serde_json::Value = serde_json::from_str(&ug(&["compare", "--json", &a, &a]).stdout).unwrap();
    assert_eq!(json["isometric"], true);
    assert_eq!(json["weakly_similar"], true);

    let other = d.file("c.txt", NOT_ULTRA);
    assert_eq!(ug(&["compare", &a, &other]).code, ExitCode::Negative);
}

#[test]
fn input_errors_name_the_line() {
    let d = Dir::new();
    let bad = d.file("bad.txt", "points: a b\nmatrix:\n0 1\n1 zz\n");
    let out = ug(&["analyze", &bad]);
    assert_eq!(out.code, ExitCode::InputError);
    assert!(out.stderr.contains("line 4"), "{}", out.stderr);
    assert!(out.stderr.contains("zz"));

    let asym = d.file("asym.txt", "points: a b\nmatrix:\n0 1\n2 0\n");
    assert_eq!(ug(&["analyze", &asym]).code, ExitCode::InputError);
    let graph = d.file("g.txt", "vertices: a b\na q\n");
    let out = ug(&["predicate", &graph]);
    assert_eq!(out.code, ExitCode::InputError);
    assert!(out.stderr.contains("line 2"));
    assert_eq!(ug(&["analyze", "/nonexistent/file"]).code, ExitCode::InputError);
}

#[test]
fn usage_errors() {
    assert_eq!(ug(&[]).code, ExitCode::InputError);
    assert_eq!(ug(&["frobnicate"]).code, ExitCode::InputError);
    assert_eq!(ug(&["transform", "bound", "--dstar", "x", "f"]).code, ExitCode::InputError);
    assert_eq!(ug(&["--help"]).code, ExitCode::Success);
    let version = ug(&["--version"]);
    assert_eq!(version.code, ExitCode::Success);
    assert!(version.stdout.contains(env!("CARGO_PKG_VERSION")));
}

#[test]
fn binary_exit_codes_match_run() {
    let d = Dir::new();
    let c5 = d.file("c5.txt", C5);
    let s = d.file("s.txt", S221);
    for args in [vec!["predicate", c5.as_str()], vec!["analyze", s.as_str()], vec!["analyze", "/nonexistent"]] {
        let (code, stdout, stderr) = binary(&args);
        let out = ug(&args);
        assert_eq!(code, out.code as i32);
        assert_eq!(stdout, out.stdout);
        assert_eq!(stderr, out.stderr);
    }
    assert!(Path::new(env!("CARGO_BIN_EXE_ultragraph")).exists());
}
