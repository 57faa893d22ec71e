use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_onecrit")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    dir.join(name)
}

#[test]
fn gen_prints_the_polynomial() {
    let o = run(&["gen", "--tag", "StarPQ", "--params", "p=2", "q=3", "n=1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "-y^3 + x^2");
}

#[test]
fn gen_rejects_invalid_parameters() {
    let o = run(&["gen", "--tag", "StarP1", "--params", "p=1", "n=1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("n ⩾ 2"));
}

#[test]
fn baff_of_two_critical_values() {
    let o = run(&["baff", "x*y*(x*y+1)"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "{-1/4, 0}");
}

#[test]
fn bad_input_is_an_error() {
    assert_eq!(run(&["baff", "x*(("]).status.code(), Some(2));
    assert_eq!(run(&["imult", "y", "y"]).status.code(), Some(2));
    assert_eq!(run(&["nonsense"]).status.code(), Some(2));
}

#[test]
fn imult_of_a_cusp_and_a_line() {
    let o = run(&["imult", "y^2 - x^3", "y"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "3 (cross-checked)");
}

#[test]
fn resolved_graphs_are_equivalent() {
    let (a, b, dot) = (scratch("a.graph"), scratch("b.graph"), scratch("a.dot"));
    let o = run(&["graph", "resolve", "x*(x^2*y+1)", "--dot", dot.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    fs::write(&a, stdout(&o)).unwrap();
    assert!(fs::read_to_string(&dot).unwrap().starts_with("graph"));
    let o = run(&["graph", "resolve", "x*(x^2*y+x+1)"]);
    fs::write(&b, stdout(&o)).unwrap();
    let o = run(&["graph", "iso", "--canonical", a.to_str().unwrap(), b.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("isomorphic"));
}

#[test]
fn reduce_and_iso_on_files() {
    let g = scratch("chain.graph");
    fs::write(&g, "coloredgraph v1\nv 0 -2 zero\nv 1 -1 infty\nv 2 -2 zero\ne 0 1\ne 1 2\n").unwrap();
    let o = run(&["graph", "reduce", g.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let reduced = scratch("reduced.graph");
    fs::write(&reduced, stdout(&o)).unwrap();
    let o = run(&["graph", "iso", g.to_str().unwrap(), reduced.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o).trim(), "not isomorphic");
    let o = run(&["graph", "iso", "--canonical", g.to_str().unwrap(), reduced.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn missing_graph_file_is_an_error() {
    assert_eq!(run(&["graph", "reduce", "/nonexistent/graph"]).status.code(), Some(2));
}

#[test]
fn classify_exit_codes() {
    let o = run(&["classify", "x"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("match: BothEmpty"));
    let o = run(&["classify", "x*y*(x*y+1)"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("{-1/4, 0}"));
    let o = run(&["classify", "--factors", "x", "x^2*y+x+1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("(resolution graph)"));
    assert_eq!(run(&["classify", "x^2*y"]).status.code(), Some(2));
}

#[test]
fn invariants_of_the_line() {
    let o = run(&["invariants", "--tag", "BothEmpty"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("census [Disk]"));
}
