use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use vsb::oracle::oracle_is_minimal;
use vsb::{is_k_vsb, parse_edge_list, serialize_edge_list, Digraph};

fn vsb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vsb"))
        .args(args)
        .output()
        .expect("spawn vsb")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write_graph(dir: &Path, name: &str, g: &Digraph) -> String {
    let path = dir.join(name);
    fs::write(&path, serialize_edge_list(g)).unwrap();
    path.to_str().unwrap().to_owned()
}

#[test]
fn check_c3_as_strongly_biconnected() {
    let dir = tempfile::tempdir().unwrap();
    let c3 = write_graph(dir.path(), "c3.txt", &Digraph::cycle(3));
    let o = vsb(&["check", "--in", &c3, "--k", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "true\n");

    let o = vsb(&["check", "--in", &c3, "--k", "2"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "false\n");
    assert!(String::from_utf8_lossy(&o.stderr).contains("after deleting"));
}

#[test]
fn gen_then_minimize_both_algorithms() {
    let dir = tempfile::tempdir().unwrap();
    let inst = dir.path().join("inst.txt");
    let inst = inst.to_str().unwrap();
    let o = vsb(&["gen", "--n", "10", "--seed", "3", "--out", inst]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(
        out.contains("n=10") && out.contains("m0=80") && out.contains("grown="),
        "{out}"
    );
    let g = parse_edge_list(&fs::read_to_string(inst).unwrap()).unwrap();
    assert!(is_k_vsb(&g, 3).unwrap().verdict);
    assert_eq!(vsb(&["check", "--in", inst]).status.code(), Some(0));

    for algo in ["minimal", "two-phase"] {
        let res = dir.path().join(format!("{algo}.txt"));
        let res = res.to_str().unwrap();
        let o = vsb(&[
            "minimize", "--in", inst, "--algo", algo, "--order", "shuffle", "--seed", "4", "--out",
            res,
        ]);
        assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
        let out = stdout(&o);
        for key in ["edges_in=", "edges_out=", "tests_performed=", "elapsed_ms="] {
            assert!(out.contains(key), "{out}");
        }
        assert_eq!(
            vsb(&["check", "--in", res, "--k", "3"]).status.code(),
            Some(0)
        );
        let h = parse_edge_list(&fs::read_to_string(res).unwrap()).unwrap();
        if algo == "minimal" {
            assert!(oracle_is_minimal(&h, 3).unwrap());
        }
    }
}

#[test]
fn minimize_rejects_non_3vsb_input() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = write_graph(dir.path(), "c5.txt", &Digraph::cycle(5));
    let out = dir.path().join("out.txt");
    let o = vsb(&[
        "minimize",
        "--in",
        &c5,
        "--algo",
        "minimal",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not 3-vertex strongly biconnected"));
    assert!(!out.exists());
}

#[test]
fn bench_csv_rows() {
    let o = vsb(&[
        "bench",
        "--sizes",
        "10",
        "--seeds-per-size",
        "2",
        "--format",
        "csv",
    ]);
    assert!(o.status.success());
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 3);
    assert_eq!(
        lines[0],
        "n,m_input,seed,algo1_time_ms,algo1_edges,algo2_time_ms,algo2_edges"
    );
    assert!(lines[1].starts_with("10,") && lines[2].starts_with("10,"));
}

#[test]
fn bench_markdown_parallel_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("table.md");
    let o = vsb(&[
        "bench",
        "--sizes",
        "8,10",
        "--seeds-per-size",
        "1",
        "--format",
        "md",
        "--parallel",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let table = fs::read_to_string(path).unwrap();
    assert!(table.starts_with("| Input | Algorithm1 |"));
    assert_eq!(table.lines().count(), 5);
    assert!(table.contains("| ( 8 , 56 ) |"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(vsb(&[]).status.code(), Some(2));
    assert_eq!(vsb(&["check"]).status.code(), Some(2));
    assert_eq!(
        vsb(&["check", "--in", "/nonexistent/graph.txt"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(vsb(&["bench", "--sizes", "3"]).status.code(), Some(2));

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    fs::write(&bad, "3 1\n0 3\n").unwrap();
    let o = vsb(&["check", "--in", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("out of range"));
    assert_eq!(
        vsb(&["check", "--in", bad.to_str().unwrap(), "--k", "4"])
            .status
            .code(),
        Some(2)
    );
}
