//! End-to-end CLI behavior: golden outputs, JSON shape and exit codes.

use std::fs;
use std::process::Command;

use nbpoly::cli::{run, EXIT_CAPACITY, EXIT_OK, EXIT_PARSE, EXIT_USAGE, EXIT_VERIFICATION_FAILED};
use nbpoly::family::Family;
use nbpoly::io::{parse_edge_list, parse_graph6, write_graph6};

fn invoke(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("nbpoly").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn golden(name: &str) -> String {
    let path = format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"));
    fs::read_to_string(path).unwrap()
}

#[test]
fn compute_text_matches_golden() {
    let (code, out, _) = invoke(&["compute", "--graph", "family:cycle:4", "--which", "N,Ni,Nc,Nd,I,D,S,Q"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, golden("cycle4.txt"));
    assert!(out.contains("N = 1 + 4x + 2x^2\n"));
    assert!(out.contains("Ni = 1 + 4x + 2x^2\n"));
    assert!(out.contains("Nc = 1 + 4x\n"));
}

#[test]
fn compute_latex_matches_golden() {
    let (code, out, _) = invoke(&["compute", "--graph", "family:complete:4", "--which", "Nc,N", "--format", "latex"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, golden("complete4.tex"));
}

#[test]
fn compute_json_matches_golden_and_schema() {
    let (code, out, _) =
        invoke(&["compute", "--graph", "family:path:3", "--which", "N,Ni,Nc,Nd,I,D,S,Q", "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, golden("path3.jsonl"));
    for line in out.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        let obj = v.as_object().unwrap();
        let mut keys: Vec<_> = obj.keys().map(String::as_str).collect();
        keys.sort_unstable();
        assert_eq!(keys, ["coefficients", "graph", "method", "polynomial_name"]);
        assert_eq!(obj["graph"], "Bg");
    }
}

#[test]
fn compute_reads_files_in_both_formats() {
    let dir = tempfile::tempdir().unwrap();
    let g6 = dir.path().join("c4.g6");
    fs::write(&g6, format!("{}\n", write_graph6(&Family::Cycle(4).build().unwrap()))).unwrap();
    let el = dir.path().join("c4.txt");
    fs::write(&el, "4 4\n0 1\n1 2\n2 3\n3 0\n").unwrap();
    for path in [&g6, &el] {
        let (code, out, _) = invoke(&["compute", "--graph", path.to_str().unwrap(), "--which", "N"]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out, "N = 1 + 4x + 2x^2\n");
    }
}

#[test]
fn methods_agree_through_the_cli() {
    let outputs: Vec<_> = ["oracle", "fast", "auto"]
        .iter()
        .map(|m| {
            let (code, out, err) =
                invoke(&["compute", "--graph", "family:random:11:0.4:5", "--which", "N,Ni,Nc,Nd", "--method", m]);
            assert_eq!(code, EXIT_OK, "{err}");
            assert_eq!(out.lines().count(), 4);
            out
        })
        .collect();
    assert_eq!(outputs[0], outputs[1]);
    assert_eq!(outputs[1], outputs[2]);
}

#[test]
fn verify_random_corpus_passes() {
    let (code, out, _) = invoke(&["verify", "--identity", "decomposition", "--random", "n=10,count=100,p=0.5,seed=7"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("summary decomposition: pass=100 fail=0 inapplicable=0"));
}

#[test]
fn verify_reports_failure_with_exit_one() {
    let (code, out, _) = invoke(&[
        "verify",
        "--identity",
        "join_connected_as_printed",
        "--random",
        "n=5,count=10,p=0.5,seed=1",
        "--pairs",
        "5",
    ]);
    assert_eq!(code, EXIT_VERIFICATION_FAILED);
    assert_eq!(out.matches("residual = 1 ").count(), 5);
}

#[test]
fn verify_corpus_file_json() {
    let dir = tempfile::tempdir().unwrap();
    let corpus = dir.path().join("corpus.g6");
    let lines: Vec<String> = (3..8).map(|n| write_graph6(&Family::Path(n).build().unwrap())).collect();
    fs::write(&corpus, lines.join("\n")).unwrap();
    let (code, out, _) = invoke(&[
        "verify",
        "--identity",
        "tree_independent,closed_forms",
        "--corpus",
        corpus.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert_eq!(code, EXIT_OK);
    let records: Vec<serde_json::Value> = out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(records.len(), 11);
    for r in &records[..10] {
        assert_eq!(r["verdict"], "pass");
        assert_eq!(r["residual"], serde_json::json!([]));
    }
    assert_eq!(records[10]["summary"]["per_identity"]["tree_independent"]["pass"], 5);
}

#[test]
fn ops_write_graphs() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("k3.g6");
    let (code, _, _) = invoke(&[
        "ops",
        "--op",
        "join",
        "--inputs",
        "family:path:2",
        "family:edgeless:1",
        "--output",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(fs::read_to_string(&out).unwrap().trim(), "Bw");

    let out = dir.path().join("exp.txt");
    let (code, _, _) = invoke(&[
        "ops",
        "--op",
        "expand:2",
        "--inputs",
        "family:path:2",
        "--output",
        out.to_str().unwrap(),
        "--out-format",
        "edgelist",
    ]);
    assert_eq!(code, EXIT_OK);
    let g = parse_edge_list(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(g, Family::CompleteBipartite(2, 2).build().unwrap());

    let out = dir.path().join("prod.g6");
    let (code, _, _) = invoke(&[
        "ops",
        "--op",
        "cartesian",
        "--inputs",
        "family:path:2",
        "family:path:2",
        "--output",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code, EXIT_OK);
    let g = parse_graph6(fs::read_to_string(&out).unwrap().trim().as_bytes()).unwrap();
    assert!(g.is_cycle() && g.order() == 4);
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.g6");
    fs::write(&bad, b"A\x01\n").unwrap();
    let missing = dir.path().join("missing.g6");

    let cases: &[(&[&str], i32)] = &[
        (&["compute"], EXIT_USAGE),
        (&["compute", "--graph", "family:path:3", "--which", "Z"], EXIT_USAGE),
        (&["compute", "--graph", "family:bogus:3", "--which", "N"], EXIT_USAGE),
        (&["compute", "--graph", "family:path:3", "--which", "N", "--method", "quick"], EXIT_USAGE),
        (&["verify", "--identity", "nonsense", "--random", "n=5,count=2,p=0.5,seed=1"], EXIT_USAGE),
        (&["compute", "--graph", bad.to_str().unwrap(), "--which", "N"], EXIT_PARSE),
        (&["compute", "--graph", missing.to_str().unwrap(), "--which", "N"], EXIT_PARSE),
        (&["compute", "--graph", "family:path:70", "--which", "N"], EXIT_CAPACITY),
        (&["compute", "--graph", "family:complete:30", "--which", "N", "--method", "oracle"], EXIT_CAPACITY),
    ];
    for (args, expected) in cases {
        let (code, _, err) = invoke(args);
        assert_eq!(code, *expected, "{args:?}: {err}");
        assert!(!err.is_empty());
    }
}

#[test]
fn binary_exit_status() {
    let bin = env!("CARGO_BIN_EXE_nbpoly");
    let ok = Command::new(bin).args(["compute", "--graph", "family:star:4", "--which", "N"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(EXIT_OK));
    assert_eq!(String::from_utf8_lossy(&ok.stdout), "N = 1 + 4x + 3x^2 + x^3\n");
    let big = Command::new(bin).args(["compute", "--graph", "family:path:65", "--which", "N"]).output().unwrap();
    assert_eq!(big.status.code(), Some(EXIT_CAPACITY));
}
