use std::path::{Path, PathBuf};
use std::process::Command;

use monocycle::checkpoint::Checkpoint;
use monocycle::format::{parse_coloring, parse_graph};
use monocycle_core::{bondy_erdos_coloring, verify_mono_cycle_free, Graph};
use serde_json::Value;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .display()
        .to_string()
}

struct Run {
    code: i32,
    out: String,
    err: String,
}

fn run(args: &[&str]) -> Run {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("monocycle").chain(args.iter().copied());
    let code = monocycle::run(argv, &mut out, &mut err);
    Run {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

fn json_lines(text: &str) -> Vec<Value> {
    text.lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn construct_emits_block_coloring() {
    let r = run(&["construct", "--k", "2", "--n", "5"]);
    assert_eq!(r.code, 0);
    let col = parse_coloring(&r.out).unwrap();
    assert_eq!(col.vertex_count(), 8);
    assert_eq!(col.base().edge_count(), 28);
    assert_eq!(col, bondy_erdos_coloring(2, 5).unwrap());
    assert!(r.out.starts_with("coloring 8 2\ne 0 1 1\n"));
}

#[test]
fn construct_files_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for (k, n) in [(2, 5), (2, 7), (3, 5), (3, 7), (4, 5)] {
        let path = dir.path().join(format!("be_{k}_{n}.col"));
        let r = run(&[
            "construct",
            "--k",
            &k.to_string(),
            "--n",
            &n.to_string(),
            "--output",
            path_str(&path),
        ]);
        assert_eq!(r.code, 0);
        assert!(r
            .out
            .contains(&format!("vertices {}", (1 << (k - 1)) * (n - 1))));
        let back = parse_coloring(&std::fs::read_to_string(&path).unwrap()).unwrap();
        assert_eq!(back, bondy_erdos_coloring(k, n).unwrap());
        let v = run(&["verify", "--n", &n.to_string(), "--input", path_str(&path)]);
        assert_eq!(v.code, 0, "({k},{n})");
        assert!(v.out.contains("verdict FREE"));
    }
}

#[test]
fn construct_searches_small_hosts() {
    let r = run(&["construct", "--k", "2", "--n", "5", "--N", "8", "--json"]);
    assert_eq!(r.code, 0);
    let obj = &json_lines(&r.out)[0];
    assert_eq!(obj["source"], "search");
    assert_eq!(obj["vertices"], 8);

    let r = run(&["construct", "--k", "2", "--n", "5", "--N", "9"]);
    assert_eq!(r.code, 1);
    assert!(r.out.contains("found false") && r.out.contains("conclusive true"));

    let a = run(&[
        "construct",
        "--k",
        "2",
        "--n",
        "5",
        "--N",
        "8",
        "--mode",
        "local",
        "--seed",
        "7",
    ]);
    let b = run(&[
        "construct",
        "--k",
        "2",
        "--n",
        "5",
        "--N",
        "8",
        "--mode",
        "local",
        "--seed",
        "7",
    ]);
    assert_eq!(a.code, 0);
    assert_eq!(a.out, b.out);
    let col = parse_coloring(&a.out).unwrap();
    assert!(verify_mono_cycle_free(&col, 5).unwrap().is_free());
}

#[test]
fn search_certifies_small_values() {
    let r = run(&["search", "--k", "2", "--n", "6", "--N", "8"]);
    assert_eq!(r.code, 0);
    assert!(r.out.contains("verdict ALL_CONTAIN"));
    assert!(r.err.starts_with("wall_time"));

    let r = run(&["search", "--k", "2", "--n", "6", "--N", "7", "--json"]);
    assert_eq!(r.code, 1);
    let obj = &json_lines(&r.out)[0];
    assert_eq!(obj["verdict"], "COUNTEREXAMPLE");
    assert_eq!(obj["counterexample"].as_array().unwrap().len(), 21);
    assert!(obj["wall_ms"].is_u64());
}

#[test]
fn verdicts_do_not_depend_on_threads() {
    for (n, v, want) in [(5, 8, 1), (5, 9, 0), (4, 6, 0), (6, 7, 1)] {
        let (n, v) = (n.to_string(), v.to_string());
        let single = run(&["search", "--k", "2", "--n", &n, "--N", &v, "--threads", "1"]);
        let again = run(&["search", "--k", "2", "--n", &n, "--N", &v, "--threads", "1"]);
        assert_eq!(single.code, want);
        assert_eq!(single.out, again.out);
        for threads in ["2", "4"] {
            let multi = run(&[
                "search",
                "--k",
                "2",
                "--n",
                &n,
                "--N",
                &v,
                "--threads",
                threads,
            ]);
            assert_eq!(multi.code, want);
        }
    }
}

#[test]
fn threads_default_comes_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_monocycle"))
        .args(["search", "--k", "2", "--n", "4", "--N", "6"])
        .env("MONOCYCLE_THREADS", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("threads 3"));
}

#[test]
fn budget_checkpoint_and_resume() {
    let dir = tempfile::tempdir().unwrap();
    let cp = dir.path().join("run.ckpt");
    let r = run(&[
        "search",
        "--k",
        "2",
        "--n",
        "6",
        "--N",
        "8",
        "--budget",
        "20000",
        "--checkpoint",
        path_str(&cp),
    ]);
    assert_eq!(r.code, 2);
    assert!(r.out.contains("verdict INDETERMINATE"));
    let saved = Checkpoint::parse(&std::fs::read_to_string(&cp).unwrap()).unwrap();
    assert_eq!((saved.k, saved.n, saved.vertices), (2, 6, 8));
    assert!(!saved.prefixes.is_empty());
    assert!(saved.prefixes.iter().all(|p| p.len() == 8));

    let resumed = run(&["search", "--resume", path_str(&cp), "--threads", "2"]);
    assert_eq!(resumed.code, 0);
    assert!(resumed.out.contains("verdict ALL_CONTAIN"));

    let clash = run(&["search", "--resume", path_str(&cp), "--N", "9"]);
    assert_eq!(clash.code, 3);
}

#[test]
fn minimized_counterexample_is_written() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("ce.col");
    let r = run(&[
        "search",
        "--k",
        "3",
        "--n",
        "3",
        "--N",
        "5",
        "--minimize",
        "--output",
        path_str(&out),
    ]);
    assert_eq!(r.code, 1);
    let col = parse_coloring(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert!(col.k() <= 3);
    assert_eq!(col.vertex_count(), 5);
    assert!(verify_mono_cycle_free(&col, 3).unwrap().is_free());
}

#[test]
fn verify_prints_witness_for_monochromatic_k5() {
    let r = run(&["verify", "--n", "5", "--input", &data("mono_k5.col")]);
    assert_eq!(r.code, 1);
    assert!(r.out.contains("verdict MONO_CYCLE"));
    let r = run(&[
        "verify",
        "--n",
        "5",
        "--input",
        &data("mono_k5.col"),
        "--json",
    ]);
    let objs = json_lines(&r.out);
    assert_eq!(objs.len(), 2);
    assert_eq!(objs[1]["cycle"].as_array().unwrap().len(), 5);
}

#[test]
fn decompose_reports_every_color() {
    let r = run(&[
        "decompose",
        "--n",
        "5",
        "--input",
        &data("bondy_2_5.col"),
        "--json",
    ]);
    assert_eq!(r.code, 0);
    let objs = json_lines(&r.out);
    assert_eq!(objs.len(), 2);
    assert_eq!(objs[0]["v3"].as_array().unwrap().len(), 8);
    assert_eq!(objs[1]["v1"].as_array().unwrap().len(), 4);
}

#[test]
fn peel_writes_result() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("peeled.graph");
    let r = run(&[
        "peel",
        "--N",
        "3",
        "--input",
        &data("star.graph"),
        "--output",
        path_str(&out),
    ]);
    assert_eq!(r.code, 0);
    let g = parse_graph(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(g, Graph::new(3, [(0, 1), (0, 2)]).unwrap());
}

#[test]
fn witness_negative_exit() {
    let r = run(&["witness", "--n", "5", "--input", &data("bondy_2_5.col")]);
    assert_eq!(r.code, 1);
    assert!(r.out.contains("kind NONE"));
    let r = run(&[
        "witness",
        "--n",
        "5",
        "--parity",
        "even",
        "--input",
        &data("bondy_2_5.col"),
    ]);
    assert_eq!(r.code, 0);
}

#[test]
fn usage_errors_exit_3_with_one_line() {
    let cases: &[&[&str]] = &[
        &["ineq", "--k", "4", "--eps", "0.5", "--n", "5"],
        &["ineq", "--k", "4", "--eps", "1/0", "--n", "5"],
        &["ineq", "--k", "3", "--eps", "1/2", "--n", "5"],
        &["search", "--k", "2", "--n", "6"],
        &["search", "--k", "2", "--n", "2", "--N", "5"],
        &["frobnicate"],
        &["verify", "--n", "5", "--input", "/nonexistent/file.col"],
        &["verify", "--n", "5", "--input", &data("star.graph")],
        &["engine", "--n", "5", "--eps", "1/2"],
    ];
    for args in cases {
        let r = run(args);
        assert_eq!(r.code, 3, "{args:?}: {}", r.err);
        assert_eq!(r.err.lines().count(), 1, "{args:?}: {}", r.err);
        assert!(r.out.is_empty());
    }
}

#[test]
fn help_exits_cleanly() {
    let r = run(&["--help"]);
    assert_eq!(r.code, 0);
    assert!(r.out.contains("search"));
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_monocycle");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap().status.code();
    assert_eq!(
        status(&["search", "--k", "2", "--n", "6", "--N", "8"]),
        Some(0)
    );
    assert_eq!(
        status(&["verify", "--n", "5", "--input", &data("mono_k5.col")]),
        Some(1)
    );
    assert_eq!(
        status(&["search", "--k", "2", "--n", "6", "--N", "8", "--budget", "100"]),
        Some(2)
    );
    assert_eq!(
        status(&["ineq", "--k", "4", "--eps", "0.25", "--n", "5"]),
        Some(3)
    );
}
