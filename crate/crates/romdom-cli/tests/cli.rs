//! End-to-end tests of the `romdom` binary: argument surface, file
//! formats, report schema, exit codes, and batch concurrency.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use romdom_cli::report::Report;

fn romdom() -> Command {
    Command::new(env!("CARGO_BIN_EXE_romdom"))
}

fn run(args: &[&str]) -> Output {
    romdom().args(args).output().expect("spawn romdom")
}

fn stdout_str(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

fn corpus_path() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data/connected_2_7.g6")
}

#[test]
fn invariants_on_a_family_descriptor() {
    let out = run(&["invariants", "C:5", "--format", "json"]);
    assert!(out.status.success(), "{:?}", out);
    let report: Report = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(report.schema_version, 1);
    assert_eq!(report.results.len(), 7);
    assert!(report.consistency);
    let gamma_r = report
        .results
        .iter()
        .find(|r| r["invariant"] == "gamma_R")
        .unwrap();
    assert_eq!(gamma_r["value"], 4);
}

#[test]
fn json_reports_round_trip() {
    for args in [
        vec!["invariants", "P:6"],
        vec!["direct-bounds", "K:2", "C:5"],
        vec!["rooted-classify", "P:4", "P:3", "--root", "0", "--check"],
    ] {
        let mut full = args.clone();
        full.extend(["--format", "json"]);
        let out = run(&full);
        assert!(out.status.success(), "{:?}: {:?}", args, out);
        let text = stdout_str(&out);
        let report: Report = serde_json::from_str(&text).unwrap();
        let again = serde_json::to_string_pretty(&report).unwrap() + "\n";
        assert_eq!(again, text, "round trip changed the report for {:?}", args);
    }
}

#[test]
fn inline_graph6_and_edge_list_files_load() {
    // "A_" is the 2-vertex graph with one edge.
    let out = run(&["invariants", "A_", "--format", "json"]);
    assert!(out.status.success(), "{:?}", out);
    let report: Report = serde_json::from_str(&stdout_str(&out)).unwrap();
    let gamma = report
        .results
        .iter()
        .find(|r| r["invariant"] == "gamma")
        .unwrap();
    assert_eq!(gamma["value"], 1);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p4.edges");
    fs::write(&path, "4 # a path on four vertices\n0 1\n1 2\n2 3\n").unwrap();
    let out = run(&["invariants", path.to_str().unwrap(), "--format", "json"]);
    assert!(out.status.success(), "{:?}", out);
    let report: Report = serde_json::from_str(&stdout_str(&out)).unwrap();
    let gamma_r = report
        .results
        .iter()
        .find(|r| r["invariant"] == "gamma_R")
        .unwrap();
    assert_eq!(gamma_r["value"], 3);
}

#[test]
fn exit_codes_cover_success_inconsistency_and_errors() {
    // 0: a clean run.
    let out = run(&["invariants", "K:3"]);
    assert_eq!(out.status.code(), Some(0));

    // 2: a consistency failure (invalid labeling).
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    fs::write(&bad, "0 0 0\n").unwrap();
    let out = run(&["verify-labeling", "P:3", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    // 1: errors (unparsable graph, missing file, out-of-range root).
    let out = run(&["invariants", "not a graph"]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["invariants", "/nonexistent/file.g6"]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["rooted-classify", "P:3", "P:3", "--root", "9"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_labeling_accepts_all_ones_and_reports_weight() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("ones.txt");
    fs::write(&f, "1 1 1 1 1\n").unwrap();
    let out = run(&[
        "verify-labeling",
        "P:5",
        f.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report: Report = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(report.results[0]["weight"], 5);
    assert_eq!(report.results[0]["valid_rdf"], true);

    // The total check rejects a positive vertex with no positive neighbor.
    let g = dir.path().join("two.txt");
    fs::write(&g, "2 0 0 2 0\n").unwrap();
    let out = run(&[
        "verify-labeling",
        "P:5",
        g.to_str().unwrap(),
        "--total",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let report: Report = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(report.results[0]["valid_rdf"], true);
    assert_eq!(report.results[0]["valid_trdf"], false);
}

#[test]
fn output_flag_writes_the_report_to_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = run(&[
        "invariants",
        "K:4",
        "--format",
        "json",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_str(&out).is_empty());
    let report: Report = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report.instance, "K:4");
}

#[test]
fn batch_output_is_independent_of_the_job_count() {
    let corpus = fs::read_to_string(corpus_path()).unwrap();
    let eight: Vec<&str> = corpus.lines().take(8).collect();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("eight.g6");
    fs::write(&path, eight.join("\n")).unwrap();

    let mut outputs = Vec::new();
    for jobs in ["1", "4"] {
        let out = run(&[
            "batch",
            path.to_str().unwrap(),
            "--command",
            "direct-bounds",
            "--partner",
            "K:3",
            "--jobs",
            jobs,
            "--format",
            "json",
        ]);
        assert_eq!(out.status.code(), Some(0), "{:?}", out);
        outputs.push(stdout_str(&out));
    }
    assert_eq!(outputs[0], outputs[1]);

    let report: Report = serde_json::from_str(&outputs[0]).unwrap();
    assert_eq!(report.results.len(), 8);
    for (i, row) in report.results.iter().enumerate() {
        assert_eq!(row["index"], i);
        assert_eq!(row["consistent"], true);
    }
}

#[test]
fn batch_records_budget_failures_per_instance() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("two.g6");
    fs::write(&path, "A_\nBw\n").unwrap();
    let out = run(&[
        "batch",
        path.to_str().unwrap(),
        "--command",
        "invariants",
        "--budget-nodes",
        "0",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let report: Report = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(report.results.len(), 2, "the run must not abort");
    for row in &report.results {
        let msg = row["error"].as_str().unwrap();
        assert!(msg.contains("budget"), "{}", msg);
    }
}

#[test]
fn budget_seconds_env_var_is_a_default_the_flag_overrides() {
    // A 36-vertex exact solve passes the 4096-node mark where the clock
    // is polled, so a zero-second budget stops it.
    let out = romdom()
        .args(["direct-bounds", "P:6", "P:6", "--exact"])
        .env("ROMDOM_BUDGET_SECONDS", "0")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1), "{:?}", out);
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("budget"), "{}", stderr);

    // The explicit flag wins over the environment.
    let out = romdom()
        .args(["invariants", "P:5", "--budget-seconds", "60"])
        .env("ROMDOM_BUDGET_SECONDS", "0")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{:?}", out);
}

/// Decodes graph6 by expanding the payload into a 0/1 character string —
/// a deliberately different route from the library's bit arithmetic.
fn reference_decode(line: &str) -> (usize, Vec<(usize, usize)>) {
    let bytes = line.as_bytes();
    let n = (bytes[0] - 63) as usize;
    let mut bitstring = String::new();
    for &b in &bytes[1..] {
        bitstring.push_str(&format!("{:06b}", b - 63));
    }
    let bits: Vec<char> = bitstring.chars().collect();
    let mut edges = Vec::new();
    let mut k = 0;
    for v in 0..n {
        for u in 0..v {
            if bits[k] == '1' {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    (n, edges)
}

#[test]
fn graph6_parser_agrees_with_an_independent_decoder_on_the_corpus() {
    let text = fs::read_to_string(corpus_path()).unwrap();
    let lines: Vec<&str> = text.lines().filter(|l| !l.is_empty()).collect();
    assert_eq!(lines.len(), 995);
    for line in lines {
        let g = romdom_cli::formats::parse_graph6(line).unwrap();
        let (n, edges) = reference_decode(line);
        assert_eq!(g.order(), n, "{}", line);
        assert_eq!(g.size(), edges.len(), "{}", line);
        for (u, v) in edges {
            assert!(g.has_edge(u, v), "{}: missing edge ({}, {})", line, u, v);
        }
        assert_eq!(romdom_cli::formats::emit_graph6(&g).unwrap(), line);
    }
}

#[test]
fn help_names_every_subcommand() {
    let out = run(&["--help"]);
    assert!(out.status.success());
    let help = stdout_str(&out);
    for sub in [
        "invariants",
        "direct-bounds",
        "rooted-classify",
        "verify-labeling",
        "batch",
        "paper-tables",
    ] {
        assert!(help.contains(sub), "help lacks {}: {}", sub, help);
    }
}
