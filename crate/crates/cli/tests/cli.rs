use std::io::Write as _;
use std::process::{Command, Stdio};

use twinless_cli::{run, AnalysisReport, EXIT_INPUT, EXIT_OK, EXIT_PRECONDITION, EXIT_USAGE};
use twinless_core::fixtures::{C3_EDGE_LIST, G_FIG1_EDGE_LIST, G_GADGET_EDGE_LIST, P2_EDGE_LIST};

fn cli(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut input = stdin.as_bytes();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("twinless").chain(args.iter().copied());
    let code = run(argv, &mut input, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn report(args: &[&str], stdin: &str) -> AnalysisReport {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let (code, out, err) = cli(&full, stdin);
    assert_eq!(code, EXIT_OK, "{err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn p2_tscc_is_two_singletons() {
    let r = report(&["tscc"], P2_EDGE_LIST);
    assert_eq!(r.classes.unwrap(), [["1"], ["2"]]);
    assert_eq!((r.n, r.m), (2, 2));
}

#[test]
fn p2_twinless_bridges_is_a_precondition_error() {
    let (code, out, err) = cli(&["twinless-bridges"], P2_EDGE_LIST);
    assert_eq!(code, EXIT_PRECONDITION);
    assert!(out.is_empty());
    assert_eq!(err.trim(), "error: input is not twinless strongly connected");
}

#[test]
fn strong_bridges_need_strong_connectivity() {
    let (code, _, err) = cli(&["strong-bridges"], "1 2\n2 3\n");
    assert_eq!(code, EXIT_PRECONDITION);
    assert!(err.contains("not strongly connected"));
}

#[test]
fn malformed_and_missing_input() {
    assert_eq!(cli(&["scc"], "1 2 3\n").0, EXIT_INPUT);
    assert_eq!(cli(&["scc"], "1 1\n").0, EXIT_INPUT);
    assert_eq!(cli(&["scc", "--input", "/nonexistent/graph.txt"], "").0, EXIT_INPUT);
}

#[test]
fn duplicates_are_rejected_unless_lenient() {
    let text = "1 2\n2 1\n1 2\n";
    assert_eq!(cli(&["scc"], text).0, EXIT_INPUT);
    let r = report(&["scc", "--lenient"], text);
    assert_eq!(r.m, 2);
    assert_eq!(r.classes.unwrap(), [["1", "2"]]);
}

#[test]
fn usage_errors_and_help() {
    assert_eq!(cli(&["frobnicate"], "").0, EXIT_USAGE);
    assert_eq!(cli(&["2etb", "--algorithm", "magic"], "").0, EXIT_USAGE);
    assert_eq!(cli(&["ketb"], "").0, EXIT_USAGE);
    let (code, out, _) = cli(&["--help"], "");
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("2etb"));
}

#[test]
fn json_round_trips() {
    let (_, out, _) = cli(&["2etb", "--format", "json"], G_FIG1_EDGE_LIST);
    let r: AnalysisReport = serde_json::from_str(&out).unwrap();
    assert_eq!(r.to_json(), out.trim_end());
    assert_eq!(r.blocks.as_deref().unwrap(), [vec!["2", "5"], vec!["12", "18"]]);
    assert_eq!((r.b_s, r.b_t), (Some(23), Some(23)));
}

#[test]
fn text_format() {
    let (code, out, _) = cli(&["tscc"], C3_EDGE_LIST);
    assert_eq!(code, EXIT_OK);
    assert_eq!(
        out,
        "analysis: tscc\nalgorithm: underlying-2ecc\nn: 3\nm: 3\nclasses: 1\n  1 2 3\n"
    );
    let (_, out, _) = cli(&["strong-bridges"], G_GADGET_EDGE_LIST);
    assert!(out.ends_with("strong_bridges: 1\n  p -> q\n"), "{out}");
}

#[test]
fn block_size_filters() {
    let r = report(&["2etb", "--include-singletons"], G_FIG1_EDGE_LIST);
    let blocks = r.blocks.unwrap();
    assert_eq!(blocks.iter().map(Vec::len).sum::<usize>(), 19);
    let r = report(&["scc", "--min-size", "2"], P2_EDGE_LIST);
    assert_eq!(r.classes.unwrap(), [["1", "2"]]);
    let r = report(&["tscc", "--min-size", "2"], P2_EDGE_LIST);
    assert!(r.classes.unwrap().is_empty());
}

#[test]
fn algorithms_agree_on_fixture_and_gadget_differs() {
    for alg in ["alg1", "alg2-safe", "oracle"] {
        let r = report(&["2etb", "--algorithm", alg], G_FIG1_EDGE_LIST);
        assert_eq!(r.algorithm, alg);
        assert_eq!(r.blocks.unwrap(), [vec!["2", "5"], vec!["12", "18"]]);
    }
    // The fixture has strong bridges, and skipping them keeps 7 with 2 and 5.
    let r = report(&["2etb", "--algorithm", "alg2-faithful"], G_FIG1_EDGE_LIST);
    assert_eq!(r.blocks.unwrap(), [vec!["2", "5", "7"], vec!["12", "18"]]);
    let safe = report(&["2etb"], G_GADGET_EDGE_LIST).blocks.unwrap();
    let faithful = report(&["2etb", "--algorithm", "alg2-faithful"], G_GADGET_EDGE_LIST).blocks.unwrap();
    assert_ne!(safe, faithful);
}

#[test]
fn two_etb_on_graphs_that_are_not_twinless_strongly_connected() {
    let text = "1 2\n2 1\n2 3\n3 2\n1 3\n3 1\n3 4\n";
    let r = report(&["2etb"], text);
    assert_eq!(r.blocks.unwrap(), [["1", "2", "3"]]);
    assert_eq!(r.b_t, None);
}

#[test]
fn output_is_deterministic_across_thread_counts() {
    let strip = |s: String| {
        let mut v: serde_json::Value = serde_json::from_str(&s).unwrap();
        v.as_object_mut().unwrap().remove("elapsed_ms");
        v.to_string()
    };
    let base = strip(cli(&["2etb", "--format", "json"], G_FIG1_EDGE_LIST).1);
    for threads in ["1", "2", "4"] {
        let out = cli(&["2etb", "--format", "json", "--threads", threads], G_FIG1_EDGE_LIST).1;
        assert_eq!(strip(out), base);
    }
}

#[test]
fn gen_output_parses_and_is_seeded() {
    let args = ["gen", "--n", "12", "--m", "30", "--shape", "tsc", "--seed", "9"];
    let (code, a, _) = cli(&args, "");
    assert_eq!(code, EXIT_OK);
    assert_eq!(a, cli(&args, "").1);
    let r = report(&["tscc"], &a);
    assert_eq!((r.n, r.m), (12, 30));
    assert_eq!(r.classes.unwrap().len(), 1);
    assert_eq!(cli(&["gen", "--n", "3", "--m", "9"], "").0, EXIT_PRECONDITION);
}

#[test]
fn selftest_passes() {
    let (code, out, _) = cli(&["selftest", "--cases", "40"], "");
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(!out.contains("FAIL"));
}

#[test]
fn binary_reads_stdin_and_files() {
    let bin = env!("CARGO_BIN_EXE_twinless");
    let mut child = Command::new(bin)
        .args(["scc", "--format", "json"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(C3_EDGE_LIST.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let r: AnalysisReport = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(r.classes.unwrap(), [["1", "2", "3"]]);

    let path = std::env::temp_dir().join(format!("twinless-p2-{}.txt", std::process::id()));
    std::fs::write(&path, P2_EDGE_LIST).unwrap();
    let out = Command::new(bin)
        .args(["twinless-bridges", "--input", path.to_str().unwrap()])
        .output()
        .unwrap();
    std::fs::remove_file(&path).ok();
    assert_eq!(out.status.code(), Some(EXIT_PRECONDITION));
}
