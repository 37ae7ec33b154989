//! End-to-end tests that drive the compiled `immgraph` binary.

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use immgraph::diagram::convex_drawing;
use immgraph::io as interchange;
use immgraph::{Graph, Hand, PlaneCurve};
use serde_json::{json, Value};

/// Run the binary with `args`, optionally feeding `stdin`, and return
/// `(exit code, stdout, stderr)`.
fn run(args: &[&str], stdin: Option<&str>) -> (i32, String, String) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_immgraph"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn immgraph");
    if let Some(text) = stdin {
        child
            .stdin
            .as_mut()
            .expect("stdin handle")
            .write_all(text.as_bytes())
            .expect("write stdin");
    }
    drop(child.stdin.take());
    let Output {
        status,
        stdout,
        stderr,
    } = child.wait_with_output().expect("wait for immgraph");
    (
        status.code().unwrap_or(-1),
        String::from_utf8(stdout).expect("stdout is UTF-8"),
        String::from_utf8(stderr).expect("stderr is UTF-8"),
    )
}

fn parse(stdout: &str) -> Value {
    serde_json::from_str(stdout).expect("stdout is a single JSON document")
}

/// Per-process scratch directory for files the tests write.
fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("immgraph-cli-tests-{}", std::process::id()));
    std::fs::create_dir_all(&dir).expect("create scratch dir");
    dir.join(name)
}

fn write_scratch(name: &str, text: &str) -> PathBuf {
    let path = scratch(name);
    std::fs::write(&path, text).expect("write scratch file");
    path
}

/// The standard trefoil projection: three crossings, each pair interleaved.
fn trefoil_curve() -> PlaneCurve {
    PlaneCurve::from_canonical(&[0, 1, 2, 0, 1, 2], &[Hand::L, Hand::R, Hand::L])
        .expect("trefoil projection is realizable")
}

#[test]
fn gen_output_matches_the_library_and_validates() {
    let (code, stdout, stderr) = run(&["gen", "convex", "--graph", "K6"], None);
    assert_eq!(code, 0, "stderr: {stderr}");

    let expected = convex_drawing(&Graph::complete(6), None).unwrap();
    let parsed = interchange::diagram_from_json(&stdout).expect("gen output parses");
    assert_eq!(
        interchange::diagram_to_json(&parsed),
        interchange::diagram_to_json(&expected),
        "gen convex K6 must emit exactly the library drawing"
    );
    assert!(stdout.ends_with('\n'), "output ends with a newline");

    let (code, stdout, _) = run(&["validate", "-"], Some(&stdout));
    assert_eq!(code, 0);
    let v = parse(&stdout);
    assert_eq!(v["valid"], json!(true));
    assert_eq!(v["violations"], json!([]));
}

#[test]
fn usage_and_help_exit_codes() {
    let (code, stdout, _) = run(&["--help"], None);
    assert_eq!(code, 0);
    assert!(stdout.contains("Usage"), "help text prints to stdout");

    let (code, _, _) = run(&["--version"], None);
    assert_eq!(code, 0);

    // No subcommand, unknown subcommand, missing required flag.
    assert_eq!(run(&[], None).0, 1);
    assert_eq!(run(&["frobnicate"], None).0, 1);
    assert_eq!(run(&["gen", "convex"], None).0, 1);
}

#[test]
fn malformed_input_is_a_violation_not_a_crash() {
    let (code, stdout, _) = run(&["validate", "-"], Some("this is not json"));
    assert_eq!(code, 1);
    let v = parse(&stdout);
    assert_eq!(v["valid"], json!(false));
    assert!(
        !v["violations"].as_array().unwrap().is_empty(),
        "parse failure must surface as a violation"
    );

    // Other subcommands report parse failures on stderr with exit 1.
    let (code, _, stderr) = run(&["curve", "chords", "-"], Some("{}"));
    assert_eq!(code, 1);
    assert!(stderr.contains("error"), "stderr: {stderr}");
}

#[test]
fn resolution_cap_exit_code_is_three() {
    let k6 = scratch("k6.json");
    let (code, _, _) = run(
        &["gen", "convex", "--graph", "K6", "-o", k6.to_str().unwrap()],
        None,
    );
    assert_eq!(code, 0);

    // Convex K6 has 6-cycle restrictions with up to 7 crossings; a cap of 3
    // must abort with the cap exit code.
    let (code, _, stderr) = run(
        &[
            "check",
            "alpha",
            k6.to_str().unwrap(),
            "--max-resolutions",
            "3",
        ],
        None,
    );
    assert_eq!(code, 3, "stderr: {stderr}");
    assert!(stderr.contains("cap"), "stderr names the cap: {stderr}");
}

#[test]
fn wrong_host_for_a_pattern_is_invalid_input() {
    let k6 = scratch("k6-host.json");
    run(
        &["gen", "convex", "--graph", "K6", "-o", k6.to_str().unwrap()],
        None,
    );
    // The 3-chord preset needs the complete graph on 12 vertices.
    let (code, _, stderr) = run(
        &["force-chord", k6.to_str().unwrap(), "--pattern", "C2"],
        None,
    );
    assert_eq!(code, 1);
    assert!(stderr.contains("12"), "stderr explains the host: {stderr}");
}

#[test]
fn curve_subcommands_agree_with_known_values() {
    let curve_json = interchange::curve_to_json(&trefoil_curve());
    let file = write_scratch("trefoil-curve.json", &curve_json);
    let path = file.to_str().unwrap();

    let (code, stdout, _) = run(&["curve", "chords", path], None);
    assert_eq!(code, 0);
    assert_eq!(parse(&stdout)["word"], json!([0, 1, 2, 0, 1, 2]));

    // Preset C1 (interleaved pair) is present, preset C2 is not.
    let (code, stdout, _) = run(&["curve", "contains", path, "--pattern", "C1"], None);
    assert_eq!(code, 0);
    let v = parse(&stdout);
    assert_eq!(v["contains"], json!(true));
    assert!(v["witness"].is_object());

    let (code, stdout, _) = run(&["curve", "contains", path, "--pattern", "C2"], None);
    assert_eq!(code, 0);
    assert_eq!(parse(&stdout)["contains"], json!(false));

    let (code, stdout, _) = run(&["curve", "r1reducible", path], None);
    assert_eq!(code, 0);
    assert_eq!(parse(&stdout)["r1_reducible"], json!(false));

    let (code, stdout, _) = run(&["curve", "a2avg", path], None);
    assert_eq!(code, 0);
    let v = parse(&stdout);
    assert_eq!(v["a2_average"]["num"], json!(1));
    assert_eq!(v["a2_average"]["den"], json!(4));

    // A pattern can also come from a file instead of a preset name.
    let pattern = write_scratch("interleaved.json", "{\"sequence\":[0,1,0,1]}");
    let (code, stdout, _) = run(
        &[
            "curve",
            "contains",
            path,
            "--pattern",
            pattern.to_str().unwrap(),
        ],
        None,
    );
    assert_eq!(code, 0);
    assert_eq!(parse(&stdout)["contains"], json!(true));

    // The same curve through stdin.
    let (code, stdout, _) = run(&["curve", "chords", "-"], Some(&curve_json));
    assert_eq!(code, 0);
    assert_eq!(parse(&stdout)["chord_count"], json!(3));
}

#[test]
fn detect_reports_presence_and_absence() {
    let curve_json = interchange::curve_to_json(&trefoil_curve());

    let (code, stdout, _) = run(&["detect", "-", "--knot", "trefoil"], Some(&curve_json));
    assert_eq!(code, 0);
    let v = parse(&stdout);
    assert_eq!(v["detected"], json!(true));
    assert_eq!(v["knot"], json!("trefoil"));

    // Absence is a successful answer, not an error.
    let (code, stdout, _) = run(&["detect", "-", "--knot", "fig8"], Some(&curve_json));
    assert_eq!(code, 0);
    let v = parse(&stdout);
    assert_eq!(v["detected"], json!(false));
    assert_eq!(v["witness"], json!(null));
}

#[test]
fn knot_a2_for_the_alternating_trefoil() {
    let knot = immgraph::KnotDiagram::alternating(trefoil_curve()).unwrap();
    let (code, stdout, _) = run(
        &["knot", "a2", "-"],
        Some(&interchange::knot_to_json(&knot)),
    );
    assert_eq!(code, 0);
    let v = parse(&stdout);
    assert_eq!(v["a2"], json!(1));
    assert_eq!(v["crossings"], json!(3));
}

#[test]
fn alpha_of_convex_k6_is_25_over_4() {
    let k6 = scratch("k6-alpha.json");
    run(
        &["gen", "convex", "--graph", "K6", "-o", k6.to_str().unwrap()],
        None,
    );
    let (code, stdout, stderr) = run(&["alpha", k6.to_str().unwrap()], None);
    assert_eq!(code, 0, "stderr: {stderr}");
    let v = parse(&stdout);
    assert_eq!(v["alpha"]["num"], json!(25));
    assert_eq!(v["alpha"]["den"], json!(4));
    assert_eq!(v["cycle_length"], json!(6));
    assert_eq!(v["rows"].as_array().unwrap().len(), 60);

    let (code, stdout, _) = run(&["check", "alpha", k6.to_str().unwrap()], None);
    assert_eq!(code, 0);
    assert_eq!(parse(&stdout)["congruent"], json!(true));
}

#[test]
fn dvalue_and_parity_check_on_convex_k5() {
    let k5 = scratch("k5.json");
    run(
        &["gen", "convex", "--graph", "K5", "-o", k5.to_str().unwrap()],
        None,
    );
    let (code, stdout, _) = run(&["dvalue", k5.to_str().unwrap()], None);
    assert_eq!(code, 0);
    assert_eq!(parse(&stdout)["d"], json!(5));

    let (code, stdout, _) = run(&["check", "dparity", k5.to_str().unwrap()], None);
    assert_eq!(code, 0);
    let v = parse(&stdout);
    assert_eq!(v["host"], json!("K5"));
    assert_eq!(v["odd"], json!(true));

    // The comma spelling of the bipartite host is accepted.
    let (code, stdout, _) = run(&["gen", "convex", "--graph", "K3,3"], None);
    assert_eq!(code, 0);
    let (code, stdout, _) = run(&["check", "dparity", "-"], Some(&stdout));
    assert_eq!(code, 0);
    assert_eq!(parse(&stdout)["host"], json!("K3,3"));
}

#[test]
fn output_flag_writes_the_same_bytes_as_stdout() {
    let (code, stdout, _) = run(&["gen", "convex", "--graph", "K5"], None);
    assert_eq!(code, 0);

    let out = scratch("k5-written.json");
    let (code, piped, _) = run(
        &[
            "gen",
            "convex",
            "--graph",
            "K5",
            "-o",
            out.to_str().unwrap(),
        ],
        None,
    );
    assert_eq!(code, 0);
    assert!(piped.is_empty(), "-o suppresses stdout");
    let written = std::fs::read_to_string(&out).expect("read -o file");
    assert_eq!(written, stdout);
}

#[test]
fn identical_invocations_are_byte_identical() {
    let k6 = scratch("k6-walk.json");
    run(
        &["gen", "convex", "--graph", "K6", "-o", k6.to_str().unwrap()],
        None,
    );
    let args = [
        "perturb",
        k6.to_str().unwrap(),
        "--steps",
        "12",
        "--seed",
        "9",
    ];
    let (code, first, _) = run(&args, None);
    assert_eq!(code, 0);
    let (code, second, _) = run(&args, None);
    assert_eq!(code, 0);
    assert_eq!(first, second, "same seed must reproduce the same diagram");

    // The walked diagram round-trips through its own JSON.
    let walked = interchange::diagram_from_json(&first).expect("perturb output parses");
    assert_eq!(interchange::diagram_to_json(&walked), first.trim_end());
}

#[test]
fn corpus_results_do_not_depend_on_worker_count() {
    let base = [
        "corpus",
        "run",
        "--suite",
        "dparity-K5",
        "--seed",
        "1",
        "--count",
        "3",
    ];
    let mut one = base.to_vec();
    one.extend(["--jobs", "1"]);
    let mut four = base.to_vec();
    four.extend(["--jobs", "4"]);

    let (code, stdout_one, _) = run(&one, None);
    assert_eq!(code, 0);
    let (code, stdout_four, _) = run(&four, None);
    assert_eq!(code, 0);
    assert_eq!(stdout_one, stdout_four);

    let v = parse(&stdout_one);
    assert_eq!(v["passed"], json!(3));
    assert_eq!(v["failed"], json!(0));
}

#[test]
fn search_locates_the_known_low_crossing_cycle_in_k12() {
    let k12 = scratch("k12.json");
    run(
        &[
            "gen",
            "convex",
            "--graph",
            "K12",
            "-o",
            k12.to_str().unwrap(),
        ],
        None,
    );
    let (code, stdout, stderr) = run(
        &["search", "fig8", k12.to_str().unwrap(), "--jobs", "2"],
        None,
    );
    assert_eq!(code, 0, "stderr: {stderr}");
    let v = parse(&stdout);
    assert_eq!(v["index"], json!(38));
    assert_eq!(v["crossings"], json!(7));
    assert_eq!(v["cycle"], json!([0, 1, 2, 3, 4, 5, 6, 8, 10, 7, 11, 9]));
}
