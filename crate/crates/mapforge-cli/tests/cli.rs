//! End-to-end tests of the `mapforge` binary: every subcommand, the exit
//! codes, and byte-level determinism.

use std::io::Write as _;
use std::process::{Command, Stdio};

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_mapforge")
}

fn run_full(args: &[&str], envs: &[(&str, &str)], stdin: Option<&str>) -> (i32, String, String) {
    let mut cmd = Command::new(bin());
    cmd.args(args);
    // isolate from the ambient environment
    cmd.env_remove("MAPFORGE_MAX_EDGES");
    for (key, value) in envs {
        cmd.env(key, value);
    }
    if stdin.is_some() {
        cmd.stdin(Stdio::piped());
    }
    cmd.stdout(Stdio::piped()).stderr(Stdio::piped());
    let mut child = cmd.spawn().expect("binary starts");
    if let Some(text) = stdin {
        child
            .stdin
            .as_mut()
            .expect("piped stdin")
            .write_all(text.as_bytes())
            .expect("stdin accepts input");
    }
    let output = child.wait_with_output().expect("binary finishes");
    (
        output.status.code().expect("binary exits normally"),
        String::from_utf8(output.stdout).expect("stdout is UTF-8"),
        String::from_utf8(output.stderr).expect("stderr is UTF-8"),
    )
}

fn run(args: &[&str]) -> (i32, String, String) {
    run_full(args, &[], None)
}

fn ok(args: &[&str]) -> String {
    let (code, stdout, stderr) = run(args);
    assert_eq!(code, 0, "args {args:?} failed: {stderr}");
    stdout
}

const LINK_COVERED: &str = r#"{"n":1,"root":0,"sigma":[0,1],"alpha":[1,0],"S":[0,1]}"#;
const LINK_MAP: &str = r#"{"n":1,"root":0,"sigma":[0,1],"alpha":[1,0]}"#;
const PATH_MAP: &str = r#"{"n":2,"root":0,"sigma":[0,2,1,3],"alpha":[1,0,3,2]}"#;

#[test]
fn gen_streams_are_deterministic_and_complete() {
    let first = ok(&["gen", "--kind", "covered", "--edges", "2"]);
    let second = ok(&["gen", "--kind", "covered", "--edges", "2"]);
    assert_eq!(first, second, "byte-identical reruns");
    let lines: Vec<&str> = first.lines().collect();
    assert_eq!(lines.len(), 12);
    for line in &lines {
        assert!(line.starts_with('{') && line.contains("\"S\":"));
    }

    let trees = ok(&["gen", "--kind", "trees", "--edges", "3"]);
    assert_eq!(trees.lines().count(), 5);

    let toroidal = ok(&["gen", "--kind", "maps", "--edges", "2", "--genus", "1"]);
    assert_eq!(toroidal.lines().count(), 1);

    let cycles = ok(&["gen", "--kind", "trees", "--edges", "2", "--format", "cycles"]);
    for line in cycles.lines() {
        assert!(line.starts_with("root=0 sigma=("), "got {line}");
        assert!(line.contains("alpha=(0 1)(2 3)"));
    }
}

#[test]
fn count_produces_totals_refinements_and_formula_mode() {
    let total = ok(&["count", "--kind", "covered", "--edges", "2"]);
    assert_eq!(total, "kind,n,param1,param2,count\ncovered,2,,,12\n");

    let by_genus = ok(&["count", "--kind", "covered", "--edges", "2", "--by", "genus"]);
    assert!(by_genus.contains("covered,2,0,,10\n"));
    assert!(by_genus.contains("covered,2,1,,2\n"));

    // six covered maps with two edges have two vertices and two faces
    let by_vf = ok(&["count", "--kind", "covered", "--edges", "2", "--by", "vf"]);
    assert!(by_vf.contains("covered,2,2,2,6\n"));

    // closed-form totals go far beyond the enumeration bound
    let formula = ok(&[
        "count", "--kind", "covered", "--edges", "12", "--via", "formula",
    ]);
    assert_eq!(
        formula,
        "kind,n,param1,param2,count\ncovered,12,,,1295295050649600\n"
    );
    let unicellular = ok(&[
        "count",
        "--kind",
        "unicellular",
        "--edges",
        "10",
        "--via",
        "formula",
    ]);
    assert!(unicellular.contains("unicellular,10,,,654729075\n"));

    // refinements need enumeration
    let (code, _, stderr) = run(&[
        "count", "--kind", "covered", "--edges", "3", "--by", "genus", "--via", "formula",
    ]);
    assert_eq!(code, 2);
    assert!(stderr.contains("totals"));
}

#[test]
fn verify_reports_csv_and_exit_zero_on_success() {
    let (code, stdout, _) = run(&["verify", "--formula", "lehman-walsh", "--max-edges", "3"]);
    assert_eq!(code, 0);
    let mut lines = stdout.lines();
    assert_eq!(lines.next(), Some("formula,n,param1,param2,lhs,rhs,pass"));
    assert!(stdout.contains("lehman-walsh-toroidal,2,,,1,1,true"));
    assert!(stdout.contains("lehman-walsh-toroidal,3,,,25,25,true"));

    let (code, stdout, _) = run(&["verify", "--formula", "all", "--max-edges", "2"]);
    assert_eq!(code, 0);
    assert!(stdout.lines().count() > 40);
    assert!(stdout.lines().skip(1).all(|line| line.ends_with(",true")));

    let (code, _, stderr) = run(&["verify", "--formula", "nonsense", "--max-edges", "2"]);
    assert_eq!(code, 2, "unknown formula is a usage error: {stderr}");
}

#[test]
fn psi_round_trips_byte_exactly() {
    let dir = tempfile::tempdir().expect("temp dir");
    let covered = dir.path().join("covered.json");
    std::fs::write(&covered, format!("{LINK_COVERED}\n")).expect("write input");

    let pair = ok(&["psi", "--in", covered.to_str().expect("utf-8 path")]);
    assert!(pair.contains("\"tree\":{\"n\":1"));
    assert!(pair.contains("\"mobile\":{\"n\":2"));
    assert!(pair.contains("\"coloring\":"));

    let pair_file = dir.path().join("pair.json");
    std::fs::write(&pair_file, &pair).expect("write pair");
    let back = ok(&["psi", "--inverse", "--in", pair_file.to_str().expect("utf-8 path")]);
    assert_eq!(back.trim(), LINK_COVERED);

    // canonical renaming keeps the object, changes only the names
    let canonical = ok(&[
        "psi",
        "--inverse",
        "--canonical",
        "--in",
        pair_file.to_str().expect("utf-8 path"),
    ]);
    assert!(canonical.starts_with('{') && canonical.contains("\"S\":"));
}

#[test]
fn psi_reads_stdin_and_writes_out_files() {
    let dir = tempfile::tempdir().expect("temp dir");
    let out = dir.path().join("pair.json");
    let (code, stdout, stderr) = run_full(
        &["psi", "--in", "-", "--out", out.to_str().expect("utf-8 path")],
        &[],
        Some(LINK_COVERED),
    );
    assert_eq!(code, 0, "{stderr}");
    assert!(stdout.is_empty(), "data went to the file, not stdout");
    let pair = std::fs::read_to_string(&out).expect("output written");
    let (code, round, _) = run_full(&["psi", "--inverse", "--in", "-"], &[], Some(&pair));
    assert_eq!(code, 0);
    assert_eq!(round.trim(), LINK_COVERED);
}

#[test]
fn dual_detects_the_object_class() {
    // covered map: the one-edge tree-rooted map dualizes to the loop with
    // an empty subset
    let (code, stdout, _) = run_full(&["dual", "--in", "-"], &[], Some(LINK_COVERED));
    assert_eq!(code, 0);
    assert_eq!(
        stdout.trim(),
        r#"{"n":1,"root":0,"sigma":[1,0],"alpha":[1,0],"S":[]}"#
    );

    // plain map: dualizing twice returns the original
    let (_, once, _) = run_full(&["dual", "--in", "-"], &[], Some(PATH_MAP));
    let (_, twice, _) = run_full(&["dual", "--in", "-"], &[], Some(once.trim()));
    assert_eq!(twice.trim(), PATH_MAP);

    // oriented map
    let oriented = r#"{"n":1,"root":0,"sigma":[0,1],"alpha":[1,0],"I":[1]}"#;
    let (code, stdout, _) = run_full(&["dual", "--in", "-"], &[], Some(oriented));
    assert_eq!(code, 0);
    assert!(stdout.contains("\"I\":[0]"));

    // pairs dualize to pairs
    let (_, pair, _) = run_full(&["psi", "--in", "-"], &[], Some(LINK_COVERED));
    let (code, dual_pair, _) = run_full(&["dual", "--in", "-"], &[], Some(pair.trim()));
    assert_eq!(code, 0);
    assert!(dual_pair.contains("\"tree\""));
    let (_, dual_dual, _) = run_full(&["dual", "--in", "-"], &[], Some(dual_pair.trim()));
    assert_eq!(dual_dual, pair, "pair duality is an involution");

    // labelled mobiles have no dual
    let (_, labelled, _) = run_full(&["mobile", "labelled", "--in", "-"], &[], Some(pair.trim()));
    let (code, _, stderr) = run_full(&["dual", "--in", "-"], &[], Some(labelled.trim()));
    assert_eq!(code, 2);
    assert!(stderr.contains("not defined"));

    // ambiguous objects are rejected
    let ambiguous = r#"{"n":1,"root":0,"sigma":[0,1],"alpha":[1,0],"S":[0,1],"I":[1]}"#;
    let (code, _, stderr) = run_full(&["dual", "--in", "-"], &[], Some(ambiguous));
    assert_eq!(code, 2);
    assert!(stderr.contains("ambiguous"));
}

#[test]
fn code_encode_and_decode_are_inverse() {
    let (code, text, _) = run_full(&["code", "encode", "--in", "-"], &[], Some(LINK_MAP));
    assert_eq!(code, 0);
    assert_eq!(text.trim(), "a1 A1");
    let (code, map, _) = run_full(&["code", "decode", "--in", "-"], &[], Some(text.trim()));
    assert_eq!(code, 0);
    assert_eq!(map.trim(), LINK_MAP);

    // a two-family code decodes to a covered map and encodes back
    let shuffle = "a1 b1 A1 B1";
    let (code, covered, _) = run_full(&["code", "decode", "--in", "-"], &[], Some(shuffle));
    assert_eq!(code, 0);
    assert!(covered.contains("\"S\":"));
    let (code, text, _) = run_full(&["code", "encode", "--in", "-"], &[], Some(covered.trim()));
    assert_eq!(code, 0);
    assert_eq!(text.trim(), shuffle);

    // forcing the kind reads a single-family text as a full-subset covering
    let (code, forced, _) = run_full(
        &["code", "decode", "--in", "-", "--as", "shuffle"],
        &[],
        Some("a1 A1"),
    );
    assert_eq!(code, 0);
    assert_eq!(forced.trim(), LINK_COVERED);

    // maps with two faces have no single-face code
    let loop_map = r#"{"n":1,"root":0,"sigma":[1,0],"alpha":[1,0]}"#;
    let (code, _, _) = run_full(&["code", "encode", "--in", "-"], &[], Some(loop_map));
    assert_eq!(code, 2);
}

#[test]
fn mobile_encodings_round_trip_through_the_cli() {
    let (_, pair, _) = run_full(&["psi", "--in", "-"], &[], Some(LINK_COVERED));
    let (code, labelled, _) =
        run_full(&["mobile", "labelled", "--in", "-"], &[], Some(pair.trim()));
    assert_eq!(code, 0);
    assert!(labelled.contains("\"labels\":[0,1]"));

    let (code, blossoming, _) =
        run_full(&["mobile", "blossoming", "--in", "-"], &[], Some(pair.trim()));
    assert_eq!(code, 0);
    assert!(blossoming.contains("\"buds\":"));

    // geodesic labelling of a bipartite map and its inverse
    let (code, labelled, _) = run_full(&["mobile", "bdfg", "--in", "-"], &[], Some(PATH_MAP));
    assert_eq!(code, 0);
    assert!(labelled.contains("\"labels\":[0,1,2]"));
    let (code, back, _) = run_full(
        &["mobile", "bdfg-inverse", "--in", "-"],
        &[],
        Some(labelled.trim()),
    );
    assert_eq!(code, 0);
    assert_eq!(back.trim(), PATH_MAP);

    // the loop is not bipartite
    let loop_map = r#"{"n":1,"root":0,"sigma":[1,0],"alpha":[1,0]}"#;
    let (code, _, _) = run_full(&["mobile", "bdfg", "--in", "-"], &[], Some(loop_map));
    assert_eq!(code, 2);
}

#[test]
fn sample_is_seed_deterministic() {
    let first = ok(&["sample", "--edges", "2", "--count", "5", "--seed", "9"]);
    let second = ok(&["sample", "--edges", "2", "--count", "5", "--seed", "9"]);
    assert_eq!(first, second);
    assert_eq!(first.lines().count(), 5);
    for line in first.lines() {
        assert!(line.contains("\"n\":2") && line.contains("\"S\":"));
    }
    let other_seed = ok(&["sample", "--edges", "2", "--count", "5", "--seed", "10"]);
    assert_ne!(first, other_seed, "different seeds diverge");
}

#[test]
fn export_emits_dot() {
    let (code, dot, _) = run_full(&["export", "--dot", "--in", "-"], &[], Some(LINK_MAP));
    assert_eq!(code, 0);
    assert!(dot.starts_with("graph {"));
    assert!(dot.contains("v0 -- v1"));

    let (_, pair, _) = run_full(&["psi", "--in", "-"], &[], Some(LINK_COVERED));
    let (code, dot, _) = run_full(&["export", "--dot", "--in", "-"], &[], Some(pair.trim()));
    assert_eq!(code, 0);
    assert!(dot.contains("cluster_mobile"));
    assert!(dot.contains("fillcolor=black"));

    // --dot is mandatory
    let (code, _, _) = run_full(&["export", "--in", "-"], &[], Some(LINK_MAP));
    assert_eq!(code, 2);
}

#[test]
fn errors_use_exit_code_two_and_stderr() {
    let (code, stdout, stderr) = run(&["psi", "--in", "/nonexistent/file.json"]);
    assert_eq!(code, 2);
    assert!(stdout.is_empty());
    assert!(stderr.contains("error"));

    let (code, _, _) = run_full(&["psi", "--in", "-"], &[], Some("not json"));
    assert_eq!(code, 2);

    // a valid subset that is not a covering
    let not_covered = r#"{"n":1,"root":0,"sigma":[0,1],"alpha":[1,0],"S":[]}"#;
    let (code, _, _) = run_full(&["psi", "--in", "-"], &[], Some(not_covered));
    assert_eq!(code, 2);

    let (code, _, _) = run(&["gen", "--kind", "nonsense", "--edges", "1"]);
    assert_eq!(code, 2);
}

#[test]
fn the_env_var_moves_the_enumeration_bounds() {
    let (code, _, stderr) = run_full(
        &["gen", "--kind", "covered", "--edges", "2"],
        &[("MAPFORGE_MAX_EDGES", "1")],
        None,
    );
    assert_eq!(code, 2);
    assert!(stderr.contains("bound"));

    let (code, _, _) = run_full(
        &["gen", "--kind", "unicellular", "--edges", "3"],
        &[("MAPFORGE_MAX_EDGES", "2")],
        None,
    );
    assert_eq!(code, 2);

    let (code, stdout, _) = run_full(
        &["gen", "--kind", "unicellular", "--edges", "3"],
        &[("MAPFORGE_MAX_EDGES", "3")],
        None,
    );
    assert_eq!(code, 0);
    assert_eq!(stdout.lines().count(), 15);
}
