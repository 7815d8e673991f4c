use std::io::Write as _;
use std::process::{Command, Stdio};

use chordal_bvec_tools::cli::{self, Output};
use serde_json::Value;

fn run(args: &[&str], stdin: &str) -> Output {
    let mut argv = vec!["chordal-bvec".into()];
    argv.extend(args.iter().map(Into::into));
    cli::run(argv, &mut stdin.as_bytes())
}

fn json(out: &Output) -> Value {
    assert_eq!(out.code, 0, "{}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

const C4: &str = "4 4\n0 1\n1 2\n2 3\n0 3\n";
const BEST: &str = "# K4 on 0..3, then u_k, u_kt, v\n7 11\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n0 4\n0 5\n1 5\n2 6\n3 6\n";

#[test]
fn gen_is_frozen() {
    let out = run(&["gen", "--chordal", "8", "3", "42"], "");
    assert_eq!(out.stdout, "8 7\n0 1\n0 2\n1 3\n1 4\n3 7\n4 5\n5 6\n");
    let out = run(&["gen", "--threshold", "6", "1"], "");
    assert_eq!(out.stdout, "SSDSDD\n");
}

#[test]
fn shift_of_generated_graph_is_frozen() {
    let g = run(&["gen", "--chordal", "8", "3", "42"], "").stdout;
    let doc = json(&run(&["shift"], &g));
    assert_eq!(doc["word"], "SDDDDDDS");
    assert_eq!(doc["k_clique"], serde_json::json!([1, 0]));
    assert_eq!(doc["peo"], serde_json::json!([2, 6, 5, 4, 7, 3, 0, 1]));
    assert_eq!(doc["b_vector"], serde_json::json!(["1", "7"]));
    for check in [
        "threshold",
        "clique_vector_preserved",
        "kappa_preserved",
        "bijection",
    ] {
        assert_eq!(doc["checks"][check], true, "{check}");
    }
}

#[test]
fn word_and_from_b() {
    let doc = json(&run(&["word", "sdsdds"], ""));
    assert_eq!(doc["word"], "SDSDDS");
    assert_eq!(doc["b_vector"], serde_json::json!(["1", "3", "2"]));
    assert_eq!(doc["profile"]["d_i"], serde_json::json!([1, 3, 2]));
    assert_eq!(doc["profile"]["components_after_cut"], 3);

    let doc = json(&run(&["word", "--from-b", "1,4,3,2"], ""));
    assert_eq!(doc["word"], "SDSDDSDDDS");

    let doc = json(&run(&["word", "SSS"], ""));
    assert_eq!(doc["profile_applicable"], false);
    assert_eq!(doc["profile"], Value::Null);
    assert_eq!(doc["kappa"], 2);

    assert_eq!(run(&["word", "SXD"], "").code, cli::EXIT_INPUT);
    assert_eq!(run(&["word", "--from-b", "1,0"], "").code, cli::EXIT_INPUT);
}

#[test]
fn invariants_of_best_possible() {
    let doc = json(&run(&["invariants", "-"], BEST));
    assert_eq!(doc["b_vector"], serde_json::json!(["1", "2", "3", "1"]));
    assert_eq!(doc["d_i"], serde_json::json!([2, 3, 3, 1]));
    assert_eq!(doc["kappa"], 1);
    assert_eq!(doc["kappa_tilde"], 2);
    assert_eq!(doc["theorems_applicable"], true);
    assert!(doc.get("d_i_strict").is_none());

    let doc = json(&run(&["invariants", "--strict-domination"], BEST));
    assert_eq!(doc["d_i_strict"], serde_json::json!([2, null, null, null]));
}

#[test]
fn betti_methods_agree() {
    let doc = json(&run(&["betti", "--method", "all"], BEST));
    let agree = &doc["routes"]["agreement"];
    assert_eq!(agree["formulas"], true);
    assert_eq!(agree["strand"], true);
    assert_eq!(agree["hochster"], true);
    assert_eq!(doc["profile"]["pd"], 5);
    assert_eq!(doc["profile"]["depth"], 2);
    let hochster = json(&run(&["betti"], BEST));
    let parallel = json(&run(&["betti", "--jobs", "3"], BEST));
    assert_eq!(hochster["entries"], parallel["entries"]);
    assert_eq!(hochster["entries"], doc["entries"]);
}

#[test]
fn betti_of_a_cycle_and_a_complex() {
    let doc = json(&run(&["betti"], C4));
    assert_eq!(doc["profile"]["is_two_linear"], false);
    assert!(doc["entries"]
        .as_array()
        .unwrap()
        .contains(&serde_json::json!([2, 4, "1"])));
    let doc = json(&run(&["betti", "--complex"], "4\n0 1\n1 2\n2 3\n0 3\n"));
    assert_eq!(doc["profile"]["is_two_linear"], false);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["bogus"], "").code, cli::EXIT_INPUT);
    assert_eq!(run(&["--help"], "").code, cli::EXIT_OK);
    assert_eq!(run(&["invariants"], "3 1\n2 1\n").code, cli::EXIT_INPUT);
    assert_eq!(run(&["invariants"], "0 0\n").code, cli::EXIT_INPUT);
    assert_eq!(
        run(&["invariants", "/no/such/file"], "").code,
        cli::EXIT_INPUT
    );
    assert_eq!(run(&["shift"], C4).code, cli::EXIT_PRECONDITION);
    assert_eq!(
        run(&["shift"], "3 3\n0 1\n0 2\n1 2\n").code,
        cli::EXIT_PRECONDITION
    );
    assert_eq!(
        run(&["shift", "--clique", "0,1"], BEST).code,
        cli::EXIT_PRECONDITION
    );
    assert_eq!(
        run(&["betti", "--method", "hvector"], C4).code,
        cli::EXIT_PRECONDITION
    );
    assert_eq!(run(&["betti", "--cap", "5"], BEST).code, cli::EXIT_CAP);
    assert_eq!(
        run(&["verify", "--random", "13", "1", "1"], "").code,
        cli::EXIT_INPUT
    );
}

#[test]
fn verify_reports_jsonl_and_summary() {
    let out = run(&["verify", "--random", "8", "20", "5", "--jobs", "2"], "");
    assert_eq!(out.code, 0, "{}", out.stderr);
    let lines: Vec<Value> = out
        .stdout
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 21);
    let summary = &lines[20]["summary"];
    assert_eq!(summary["instances"], 20);
    assert_eq!(summary["failed"], 0);
    assert!(lines[..20].iter().all(|l| l["passed"] == true));

    let out = run(&["verify", "--file", "-"], BEST);
    let first: Value = serde_json::from_str(out.stdout.lines().next().unwrap()).unwrap();
    assert_eq!(first["b_vector"], serde_json::json!(["1", "2", "3", "1"]));
    let c4 = run(&["verify", "--file", "-"], C4);
    assert_eq!(c4.code, 0);
    assert!(c4.stdout.contains("\"skipped\":1"));
}

#[test]
fn binary_reads_stdin_and_sets_exit_code() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_chordal-bvec"))
        .args(["shift"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(C4.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(cli::EXIT_PRECONDITION));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not chordal"));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("best.txt");
    std::fs::write(&path, BEST).unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_chordal-bvec"))
        .args(["invariants", path.to_str().unwrap()])
        .output()
        .unwrap();
    assert!(out.status.success());
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["n"], 7);
}

#[test]
fn spec_examples() {
    let doc = json(&run(&["shift"], BEST));
    assert_eq!(doc["d_i"]["shifted"], serde_json::json!([1, 2, 3, 1]));
    assert_eq!(doc["d_i"]["graph"], serde_json::json!([2, 3, 3, 1]));

    let doc = json(&run(&["betti", "--method", "all"], "3 2\n0 1\n1 2\n"));
    assert_eq!(
        doc["entries"],
        serde_json::json!([[0, 0, "1"], [1, 2, "1"]])
    );
    assert_eq!(doc["routes"]["agreement"]["hochster"], true);

    let single = run(&["gen", "--chordal", "1", "1", "0"], "").stdout;
    assert_eq!(single, "1 0\n");
    let mut k5 = String::from("5 10\n");
    for u in 0..5 {
        for v in u + 1..5 {
            k5.push_str(&format!("{u} {v}\n"));
        }
    }
    let doc = json(&run(&["betti", "--method", "all"], &k5));
    assert_eq!(doc["entries"], serde_json::json!([[0, 0, "1"]]));

    let doc = json(&run(&["word", "--from-b", "1,1"], ""));
    assert_eq!(doc["word"], "SS");
    assert_eq!(doc["profile_applicable"], false);

    let sdsdds = json(&run(&["word", "SDSDDS"], ""));
    let mut file = format!("6 {}\n", sdsdds["edges"].as_array().unwrap().len());
    for e in sdsdds["edges"].as_array().unwrap() {
        file.push_str(&format!("{} {}\n", e[0], e[1]));
    }
    let doc = json(&run(&["invariants"], &file));
    assert_eq!(doc["b_vector"], serde_json::json!(["1", "3", "2"]));
    let doc = json(&run(&["invariants"], C4));
    assert_eq!(doc["chordal"], false);
    assert_eq!(doc["theorems_applicable"], false);

    let out = run(
        &["verify", "--random", "10", "200", "7", "--summary-only"],
        "",
    );
    assert_eq!(out.code, 0);
    let summary: Value = serde_json::from_str(out.stdout.trim()).unwrap();
    assert_eq!(summary["summary"]["passed"], 200);
}
