//! Black-box tests of the command-line binary: output shapes, exit codes,
//! and determinism of reports after stripping the timing block.

use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_alliance-lab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "stdout is not JSON ({e}): {}",
            String::from_utf8_lossy(&out.stdout)
        )
    })
}

fn without_timing(mut v: Value) -> Value {
    v.as_object_mut().expect("report object").remove("timing");
    v
}

#[test]
fn gen_output_feeds_back_as_a_graph_file() {
    let out = run(&["gen", "--family", "P4xC6"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().next(), Some("24"));
    // 24 vertices, |E| = 4*6 + 3*6 = 42 edge lines.
    assert_eq!(text.lines().count(), 1 + 42);

    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(text.as_bytes()).unwrap();
    let arg = format!("@{}", file.path().display());
    let solved = run(&["solve", "gamma-o", "--graph", &arg]);
    assert!(solved.status.success());
    let report = json_of(&solved);
    assert_eq!(report["results"]["value"], 12);
    assert_eq!(report["schema"], "alliance-lab/1");
}

#[test]
fn product_command_matches_gen_expression() {
    let via_product = run(&["product", "--left", "P4", "--right", "C6"]);
    let via_gen = run(&["gen", "--family", "P4xC6"]);
    assert_eq!(via_product.stdout, via_gen.stdout);
}

#[test]
fn verify_exit_codes_separate_verdicts_from_errors() {
    let ok = run(&["verify", "goa", "--graph", "C5", "--set", "0,1,3"]);
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(json_of(&ok)["results"]["verdict"], true);

    let no = run(&["verify", "goa", "--graph", "C5", "--set", "0"]);
    assert_eq!(no.status.code(), Some(1));
    let report = json_of(&no);
    assert_eq!(report["results"]["verdict"], false);
    assert!(report["results"]["witness"]["vertex"].is_number());

    let bad_set = run(&["verify", "goa", "--graph", "C5", "--set", "0,99"]);
    assert_eq!(bad_set.status.code(), Some(2));

    let bad_family = run(&["verify", "goa", "--graph", "Z9", "--set", "0"]);
    assert_eq!(bad_family.status.code(), Some(2));

    let usage = run(&["no-such-command"]);
    assert_eq!(usage.status.code(), Some(2));
}

#[test]
fn partition_and_square_lemma_checks() {
    let both = run(&[
        "verify",
        "partition",
        "--graph",
        "C6",
        "--set",
        "0,2,4",
        "--set2",
        "1,3,5",
        "--mode",
        "both",
    ]);
    assert_eq!(both.status.code(), Some(0));

    let squares = run(&[
        "verify",
        "square-lemma",
        "--left",
        "P3",
        "--right",
        "P3",
        "--set",
        "0,2,4,6,8",
    ]);
    assert_eq!(squares.status.code(), Some(0));
}

#[test]
fn solve_reports_are_deterministic_after_stripping_timing() {
    let first = without_timing(json_of(&run(&["solve", "gamma-o", "--graph", "P4xP4"])));
    let second = without_timing(json_of(&run(&["solve", "gamma-o", "--graph", "P4xP4"])));
    assert_eq!(first, second);

    // Worker count shows up in the echoed inputs but must not change the
    // results block.
    let one = json_of(&run(&["solve", "gamma-o", "--graph", "P4xP4", "--workers", "1"]));
    let four = json_of(&run(&["solve", "gamma-o", "--graph", "P4xP4", "--workers", "4"]));
    assert_eq!(one["results"], four["results"]);
}

#[test]
fn budget_trips_exit_one_with_a_bracket() {
    let out = run(&[
        "solve",
        "gamma-o",
        "--graph",
        "C6xC6",
        "--budget-nodes",
        "500",
        "--strategy",
        "enumeration",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let report = json_of(&out);
    assert_eq!(report["results"]["budget_exhausted"], true);
    assert!(report["results"]["proven_bracket"]["lo"].is_number());
}

#[test]
fn formula_handles_products_without_closed_forms() {
    let known = json_of(&run(&["formula", "--family", "K4xK5"]));
    assert_eq!(known["results"]["bracket"]["lo"], 9);
    assert_eq!(known["results"]["bracket"]["hi"], 10);

    let unknown = run(&["formula", "--family", "S3xP4"]);
    assert_eq!(unknown.status.code(), Some(0));
    assert!(json_of(&unknown)["results"]["bracket"].is_null());
}

#[test]
fn bounds_envelope_reports_parts() {
    let out = run(&["bounds", "--left", "P4", "--right", "P4"]);
    assert_eq!(out.status.code(), Some(0));
    let report = json_of(&out);
    assert_eq!(report["results"]["combined"]["lo"], 8);
    assert_eq!(report["results"]["combined"]["hi"], 8);
    assert!(report["results"]["parts"].as_array().unwrap().len() >= 3);
}

#[test]
fn construct_emits_coordinate_pairs() {
    let out = json_of(&run(&["construct", "grid", "--rows", "4", "--cols", "5"]));
    assert_eq!(out["results"]["cardinality"], 10);
    let vertices = out["results"]["vertices"].as_array().unwrap();
    assert_eq!(vertices.len(), 10);
    assert!(vertices.iter().all(|p| p.as_array().unwrap().len() == 2));

    let is = json_of(&run(&[
        "construct",
        "complement-is",
        "--graph",
        "C6",
        "--set",
        "0,3",
    ]));
    assert_eq!(is["results"]["cardinality"], 4);
}

#[test]
fn spectral_reports_radius_and_bound() {
    let out = json_of(&run(&["spectral", "--graph", "Q3"]));
    let lambda = out["results"]["laplacian_spectral_radius"].as_f64().unwrap();
    assert!((lambda - 6.0).abs() < 1e-6);
    assert_eq!(out["results"]["alliance_lower_bound"], 3);
}

#[test]
fn sweeps_are_reproducible_and_record_violations() {
    let args = [
        "conjecture",
        "sweep",
        "--random",
        "12",
        "--min-n",
        "3",
        "--max-n",
        "5",
        "--seed",
        "11",
    ];
    let first = run(&args);
    assert_eq!(first.status.code(), Some(0));
    let second = run(&args);
    assert_eq!(
        without_timing(json_of(&first)),
        without_timing(json_of(&second))
    );

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("violations.jsonl");
    let flagged = run(&[
        "conjecture",
        "sweep",
        "--families",
        "--max-n",
        "4",
        "--violations",
        path.to_str().unwrap(),
    ]);
    assert_eq!(flagged.status.code(), Some(0));
    let body = std::fs::read_to_string(&path).unwrap();
    assert!(body.is_empty(), "no violations expected, got: {body}");
}

#[test]
fn conjecture_check_single_pair() {
    let out = run(&["conjecture", "check", "--left", "K3", "--right", "C4"]);
    assert_eq!(out.status.code(), Some(0));
    let report = json_of(&out);
    assert_eq!(report["results"]["gamma_o_product"], 6);
    assert_eq!(report["results"]["verdict"], "holds");
}

#[test]
fn out_flag_duplicates_the_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = run(&[
        "solve",
        "gamma",
        "--graph",
        "C6",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let copied = std::fs::read_to_string(&path).unwrap();
    assert_eq!(copied.as_bytes(), out.stdout.as_slice());
}
