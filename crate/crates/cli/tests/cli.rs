use std::process::Command;

use morita_cli::{run, Outcome, EXIT_DOMAIN, EXIT_OK, EXIT_USAGE};
use serde_json::Value;

fn morita(args: &str) -> (Outcome, Value) {
    let argv = std::iter::once("morita").chain(args.split_whitespace());
    let out = run(argv);
    let doc = serde_json::from_str(&out.stdout).unwrap_or_else(|e| panic!("{args}: stdout is not JSON ({e}): {}", out.stdout));
    (out, doc)
}

fn strings(v: &Value) -> Vec<&str> {
    v.as_array().unwrap().iter().map(|x| x.as_str().unwrap()).collect()
}

#[test]
fn classify_reports_labels_and_witnesses() {
    let (out, doc) = morita("classify poly:5,-5,1,+");
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(strings(&doc["labels"]), ["1", "5"]);
    assert_eq!(doc["theta"]["discriminant"], "5");
    assert_eq!(doc["divisors"].as_array().unwrap().len(), 2);
    let classes = doc["classes"].as_array().unwrap();
    assert!(classes.iter().all(|c| c["verified"] == true));
    assert_eq!(classes[1]["witness"], serde_json::json!([["5", "-1"], ["1", "0"]]));
    assert!(out.stderr.contains("labels 1, 5"));
}

#[test]
fn classify_accepts_surd_specs() {
    let (_, a) = morita("classify surd:(5+sqrt(5))/10");
    let (_, b) = morita("classify poly:5,-5,1,+");
    assert_eq!(a["labels"], b["labels"]);
    assert_eq!(a["theta"]["spec"], b["theta"]["spec"]);
}

#[test]
fn classify_nonquadratic() {
    let (out, doc) = morita("classify nonquadratic");
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(strings(&doc["labels"]), ["1"]);
    assert_eq!(doc["note"], "Theorem: non-quadratic case");
}

#[test]
fn solve_form_reports_the_obstruction() {
    let (out, doc) = morita("solve-form 5 -5 -2 --rhs 1");
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(doc["result"]["solvable"], false);
    assert_eq!(doc["result"]["certificate"]["kind"], "modular");
    assert_eq!(doc["result"]["certificate"]["modulus"], "5");
    assert_eq!(strings(&doc["result"]["certificate"]["residues"]), ["0", "2", "3"]);
}

#[test]
fn solve_form_with_oracle() {
    let (out, doc) = morita("solve-form 1 0 -2 --rhs -1 --oracle-bound 10");
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(doc["result"]["solvable"], true);
    assert_eq!(doc["oracle"]["agrees"], true);
    assert_eq!(doc["oracle"]["solution"], serde_json::json!(["-1", "-1"]));

    // the smallest solution lies beyond the scan, so the scan alone disagrees
    let (out, doc) = morita("solve-form -12 -7 3 --rhs -1 --oracle-bound 100");
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(doc["result"]["solvable"], true);
    assert_eq!((&doc["result"]["x"], &doc["result"]["y"]), (&Value::from("-27316"), &Value::from("31379")));
    assert_eq!(doc["oracle"]["agrees"], false);
    assert_eq!(doc["oracle"]["consistent"], true);
}

#[test]
fn loctriv_lists_certificates() {
    let (out, doc) = morita("loctriv poly:5,-5,1,+");
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(strings(&doc["labels"]), ["1", "5"]);
    let certs = doc["certificates"].as_array().unwrap();
    assert!(certs.iter().all(|c| c["label"] == c["corner_label"]));
    assert!(certs.iter().any(|c| c["variant"] == "S1" && c["K"] == "5" && c["c"] == "1" && c["d"] == "0"));

    let (_, doc) = morita("loctriv poly:1,0,-3,+");
    assert_eq!(doc["has_locally_trivial_inclusion"], false);
    assert!(doc["certificates"].as_array().unwrap().is_empty());
}

#[test]
fn splitting_defaults_to_the_leading_coefficient() {
    let (out, doc) = morita("splitting poly:5,5,-2,+");
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(doc["prime"], "5");
    assert_eq!(doc["splitting"]["type"], "ramified");
    assert_eq!(doc["corollary"]["consistent"], true);

    let (_, doc) = morita("splitting poly:5,-5,1,+ --prime 11");
    assert_eq!(doc["splitting"]["type"], "split");
    assert_eq!(doc["corollary"], Value::Null);

    let (out, doc) = morita("splitting poly:6,-6,1,+");
    assert_eq!(out.code, EXIT_DOMAIN);
    assert_eq!(doc["error"]["kind"], "leading_coefficient_not_prime");
}

#[test]
fn index_plan_and_ledger() {
    let (out, doc) = morita("index poly:5,-5,1,+ --trace 0 1");
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(doc["plan"]["n"], 3);
    assert_eq!(doc["plan"]["parts"][2], serde_json::json!({ "u": "-2", "v": "3" }));
    assert_eq!(doc["ledger"], "4");

    let (out, doc) = morita("index poly:5,-5,1,+ --trace 1 -1");
    assert_eq!(out.code, EXIT_DOMAIN);
    assert_eq!(doc["error"]["kind"], "trace_out_of_range");
}

#[test]
fn cf_terms() {
    let (out, doc) = morita("cf poly:1,0,-3,+ --terms 5");
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(strings(&doc["preperiod"]), ["1"]);
    assert_eq!(strings(&doc["period"]), ["1", "2"]);
    assert_eq!(strings(&doc["terms"]), ["1", "1", "2", "1", "2"]);
}

#[test]
fn corpus_passes_and_is_sorted() {
    let (out, doc) = morita("corpus");
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    assert_eq!(doc["failed"], 0);
    let ids: Vec<&str> = doc["examples"].as_array().unwrap().iter().map(|e| e["id"].as_str().unwrap()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
    assert!(ids.len() >= 10);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        "classify poly:5,-5",
        "classify poly:1,0,-4,+",
        "frobnicate",
        "classify poly:5,-5,1,+ --bogus",
        "solve-form 1 0 -3 --rhs 2",
        "loctriv nonquadratic",
        "index poly:5,-5,1,+ --trace 1",
    ] {
        let (out, doc) = morita(args);
        assert_eq!(out.code, EXIT_USAGE, "{args}");
        assert_eq!(doc["ok"], false);
        assert_eq!(doc["error"]["kind"], "usage");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn domain_errors_exit_1() {
    let (out, doc) = morita("solve-form 1 1 1 --rhs 1");
    assert_eq!(out.code, EXIT_DOMAIN);
    assert_eq!(doc["error"]["kind"], "not_indefinite");
    let (out, doc) = morita("solve-form 1 0 -4 --rhs 1");
    assert_eq!(out.code, EXIT_DOMAIN);
    assert_eq!(doc["error"]["kind"], "square_discriminant");
}

#[test]
fn output_is_byte_identical_across_runs() {
    for args in ["classify poly:6,-6,1,+", "loctriv poly:5,-5,1,+", "corpus", "cf poly:7,3,-11,-"] {
        let a = morita(args).0;
        let b = morita(args).0;
        assert_eq!(a, b, "{args}");
    }
}

#[test]
fn binary_writes_json_and_exit_code() {
    let out = Command::new(env!("CARGO_BIN_EXE_morita")).args(["classify", "poly:6,-6,1,+"]).output().unwrap();
    assert!(out.status.success());
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(strings(&doc["labels"]), ["1", "2", "3", "6"]);

    let out = Command::new(env!("CARGO_BIN_EXE_morita")).args(["classify", "nonsense"]).output().unwrap();
    assert_eq!(out.status.code(), Some(EXIT_USAGE));
}
