use serde_json::Value;

use divlab_core::cli::{run, Outcome, EXIT_HOLDS, EXIT_UNKNOWN, EXIT_USAGE, EXIT_VIOLATED};

fn divlab(args: &[&str]) -> Outcome {
    run(std::iter::once("divlab").chain(args.iter().copied()))
}

fn json(out: &Outcome) -> Value {
    serde_json::from_str(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", out.stdout))
}

fn assert_verdict_fields(v: &Value) {
    for key in ["verdict", "witness", "quotients", "case"] {
        assert!(v.get(key).is_some(), "missing {key} in {v}");
    }
}

#[test]
fn witnesses_reproduce() {
    for name in divlab_core::witness::NAMES {
        let n = if matches!(name, "antimatter" | "claim-fuzz" | "prime-like-cases") { "300" } else { "20" };
        let out = divlab(&["witness", name, "--n", n, "--json"]);
        assert_eq!(out.code, EXIT_HOLDS, "{name}: {}", out.stdout);
        assert_eq!(json(&out)["verdict"], "Reproduced");
    }
}

#[test]
fn witness_text_output_names_the_verdict() {
    let out = divlab(&["witness", "x-not-primal"]);
    assert_eq!(out.code, EXIT_HOLDS);
    assert!(out.stdout.contains("Reproduced"), "{}", out.stdout);
}

#[test]
fn unknown_witness_is_a_usage_error() {
    let out = divlab(&["witness", "no-such-thing"]);
    assert_eq!(out.code, EXIT_USAGE);
    assert!(out.stderr.contains("mcd-infinite"));
}

#[test]
fn family_size_is_validated() {
    assert_eq!(divlab(&["witness", "mcd-infinite", "--n", "0"]).code, EXIT_USAGE);
}

#[test]
fn gauss_over_z5_is_violated() {
    let out = divlab(&["gauss", "--domain", "z5", "2,1+1i5", "2,1-1i5"]);
    assert_eq!(out.code, EXIT_VIOLATED);
    let v = json(&out);
    assert_verdict_fields(&v);
    assert_eq!(v["verdict"], "product-not-primitive");
    assert_eq!(v["product"], serde_json::json!(["4", "4", "6"]));
}

#[test]
fn gauss_over_z_holds() {
    let out = divlab(&["gauss", "-d", "z", "2,3", "5,7"]);
    assert_eq!(out.code, EXIT_HOLDS, "{}", out.stdout);
}

#[test]
fn aq_violation_in_z5() {
    let out = divlab(&["aq", "--domain", "z5", "2", "1+1i5", "1-1i5"]);
    assert_eq!(out.code, EXIT_VIOLATED);
    assert_eq!(json(&out)["verdict"], "violation");
}

#[test]
fn prime_like_in_dk_reports_case_and_quotients() {
    let out = divlab(&["prime-like", "--domain", "dk", "6", "2*x + 4", "3*x + 3"]);
    assert_eq!(out.code, EXIT_HOLDS, "{}", out.stdout);
    let v = json(&out);
    assert_verdict_fields(&v);
    assert_eq!(v["verdict"], "witness");
    assert_eq!(v["case"], "Case2_1Constant");
    assert_eq!(v["quotients"].as_array().map(Vec::len), Some(2));
}

#[test]
fn prime_like_fails_for_two_in_z5() {
    let out = divlab(&["prime-like", "--domain", "z5", "2", "1+1i5", "1-1i5"]);
    assert_eq!(out.code, EXIT_VIOLATED);
    assert_eq!(json(&out)["verdict"], "no-witness");
}

#[test]
fn primal_in_z() {
    let out = divlab(&["primal", "--domain", "z", "12", "8", "9"]);
    assert_eq!(out.code, EXIT_HOLDS, "{}", out.stdout);
    let v = json(&out);
    assert_eq!(v["witness"], serde_json::json!(["4", "3", "1"]));
}

#[test]
fn primal_precondition_is_a_usage_error() {
    let out = divlab(&["primal", "--domain", "z", "7", "2", "3"]);
    assert_eq!(out.code, EXIT_USAGE);
}

#[test]
fn primitive_reports_common_divisor() {
    let out = divlab(&["primitive", "--domain", "z", "6", "10"]);
    assert_eq!(out.code, EXIT_VIOLATED);
    assert_eq!(json(&out)["witness"], "2");
    assert_eq!(divlab(&["primitive", "--domain", "z", "6", "35"]).code, EXIT_HOLDS);
}

#[test]
fn integer_answers_are_decided() {
    for args in [["primitive", "-d", "z", "4", "6"], ["primitive", "-d", "z", "4", "9"]] {
        assert_ne!(divlab(&args).code, EXIT_UNKNOWN);
    }
}

#[test]
fn parse_canonicalizes() {
    let out = divlab(&["parse", "--domain", "r", "Y*X + X*Y*U"]);
    assert_eq!(out.code, EXIT_HOLDS, "{}", out.stderr);
    let again = divlab(&["parse", "--domain", "r", out.stdout.trim()]);
    assert_eq!(again.stdout, out.stdout);
}

#[test]
fn parse_rejects_elements_outside_r() {
    let out = divlab(&["parse", "--domain", "r", "T[1]"]);
    assert_eq!(out.code, EXIT_USAGE);
}

#[test]
fn bad_syntax_and_flags_are_usage_errors() {
    assert_eq!(divlab(&["parse", "--domain", "z", "1+"]).code, EXIT_USAGE);
    assert_eq!(divlab(&["parse", "--domain", "q", "1"]).code, EXIT_USAGE);
    assert_eq!(divlab(&["frobnicate"]).code, EXIT_USAGE);
    assert_eq!(divlab(&[]).code, EXIT_USAGE);
}

#[test]
fn fuzz_is_deterministic() {
    let a = divlab(&["fuzz", "claim", "--trials", "200", "--seed", "3"]);
    let b = divlab(&["fuzz", "claim", "--trials", "200", "--seed", "3"]);
    assert_eq!(a.code, EXIT_HOLDS);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(json(&a)["failed"], 0);
}

#[test]
fn help_exits_cleanly() {
    let out = divlab(&["--help"]);
    assert_eq!(out.code, EXIT_HOLDS);
    assert!(out.stdout.contains("witness"));
}
