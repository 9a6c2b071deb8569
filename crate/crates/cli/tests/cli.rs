use hodgev_cli::{run, Outcome, EXIT_INPUT, EXIT_OK, EXIT_VERIFICATION};
use serde_json::Value;

fn hodgev(args: &[&str]) -> Outcome {
    run(std::iter::once("hodgev").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let out = hodgev(&all);
    assert!(out.stderr.is_empty(), "{}", out.stderr);
    (out.code, serde_json::from_str(&out.stdout).unwrap())
}

#[test]
fn cusp_invariants() {
    let (code, v) = json(&["invariants", "-f", "x^2+y^3"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["invariants"]["mlct"], "5/6");
    assert_eq!(v["invariants"]["lct"], "5/6");
    assert_eq!(v["invariants"]["mu"], 2);
    assert_eq!(v["invariants"]["hodge_floor"], 0);
    assert_eq!(v["input"]["variables"], serde_json::json!(["x", "y"]));
    assert_eq!(v["version"], env!("CARGO_PKG_VERSION"));
    assert!(v["verifications"].as_array().unwrap().is_empty());
}

#[test]
fn theorem1_on_fermat_cubic() {
    let (code, v) = json(&["verify", "theorem1", "-f", "x^3+y^3+z^3", "--p", "2", "--max-degree", "12"]);
    assert_eq!(code, EXIT_OK);
    let check = &v["verifications"][0];
    assert_eq!(check["status"], "pass");
    assert_eq!(check["details"]["e_max"], "4");
    assert_eq!(check["details"]["degrees_checked"], 13);
}

#[test]
fn strict_comparison_fails_with_exit_two() {
    let (code, v) = json(&["verify", "theorem1", "-f", "x^3+y^3+z^3", "--p", "2", "--strict"]);
    assert_eq!(code, EXIT_VERIFICATION);
    assert_eq!(v["verifications"][0]["status"], "fail");
    assert_eq!(v["verifications"][0]["details"]["failing_degrees"][0], "4/3");
}

#[test]
fn vfilt_queries() {
    let (_, v) = json(&["vfilt", "member", "-f", "x^3+y^3+z^3", "-g", "x*(y^3+z^3)", "--alpha", "3"]);
    assert_eq!(v["result"]["member"], false);
    let (_, v) = json(&["vfilt", "order", "-f", "x^2+y^2+z^2", "-g", "x"]);
    assert_eq!(v["result"]["order"], "5/2");
    let (_, v) = json(&["vfilt", "jumping", "-f", "x^2+y^3", "--ceiling", "2"]);
    let jumps: Vec<&str> = v["result"]["jumps"].as_array().unwrap().iter().map(|j| j["alpha"].as_str().unwrap()).collect();
    assert_eq!(jumps, ["5/6", "7/6", "11/6"]);
    let (_, v) = json(&["vfilt", "level", "-f", "x^2+y^2+z^2", "--alpha", "5/2"]);
    assert_eq!(v["result"]["groebner_basis"], serde_json::json!(["z", "y", "x"]));
    assert_eq!(v["result"]["codimension"], 1);
}

#[test]
fn multiplier_and_slices() {
    let (_, v) = json(&["multiplier", "-f", "x^2+y^3", "--alpha", "5/6"]);
    assert_eq!(v["result"]["codimension"], 1);
    assert_eq!(v["result"]["jump"], true);
    let out = hodgev(&["multiplier", "-f", "x^2+y^3", "--alpha", "3/2"]);
    assert_eq!(out.code, EXIT_INPUT);
    assert!(out.stderr.contains("0 < alpha < 1"));
    let (_, v) = json(&["hodge", "slice", "-f", "x^3+y^3+z^3", "--p", "2", "--degree", "4"]);
    assert!(v["result"]["basis"].as_array().unwrap().len() > 0);
    assert_eq!(v["result"]["degree"], "4/3");
}

#[test]
fn remark_ii_and_oracles() {
    let (code, v) = json(&["verify", "remark-ii"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["verifications"][0]["details"]["second_derivative"], "(12*x^4 - 6*x*y^3 - 6*x*z^3)/f^3");
    let (_, v) = json(&["oracle", "spectrum", "--exponents", "2,3"]);
    assert_eq!(v["result"]["spectrum"][0]["alpha"], "5/6");
    let (_, v) = json(&["oracle", "member", "--exponents", "3,3,3", "--monomial", "4,0,0", "--alpha", "3"]);
    assert_eq!(v["result"]["member"], true);
    let (code, _) = json(&["verify", "oracle", "-f", "x^2+y^3", "--max-degree", "6"]);
    assert_eq!(code, EXIT_OK);
}

#[test]
fn input_errors_exit_one() {
    for args in [
        vec!["invariants", "-f", "x^^2"],
        vec!["invariants", "-f", "x^2*y"],
        vec!["invariants", "-f", "x+y^2"],
        vec!["invariants", "-f", "x^2+y^3", "--weights", "1/2"],
        vec!["invariants", "--bogus"],
        vec!["verify", "eq242", "-f", "x^2+y^3", "--p", "0"],
        vec!["vfilt", "member", "-f", "x^2+y^3", "-g", "z", "--alpha", "1"],
        vec!["vfilt", "order", "-f", "x^2+y^3", "-g", "0"],
        vec!["oracle", "spectrum", "--exponents", "1,3"],
    ] {
        let out = hodgev(&args);
        assert_eq!(out.code, EXIT_INPUT, "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
    assert!(hodgev(&["invariants", "-f", "x^3+x^2*y"]).stderr.contains("not isolated"));
}

#[test]
fn explicit_variables_and_weights() {
    let (code, v) = json(&["invariants", "-f", "y^3+x^2", "--vars", "x,y", "--weights", "1/2,1/3"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["input"]["weights_inferred"], false);
    assert_eq!(v["invariants"]["spectrum"][1]["alpha"], "7/6");
}

#[test]
fn text_format() {
    let out = hodgev(&["verify", "dims", "-f", "x^2+y^2+z^2"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.contains("mlct: 3/2"));
    assert!(out.stdout.contains("[PASS] dims"));
}

#[test]
fn verify_all_on_quadric() {
    let (code, v) = json(&["verify", "all", "-f", "x^2+y^2+z^2"]);
    assert_eq!(code, EXIT_OK);
    let names: Vec<&str> = v["verifications"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
    for expected in ["mlct_routes", "theorem1 p=2", "eq242 p=1", "remark_i p=3", "oracle"] {
        assert!(names.contains(&expected), "{expected} missing from {names:?}");
    }
}
