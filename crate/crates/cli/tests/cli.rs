use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_assocform"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let out = run(args);
    let v = serde_json::from_slice(&out.stdout).expect("json on stdout");
    (out.status.code().unwrap(), v)
}

#[test]
fn assoc_diagonal_quartic() {
    let out = run(&["assoc", "--d", "4", "x^4 + y^4"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("1/24*y1^2*y2^2"));
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["flags"]["hsop"], true);
    assert_eq!(v["flags"]["cat_nonzero"], true);
    assert_eq!(v["operation"], "assoc");
    assert!(v["version"].as_str().unwrap().starts_with("assocform/"));
}

#[test]
fn schema_has_fixed_top_level_keys() {
    for args in [
        &["assoc", "--d", "5", "x^5 + x*y^4 + y^5"][..],
        &["cat", "y1^4 + y2^4"],
        &["nabla", "x^3*y + y^4"],
        &["wprime", "x^4", "y^4"],
    ] {
        let (code, v) = json(args);
        assert_eq!(code, 0, "{args:?}");
        let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
        assert_eq!(keys, ["flags", "input", "operation", "output", "version", "witnesses"]);
        let flags: Vec<&String> = v["flags"].as_object().unwrap().keys().collect();
        assert_eq!(flags, ["cat_nonzero", "hsop", "u_res_member"]);
    }
}

#[test]
fn stability_of_balanced_quartic() {
    let (code, v) = json(&["stability", "--d", "4", "x^2*y^2"]);
    assert_eq!(code, 0);
    assert_eq!(v["output"]["verdict"], "strictly_semistable");
    assert_eq!(v["output"]["polystable"], true);
}

#[test]
fn unstable_pencil_has_frame_witness() {
    let (code, v) = json(&["subspace-stability", "x^3", "x^2*y"]);
    assert_eq!(code, 0);
    assert_eq!(v["output"]["verdict"], "unstable");
    assert_eq!(v["witnesses"]["mu"], -4);
    let (_, h) = json(&["hm-index", "--frame", "0,1,1,0", "x^3", "x^2*y"]);
    assert_eq!(h["output"]["mu"], -4);
}

#[test]
fn b_map_inverts_assoc() {
    let (_, neg) = json(&["cat", "-y1^2*y2^2"]);
    assert_eq!(neg["output"]["catalecticant"], "1/216");
    let (_, a) = json(&["assoc-tuple", "--d", "4", "x^3 + x*y^2", "y^3 - 2*x^2*y"]);
    let f = a["output"]["associated_form"].as_str().unwrap().to_string();
    let (code, b) = json(&["b-map", "--d", "4", &f]);
    assert_eq!(code, 0);
    assert_eq!(b["flags"]["u_res_member"], true);
    let (code, _) = json(&["nabla", "x^4"]);
    assert_eq!(code, 2);
    assert_eq!(b["output"]["dim"], 2);
}

#[test]
fn verify_passes() {
    let out = run(&["verify", "--suite", "equivariance", "--d", "5", "--trials", "100", "--seed", "7"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["output"]["passed"], true);
    assert_eq!(v["output"]["suites"][0]["checks"], 300);
}

#[test]
fn deterministic_output() {
    let args = ["verify", "--suite", "stability", "--d", "6", "--trials", "5", "--seed", "11"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
    let args = ["assoc", "--d", "6", "3*x^6 - x^5*y + 7*y^6"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["assoc", "--d", "4", "x^4 + y^"]).status.code(), Some(1));
    assert_eq!(run(&["assoc", "x^4"]).status.code(), Some(1));
    assert_eq!(run(&["assoc", "--d", "4", "x^3"]).status.code(), Some(1));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(1));
    assert_eq!(run(&["verify", "--suite", "nope"]).status.code(), Some(1));
    let (code, v) = json(&["hilbert", "--d", "4", "x^2*y", "x*y^2"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["code"], "not_hsop");
    assert_eq!(run(&["assoc", "--d", "4", "x^4"]).status.code(), Some(2));
    assert_eq!(run(&["limit", "--frame", "0,1,1,0", "x^3", "x^2*y"]).status.code(), Some(2));
}

#[test]
fn text_format_lists_dual_variables() {
    let out = run(&["assoc", "--d", "4", "--format", "text", "x^4 + y^4"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().any(|l| l == "output.associated_form: 1/24*y1^2*y2^2"));
}
