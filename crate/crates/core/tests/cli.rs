use std::process::Command;

use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_splitheight"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let (code, out, err) = run(&full);
    assert!(err.is_empty(), "{err}");
    (code, serde_json::from_str(&out).unwrap())
}

fn lower(v: &Value) -> f64 {
    v["enclosure"][0].as_str().unwrap().parse().unwrap()
}

#[test]
fn height_of_the_octic() {
    let (code, v) = json(&["height", "--field", "Q(sqrt(-2))", "--poly", "x^8+2x^6-3x^4-4x^2+4"]);
    assert_eq!(code, 0);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["command"], "height");
    assert!((lower(&v["results"]["height"]) - 4.0).abs() < 1e-30);
}

#[test]
fn mahler_of_lehmer() {
    let (code, v) = json(&["mahler", "--poly", "x^10+x^9-x^7-x^6-x^5-x^4-x^3+x+1"]);
    assert_eq!(code, 0);
    let text = v["results"].to_string();
    assert!(text.contains("1.17628081825"), "{text}");
}

#[test]
fn verify_all_holds() {
    let (code, v) = json(&["verify", "--field", "Q(sqrt(-1))", "--poly", "(x-1)^3*(x-sqrt(-1))*(2x+1+sqrt(-1))", "--all"]);
    assert_eq!(code, 0);
    let verdicts = v["verdicts"].as_array().unwrap();
    assert!(verdicts.len() >= 5);
    assert!(verdicts.iter().all(|e| e["verdict"] == "holds"));
}

#[test]
fn verify_rejects_unsplit_input() {
    let (code, _, err) = run(&["verify", "--field", "Q(sqrt(-1))", "--poly", "x^2-2", "--check", "bound2"]);
    assert_eq!(code, 3);
    assert!(!err.is_empty());
}

#[test]
fn ck_commands() {
    let (code, v) = json(&["ck-certify", "--field", "Q(sqrt(-2))", "--base", "x^4+x^2-2", "--jmax", "2"]);
    assert_eq!(code, 0);
    let text = v["results"].to_string();
    assert!(text.contains("3.0313854"), "{text}");
    let (code, v) = json(&["ck-interval", "--field", "Q(sqrt(-2))", "--mk", "2"]);
    assert_eq!(code, 0);
    assert!((v["results"]["upper"].as_f64().unwrap() - 4.0 / std::f64::consts::LN_2).abs() < 1e-9);
}

#[test]
fn search_commands() {
    let (code, v) = json(&["mk", "--field", "Q(sqrt(-1))", "--cap", "3"]);
    assert_eq!(code, 0);
    assert!((lower(&v["results"]["value"]) - 2.0).abs() < 1e-6);
    let (code, v) = json(&["lattice", "--field", "Q(sqrt(-1))", "--radius", "6"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["min_norm"], "4");
    let (code, v) = json(&["pell", "--d", "7"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["product"], "1");
    let (code, v) = json(&["t2", "--k", "1", "--cap", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["w"], 2);
}

#[test]
fn text_output_and_errors() {
    let (code, out, _) = run(&["pell", "--d", "2"]);
    assert_eq!(code, 0);
    assert!(out.contains("product"));
    let (code, _, err) = run(&["height", "--poly", "x^2+*1"]);
    assert_eq!(code, 3);
    assert!(err.contains("position"), "{err}");
    let (code, _, _) = run(&["pell", "--d", "4"]);
    assert_eq!(code, 3);
    let (code, _, _) = run(&["--precision", "8", "height", "--poly", "x"]);
    assert_eq!(code, 3);
}
