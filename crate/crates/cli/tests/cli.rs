use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::{json, Value};

use albertkit::json::{albert_to_json, tensor_to_json, vpoint_to_json};
use albertkit::pvs::w_point;
use albertkit::smap::jordan_tensor;
use albertkit::AlbertElem;

fn albertkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_albertkit")).args(args).output().expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn write_tmp(name: &str, v: &Value) -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, serde_json::to_string(v).unwrap()).unwrap();
    path
}

fn sample_elem(seed: i64) -> Value {
    let c = |k: i64| ((seed * 7 + k * 3) % 5 - 2).to_string();
    let oct = |k: i64| (0..8).map(|j| json!(c(k + j))).collect::<Vec<_>>();
    json!({ "diag": [c(1), c(2), "1"], "oct": [oct(3), oct(11), oct(19)] })
}

#[test]
fn delta_of_base_point_file() {
    let path = write_tmp("w.json", &vpoint_to_json(&w_point()));
    let out = albertkit(&["delta", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), r#"{"delta":"1"}"#);
}

#[test]
fn scalar_commands() {
    let out = albertkit(&["det", "@e"]);
    assert_eq!(stdout_json(&out), json!({"det": "1"}));
    let out = albertkit(&["dform", "@e", "@e", "@e"]);
    assert_eq!(stdout_json(&out), json!({"d": "1"}));
    let out = albertkit(&["cubic", "@w"]);
    assert_eq!(stdout_json(&out), json!({"cubic": ["0", "1", "-1", "0"]}));
    let out = albertkit(&["tform", "@e", "@e", "@e", "@e"]);
    assert_eq!(stdout_json(&out), json!({"t": "3"}));
    let out = albertkit(&["qa", "@e", "@e", "@e"]);
    assert_eq!(stdout_json(&out), json!({"q": "3"}));
}

#[test]
fn smap_at_base_point_is_jordan_product() {
    let (x, y) = (sample_elem(1), sample_elem(2));
    let (xs, ys) = (x.to_string(), y.to_string());
    let s = stdout_json(&albertkit(&["smap", "@w", &xs, &ys]));
    let j = stdout_json(&albertkit(&["jordan", &xs, &ys]));
    assert_eq!(s["s"], j["product"]);
}

#[test]
fn structure_at_base_point() {
    let out = albertkit(&["structure", "@w"]);
    assert!(out.status.success());
    assert_eq!(stdout_json(&out), tensor_to_json(&jordan_tensor(), vpoint_to_json(&w_point())));
}

#[test]
fn isotope_methods_agree_byte_for_byte() {
    let a = json!({
        "diag": ["1", "2", "-1"],
        "oct": [["1", "0", "0", "0", "0", "0", "0", "0"], ["0", "0", "0", "0", "0", "0", "0", "0"], ["0", "0", "1", "0", "0", "-1", "0", "0"]],
    });
    let a_path = write_tmp("iso_a.json", &a);
    let x_path = write_tmp("iso_x.json", &sample_elem(3));
    let y_path = write_tmp("iso_y.json", &sample_elem(4));
    let args = |m: &'static str| {
        albertkit(&[
            "isotope-mul",
            a_path.to_str().unwrap(),
            x_path.to_str().unwrap(),
            y_path.to_str().unwrap(),
            "--method",
            m,
        ])
    };
    let (t, s) = (args("tform"), args("springer"));
    assert!(t.status.success() && s.status.success());
    assert_eq!(t.stdout, s.stdout);
}

#[test]
fn verify_all_passes() {
    let out = albertkit(&["verify", "--suite", "all", "--seed", "7", "--trials", "100"]);
    let report = stdout_json(&out);
    assert!(out.status.success(), "{report}");
    assert_eq!(report["ok"], json!(true));
    assert_eq!(report["suites"].as_array().unwrap().len(), albertkit::verify::SUITES.len());
}

#[test]
fn error_objects() {
    let degenerate = vpoint_to_json(&albertkit::VPoint::new(AlbertElem::identity(), AlbertElem::zero())).to_string();
    let cases: Vec<(Vec<String>, &str)> = vec![
        (vec!["smap".into(), degenerate.clone(), "@e".into(), "@e".into(), "--part".into(), "circ".into()], "NotSemistable"),
        (vec!["structure".into(), degenerate, "--isotope".into()], "NotSemistable"),
        (
            vec!["isotope-mul".into(), albert_to_json(&AlbertElem::diag_i(0, 1, 1)).to_string(), "@e".into(), "@e".into()],
            "SingularPoint",
        ),
        (vec!["det".into(), r#"{"diag": ["1/0", "0", "0"]}"#.into()], "Parse"),
        (vec!["det".into(), "/nonexistent/x.json".into()], "Io"),
        (vec!["verify".into(), "--suite".into(), "nope".into()], "Parse"),
        (vec!["frobnicate".into()], "Usage"),
    ];
    for (args, kind) in cases {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let out = albertkit(&args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        let v = stdout_json(&out);
        assert_eq!(v["error"], json!(kind), "{args:?}: {v}");
        assert!(v["detail"].is_string());
    }
}

#[test]
fn output_is_deterministic_across_thread_counts() {
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_albertkit"))
            .args(["structure", &sample_elem(5).to_string(), "--element"])
            .env("ALBERTKIT_THREADS", threads)
            .output()
            .unwrap()
    };
    let (one, four) = (run("1"), run("4"));
    assert!(one.status.success());
    assert_eq!(one.stdout, four.stdout);
    assert_eq!(run("0").status.code(), Some(1));
}
