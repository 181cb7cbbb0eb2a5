use std::process::{Command, Output};

use serde_json::{json, Value};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fockcrystal"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_env(args: &[&str], key: &str, val: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fockcrystal"))
        .args(args)
        .env(key, val)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn ok(args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stdout)
    );
    json(&out)
}

#[test]
fn phi_three_component_example() {
    let v = ok(&["phi", "--e", "4", "--charge", "5,-1,0", "--mp", "1|3.2|-"]);
    assert_eq!(v["image"]["mp"], "2.1|3|-");
    assert_eq!(v["image"]["charge"], json!([0, 1, -5]));
    assert_eq!(v["image"]["components"], json!([[2, 1], [3], []]));
}

#[test]
fn phi_uglov_reports_word() {
    let v = ok(&[
        "phi-uglov",
        "--e",
        "4",
        "--charge",
        "5,-1,0",
        "--mp",
        "1|3.2|-",
    ]);
    assert_eq!(v["image"]["mp"], "2.1|3|-");
    assert_eq!(v["word"].as_str().unwrap().split(' ').count(), 6);
    let out = run(&["phi-uglov", "--e", "2", "--charge", "0", "--mp", "1^2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn beta_four_component_example() {
    let v = ok(&[
        "beta",
        "--e",
        "3",
        "--charge",
        "-3,2,1,1",
        "--mp",
        "-|3.2^2|-|3",
    ]);
    let c = &v["coordinates"];
    assert_eq!(c["e_side"]["mp"], "-|-|-|3");
    assert_eq!(c["e_side"]["charge"], json!([-1, 0, 0, 2]));
    assert_eq!(c["sigma"], "2");
    assert_eq!(c["l_side"]["mp"], "2^2|2.1|-");
    assert_eq!(c["l_side"]["charge"], json!([-1, -1, 1]));
}

#[test]
fn recompose_inverts_beta() {
    let v = ok(&[
        "recompose",
        "--e",
        "3",
        "--e-side",
        "-|-|-|3",
        "--e-charge",
        "-1,0,0,2",
        "--sigma",
        "2",
        "--l-side",
        "2^2|2.1|-",
        "--l-charge",
        "-1,-1,1",
    ]);
    assert_eq!(v["image"]["mp"], "-|3.2^2|-|3");
    assert_eq!(v["image"]["charge"], json!([-3, 2, 1, 1]));
    let out = run(&[
        "recompose",
        "--e",
        "3",
        "--e-side",
        "-|-|-|3",
        "--e-charge",
        "-1,0,0,2",
        "--sigma",
        "2",
        "--l-side",
        "2^2|2.1|-",
        "--l-charge",
        "-1,-1,2",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn phi_of_empty_level_one() {
    let v = ok(&["phi", "--e", "2", "--charge", "0", "--mp", "-"]);
    assert_eq!(v["image"]["mp"], "-");
}

#[test]
fn phi_d_and_mullineux() {
    let v = ok(&[
        "phi-d", "--e", "4", "--d", "2", "--charge", "5,-1,0", "--mp", "1|3.2|-",
    ]);
    assert_eq!(v["image"]["mp"], "2.1|3|-");
    assert_eq!(v["mode"], "consistent");
    let v = ok(&["mullineux", "--e", "3", "--partition", "2.1"]);
    assert_eq!(v["image"], "3");
    let out = run(&["mullineux", "--e", "2", "--partition", "1^2"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["error"]["kind"], "input");
}

#[test]
fn crystal_graph_exports() {
    let v = ok(&[
        "crystal-graph",
        "--e",
        "2",
        "--charge",
        "0",
        "--n-max",
        "2",
        "--mp",
        "-",
    ]);
    assert_eq!(v["vertices"].as_array().unwrap().len(), 3);
    assert_eq!(v["edges"].as_array().unwrap().len(), 2);
    assert_eq!(v["edges"][0]["from"], "- @ 0");

    let v = ok(&[
        "crystal-graph",
        "--e",
        "2",
        "--charge",
        "0",
        "--n-max",
        "3",
        "--mp",
        "-",
    ]);
    let names: Vec<&str> = v["vertices"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_str().unwrap())
        .collect();
    for want in ["- @ 0", "1 @ 0", "2 @ 0", "2.1 @ 0", "3 @ 0"] {
        assert!(names.contains(&want), "{names:?}");
    }
    assert_eq!(names.len(), 5);

    let out = run(&[
        "crystal-graph",
        "--e",
        "2",
        "--charge",
        "0",
        "--n-max",
        "2",
        "--mp",
        "-",
        "--dot",
    ]);
    let dot = String::from_utf8(out.stdout).unwrap();
    assert!(dot.starts_with("digraph crystal {\n"));
    assert_eq!(dot.matches("->").count(), 2);
    assert!(dot.contains("[label=\"0\"]"));

    let v = ok(&[
        "crystal-graph",
        "--e",
        "3",
        "--charge",
        "0,1",
        "--n-max",
        "0",
    ]);
    assert_eq!(v["vertices"].as_array().unwrap().len(), 1);
    assert!(v["edges"].as_array().unwrap().is_empty());
}

#[test]
fn output_is_deterministic() {
    let args = [
        "crystal-graph",
        "--e",
        "3",
        "--charge",
        "0,1",
        "--n-max",
        "4",
    ];
    let a = run(&args);
    let b = run_env(&args, "FOCKCRYSTAL_THREADS", "1");
    assert_eq!(a.stdout, b.stdout);
    let args = ["finite-dims", "--e", "2", "--charge", "0,1", "--n", "4"];
    assert_eq!(
        run(&args).stdout,
        run_env(&args, "FOCKCRYSTAL_THREADS", "3").stdout
    );
}

#[test]
fn finite_dims_and_ringel() {
    let v = ok(&["finite-dims", "--e", "3", "--charge", "-1,3", "--n", "6"]);
    let labels = v["labels"].as_array().unwrap();
    assert!(labels.iter().any(|x| x["mp"] == "3^2|-"));
    assert_eq!(v["count"].as_u64().unwrap() as usize, labels.len());
    let v = ok(&["finite-dims", "--e", "3", "--charge", "0,1", "--n", "0"]);
    assert_eq!(v["count"], 1);

    let v = ok(&["ringel", "--e", "3", "--charge", "-1,3", "--mp", "3^2|-"]);
    assert_eq!(v["image"]["mp"], "3^2|-");
    assert_eq!(v["image"]["charge"], json!([-3, 1]));
    assert_eq!(v["finite_dimensional"], true);
}

#[test]
fn wallcross_reports() {
    let v = ok(&["wallcross", "--e", "2", "--charge", "0,8", "--mp", "2.1|-"]);
    assert_eq!(v["kappa"], "1/2");
    assert_eq!(v["kappa_opposite"], "-1/2");
    assert_eq!(v["walls"]["type_a"], true);
    assert!(v["walls"]["type_b_witnesses"]
        .as_array()
        .unwrap()
        .is_empty());
    assert!(v["identity_holds"].is_null());
    assert!(v["psi_phi"].is_null());
    assert_eq!(v["image"]["mp"], "2.1|-");
    assert_eq!(v["opposite_charge"], json!([12, 8]));
    let v = ok(&["wallcross", "--e", "2", "--charge", "0,8", "--mp", "1|1"]);
    assert_eq!(v["identity_holds"], true);
    let out = run(&["wallcross", "--e", "2", "--charge", "0,1", "--mp", "2.1|-"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn kleshchev_lift() {
    let v = ok(&[
        "kleshchev-charge",
        "--e",
        "3",
        "--charge",
        "0,0",
        "--n",
        "4",
    ]);
    assert_eq!(v["lift"], json!([0, 6]));
    let v = ok(&[
        "kleshchev-charge",
        "--e",
        "3",
        "--charge",
        "0,5",
        "--n",
        "1",
    ]);
    assert_eq!(v["lift"], json!([0, 5]));
}

#[test]
fn verify_subset() {
    let v = ok(&["verify", "--only", "1,2a,2b,3,4"]);
    let statuses: Vec<&str> = v["criteria"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["status"].as_str().unwrap())
        .collect();
    assert_eq!(
        statuses,
        ["pass", "pass", "known-discrepancy", "pass", "pass"]
    );
    assert_eq!(run(&["verify", "--only", "99"]).status.code(), Some(2));
}

#[test]
fn input_errors_exit_two() {
    for args in [
        &["phi", "--e", "3", "--charge", "0,1", "--mp", "2|x"][..],
        &["phi", "--e", "3", "--charge", "0", "--mp", "1|1"],
        &["phi", "--bogus"],
        &["nonsense"],
        &["beta", "--e", "1", "--charge", "0", "--mp", "1"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert_eq!(json(&out)["error"]["kind"], "input");
    }
    let out = run_env(
        &["phi", "--e", "2", "--charge", "0", "--mp", "-"],
        "FOCKCRYSTAL_THREADS",
        "0",
    );
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn schema_documents_every_key() {
    let text = include_str!("../../../docs/schema.json");
    let schema: Value = serde_json::from_str(text).unwrap();
    let defs = &schema["$defs"];
    for (name, args) in [
        (
            "phi",
            &["phi", "--e", "4", "--charge", "5,-1,0", "--mp", "1|3.2|-"][..],
        ),
        (
            "beta",
            &[
                "beta",
                "--e",
                "3",
                "--charge",
                "-3,2,1,1",
                "--mp",
                "-|3.2^2|-|3",
            ],
        ),
        (
            "wallcross",
            &["wallcross", "--e", "2", "--charge", "0,8", "--mp", "1|1"],
        ),
        (
            "finite-dims",
            &["finite-dims", "--e", "2", "--charge", "0,1", "--n", "2"],
        ),
        (
            "crystal-graph",
            &["crystal-graph", "--e", "2", "--charge", "0", "--n-max", "1"],
        ),
    ] {
        let v = ok(args);
        let props = defs[name]["properties"].as_object().unwrap();
        for key in v.as_object().unwrap().keys() {
            assert!(props.contains_key(key), "{name}: {key}");
        }
        assert_eq!(props.len(), v.as_object().unwrap().len(), "{name}");
    }
}
