use std::process::{Command, Output};

use serde_json::Value;

fn qgg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qgg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut v = args.to_vec();
    v.push("--json");
    let out = qgg(&v);
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn stdout(args: &[&str]) -> String {
    String::from_utf8(qgg(args).stdout).expect("utf-8")
}

#[test]
fn chern_subcommands() {
    assert!(
        stdout(&["chern", "twist", "-r", "3", "-c", "1,2,2", "-k", "1"])
            .starts_with("(3, 4, 12, 8)")
    );
    assert!(stdout(&["chern", "dual", "-r", "2", "-c", "1,1,0"]).starts_with("(2, -1, 1, 0)"));
    assert!(stdout(&[
        "chern",
        "whitney",
        "--sub",
        "1,-1,0,0",
        "--ambient-rank",
        "5"
    ])
    .starts_with("(4, 1, 2, 2)"));
    assert!(stdout(&[
        "chern",
        "whitney",
        "--sub",
        "1,1,0,0",
        "--quotient",
        "3,1,2,2"
    ])
    .starts_with("(4, 2, 4, 4)"));
    let v = json(&[
        "chern", "tensor", "-r", "2", "-c", "1,1,0", "--with", "2,-1,1,0",
    ]);
    assert_eq!(v["result"]["rank"], 4);
}

#[test]
fn chi_subcommand() {
    assert_eq!(
        json(&["chi", "-r", "1", "-c", "2,0,0"])["result"]["chi"],
        serde_json::json!({"num": 14, "den": 1})
    );
    assert_eq!(
        json(&["chi", "-r", "2", "-c", "1,1,0"])["result"]["chi"]["num"],
        4
    );
    let v = json(&["chi", "-r", "1", "-c", "0,0,0", "--method", "both"]);
    assert_eq!(v["result"]["agree"], true);
}

#[test]
fn coh_subcommand() {
    let v = json(&["coh", "Adual", "0"]);
    assert_eq!(v["result"]["h1"], 1);
    let v = json(&["coh", "spinor", "-1"]);
    for k in ["h0", "h1", "h2", "h3"] {
        assert_eq!(v["result"][k], 0);
    }
    let v = json(&["coh", "phi", "1"]);
    assert_eq!(v["result"]["h0"], 24);
    assert_eq!(v["status"], "flagged");
    assert!(!v["citations"].as_array().unwrap().is_empty());
    let v = json(&["coh", "pair:spinor-Adual"]);
    assert_eq!(v["result"]["provenance"]["kind"], "CitedFact");
}

#[test]
fn unsupported_pair_exits_nonzero_with_listing() {
    let out = qgg(&["coh", "pair:spinor-phi", "0"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("pair:phidual-phi"));
}

#[test]
fn usage_errors() {
    assert_eq!(qgg(&["chi", "-r", "2", "-c", "1,2"]).status.code(), Some(2));
    assert_eq!(qgg(&["classify", "--c1", "5"]).status.code(), Some(2));
    assert_eq!(
        qgg(&["verify-paper", "--section", "2"]).status.code(),
        Some(2)
    );
}

#[test]
fn classify_subcommand() {
    let v = json(&["classify", "--c1", "0"]);
    assert_eq!(v["result"]["entries"].as_array().unwrap().len(), 1);
    let v = json(&["classify", "--c1", "1", "--rank3-only"]);
    assert_eq!(v["result"]["entries"].as_array().unwrap().len(), 3);
    let v = json(&["classify", "--c1", "1", "--indecomposable"]);
    let names: Vec<&str> = v["result"]["entries"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["description"].as_str().unwrap())
        .collect();
    assert_eq!(names, ["A", "Φ"]);
}

#[test]
fn curve_subcommands() {
    assert!(stdout(&["trisecant", "6", "1"]).starts_with("t(6,1) = 2"));
    assert!(stdout(&["trisecant", "4", "0"]).starts_with("t(4,0) = 0"));
    let v = json(&["delpezzo", "5", "1"]);
    assert_eq!(v["result"]["classes"][0]["a"], 3);
    let v = json(&["curve", "--component", "8,5"]);
    assert_eq!(v["result"]["c3"]["c3"], 16);
    assert_eq!(v["result"]["alpha"]["value"], 10);
}

#[test]
fn verify_paper_exits_zero_and_filters() {
    let out = qgg(&["verify-paper"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&["verify-paper", "--section", "chi"]);
    let checks = v["result"]["checks"].as_array().unwrap();
    assert!(!checks.is_empty());
    assert!(checks.iter().all(|c| c["section"] == "chi"));
}

#[test]
fn json_round_trips_and_output_is_deterministic() {
    for args in [
        vec![
            "chern", "twist", "-r", "3", "-c", "2,0,0", "-k", "1", "--json",
        ],
        vec!["classify", "--json"],
        vec!["verify-paper", "--json"],
        vec!["coh", "pair:phidual-phi", "--json"],
    ] {
        let first = stdout(&args);
        assert_eq!(first, stdout(&args));
        let parsed: Value = serde_json::from_str(&first).unwrap();
        assert_eq!(
            serde_json::to_string_pretty(&parsed).unwrap(),
            first.trim_end()
        );
        for key in ["command", "inputs", "result", "citations", "status"] {
            assert!(parsed.get(key).is_some(), "{key} missing");
        }
    }
}
