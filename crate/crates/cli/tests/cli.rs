use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;
use sspec_core::spectrum::{spec_s, SpectrumDoc};
use sspec_core::{ideal::mult_closure, RingDesc};

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "fixtures", name]
        .iter()
        .collect();
    p.to_string_lossy().into_owned()
}

fn sspec(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sspec"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

#[test]
fn radical_of_zero_in_z12() {
    let out = sspec(&[
        "radical",
        "--ring",
        &fixture("zn12.json"),
        "--mults",
        "3",
        "--ideal",
        "0",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "{0,2,4,6,8,10}");
}

#[test]
fn spec_text_lists_points_with_witnesses() {
    let out = sspec(&["spec", "--ring", &fixture("zn12.json"), "--mults", "3"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("P0 = {0,6}  witnesses {3,9}  not prime"));
    assert!(text.contains("P1 = {0,2,4,6,8,10}  witnesses {1,3,9}  prime"));
}

#[test]
fn spec_json_round_trips() {
    let out = sspec(&[
        "spec",
        "--ring",
        &fixture("zn12.json"),
        "--mults",
        "3",
        "--format",
        "json",
    ]);
    assert_eq!(code(&out), 0);
    let doc: SpectrumDoc = serde_json::from_str(&stdout(&out)).unwrap();
    let ring = doc.ring.build().unwrap();
    let rebuilt = doc.rebuild(&ring).unwrap();
    let fresh = spec_s(&ring, &mult_closure(&ring, &[3]).unwrap()).unwrap();
    assert_eq!(rebuilt.points(), fresh.points());
    assert_eq!(rebuilt.mults(), fresh.mults());
    assert_eq!(doc.ring, RingDesc::zn(12));
}

#[test]
fn topology_writes_dot() {
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("g.dot");
    let out = sspec(&[
        "topology",
        "--ring",
        &fixture("zn12.json"),
        "--mults",
        "3",
        "--kind",
        "flat",
        "--dot",
        dot.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert_eq!(code(&out), 0);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["opens"], serde_json::json!([[], [0, 1]]));
    let text = std::fs::read_to_string(dot).unwrap();
    assert!(text.starts_with("digraph specialization {"));
    assert!(text.contains("n0 -> n1;") && text.contains("n1 -> n0;"));
}

#[test]
fn components_of_z6() {
    let out = sspec(&[
        "components",
        "--ring",
        &fixture("zn6.json"),
        "--kind",
        "zariski",
        "--format",
        "json",
    ]);
    assert_eq!(code(&out), 0);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["connected"], serde_json::json!([[0], [1]]));
}

#[test]
fn ideals_of_z6() {
    let out = sspec(&["ideals", "--ring", &fixture("zn6.json")]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "{0}\n{0,3}\n{0,2,4}\n{0,1,2,3,4,5}\n");
}

#[test]
fn verify_single_ring_and_only_filter() {
    let out = sspec(&[
        "verify",
        "--ring",
        &fixture("zn6.json"),
        "--only",
        "thm-5.1,prop-3.3",
        "--format",
        "json",
    ]);
    assert_eq!(code(&out), 0);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let ids: Vec<&str> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["id"].as_str().unwrap())
        .collect();
    assert_eq!(ids, ["thm-5.1", "prop-3.3"]);
    assert_eq!(v["checks"][0]["status"], "pass");
}

#[test]
fn verify_builtin_exits_zero() {
    let out = sspec(&["verify", "--corpus", "builtin"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    assert!(stdout(&out).contains(" 0 fail,"));
}

#[test]
fn verify_corpus_file() {
    let out = sspec(&[
        "verify",
        "--corpus",
        &fixture("small_corpus.json"),
        "--format",
        "json",
    ]);
    assert_eq!(code(&out), 0);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["entries"].as_array().unwrap().len(), 3);
    assert_eq!(v["totals"]["fail"], 0);
}

#[test]
fn goingdown_single_pair() {
    let (z12, z6) = (fixture("zn12.json"), fixture("zn6.json"));
    let out = sspec(&[
        "goingdown",
        "--source",
        &z12,
        "--mults",
        "3",
        "--target",
        &z6,
    ]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("no counterexample found"));
}

#[test]
fn input_errors_exit_two() {
    let cases: Vec<Vec<String>> = vec![
        vec!["spec".into(), "--ring".into(), fixture("missing.json")],
        vec!["spec".into(), "--ring".into(), fixture("truncated.json")],
        vec![
            "spec".into(),
            "--ring".into(),
            fixture("unknown_field.json"),
        ],
        vec!["spec".into(), "--ring".into(), fixture("bad_table.json")],
        vec!["spec".into(), "--ring".into(), fixture("zn100.json")],
        vec![
            "spec".into(),
            "--ring".into(),
            fixture("zn12.json"),
            "--mults".into(),
            "2,3".into(),
        ],
        vec![
            "spec".into(),
            "--ring".into(),
            fixture("zn12.json"),
            "--mults".into(),
            "x".into(),
        ],
        vec![
            "radical".into(),
            "--ring".into(),
            fixture("zn12.json"),
            "--ideal".into(),
            "12".into(),
        ],
        vec![
            "verify".into(),
            "--corpus".into(),
            fixture("bad_mults_corpus.json"),
        ],
        vec![
            "verify".into(),
            "--corpus".into(),
            "builtin".into(),
            "--only".into(),
            "thm-9".into(),
        ],
        vec![
            "topology".into(),
            "--ring".into(),
            fixture("zn12.json"),
            "--kind".into(),
            "discrete".into(),
        ],
        vec![
            "spec".into(),
            "--ring".into(),
            fixture("zn12.json"),
            "--frobnicate".into(),
        ],
    ];
    for args in cases {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let out = sspec(&args);
        assert_eq!(code(&out), 2, "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn goingdown_counterexample_exits_one() {
    let out = sspec(&[
        "goingdown",
        "--source",
        &fixture("zn12.json"),
        "--mults",
        "3",
        "--target",
        &fixture("zn12.json"),
    ]);
    // identity and the other endomorphisms of Z/12 have no failures
    assert_eq!(code(&out), 0);

    // Z/12 -> Z/4 with S = <3>: (6) ⊆ (2) downstairs but nothing upstairs lies over (6)
    let dir = tempfile::tempdir().unwrap();
    let z4 = dir.path().join("z4.json");
    std::fs::write(&z4, r#"{"kind":"zn","n":4}"#).unwrap();
    let out = sspec(&[
        "goingdown",
        "--source",
        &fixture("zn12.json"),
        "--mults",
        "3",
        "--target",
        z4.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert_eq!(code(&out), 1);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["counterexamples"][0]["p_low"], serde_json::json!([0, 6]));
}
