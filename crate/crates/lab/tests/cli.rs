use std::process::{Command, Output};

fn lab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ferrers-lab")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const C4: &str = r#"{"p":2,"q":2,"edges":[[0,0],[0,1],[1,0],[1,1]]}"#;

#[test]
fn classify_prints_exact_values() {
    let o = lab(&["classify", "--graph", C4]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "{\"T\":\"4\",\"F\":\"4/1\",\"verdict\":\"Good\"}\n");

    let o = lab(&["classify", "--partition", "3,3,2,1"]);
    assert_eq!(stdout(&o), "{\"T\":\"36\",\"F\":\"36/1\",\"verdict\":\"Good\"}\n");
    let o = lab(&["classify", "--graph6", "C]"]);
    assert_eq!(stdout(&o), "{\"T\":\"4\",\"F\":\"4/1\",\"verdict\":\"Good\"}\n");
}

#[test]
fn single_graph_commands() {
    let o = lab(&["treecount", "--graph", C4]);
    assert_eq!(stdout(&o), "{\"T\":\"4\"}\n");
    let o = lab(&["treecount", "--graph", r#"{"p":2,"q":2,"edges":[[0,0],[1,1]]}"#]);
    assert_eq!(stdout(&o), "{\"T\":\"0\"}\n");

    let o = lab(&["spectrum", "--graph", C4]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let eig: Vec<f64> = v["eigenvalues"].as_array().unwrap().iter().map(|x| x.as_f64().unwrap()).collect();
    assert!(eig.iter().zip([4.0, 2.0, 2.0, 0.0]).all(|(a, b)| (a - b).abs() < 1e-9), "{eig:?}");
    assert_eq!(v["consistent"], true);

    let o = lab(&["glue", "--graph", C4, "--graph", C4]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!((v["T"].as_str(), v["verdict"].as_str()), (Some("16"), Some("Good")));
    let k2 = r#"{"p":1,"q":1,"edges":[[0,0]]}"#;
    let o = lab(&["glue", "--join", "--graph", k2, "--graph", k2]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!((v["T"].as_str(), v["graph"]["p"].as_u64()), (Some("1"), Some(2)));

    let o = lab(&["koo", "--partition", "2"]);
    assert_eq!(stdout(&o), "{\"koo_condition\":true,\"T\":\"1\",\"F\":\"1/1\",\"verdict\":\"Good\"}\n");
}

#[test]
fn scan2_reports_violations_with_exit_3() {
    let o = lab(&["scan2", "--sum-max", "4", "--n-max", "5"]);
    assert_eq!(o.status.code(), Some(3));
    let out = stdout(&o);
    let known = r#"{"type":"record","a":[2,2],"b":[2,1,1],"lambda":["2/1","2/1","2/1","2/1"],"verdict":"Violated","lhs":"16/5","rhs":"4/3"}"#;
    assert!(out.lines().any(|l| l == known), "{out}");
    let summary: serde_json::Value = serde_json::from_str(out.lines().last().unwrap()).unwrap();
    assert_eq!(summary["type"], "summary");
    assert_eq!(summary["violations"], 16);

    let o = lab(&["scan2", "--sum-max", "1", "--n-max", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let o = lab(&["scan2", "--a", "2,2", "--b", "2,1,1", "--lambda", "5,1,1,1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains(r#""verdict":"Holds","lhs":"1/1","rhs":"4/3""#));
    let o = lab(&["scan2", "--a", "2,2", "--b", "2,1,1", "--lambda", "2,2,2,1"]);
    assert!(stdout(&o).contains(r#""verdict":"HypothesisFailed","hypothesis":"d_below_lambda""#));
}

#[test]
fn campaign_commands_summarize() {
    let o = lab(&["verify", "--max-vertices", "6", "--prune"]);
    assert_eq!(o.status.code(), Some(0));
    let last: serde_json::Value = serde_json::from_str(stdout(&o).lines().last().unwrap()).unwrap();
    assert_eq!(last["bad_count"], 0);
    // 2-connected classes for n = 2..6: 1, 0, 1, 1, 5
    assert_eq!(last["classes"], 8);
    assert!(last["pruning_argument"].is_string());

    let o = lab(&["enumerate", "--max-vertices", "7"]);
    let out = stdout(&o);
    assert_eq!(out.lines().filter(|l| l.contains("\"record\"")).count(), 1 + 1 + 3 + 5 + 17 + 44);

    let o = lab(&["ferrers-eq", "--max-cells", "8"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains(r#""checked":66,"failures":0"#), "{}", stdout(&o));

    let o = lab(&["koo", "--max-vertices", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let o = lab(&["glue", "--max-vertices", "5", "--trials", "20", "--seed", "9"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains(r#""glue_trials":20,"join_trials":20"#));
}

#[test]
fn exit_codes() {
    assert_eq!(lab(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(lab(&["verify"]).status.code(), Some(1));
    assert_eq!(lab(&["verify", "--max-vertices", "8", "--bogus"]).status.code(), Some(1));
    assert_eq!(lab(&["verify", "--max-vertices", "6", "--eps", "0"]).status.code(), Some(1));
    assert_eq!(lab(&["verify", "--max-vertices", "6", "--shards", "0"]).status.code(), Some(1));
    assert_eq!(lab(&["verify", "--max-vertices", "6", "--resume"]).status.code(), Some(1));
    assert_eq!(lab(&["classify", "--graph", C4, "--partition", "1"]).status.code(), Some(1));
    assert_eq!(lab(&["--help"]).status.code(), Some(0));
    assert_eq!(lab(&["--version"]).status.code(), Some(0));

    assert_eq!(lab(&["classify", "--graph", "{not json"]).status.code(), Some(2));
    assert_eq!(lab(&["classify", "--graph", r#"{"p":1,"q":1,"edges":[[3,0]]}"#]).status.code(), Some(2));
    assert_eq!(lab(&["classify", "--graph6", "Bw"]).status.code(), Some(2));
    assert_eq!(lab(&["classify", "--partition", "1,2"]).status.code(), Some(2));
    assert_eq!(lab(&["scan2", "--a", "1", "--b", "1", "--lambda", "0"]).status.code(), Some(2));
    let missing = std::env::temp_dir().join("ferrers-lab-no-such-checkpoint.json");
    let out = std::env::temp_dir().join("ferrers-lab-exit-codes.jsonl");
    std::fs::write(&out, "").unwrap();
    let o = lab(&[
        "verify",
        "--max-vertices",
        "6",
        "--checkpoint",
        missing.to_str().unwrap(),
        "--resume",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn output_is_byte_identical_across_runs_and_batch_sizes() {
    let a = lab(&["verify", "--max-vertices", "8"]);
    let b = lab(&["verify", "--max-vertices", "8"]);
    let c = lab(&["verify", "--max-vertices", "8", "--shards", "3"]);
    let d = Command::new(env!("CARGO_BIN_EXE_ferrers-lab"))
        .args(["verify", "--max-vertices", "8", "--shards", "5"])
        .env("FERRERS_LAB_THREADS", "3")
        .output()
        .unwrap();
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
    assert_eq!(a.stdout, d.stdout);
    let g1 = lab(&["glue", "--max-vertices", "5", "--trials", "30", "--seed", "4"]);
    let g2 = lab(&["glue", "--max-vertices", "5", "--trials", "30", "--seed", "4"]);
    assert_eq!(g1.stdout, g2.stdout);
}

#[test]
fn out_flag_writes_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c4.json");
    let o = lab(&["classify", "--graph", C4, "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "{\"T\":\"4\",\"F\":\"4/1\",\"verdict\":\"Good\"}\n");
    let bad_threads = Command::new(env!("CARGO_BIN_EXE_ferrers-lab"))
        .args(["verify", "--max-vertices", "4"])
        .env("FERRERS_LAB_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(bad_threads.status.code(), Some(1));
}
