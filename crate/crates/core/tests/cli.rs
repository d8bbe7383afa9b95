use std::process::{Command, Output};

use decohere::Error;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_decohere")).args(args).output().unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn sweep_to_stdout() {
    let out = run(&["sweep", "--family", "hcnm", "--N", "4", "--m", "1", "--k", "1", "--channel", "lpdc", "--p-steps", "3", "--engine", "both"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "p,log_negativity,discord,engine,wall_time_s");
    assert!(lines[2].starts_with("0.5,0.321928094887,,both,"));
    assert_eq!(lines.len(), 4);
}

#[test]
fn config_file_with_flag_overrides() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("sweep.json");
    std::fs::write(
        &cfg,
        r#"{"family": {"kind": "ghz", "N": 3, "k": 1}, "channel": "ladc", "p_steps": 5, "measures": ["ln", "discord"]}"#,
    )
    .unwrap();
    let csv = dir.path().join("out.csv");
    let out = run(&["sweep", "--config", cfg.to_str().unwrap(), "--p-steps", "3", "--seed", "3", "--out", csv.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let text = std::fs::read_to_string(&csv).unwrap();
    assert_eq!(text.lines().count(), 4);
    let first: Vec<&str> = text.lines().nth(1).unwrap().split(',').collect();
    assert_eq!(&first[..4], ["0", "1", "1", "dense"]);
}

#[test]
fn critical_and_validate() {
    let out = run(&["critical", "--family", "ghz", "--N", "6", "--channel", "ldpc"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("percent=33.8"));

    let out = run(&["validate", "--family", "hcnm", "--N", "5", "--m", "4", "--channel", "ldpc", "--p-steps", "6"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("formula=hcn1-ldpc"));
    assert_eq!(text.matches("correction ").count(), 3);
}

#[test]
fn table1_writes_json() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("table.json");
    let out = run(&["table1", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("channel"));
    let json: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(json["cells"].as_array().unwrap().len(), 21);
}

#[test]
fn exit_codes() {
    assert_eq!(code(&run(&["sweep", "--family", "w"])), 2);
    assert_eq!(code(&run(&["sweep", "--p-start", "1.5"])), 2);
    assert_eq!(code(&run(&["sweep", "--k", "0"])), 2);
    assert_eq!(code(&run(&["sweep", "--measures", "discord", "--engine", "analytic"])), 2);
    assert_eq!(code(&run(&["validate", "--family", "hcnm", "--N", "6", "--m", "2", "--channel", "ldpc"])), 2);
    assert_eq!(code(&run(&["critical", "--family", "g", "--N", "2"])), 2);
    assert_eq!(code(&run(&["sweep", "--family", "ghz", "--N", "14"])), 3);
    assert_eq!(code(&run(&["validate", "--family", "ghz", "--N", "14"])), 3);
    assert_eq!(Error::ValidationMismatch(String::new()).exit_code(), 4);
}
