use std::io::Write;
use std::process::{Command, Output, Stdio};

fn ppmat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ppmat")).args(args).output().expect("binary runs")
}

fn ppmat_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_ppmat"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited")
}

#[test]
fn map_examples() {
    let o = ppmat(&["map", "phi", "--input", "[[4,4,2],[4,2,1],[2,2]]", "--n", "3", "--m", "4", "--json"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "{\"rows\":3,\"cols\":4,\"data\":[[0,1,0,1],[1,0,0,1],[0,2,0,0]]}\n");

    let o = ppmat_stdin(&["map", "inv", "--json"], r#"{"rows":3,"cols":3,"data":[[0,0,0],[0,0,0],[0,0,0]]}"#);
    assert_eq!((code(&o), stdout(&o)), (0, "[]\n".to_string()));

    let o = ppmat(&["map", "word", "--w", "132434", "--m", "4"]);
    assert_eq!(stdout(&o), "6 5 3 1\n6 5 3\n6 5 2\n6 4\n");
}

#[test]
fn file_input() {
    let path = std::env::temp_dir().join(format!("ppmat-cli-test-{}.json", std::process::id()));
    std::fs::write(&path, "[[4,4,2],[4,2,2],[2,2]]").unwrap();
    let o = ppmat(&["stats", "--file", path.to_str().unwrap(), "--json"]);
    std::fs::remove_file(&path).ok();
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["volume"], 22);
    assert_eq!(v["up_hook_volume"], 20);
}

#[test]
fn stats_of_empty_is_zero() {
    let o = ppmat(&["stats", "--input", "[]"]);
    assert_eq!(code(&o), 0);
    for line in stdout(&o).lines() {
        let value = line[16..].trim();
        assert!(value == "0" || value.is_empty() || value == "∅", "{line}");
    }
}

#[test]
fn enumerate_examples() {
    assert_eq!(stdout(&ppmat(&["enumerate", "box", "2", "2", "2"])), "20\n");
    assert_eq!(stdout(&ppmat(&["enumerate", "box", "1", "1", "1", "--gf", "q", "--stat", "volume"])), "1 + q\n");
    assert_eq!(stdout(&ppmat(&["enumerate", "st", "--shape", "2,1", "--n", "3"])), "2\n");
    let json = stdout(&ppmat(&["enumerate", "box", "1", "1", "1", "--gf", "q", "--json"]));
    assert_eq!(json, "{\"vars\":[\"q\"],\"terms\":[{\"exp\":[0],\"coef\":\"1\"},{\"exp\":[1],\"coef\":\"1\"}]}\n");
}

#[test]
fn caps_and_usage_errors() {
    let o = ppmat(&["enumerate", "box", "6", "1", "1"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("cap 5"));
    assert_eq!(code(&ppmat(&["enumerate", "box", "6", "1", "1", "--unsafe-no-caps"])), 0);
    assert_eq!(code(&ppmat(&["map", "phi", "--input", "[[1,2]]"])), 2);
    assert_eq!(code(&ppmat(&["map", "phi", "--input", "[[5]]", "--m", "4"])), 1);
    assert_eq!(code(&ppmat(&["frobnicate"])), 2);
    assert_eq!(code(&ppmat(&["enumerate"])), 2);
}

#[test]
fn verify_examples() {
    let o = ppmat(&["verify", "macmahon_box", "--k", "2", "--n", "2", "--m", "2"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("PASS  macmahon_box"));
    assert_eq!(code(&ppmat(&["verify", "no_such_check"])), 2);
    assert_eq!(code(&ppmat(&["verify", "gl", "--n", "2"])), 2);
}

#[test]
fn verify_all_exit_code_follows_results() {
    let o = ppmat(&["verify", "all", "--level", "small", "--json", "--workers", "2"]);
    let results: Vec<serde_json::Value> = serde_json::from_slice(&o.stdout).unwrap();
    assert!(results.len() > 100);
    let all_pass = results.iter().all(|r| r["pass"] == true);
    assert_eq!(code(&o), if all_pass { 0 } else { 1 });
    for r in &results {
        assert_eq!(r["pass"] == true, r["first_diff"].is_null(), "{r}");
        assert!(r.get("elapsed_ms").is_none());
    }
}

#[test]
fn output_is_byte_deterministic() {
    for args in [
        &["verify", "all", "--level", "small"][..],
        &["enumerate", "box", "2", "2", "2", "--stat", "trace,uh", "--json"],
        &["dalpha", "--k", "3", "--n", "2", "--m", "3", "--N", "3", "--json"],
    ] {
        let a = ppmat(args);
        let b = ppmat(args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn greene_example() {
    let o = ppmat(&["greene", "--w", "132434", "--m", "4", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["greene"], serde_json::json!([4, 3, 3, 2]));
    assert_eq!(v["shape"], v["greene"]);
}
