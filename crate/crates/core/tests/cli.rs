use std::io::Write;
use std::process::{Command, Output, Stdio};

fn meanders(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_meanders"))
        .args(args)
        .output()
        .unwrap()
}

fn with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_meanders"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn sample_then_stats() {
    let s = meanders(&[
        "sample", "--family", "comb", "--n", "12", "--seed", "4", "--count", "3",
    ]);
    assert!(s.status.success());
    let text = stdout(&s);
    assert_eq!(text.lines().count(), 3);
    let again = meanders(&[
        "sample", "--family", "comb", "--n", "12", "--seed", "4", "--count", "3",
    ]);
    assert_eq!(stdout(&again), text);

    let st = with_stdin(&["stats"], &text);
    assert!(st.status.success());
    for line in stdout(&st).lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["n"], 12);
        assert!(v["cycles"].as_u64().unwrap() >= 1);
    }
}

#[test]
fn invalid_input_exits_with_two() {
    let o = with_stdin(
        &["stats"],
        "{\"n\":2,\"upper\":[2,3,0,1],\"lower\":[1,0,3,2]}\n",
    );
    assert_eq!(o.status.code(), Some(2));
    let o = with_stdin(&["stats"], "not json\n");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_with_one() {
    assert_eq!(
        meanders(&["sample", "--family", "nope", "--n", "3"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        meanders(&["exact", "--stat", "ringlets"]).status.code(),
        Some(1)
    );
    assert_eq!(
        meanders(&["sample", "--family", "sg(1,0,1)", "--n", "3"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        meanders(&["enumerate", "--n", "9", "--stat", "rings"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(meanders(&["--help"]).status.code(), Some(0));
}

#[test]
fn exact_and_enumerate_agree() {
    let e = meanders(&["exact", "--stat", "staples", "--n", "5"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&e).trim()).unwrap();
    let d = meanders(&["enumerate", "--n", "5", "--stat", "staples"]);
    let w: serde_json::Value = serde_json::from_str(stdout(&d).trim()).unwrap();
    assert_eq!(v["exact"], w["mean"]);

    let m = meanders(&["enumerate", "--meander-numbers", "--max-k", "5"]);
    let r: serde_json::Value = serde_json::from_str(stdout(&m).trim()).unwrap();
    assert_eq!(r["numbers"], serde_json::json!([1, 2, 8, 42, 262]));
}

#[test]
fn experiment_csv_is_thread_independent() {
    let dir = std::env::temp_dir();
    let run = |threads: &str| {
        let path = dir.join(format!("meanders-cli-{}-{threads}.csv", std::process::id()));
        let o = meanders(&[
            "experiment",
            "--name",
            "spacings",
            "--family",
            "semimeander",
            "--n-list",
            "60,90",
            "--samples",
            "700",
            "--seed",
            "9",
            "--threads",
            threads,
            "--out",
            path.to_str().unwrap(),
        ]);
        assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
        let text = std::fs::read_to_string(&path).unwrap();
        std::fs::remove_file(&path).unwrap();
        text
    };
    let one = run("1");
    assert_eq!(one, run("3"));
    assert!(one.starts_with("experiment,family,n,samples,seed,statistic,mean,stderr,extra"));
    assert_eq!(one.lines().count(), 1 + 2 * 3);
}

#[test]
fn verify_reports_failures_with_three() {
    let ok = meanders(&["verify", "--quick", "--only", "16"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(stdout(&ok).starts_with("PASS 16"));
    let bad = meanders(&["verify", "--quick", "--only", "99"]);
    assert_eq!(bad.status.code(), Some(3));
}
