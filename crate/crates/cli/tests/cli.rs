use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn longface() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_longface"));
    cmd.env_remove("LONGFACE_LEVEL").env_remove("LONGFACE_SEED");
    cmd
}

fn run(args: &[&str]) -> Output {
    longface().args(args).output().unwrap()
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("longface-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    fs::write(&path, contents).unwrap();
    path
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn matrix_as_json_and_grid() {
    let out = run(&["matrix", "--m", "2", "--from", "std", "--to", "hdot"]);
    assert!(out.status.success());
    assert_eq!(
        json(&out),
        serde_json::json!([["1", "-2", "1"], ["0", "1", "-1"], ["0", "0", "1"]])
    );

    let out = run(&[
        "matrix", "--m", "1", "--from", "S", "--to", "S", "--format", "grid",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().count(), 2);
}

#[test]
fn compute_f_h_and_coordinates() {
    let sys = scratch("points.txt", "m=3\n{}\n{1}\n{2}\n");
    let path = sys.to_str().unwrap();
    let f = run(&["compute", "--system", path, "--what", "f"]);
    assert_eq!(json(&f), serde_json::json!(["1", "2", "0", "0"]));
    let h = run(&["compute", "--system", path, "--what", "h"]);
    assert_eq!(json(&h), serde_json::json!(["1", "-1", "-1", "1"]));
    let c = run(&["compute", "--system", path, "--what", "f", "--basis", "std"]);
    assert_eq!(json(&c), json(&f));
}

#[test]
fn empty_system_has_zero_vectors() {
    let sys = scratch("empty.txt", "m=2\n");
    let out = run(&["compute", "--system", sys.to_str().unwrap(), "--what", "h"]);
    assert!(out.status.success());
    assert_eq!(json(&out), serde_json::json!(["0", "0", "0"]));
}

#[test]
fn json_output_is_byte_stable() {
    let sys = scratch("stable.txt", "m=4\n{}\n{1}\n{2}\n{1,2}\n{3,4}\n");
    let args = [
        "partition",
        "--system",
        sys.to_str().unwrap(),
        "--strategy",
        "min-theta",
    ];
    assert_eq!(run(&args).stdout, run(&args).stdout);
    let args = [
        "verify", "--m", "3", "--level", "sampled", "--seed", "9", "--json",
    ];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn parse_errors_point_at_line_and_column() {
    let sys = scratch("bad.txt", "m=3\n{}\n{1,x}\n");
    let out = run(&["compute", "--system", sys.to_str().unwrap(), "--what", "f"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("bad.txt:3:4:"), "{err}");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(
        run(&["matrix", "--m", "2", "--from", "nope", "--to", "std"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["matrix", "--m", "99", "--from", "std", "--to", "std"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["--help"]).status.code(), Some(0));

    let sys = scratch("missing-partition.txt", "m=1\n{}\n");
    let part = scratch("part.json", "[]");
    let out = run(&[
        "partition",
        "--system",
        sys.to_str().unwrap(),
        "--strategy",
        "greedy",
        "--partition",
        part.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn given_partitions_are_checked() {
    let sys = scratch("given.txt", "m=2\n{}\n{1}\n{2}\n");
    let good = scratch(
        "good.json",
        r#"[{"bottom":[],"top":[1]},{"bottom":[2],"top":[2]}]"#,
    );
    let bad = scratch(
        "overlap.json",
        r#"[{"bottom":[],"top":[1]},{"bottom":[],"top":[2]}]"#,
    );
    let out = run(&[
        "partition",
        "--system",
        sys.to_str().unwrap(),
        "--partition",
        good.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert_eq!(json(&out)["theta"], 2);
    let out = run(&[
        "partition",
        "--system",
        sys.to_str().unwrap(),
        "--partition",
        bad.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn ds_check_exit_status() {
    let yes = scratch("ds.txt", "m=3\n{}\n{1}\n{2}\n");
    let out = run(&["ds-check", "--system", yes.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["is_ds"], true);

    let no = scratch("not-ds.txt", "m=2\n{}\n{1,2}\n");
    let out = run(&["ds-check", "--system", no.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["is_ds"], false);
}

#[test]
fn dual_round_trips() {
    let sys = scratch("dual.txt", "m=3\n{}\n{1}\n{1,3}\n");
    let once = run(&["dual", "--system", sys.to_str().unwrap()]);
    assert!(once.status.success());
    let dual = scratch("dual-once.txt", &stdout(&once));
    let twice = run(&["dual", "--system", dual.to_str().unwrap()]);
    assert_eq!(stdout(&twice), fs::read_to_string(&sys).unwrap());
}

#[test]
fn profile_eval_matches_compute() {
    let sys = scratch("profiled.txt", "m=3\n{}\n{1}\n{2}\n{1,2}\n{3}\n");
    let part = run(&["partition", "--system", sys.to_str().unwrap()]);
    let profile = scratch("profile.json", &json(&part)["profile"].to_string());
    for basis in ["std", "hdot", "fup", "hup", "fdown", "hdown"] {
        for target in ["f", "h"] {
            let via_profile = run(&[
                "profile-eval",
                "--profile",
                profile.to_str().unwrap(),
                "--m",
                "3",
                "--target",
                target,
                "--basis",
                basis,
            ]);
            let direct = run(&[
                "compute",
                "--system",
                sys.to_str().unwrap(),
                "--what",
                target,
                "--basis",
                basis,
            ]);
            assert!(via_profile.status.success());
            assert_eq!(via_profile.stdout, direct.stdout, "{target} in {basis}");
        }
    }
}

#[test]
fn verify_reports_every_system() {
    let out = run(&["verify", "--m", "3", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let summary = json(&out);
    assert_eq!(summary["systems"], 256);
    assert_eq!(summary["level"], "exhaustive");
}

#[test]
fn verify_reads_environment_and_flags_win() {
    let from_env = longface()
        .args(["verify", "--m", "3", "--samples", "4", "--json"])
        .env("LONGFACE_LEVEL", "sampled")
        .env("LONGFACE_SEED", "17")
        .output()
        .unwrap();
    let summary = json(&from_env);
    assert_eq!(summary["level"], "sampled");
    assert_eq!(summary["seed"], 17);
    assert_eq!(summary["systems"], 4);

    let flagged = longface()
        .args(["verify", "--m", "2", "--level", "exhaustive", "--json"])
        .env("LONGFACE_LEVEL", "sampled")
        .output()
        .unwrap();
    assert_eq!(json(&flagged)["level"], "exhaustive");
    assert_eq!(json(&flagged)["systems"], 16);
}
