use std::io::Write;
use std::process::{Command, Stdio};

use adrlab::cli::{execute, EXIT_FAIL, EXIT_INPUT, EXIT_PASS};
use adrlab::presentation::MAX_PATH_LENGTH_VAR;

struct Run {
    stdout: String,
    stderr: String,
    code: i32,
}

fn adrlab(args: &[&str], stdin: &str, env: &[(&str, &str)]) -> Run {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_adrlab"));
    cmd.args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    cmd.env_remove(MAX_PATH_LENGTH_VAR);
    for (k, v) in env {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    Run {
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
        code: out.status.code().unwrap(),
    }
}

fn gen(args: &[&str]) -> String {
    let mut full = vec!["gen"];
    full.extend_from_slice(args);
    let r = adrlab(&full, "", &[]);
    assert_eq!(r.code, EXIT_PASS, "{}", r.stderr);
    r.stdout
}

fn json(text: &str) -> serde_json::Value {
    serde_json::from_str(text).unwrap()
}

#[test]
fn adr_of_brauer_three() {
    let input = gen(&["brauer", "-n", "3"]);
    let r = adrlab(&["adr"], &input, &[]);
    assert_eq!(r.code, EXIT_PASS);
    let v = json(&r.stdout);
    assert_eq!(v["adr"]["dim"], 47);
    assert_eq!(v["adr"]["vertex_count"], 9);
    assert_eq!(v["adr"]["arrow_count"], 14);
    assert_eq!(v["algebra"]["dim"], 10);
    assert_eq!(v["corner"]["matches"], true);
    // The emitted presentation is itself valid input.
    let p = v["adr"]["presentation"].to_string();
    let again = adrlab(&["gldim", "--target", "input"], &p, &[]);
    assert_eq!(json(&again.stdout)["global_dimension"], 3);
}

#[test]
fn usq_check_on_the_linear_quiver() {
    let input = gen(&["linear", "-n", "3"]);
    let r = adrlab(&["usq-check", "--order", "natural"], &input, &[]);
    assert_eq!(r.code, EXIT_PASS, "{}", r.stdout);
    assert_eq!(json(&r.stdout)["passed"], true);
}

#[test]
fn verdict_failures_exit_one() {
    let input = gen(&["star"]);
    let r = adrlab(&["usq-check", "--order", "2<1,3<1"], &input, &[]);
    assert_eq!(r.code, EXIT_FAIL);
    let v = json(&r.stdout);
    assert_eq!(v["quasihereditary"], true);
    assert_eq!(v["report"]["a1_failures"], serde_json::json!(["1"]));
    // A self-injective algebra has infinite global dimension.
    let brauer = gen(&["brauer", "-n", "3"]);
    let r = adrlab(&["gldim", "--target", "input"], &brauer, &[]);
    assert_eq!(r.code, EXIT_FAIL);
    assert!(json(&r.stdout)["global_dimension"].is_null());
}

#[test]
fn input_errors_exit_two() {
    let r = adrlab(&["adr"], "{not json", &[]);
    assert_eq!(r.code, EXIT_INPUT);
    assert!(r.stderr.contains("parse error"));
    assert!(r.stdout.is_empty());

    let r = adrlab(&["qh-check", "/nonexistent/algebra.json"], "", &[]);
    assert_eq!(r.code, EXIT_INPUT);

    let r = adrlab(&["gen", "brauer", "-n", "2"], "", &[]);
    assert_eq!(r.code, EXIT_INPUT);

    let r = adrlab(&["frobnicate"], "", &[]);
    assert_eq!(r.code, EXIT_INPUT);

    let input = gen(&["linear", "-n", "3"]);
    let r = adrlab(&["qh-check", "--order", "1<nope"], &input, &[]);
    assert_eq!(r.code, EXIT_INPUT);

    let bad_field = adrlab(&["adr", "--field", "p:6"], &input, &[]);
    assert_eq!(bad_field.code, EXIT_INPUT);
}

#[test]
fn path_length_bound_comes_from_the_environment() {
    let input = gen(&["brauer", "-n", "3"]);
    let r = adrlab(
        &["gldim", "--target", "input"],
        &input,
        &[(MAX_PATH_LENGTH_VAR, "1")],
    );
    assert_eq!(r.code, EXIT_INPUT, "{}", r.stderr);
    assert!(r.stderr.contains("path length bound"));
}

#[test]
fn reports_are_byte_identical() {
    let input = gen(&["brauer", "-n", "3"]);
    for cmd in ["adr", "qh-check", "tilting", "ringel-dual", "verify"] {
        let a = adrlab(&[cmd], &input, &[]);
        let b = adrlab(&[cmd], &input, &[]);
        assert_eq!(a.code, EXIT_PASS, "{cmd}: {}", a.stderr);
        assert_eq!(a.stdout, b.stdout, "{cmd}");
    }
}

#[test]
fn keys_are_sorted() {
    let input = gen(&["linear", "-n", "3"]);
    let r = adrlab(&["qh-check", "--order", "natural"], &input, &[]);
    let keys: Vec<String> = json(&r.stdout)
        .as_object()
        .unwrap()
        .keys()
        .cloned()
        .collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    let top_level: Vec<&str> = r
        .stdout
        .lines()
        .filter(|l| l.starts_with("  \""))
        .map(|l| l.trim().split('"').nth(1).unwrap())
        .collect();
    let mut sorted_text = top_level.clone();
    sorted_text.sort();
    assert_eq!(top_level, sorted_text);
}

#[test]
fn dot_output() {
    let input = gen(&["brauer", "-n", "3"]);
    let r = adrlab(&["adr", "--dot"], &input, &[]);
    assert_eq!(r.code, EXIT_PASS);
    assert!(r.stdout.starts_with("digraph"));
    assert_eq!(r.stdout.matches("->").count(), 14);
    assert_eq!(
        r.stdout
            .lines()
            .filter(|l| l.contains("[label=") && !l.contains("->"))
            .count(),
        9
    );
    let q = gen(&["brauer-adr", "-n", "3", "--dot"]);
    assert_eq!(q.matches("->").count(), 14);
    let dual = adrlab(&["ringel-dual", "--dot"], &input, &[]);
    assert_eq!(dual.stdout.matches("->").count(), 14);
}

#[test]
fn prime_field_and_file_input() {
    let dir = std::env::temp_dir().join(format!("adrlab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("brauer4.json");
    std::fs::write(&path, gen(&["brauer", "-n", "4"])).unwrap();
    let path = path.to_str().unwrap();
    let r = adrlab(&["adr", path, "--field", "p:5"], "", &[]);
    assert_eq!(r.code, EXIT_PASS, "{}", r.stderr);
    let v = json(&r.stdout);
    assert_eq!(v["adr"]["dim"], 66);
    assert_eq!(v["algebra"]["field"], "F_5");
    let g = adrlab(&["gldim", path], "", &[]);
    assert_eq!(json(&g.stdout)["global_dimension"], 3);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn expected_adr_quiver_is_usq_with_the_adr_order() {
    let q = gen(&["brauer-adr", "-n", "3"]);
    let r = adrlab(&["usq-check", "--target", "input"], &q, &[]);
    assert_eq!(r.code, EXIT_PASS, "{}", r.stdout);
}

#[test]
fn in_process_execution_matches_the_binary() {
    let input = gen(&["linear", "-n", "4"]);
    let out = execute(
        ["adrlab", "tilting", "--order", "natural"],
        &mut input.as_bytes(),
    );
    let bin = adrlab(&["tilting", "--order", "natural"], &input, &[]);
    assert_eq!(out.code, bin.code);
    assert_eq!(out.stdout, bin.stdout);
    let help = execute(["adrlab", "--help"], &mut "".as_bytes());
    assert_eq!(help.code, EXIT_PASS);
    assert!(help.stdout.contains("gldim"));
}
