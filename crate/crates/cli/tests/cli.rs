use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn taquin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_taquin"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn taquin_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_taquin"))
        .args(args)
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .stderr(std::process::Stdio::piped())
        .spawn()
        .expect("binary starts");
    child
        .stdin
        .take()
        .expect("piped")
        .write_all(input.as_bytes())
        .expect("stdin accepts");
    child.wait_with_output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

fn temp_file(name: &str, contents: &str) -> String {
    let dir = std::env::temp_dir().join(format!("taquin-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).expect("temp dir");
    let path = dir.join(name);
    std::fs::write(&path, contents).expect("temp file");
    path.to_string_lossy().into_owned()
}

const RUNNING: &str = ". . . 1 2\n. 1 2 3\n1 2\n";

#[test]
fn rectify_along_an_order() {
    let order = temp_file("order.txt", "1 2 3\n4\n");
    let out = taquin_stdin(&["rectify", "-", "--order", &order], RUNNING);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "rectified:\n1 1 1 2\n2 2 3\nQ' = (3,1,2,3)\nP':\n1 2 3\n3\n"
    );
}

#[test]
fn rectify_default_order_each_engine() {
    for engine in ["classical", "tropical", "both"] {
        let out = taquin_stdin(
            &["rectify", "-", "--engine", engine, "--json"],
            ". . 1\n. 2 2\n3 3\n",
        );
        assert!(out.status.success(), "{engine}");
        let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
        assert_eq!(
            v["rectified"]["rows"],
            serde_json::json!([[1, 2], [2, 3], [3]]),
            "{engine}"
        );
        assert_eq!(v["rectified"]["mu"], serde_json::json!([]));
    }
}

#[test]
fn straight_input_is_echoed() {
    let out = taquin_stdin(&["rectify", "-"], "1 1 2\n2 3\n");
    assert!(out.status.success());
    assert_eq!(stdout(&out), "rectified:\n1 1 2\n2 3\nQ' = ()\nP':\n");
}

#[test]
fn parse_errors_report_position() {
    let out = taquin_stdin(&["rectify", "-"], ". 1\n2 x\n");
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 2"), "{err}");
    assert!(err.contains("column 3"), "{err}");
}

#[test]
fn order_of_wrong_shape_is_rejected() {
    let order = temp_file("bad-order.txt", "1 2\n3\n");
    let out = taquin_stdin(&["rectify", "-", "--order", &order], RUNNING);
    assert!(!out.status.success());
}

#[test]
fn slide_on_a_matrix_window() {
    let w = temp_file(
        "window.txt",
        "1 1 0 0 0 0\n1 1 2 2 1 1\n0 0 0 0 1 2\n0 0 0 0 0 0\n",
    );
    let out = taquin(&[
        "slide",
        &w,
        "--row",
        "1",
        "--show-path",
        "--input-kind",
        "matrix",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(
        text.contains(
            "W+:\n0  0  0  1  1  1\n1  1  2  1  0  0\n0  0  0  0  1  2\n0  0  0  0  0  0\n"
        ),
        "{text}"
    );
    assert!(
        text.contains("Q:\n1  1  1  0  0  0\n0  0  0  1  1  1\n"),
        "{text}"
    );
    assert!(
        text.contains(
            "path:\n1→ 1→ 0↘ 0  0  0\n1  1  2  2→ 1→ 1\n0  0  0  0  1  2\n0  0  0  0  0  0\n"
        ),
        "{text}"
    );
}

#[test]
fn slide_on_a_tableau_json() {
    let out = taquin_stdin(
        &["slide", "-", "--row", "1", "--json"],
        ". . 1 2\n1 1 3 5\n3 4 4\n",
    );
    assert!(out.status.success());
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(
        v["W_plus"],
        serde_json::json!([[0, 2, 2, 1, 0, 0], [0, 1, 0, 0, 1, 2], [0, 0, 0, 1, 2, 2]])
    );
    assert_eq!(
        v["Q"],
        serde_json::json!([[1, 0, 0, 0, 0, 0], [0, 1, 1, 1, 0, 0], [0, 0, 0, 0, 1, 1]])
    );
    assert_eq!(v["exit_row"], 3);
    assert_eq!(
        v["tableau"]["rows"],
        serde_json::json!([[1, 1, 2], [1, 3, 4, 5], [3, 4]])
    );
}

#[test]
fn slide_without_inside_corner_fails() {
    for row in ["0", "3", "9"] {
        let out = taquin_stdin(&["slide", "-", "--row", row], RUNNING);
        assert!(!out.status.success(), "row {row}");
    }
}

#[test]
fn kickerball_frames() {
    let out = taquin(&[
        "kickerball",
        "--p",
        "0,2,0,2,1",
        "--w",
        "0,3,1,1,0",
        "--steps",
        "1",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(
        text.contains("|     |kk∘∘∘|  ∘  | kk∘ |  k  |     |     |..."),
        "{text}"
    );
    assert!(
        text.contains("step 1: P=(0,2,0,1,1,1) W=(2,1,2)\n"),
        "{text}"
    );
}

#[test]
fn kickerball_two_steps_iterate_the_step() {
    let out = taquin(&[
        "kickerball",
        "--p",
        "(0,2,0,2,1)",
        "--w",
        "(0,3,1,1,0)",
        "--steps",
        "2",
        "--json",
    ]);
    assert!(out.status.success());
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let once =
        taquin::kicker_ball_step(&vec![0, 2, 0, 2, 1].into(), &vec![0, 3, 1, 1, 0].into()).unwrap();
    let twice = taquin::kicker_ball_step(&once.0, &once.1).unwrap();
    assert_eq!(v[2]["P"], serde_json::to_value(&twice.0).unwrap());
    assert_eq!(v[2]["W"], serde_json::to_value(&twice.1).unwrap());
}

#[test]
fn kickerball_without_kickers_keeps_the_frame() {
    let out = taquin(&[
        "kickerball",
        "--p",
        "0,0,0",
        "--w",
        "0,3,1",
        "--steps",
        "2",
        "--json",
    ]);
    assert!(out.status.success());
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v[0]["frame"], v[1]["frame"]);
    assert_eq!(v[1]["frame"], v[2]["frame"]);
}

#[test]
fn kickerball_rejects_bad_vectors() {
    let out = taquin(&["kickerball", "--p", "1,-2", "--w", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

fn report(args: &[&str]) -> (Value, Option<i32>) {
    let out = taquin(args);
    (
        serde_json::from_str(&stdout(&out)).expect("JSON report"),
        out.status.code(),
    )
}

#[test]
fn golden_suite_passes() {
    let (v, code) = report(&["verify", "--suite", "golden"]);
    assert_eq!(code, Some(0));
    assert_eq!(v["suite"], "golden");
    assert_eq!(v["failures"], serde_json::json!([]));
    assert!(v["cases"].as_u64().unwrap() > 50);
    for key in ["suite", "cases", "failures", "seed", "wall_time"] {
        assert!(v.get(key).is_some(), "{key}");
    }
}

#[test]
fn small_suites_pass() {
    for (suite, bound) in [
        ("udkp", "1"),
        ("uniqueness", "8"),
        ("roundtrip", "4"),
        ("slide-equivalence", "4"),
        ("commute", "4"),
        ("semiring", "3"),
    ] {
        let (v, code) = report(&["verify", "--suite", suite, "--max-boxes", bound]);
        assert_eq!(code, Some(0), "{suite}: {v}");
        assert_eq!(v["failures"], serde_json::json!([]), "{suite}");
    }
}

#[test]
fn reports_are_deterministic() {
    let strip = |mut v: Value| {
        v.as_object_mut().unwrap().remove("wall_time");
        v
    };
    let args = [
        "verify",
        "--suite",
        "roundtrip",
        "--max-boxes",
        "3",
        "--seed",
        "7",
    ];
    let (a, _) = report(&args);
    let (b, _) = report(&args);
    assert_eq!(a["seed"], 7);
    assert_eq!(strip(a), strip(b));
}

#[test]
fn unknown_suite_is_an_error() {
    let out = taquin(&["verify", "--suite", "bogus"]);
    assert!(!out.status.success());
}
