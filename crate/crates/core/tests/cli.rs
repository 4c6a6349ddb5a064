use std::fs;
use std::process::{Command, Output};

fn bezsub(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bezsub"))
        .args(args)
        .output()
        .unwrap()
}

fn write(dir: &tempfile::TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_owned()
}

#[test]
fn subdivide_writes_both_segments() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(&dir, "line.json", r#"{"dimension":1,"points":[[0],[1]]}"#);
    let out = dir.path().join("out.json");
    let status = bezsub(&[
        "subdivide",
        "--input",
        &input,
        "--at",
        "0.5",
        "--method",
        "decasteljau",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(status.status.code(), Some(0));
    assert_eq!(
        fs::read_to_string(out).unwrap().trim(),
        r#"{"split":0.5,"left":{"dimension":1,"points":[[0.0],[0.5]]},"right":{"dimension":1,"points":[[0.5],[1.0]]}}"#
    );
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(&dir, "bad.json", "[1, 2");
    assert_eq!(
        bezsub(&["subdivide", "--input", &bad, "--at", "0.5"])
            .status
            .code(),
        Some(2)
    );
    let ok = write(&dir, "q.json", r#"{"dimension":1,"points":[[0],[1],[0]]}"#);
    assert_eq!(
        bezsub(&["subdivide", "--input", &ok, "--at", "-0.5"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        bezsub(&[
            "subdivide",
            "--input",
            &ok,
            "--at",
            "0.5",
            "--method",
            "fft,direct"
        ])
        .status
        .code(),
        Some(2)
    );
    assert_eq!(
        bezsub(&[
            "subdivide",
            "--input",
            &ok,
            "--at",
            "0.5",
            "--method",
            "nope"
        ])
        .status
        .code(),
        Some(2)
    );
    assert_eq!(bezsub(&["subdivide", "--at", "0.5"]).status.code(), Some(2));
    assert_eq!(
        bezsub(&["accuracy", "--scale", "0", "--degrees", "2", "--count", "1"])
            .status
            .code(),
        Some(3)
    );
    let weights = write(
        &dir,
        "w.json",
        r#"{"dimension":1,"points":[[0],[1]],"weights":[1,0]}"#,
    );
    assert_eq!(
        bezsub(&["subdivide", "--input", &weights, "--at", "0.5"])
            .status
            .code(),
        Some(3)
    );
}

#[test]
fn accuracy_and_bench_reports() {
    let out = bezsub(&[
        "accuracy",
        "--degrees",
        "2..3",
        "--count",
        "5",
        "--splits",
        "4",
        "--method",
        "decasteljau,fft",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "degree,method,min_digits,mean_digits,error_count");
    assert_eq!(lines[1], "2,decasteljau,17.0000,17.0000,0");
    assert_eq!(lines.len(), 5);

    let out = bezsub(&[
        "bench",
        "--degrees",
        "4",
        "--count",
        "2",
        "--splits",
        "3",
        "--format",
        "md",
        "--mode",
        "per-call",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("| n | decasteljau | fft | direct |"));
    assert!(!text.contains("amortized"));
}

#[test]
fn derivatives_and_patches() {
    let dir = tempfile::tempdir().unwrap();
    let curve = write(&dir, "c.json", r#"{"dimension":1,"points":[[3],[7.5]]}"#);
    let out = bezsub(&["derivatives", "--input", &curve]);
    assert_eq!(out.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["at_zero"][0][0], 3.0);
    assert_eq!(value["at_one"][0][0], 7.5);
    for key in ["at_zero", "at_one"] {
        assert!((value[key][1][0].as_f64().unwrap() - 4.5).abs() < 1e-14);
    }

    let patch = write(
        &dir,
        "p.json",
        r#"{"dimension":1,"grid":[[[0],[0]],[[1],[2]]]}"#,
    );
    let out = bezsub(&["surface-subdivide", "--input", &patch, "--at", "0.5"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        String::from_utf8(out.stdout).unwrap().trim(),
        r#"{"dimension":1,"grid":[[[0.0],[0.0]],[[0.5],[1.0]]]}"#
    );
}
