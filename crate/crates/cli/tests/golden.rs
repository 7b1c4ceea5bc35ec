//! Golden outputs of the `fpnorm` binary on the fixture files.
//!
//! Regenerate with `UPDATE_GOLDEN=1 cargo test -p fpnorm-cli --test golden`
//! and review the diff.

use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;

const FIXTURES: [&str; 6] = [
    "01_segre_p2",
    "02_segre_p3",
    "03_smooth",
    "04_quartic_p2",
    "05_quartic_p3",
    "06_quadratic_p3",
];

fn dir(sub: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join(sub)
}

fn fpnorm(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_fpnorm"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exited normally"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn normalize(name: &str, extra: &[&str]) -> String {
    let file = dir("fixtures").join(format!("{name}.txt"));
    let mut args = vec!["normalize", file.to_str().unwrap()];
    args.extend_from_slice(extra);
    let (code, stdout, stderr) = fpnorm(&args);
    assert_eq!(code, 0, "{name} {extra:?}: {stderr}");
    stdout
}

/// Timing and call counts vary run to run.
fn without_stats(json: &str) -> Value {
    let mut v: Value = serde_json::from_str(json).expect("valid JSON");
    let stats = v
        .as_object_mut()
        .unwrap()
        .remove("stats")
        .expect("stats present");
    assert!(stats["wall_seconds"].as_f64().is_some_and(|t| t >= 0.0));
    assert!(stats["gb_calls"].is_u64());
    v
}

fn check(name: &str, ext: &str, actual: &str) {
    let path = dir("golden").join(format!("{name}.{ext}"));
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, actual).unwrap();
        return;
    }
    let expected =
        std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    if ext.ends_with("json") {
        assert_eq!(
            without_stats(actual),
            without_stats(&expected),
            "{name}.{ext}"
        );
    } else {
        assert_eq!(actual, expected, "{name}.{ext}");
    }
}

#[test]
fn text_goldens() {
    for name in FIXTURES {
        check(name, "txt", &normalize(name, &[]));
    }
}

#[test]
fn json_goldens() {
    for name in FIXTURES {
        check(name, "json", &normalize(name, &["--json"]));
    }
}

#[test]
fn trace_goldens() {
    for name in FIXTURES {
        check(name, "trace.txt", &normalize(name, &["--trace"]));
        check(name, "trace.json", &normalize(name, &["--json", "--trace"]));
    }
}

#[test]
fn verify_passes_on_every_fixture() {
    for name in FIXTURES {
        let out = normalize(name, &["--verify"]);
        assert!(!out.contains("# FAIL"), "{name}:\n{out}");
        assert_eq!(out.matches("# PASS").count() % 4, 0, "{name}");
    }
}

#[test]
fn fixture_files_round_trip() {
    for name in FIXTURES {
        let text = std::fs::read_to_string(dir("fixtures").join(format!("{name}.txt"))).unwrap();
        let pf = fpnorm_cli::parse_input(&text).unwrap();
        assert_eq!(
            fpnorm_cli::parse_input(&pf.to_string()).unwrap(),
            pf,
            "{name}"
        );
    }
}
