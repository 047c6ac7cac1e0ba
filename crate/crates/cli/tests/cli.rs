//! End-to-end tests of the `acrkit` binary: exit codes, report content,
//! JSON byte-stability, seed plumbing, and trace replay.

use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_acrkit"))
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

fn stdout(out: &Output) -> &str {
    std::str::from_utf8(&out.stdout).unwrap()
}

fn stderr(out: &Output) -> &str {
    std::str::from_utf8(&out.stderr).unwrap()
}

const GSF1: &str = "B -> A\nA + B -> 2B\n";
const DISGUISED: &str = "5A + B -> 7A\n5A + 3B -> A + 5B\n";
const NO_ACR: &str = "3A + 5B -> A + 6B\nA + 3B -> 3A + B\n";

#[test]
fn analyze_reports_stable_acr() {
    let dir = TempDir::new().unwrap();
    let file = write(&dir, "g.txt", GSF1);
    let out = bin().args(["analyze", &file]).output().unwrap();
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("status: StableACR"), "{text}");
    assert!(text.contains("witness: A"), "{text}");
    assert!(text.contains("deficiency: 1"), "{text}");
    assert!(text.contains("value: k1/k2"), "{text}");
    assert!(text.contains("family: GeneralizedSF(1)"), "{text}");
}

#[test]
fn analyze_reports_no_acr_for_independent_reactions() {
    let dir = TempDir::new().unwrap();
    let file = write(&dir, "n.txt", NO_ACR);
    let out = bin().args(["analyze", &file]).output().unwrap();
    assert!(out.status.success());
    assert!(stdout(&out).contains("status: NoACR"));
}

#[test]
fn analyze_json_is_byte_stable() {
    let dir = TempDir::new().unwrap();
    let file = write(&dir, "g.txt", GSF1);
    let run = || bin().args(["analyze", &file, "--json", "--samples", "8", "--seed", "5"]).output().unwrap();
    let a = run();
    let b = run();
    assert!(a.status.success(), "{}", stderr(&a));
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert!(text.contains("\"schema\": \"acrkit/report/v1\""), "{text}");
    assert!(text.contains("\"status\": \"StableACR\""), "{text}");
    assert!(text.contains("\"always_at_most_one_root\": true"), "{text}");
}

#[test]
fn analyze_rejects_malformed_input() {
    let dir = TempDir::new().unwrap();
    let file = write(&dir, "bad.txt", "A -> -> B\n");
    let out = bin().args(["analyze", &file]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).starts_with("error:"));

    let empty = write(&dir, "empty.txt", "");
    let out = bin().args(["analyze", &empty]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));

    let out = bin().args(["analyze", "/nonexistent/net.txt"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn canonicalize_trace_replays_through_ops() {
    let dir = TempDir::new().unwrap();
    let file = write(&dir, "d.txt", DISGUISED);
    let trace = dir.path().join("trace.json");
    let out = bin()
        .args(["canonicalize", &file, "--trace-out", trace.to_str().unwrap()])
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("family: GeneralizedSF(2)"), "{text}");
    assert!(text.contains("5. translate by (-1, -4)"), "{text}");
    assert!(Path::new(&trace).exists());

    let replay = bin()
        .args(["ops", &file, trace.to_str().unwrap(), "--json"])
        .output()
        .unwrap();
    assert!(replay.status.success(), "{}", stderr(&replay));
    let json: serde_json::Value = serde_json::from_str(stdout(&replay)).unwrap();
    assert_eq!(json["steps_applied"], 5);
    let lines: Vec<&str> = json["network"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap())
        .collect();
    assert_eq!(lines, vec!["B -> A", "2A + B -> A + 2B"]);
}

#[test]
fn canonicalize_classification_failures_exit_three() {
    let dir = TempDir::new().unwrap();
    let file = write(&dir, "n.txt", NO_ACR);
    let out = bin().args(["canonicalize", &file]).output().unwrap();
    assert_eq!(out.status.code(), Some(3), "{}", stderr(&out));

    let wrong_shape = write(&dir, "w.txt", "0 -> A\nA -> 0\n2A -> 3A\n");
    let out = bin().args(["canonicalize", &wrong_shape]).output().unwrap();
    assert_eq!(out.status.code(), Some(1), "{}", stderr(&out));
}

#[test]
fn diagram_formats() {
    let dir = TempDir::new().unwrap();
    let file = write(&dir, "d.txt", DISGUISED);
    let dot = bin().args(["diagram", &file]).output().unwrap();
    assert!(dot.status.success());
    assert!(stdout(&dot).contains("digraph reaction_graph"));

    let tikz = bin()
        .args(["diagram", &file, "--format", "tikz-coords"])
        .output()
        .unwrap();
    assert!(tikz.status.success());
    let text = stdout(&tikz);
    assert!(text.contains("\\draw[->] (5,1) -- (7,0);"), "{text}");
    assert!(text.contains("\\draw[->] (5,3) -- (1,5);"), "{text}");

    let svg = bin().args(["diagram", &file, "--format", "svg"]).output().unwrap();
    assert!(svg.status.success());
    assert!(stdout(&svg).starts_with("<svg"));

    let wide = write(&dir, "wide.txt", "A + B -> C + D\nC + D -> A + B\n");
    let out = bin()
        .args(["diagram", &wide, "--format", "tikz-coords"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("TooManySpeciesForCoordinatePlot"));
    let dot_wide = bin().args(["diagram", &wide]).output().unwrap();
    assert!(dot_wide.status.success());
}

#[test]
fn oracle_seed_comes_from_flag_or_environment() {
    let dir = TempDir::new().unwrap();
    let file = write(&dir, "g.txt", GSF1);
    let base = |extra: &mut Command| -> Output {
        extra
            .args(["oracle", &file, "--species", "A", "--samples", "6", "--json"])
            .output()
            .unwrap()
    };
    let flagged = base(bin().arg("--seed").arg("7").env_remove("ACRKIT_SEED"));
    let from_env = base(bin().env("ACRKIT_SEED", "7"));
    let flag_beats_env = base(bin().arg("--seed").arg("7").env("ACRKIT_SEED", "3"));
    let other_seed = base(bin().arg("--seed").arg("3").env_remove("ACRKIT_SEED"));
    assert!(flagged.status.success(), "{}", stderr(&flagged));
    assert_eq!(flagged.stdout, from_env.stdout);
    assert_eq!(flagged.stdout, flag_beats_env.stdout);
    assert_ne!(flagged.stdout, other_seed.stdout);
    assert!(stdout(&flagged).contains("\"always_at_most_one_root\": true"));
}

#[test]
fn oracle_rejects_uncovered_networks() {
    let dir = TempDir::new().unwrap();
    let file = write(&dir, "c.txt", "0 -> A\nA -> B\nB -> 0\n");
    let out = bin()
        .args(["oracle", &file, "--species", "A", "--samples", "3"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("oracle cannot cover"));
}

#[test]
fn enumerate_tallies_are_deterministic() {
    let args = [
        "enumerate",
        "--species",
        "1",
        "--reactions",
        "2",
        "--max-coeff",
        "2",
        "--classify",
        "--json",
    ];
    let a = bin().args(args).output().unwrap();
    let b = bin().args(args).output().unwrap();
    assert!(a.status.success(), "{}", stderr(&a));
    assert_eq!(a.stdout, b.stdout);
    let json: serde_json::Value = serde_json::from_str(stdout(&a)).unwrap();
    assert_eq!(json["count"], 15);
    let sum: u64 = json["statuses"]
        .as_object()
        .unwrap()
        .values()
        .map(|v| v.as_u64().unwrap())
        .sum();
    assert_eq!(sum, 15);
}

#[test]
fn ops_surfaces_step_index_on_invalid_traces() {
    let dir = TempDir::new().unwrap();
    let file = write(&dir, "g.txt", GSF1);
    let trace = write(
        &dir,
        "trace.json",
        r#"[{"op": "stretch", "reaction": 9, "factor": "2"}]"#,
    );
    let out = bin().args(["ops", &file, &trace]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("step 1"), "{}", stderr(&out));
}

#[test]
fn ops_transports_rates() {
    let dir = TempDir::new().unwrap();
    let file = write(&dir, "g.txt", GSF1);
    let trace = write(
        &dir,
        "trace.json",
        r#"[{"op": "stretch", "reaction": 0, "factor": "1/2"}]"#,
    );
    let out = bin()
        .args(["ops", &file, &trace, "--rates", "3,4", "--json"])
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", stderr(&out));
    let json: serde_json::Value = serde_json::from_str(stdout(&out)).unwrap();
    let rates: Vec<&str> = json["rates"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap())
        .collect();
    assert_eq!(rates, vec!["6", "4"]);
}
