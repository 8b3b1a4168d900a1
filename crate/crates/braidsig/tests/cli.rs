use std::process::{Command, Output};

use braidsig::cli::{GoeritzDoc, SigDoc};
use braidsig::verifier::{FamilyRow, VerificationSummary, WordRecord};
use serde::de::DeserializeOwned;
use serde::Serialize;

fn braidsig(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_braidsig"))
        .args(args)
        .env_remove("BRAIDSIG_WORKERS")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

/// Parses and re-serializes; the text must come back unchanged.
fn round_trip<T: DeserializeOwned + Serialize>(line: &str) -> T {
    let doc: T = serde_json::from_str(line).unwrap();
    assert_eq!(serde_json::to_string(&doc).unwrap(), line);
    doc
}

#[test]
fn sig_text() {
    let out = braidsig(&["sig", "B2:1,1,1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "σ=-2 b₁=2 det=3 components=1 genus_lb=1\n");
}

#[test]
fn sig_accepts_family_specs_and_omits_genus_for_links() {
    let out = braidsig(&["sig", "beta_tilde:1"]);
    assert_eq!(stdout(&out), "σ=-6 b₁=10 det=15 components=1 genus_lb=3\n");
    let out = braidsig(&["sig", "B2:1,1"]);
    assert_eq!(stdout(&out), "σ=-1 b₁=1 det=2 components=2\n");
}

#[test]
fn sig_json_round_trips() {
    let out = braidsig(&["sig", "B3:1,2,2,2,2", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: SigDoc = round_trip(stdout(&out).trim_end());
    assert_eq!((doc.b1, doc.sigma), (3, -3));
    assert!(doc.checks.iter().any(|c| c == "three-strand-bound"));
}

#[test]
fn dump_diagram_is_stable() {
    let a = braidsig(&["sig", "B2:1,1,1", "--dump-diagram"]);
    let b = braidsig(&["sig", "B2:1,1,1", "--dump-diagram"]);
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert_eq!(text.lines().filter(|l| l.starts_with('c')).count(), 3);
    assert_eq!(text.lines().filter(|l| l.starts_with('f')).count(), 5);
    assert!(text.starts_with("c0 col=1 ports=(N:"));
}

#[test]
fn goeritz_output() {
    let out = braidsig(&["goeritz", "B2:1,1,1"]);
    let text = stdout(&out);
    assert!(text.contains("μ=3\n"));
    assert!(text.contains("\n3\n"));
    assert!(text.ends_with("σ(G)=1 σ=-2\n"));
    let out = braidsig(&["goeritz", "B2:1,1,1", "--format", "json"]);
    let doc: GoeritzDoc = round_trip(stdout(&out).trim_end());
    assert_eq!(doc.matrix, vec![vec![3]]);
    assert_eq!((doc.mu, doc.sigma), (3, -2));
}

#[test]
fn seifert_output() {
    let out = braidsig(&["seifert", "B2:1,1,1"]);
    assert_eq!(
        stdout(&out),
        "word=B2:1,1,1\nV=\n-1 1\n0 -1\nV+Vᵀ=\n-2 1\n1 -2\nσ=-2 det=3\n"
    );
}

#[test]
fn families_csv() {
    let out = braidsig(&["families", "--n", "2", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let rows: Vec<FamilyRow> = reader.deserialize().map(|r| r.unwrap()).collect();
    assert_eq!(rows.len(), 8);
    assert!(rows.iter().all(|r| r.ok));
    assert!(rows
        .iter()
        .all(|r| (r.neg_sigma, r.b1) == (r.expected_neg_sigma, r.expected_b1)));
}

#[test]
fn verify_summary_and_results() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("results.jsonl");
    let out = braidsig(&[
        "verify",
        "--strands",
        "4",
        "--max-len",
        "8",
        "--json",
        "--results",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let summary: VerificationSummary = round_trip(stdout(&out).trim_end());
    assert!(summary.violations.is_empty());

    let lines: Vec<String> = std::fs::read_to_string(&path)
        .unwrap()
        .lines()
        .map(String::from)
        .collect();
    assert_eq!(lines.len() as u64, summary.canonical_classes + 1);
    for line in &lines[..lines.len() - 1] {
        let rec: WordRecord = round_trip(line);
        assert!(rec.checks.iter().any(|c| c == "agreement"));
    }
    let last: VerificationSummary = round_trip(lines.last().unwrap());
    assert_eq!(last, summary);
}

#[test]
fn same_config_same_bytes() {
    let one = braidsig(&[
        "verify",
        "--strands",
        "3",
        "--max-len",
        "9",
        "--workers",
        "1",
        "--json",
    ]);
    let again = braidsig(&[
        "verify",
        "--strands",
        "3",
        "--max-len",
        "9",
        "--workers",
        "1",
        "--json",
    ]);
    let many = braidsig(&[
        "verify",
        "--strands",
        "3",
        "--max-len",
        "9",
        "--workers",
        "4",
        "--json",
    ]);
    assert_eq!(one.stdout, again.stdout);
    assert_eq!(one.stdout, many.stdout);
    let a = braidsig(&["saddle", "--seed", "9", "--json"]);
    let b = braidsig(&["saddle", "--seed", "9", "--json"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.status.code(), Some(0));
}

#[test]
fn workers_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_braidsig"))
        .args(["verify", "--strands", "3", "--max-len", "5"])
        .env("BRAIDSIG_WORKERS", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let out = Command::new(env!("CARGO_BIN_EXE_braidsig"))
        .args(["verify", "--strands", "3", "--max-len", "5"])
        .env("BRAIDSIG_WORKERS", "many")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn targeted_checks() {
    let out = braidsig(&["twist-shift", "B3:1,2", "--k", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("holds=true"));
    let out = braidsig(&["saddle", "beta_tilde:1", "--position", "0"]);
    assert_eq!(
        stdout(&out),
        "B4:2,1,3,2,2,1,3,2,2,1,3,2,2 position=0 σ=-6 σ_smoothed=-5 holds=true\n"
    );
    let out = braidsig(&["first-row", "B4:1,3,2,1,3,2,2,1,3,2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("submatrix_agrees=true"));
    let out = braidsig(&["appendix", "B5:1,1,2,3,4,4"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).ends_with("holds=true\n"));
    let out = braidsig(&["additivity", "B4:1,1,1,3,3"]);
    assert!(stdout(&out).contains("σ_seifert=-3 σ_goeritz=-3 holds=true"));
}

#[test]
fn first_row_literal_reading_is_reported_as_failure() {
    let out = braidsig(&["first-row", "B4:1,3,2,1,3,2,2,1,3,2", "--reading", "kept"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stdout(&out).contains("submatrix_agrees=false"));
}

#[test]
fn usage_errors() {
    for args in [
        vec!["sig", "B2:1,2"],
        vec!["sig", "nonsense"],
        vec!["verify", "--strands", "6", "--max-len", "2"],
        vec!["verify", "--strands", "4", "--max-len", "20"],
        vec!["twist-shift", "B4:1,2"],
        vec!["appendix", "B4:1,1"],
        vec!["additivity", "B3:1,2"],
        vec!["goeritz", "B2:1", "--format", "csv"],
        vec!["families", "--n", "0"],
        vec!["bogus"],
    ] {
        let out = braidsig(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn help_exits_zero() {
    assert_eq!(braidsig(&["--help"]).status.code(), Some(0));
}
