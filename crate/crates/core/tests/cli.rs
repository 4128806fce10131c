use std::collections::HashSet;
use std::path::Path;
use std::process::{Command, Output};

use tautilt::error::Error;
use tautilt::io::files::{load_algebra, load_module, load_module_over};
use tautilt::io::report::{overall_verdict, reports_to_json, reports_to_tsv, Provenance, Report, Verdict};
use tautilt::io::scenarios::{run_scenario, run_scenarios, SCENARIOS};
use tautilt::rep::{is_indecomposable, is_isomorphic};

fn tautilt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tautilt")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn fixture(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name).to_string_lossy().into_owned()
}

/// Node and edge sets of a DOT digraph as emitted by the quiver export.
fn parse_dot(dot: &str) -> (HashSet<String>, Vec<(String, String)>) {
    let mut nodes = HashSet::new();
    let mut edges = Vec::new();
    for line in dot.lines().map(str::trim) {
        if let Some((s, t)) = line.strip_suffix(';').and_then(|l| l.split_once(" -> ")) {
            edges.push((s.to_string(), t.to_string()));
        } else if let Some((n, _)) = line.split_once(" [label=") {
            nodes.insert(n.to_string());
        }
    }
    (nodes, edges)
}

#[test]
fn gldim_of_a_fixture_file() {
    let o = tautilt(&["gldim", "-A", &fixture("a3_zero.alg")]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "2");
    // bare fixture names resolve to the bundled files
    assert_eq!(stdout(&tautilt(&["gldim", "-A", "a4_two_zeros.alg"])).trim(), "3");
}

#[test]
fn check_reports_booleans() {
    let o = tautilt(&["check", "tau-rigid", "-A", "two_cycle.alg", "-M", "two_cycle_s2_p2.mod"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "true");
    let o = tautilt(&["check", "tilting", "-A", "two_cycle.alg", "-M", "two_cycle_s2_p2.mod"]);
    assert_eq!(stdout(&o).trim(), "false");
}

#[test]
fn missing_inputs_exit_nonzero() {
    let o = tautilt(&["gldim", "-A", "no_such_algebra.alg"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(!o.stderr.is_empty());
    assert_eq!(tautilt(&["verify", "paper", "--only", "no-such-scenario"]).status.code(), Some(1));
}

#[test]
fn verify_single_scenario_emits_the_quiver() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_string_lossy().into_owned();
    let o = tautilt(&["verify", "paper", "--only", "ex2.9", "--out", &out]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).starts_with("# scenario ex2.9\tpass\n"));
    let dot = std::fs::read_to_string(dir.path().join("two_cycle_stt.dot")).unwrap();
    let (nodes, edges) = parse_dot(&dot);
    assert_eq!(nodes.len(), 6);
    assert_eq!(edges.len(), 6);
    let sources: Vec<_> = nodes.iter().filter(|n| !edges.iter().any(|(_, t)| t == *n)).collect();
    let sinks: Vec<_> = nodes.iter().filter(|n| !edges.iter().any(|(s, _)| s == *n)).collect();
    assert_eq!((sources.len(), sinks.len()), (1, 1));
    assert!(dir.path().join("reports.tsv").exists());
    let json: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(dir.path().join("reports.json")).unwrap()).unwrap();
    assert_eq!(json[0]["scenario"], "ex2.9");
}

#[test]
fn stt_quiver_dot_output() {
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("a2.dot");
    let o = tautilt(&["stt-quiver", "-A", "a2.alg", "--dot", &dot.to_string_lossy()]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("3 indecomposable τ-rigid modules, 5 support τ-tilting pairs\n"));
    let (nodes, edges) = parse_dot(&std::fs::read_to_string(&dot).unwrap());
    // support τ-tilting pairs of A2: Catalan(3)
    assert_eq!(nodes.len(), 5);
    assert_eq!(edges.len(), 5);
}

#[test]
fn enumerate_export_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("cat");
    let o = tautilt(&["enumerate", "-A", "a4.alg", "--export", &out.to_string_lossy()]);
    assert!(o.status.success());
    let index = std::fs::read_to_string(out.join("index.tsv")).unwrap();
    let files: Vec<&str> = index.lines().skip(1).map(|l| l.split('\t').next().unwrap()).collect();
    assert_eq!(files.len(), 10);
    load_algebra(&out.join("algebra.alg")).unwrap();
    for f in files {
        let (m, _) = load_module(&out.join(f)).unwrap();
        assert!(is_indecomposable(&m).unwrap(), "{f}");
    }
}

#[test]
fn tau_round_trips_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let alg = fixture("auslander.alg");
    let m = fixture("auslander_m.mod");
    let t = dir.path().join("tau.mod");
    assert!(tautilt(&["tau", "-A", &alg, "-M", &m, "--out", &t.to_string_lossy()]).status.success());
    let back = tautilt(&["tau-inv", "-A", &alg, "-M", &t.to_string_lossy()]);
    assert!(back.status.success());
    let printed = dir.path().join("back.mod");
    std::fs::write(&printed, stdout(&back)).unwrap();
    // [2;3] is not projective, so τ⁻¹τ returns it
    let a = load_algebra(Path::new(&alg)).unwrap();
    let x = load_module_over(&printed, &a).unwrap();
    let y = load_module_over(Path::new(&m), &a).unwrap();
    assert!(is_isomorphic(&x, &y).unwrap());
    assert!(!is_isomorphic(&load_module_over(&t, &a).unwrap(), &y).unwrap());
}

#[test]
fn unknown_scenario_is_an_error() {
    assert!(matches!(run_scenario("thm9.9"), Err(Error::UnknownScenario(_))));
}

#[test]
fn verdicts_order_worst_first() {
    let mut r = Report::new("toy");
    assert_eq!(r.verdict(), Verdict::Unknown);
    r.check("one", 1, 1, Provenance::Elementary);
    assert_eq!(r.verdict(), Verdict::Pass);
    r.unknown("two", 2, "?", Provenance::CrossCheck);
    assert_eq!(r.verdict(), Verdict::Unknown);
    r.check("three\twith tab", 3, 4, Provenance::Stated);
    assert_eq!(r.verdict(), Verdict::Fail);
    assert_eq!(r.failures().count(), 2);
    let tsv = r.to_tsv();
    assert_eq!(tsv.lines().next(), Some("# scenario toy\tfail"));
    assert!(tsv.lines().skip(1).all(|l| l.split('\t').count() == 5));
    assert!(tsv.contains("three with tab\t3\t4\tfail\tstated"));
    let json: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
    assert_eq!(json["claims"][1]["provenance"], "cross-check");
    assert!(json.get("wall_time").is_none());
    assert_eq!(overall_verdict(&[r]), Verdict::Fail);
}

#[test]
fn batch_reports_are_deterministic_and_ordered() {
    let names = ["ar-duality", "ex2.10", "thm3.7"];
    let a = run_scenarios(&names).unwrap();
    let b = run_scenarios(&names).unwrap();
    assert_eq!(a.iter().map(|r| r.scenario.as_str()).collect::<Vec<_>>(), names);
    assert_eq!(reports_to_tsv(&a), reports_to_tsv(&b));
    assert_eq!(reports_to_json(&a), reports_to_json(&b));
    assert!(a.iter().all(|r| r.verdict() == Verdict::Pass));
    assert_eq!(SCENARIOS.len(), 14);
}

/// Set `TAUTILT_BLESS=1` to rewrite the golden file after an intended change.
#[test]
fn full_suite_matches_the_golden_report() {
    let golden = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden/verify_paper.tsv");
    let tsv = reports_to_tsv(&run_scenarios(SCENARIOS).unwrap());
    if std::env::var_os("TAUTILT_BLESS").is_some() {
        std::fs::write(&golden, &tsv).unwrap();
    }
    assert_eq!(tsv, std::fs::read_to_string(&golden).unwrap());
}
