//! End-to-end tests of the installed binary: exit codes, file outputs,
//! preset/config equivalence and dump round-tripping.

use std::fs;
use std::path::Path;
use std::process::Command;

use nwse::algebra::{parse_series, DerivationMode, TimeSeries};
use nwse::cases::{preset, CaseId};
use nwse::engine::solve;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_nwse"))
}

fn run(args: &[&str]) -> std::process::Output {
    bin().args(args).output().expect("binary runs")
}

#[test]
fn case_succeeds_and_writes_artifacts() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&["case", "I", "--order", "4", "--iters", "4", "--out", dir.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    for name in ["increments.txt", "totals.txt", "sdomain.txt", "verify.txt"] {
        assert!(dir.path().join(name).exists(), "{name} missing");
    }
}

#[test]
fn unknown_case_is_exit_2() {
    let out = run(&["case", "IV"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn malformed_config_is_exit_2_with_location() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("bad.json");
    fs::write(&cfg, "{ not json").unwrap();
    let out = run(&["solve", "--config", cfg.path_str(), "--out", dir.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line"));
}

#[test]
fn failed_verification_is_exit_1() {
    // coarse grid: the spatial discretization error alone exceeds the gate
    let dir = tempfile::tempdir().unwrap();
    let out = run(&[
        "verify", "III", "--order", "4", "--iters", "4", "--nx", "21", "--tmax", "0.2", "--nt",
        "40", "--out", dir.path().to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    let report = String::from_utf8_lossy(&out.stdout).to_string();
    assert!(report.contains("result: FAIL"));
}

#[test]
fn empty_grid_is_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&[
        "plot", "I", "--nx", "0", "--out", dir.path().to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn preset_and_equivalent_config_are_byte_identical() {
    let case_dir = tempfile::tempdir().unwrap();
    let solve_dir = tempfile::tempdir().unwrap();
    let out = run(&["case", "I", "--order", "5", "--iters", "5", "--out", case_dir.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));

    let cfg = case_dir.path().join("config.json");
    fs::write(
        &cfg,
        r#"{"problem": {"a": "5", "b": "2", "c": "-1", "n": 2,
             "mode": "constant", "phi": "(v)", "order": 5, "iters": 5}}"#,
    )
    .unwrap();
    let out = run(&["solve", "--config", cfg.path_str(), "--out", solve_dir.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));

    for name in ["increments.txt", "totals.txt", "sdomain.txt", "verify.txt"] {
        let a = fs::read(case_dir.path().join(name)).unwrap();
        let b = fs::read(solve_dir.path().join(name)).unwrap();
        assert_eq!(a, b, "{name} differs between case and solve");
    }
}

/// Splits a totals/increments dump into its per-iteration series blocks and
/// re-parses each through the canonical grammar.
fn reparse_blocks(text: &str, mode: &DerivationMode, trunc: usize) -> Vec<TimeSeries> {
    let mut blocks: Vec<String> = Vec::new();
    for line in text.lines() {
        if line.starts_with('#') || line.trim().is_empty() {
            continue;
        }
        if line.ends_with(':') {
            blocks.push(String::new());
        } else if let Some(block) = blocks.last_mut() {
            block.push_str(line);
            block.push('\n');
        }
    }
    blocks
        .iter()
        .map(|b| parse_series(b, mode, trunc).expect("dump re-parses"))
        .collect()
}

#[test]
fn dumps_reparse_to_the_computed_series() {
    for (id, mode) in [
        (CaseId::I, DerivationMode::Constant),
        (CaseId::III, DerivationMode::exponential(1)),
    ] {
        let dir = tempfile::tempdir().unwrap();
        let out = run(&["case", id.slug(), "--order", "4", "--iters", "4", "--out", dir.path().to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0));
        let report = solve(&preset(id, 4, 4).unwrap()).unwrap();

        let totals = fs::read_to_string(dir.path().join("totals.txt")).unwrap();
        assert_eq!(reparse_blocks(&totals, &mode, 4), report.totals, "{id} totals");
        let incs = fs::read_to_string(dir.path().join("increments.txt")).unwrap();
        assert_eq!(reparse_blocks(&incs, &mode, 4), report.increments, "{id} increments");
    }
}

#[test]
fn plot_initial_row_equals_lambda() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&[
        "plot", "I", "--order", "4", "--iters", "4", "--axes", "x-t", "--lambda", "0.1",
        "--nx", "11", "--tmax", "0.5", "--nt", "10", "--out", dir.path().to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let csv = fs::read_to_string(dir.path().join("solution.csv")).unwrap();
    let mut rows = 0;
    for line in csv.lines().skip(1) {
        let cols: Vec<f64> = line.split(',').map(|c| c.parse().unwrap()).collect();
        rows += 1;
        if cols[1] == 0.0 {
            assert_eq!(cols[2], 0.1, "t = 0 row must equal lambda");
        }
    }
    assert_eq!(rows, 11 * 11, "nx * (nt + 1) data rows");
}

#[test]
fn plot_case3_value_at_origin() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&[
        "plot", "III", "--order", "4", "--iters", "4", "--xmin", "-1", "--xmax", "1",
        "--nx", "3", "--tmax", "0.1", "--nt", "2", "--out", dir.path().to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let csv = fs::read_to_string(dir.path().join("solution.csv")).unwrap();
    let origin = csv
        .lines()
        .skip(1)
        .map(|l| l.split(',').map(|c| c.parse::<f64>().unwrap()).collect::<Vec<_>>())
        .find(|c| c[0] == 0.0 && c[1] == 0.0)
        .expect("origin sample present");
    let expected = (2.0f64 / 3.0).sqrt() / 2.0; // ~0.40824829
    assert!((origin[2] - expected).abs() < 1e-12, "{} vs {expected}", origin[2]);
}

trait PathStr {
    fn path_str(&self) -> &str;
}

impl PathStr for Path {
    fn path_str(&self) -> &str {
        self.to_str().unwrap()
    }
}

impl PathStr for std::path::PathBuf {
    fn path_str(&self) -> &str {
        self.to_str().unwrap()
    }
}
