use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn kicktop(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kicktop")).args(args).env("RUST_LOG", "error").output().expect("launch kicktop")
}

fn stdout(args: &[&str]) -> String {
    let out = kicktop(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn column(csv: &str, name: &str) -> Vec<f64> {
    let mut lines = csv.lines();
    let idx = lines.next().unwrap().split(',').position(|h| h == name).unwrap();
    lines.map(|l| l.split(',').nth(idx).unwrap().parse().unwrap()).collect()
}

#[test]
fn evolve_shows_staircase_and_matches_closed_form() {
    let csv = stdout(&["evolve", "--two-j", "3", "--kappa0", "2.5", "--state", "zero", "--horizon", "40"]);
    let s = column(&csv, "linear_entropy");
    let exact = column(&csv, "analytic_entropy");
    assert_eq!(s.len(), 41);
    for n in 1..=20 {
        assert!((s[2 * n] - s[2 * n - 1]).abs() < 1e-10);
    }
    for (a, b) in s.iter().zip(&exact) {
        assert!((a - b).abs() < 1e-9);
    }
}

#[test]
fn evolve_period_six_at_three_halves_pi() {
    let k = format!("{}", 1.5 * std::f64::consts::PI);
    let csv =
        stdout(&["evolve", "--two-j", "3", "--kappa0", &k, "--theta0", "1.1", "--phi0", "-0.4", "--horizon", "24"]);
    let s = column(&csv, "linear_entropy");
    for n in 6..=24 {
        assert!((s[n] - s[n - 6]).abs() < 1e-10, "n = {n}");
    }
}

#[test]
fn four_qubit_plus_state_stays_near_product_at_weak_kick() {
    let csv = stdout(&["evolve", "--two-j", "4", "--kappa0", "0.1", "--state", "plus-y", "--horizon", "200"]);
    assert!(column(&csv, "linear_entropy").iter().all(|&s| s < 0.01));
}

#[test]
fn scan_covers_the_range_inclusively() {
    let csv = stdout(&["scan", "--two-j", "3", "--kappa0", "0.5:2.5:0.5", "--state", "zero", "--horizon", "2000"]);
    let k = column(&csv, "kappa0");
    assert_eq!(k, vec![0.5, 1.0, 1.5, 2.0, 2.5]);
    assert!(column(&csv, "abs_difference").iter().all(|&d| d < 2e-2));
}

#[test]
fn scan_normalized_in_unit_range() {
    let csv =
        stdout(&["scan", "--two-j", "6", "--kappa0", "1:4:1", "--state", "plus-y", "--horizon", "300", "--normalize"]);
    assert!(column(&csv, "avg_entropy_numeric").iter().all(|&x| (0.0..=1.1).contains(&x)));
}

#[test]
fn surface_range_at_three_halves_pi() {
    let k = format!("{}", 1.5 * std::f64::consts::PI);
    let csv =
        stdout(&["surface", "--two-j", "3", "--kappa0", &k, "--n-theta", "19", "--n-phi", "37", "--horizon", "12"]);
    let v = column(&csv, "avg_entropy");
    assert_eq!(v.len(), 19 * 37);
    assert!(v.iter().all(|&x| x > 7.0 / 24.0 - 1e-9 && x < 1.0 / 3.0 + 1e-9));
    for (a, b) in v.iter().zip(column(&csv, "avg_entropy_analytic")) {
        assert!((a - b).abs() < 1e-9);
    }
}

#[test]
fn husimi_requires_out_dir_and_writes_one_file_per_time() {
    let out = kicktop(&["husimi", "--two-j", "3", "--kappa0", "1", "--state", "zero", "--times", "0,5"]);
    assert_eq!(out.status.code(), Some(1));

    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    stdout(&[
        "husimi",
        "--two-j",
        "3",
        "--kappa0",
        "1",
        "--state",
        "zero",
        "--times",
        "0,5",
        "--n-theta",
        "11",
        "--n-phi",
        "21",
        "--out",
        d,
    ]);
    for n in [0, 5] {
        let text = std::fs::read_to_string(dir.path().join(format!("husimi_n{n}.csv"))).unwrap();
        assert_eq!(text.lines().count(), 1 + 11 * 21);
    }
}

#[test]
fn tunnel_report_and_gate() {
    let v: Value = serde_json::from_str(&stdout(&["tunnel", "--two-j", "4", "--kappa0", "0.1"])).unwrap();
    assert!((v["n_star_approx"].as_f64().unwrap() - 402124.0).abs() <= 1.0);
    assert!(v["tunneling_peak"]["p_minus"].as_f64().unwrap() > 0.99);

    let out = kicktop(&["tunnel", "--two-j", "3", "--kappa0", "0.1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("multiple of 2 pi"));
}

#[test]
fn classical_stability_switches_at_two() {
    let csv = stdout(&["classical", "--mode", "stability", "--kappa0", "1.5:2.5:0.5"]);
    let stable: Vec<&str> = csv.lines().skip(1).map(|l| l.split(',').nth(2).unwrap()).collect();
    assert_eq!(stable, ["true", "true", "false"]);
}

#[test]
fn rmt_is_deterministic() {
    let args = ["rmt", "--two-j", "4", "--samples", "5000", "--seed", "9"];
    assert_eq!(stdout(&args), stdout(&args));
    assert_eq!(stdout(&args).lines().count(), 2);
}

#[test]
fn tomo_simulate_then_reconstruct() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.toml");
    std::fs::write(&cfg, "[tomo]\nf0 = [0.98, 0.98, 0.96]\nf1 = [0.92, 0.94, 0.87]\ntarget = \"ghz\"\n").unwrap();
    let data = dir.path().join("ghz.csv");
    let (c, d) = (cfg.to_str().unwrap(), data.to_str().unwrap());
    stdout(&["tomo", "--config", c, "--simulate", "--out", d]);
    let v: Value = serde_json::from_str(&stdout(&["tomo", "--config", c, "--input", d])).unwrap();
    assert!(v["fidelity_vs_target"].as_f64().unwrap() > 0.999999);
    assert!((v["trace"].as_f64().unwrap() - 1.0).abs() < 1e-12);
}

#[test]
fn tomo_reports_bad_rows_by_line() {
    let dir = tempfile::tempdir().unwrap();
    let data = dir.path().join("bad.csv");
    stdout(&["tomo", "--simulate", "--target", "w", "--out", data.to_str().unwrap()]);
    let text = std::fs::read_to_string(&data).unwrap();
    let mut lines: Vec<String> = text.lines().map(String::from).collect();
    lines[4] = lines[4].replacen(",0", ",abc", 1);
    std::fs::write(&data, lines.join("\n")).unwrap();
    let out = kicktop(&["tomo", "--input", data.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 5"), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn config_file_and_flag_override() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.toml");
    std::fs::write(&cfg, "two_j = 3\nkappa0 = 0.5\nstate = \"zero\"\nhorizon = 3\n").unwrap();
    let c = cfg.to_str().unwrap();
    assert_eq!(stdout(&["evolve", "--config", c]).lines().count(), 5);
    assert_eq!(stdout(&["evolve", "--config", c, "--horizon", "6"]).lines().count(), 8);

    std::fs::write(&cfg, "two_j = 3\nkappa = 0.5\n").unwrap();
    let out = kicktop(&["evolve", "--config", c]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("kappa"));
}

#[test]
fn json_output_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sub").join("evolve.json");
    let p = path.to_str().unwrap();
    stdout(&[
        "evolve",
        "--two-j",
        "3",
        "--kappa0",
        "1",
        "--state",
        "zero",
        "--horizon",
        "2",
        "--format",
        "json",
        "--out",
        p,
    ]);
    let v: Value = serde_json::from_str(&std::fs::read_to_string(Path::new(p)).unwrap()).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 3);
    assert_eq!(v[0]["n"], 0);
}

#[test]
fn invalid_parameters_exit_one() {
    assert_eq!(kicktop(&["evolve", "--two-j", "0", "--kappa0", "1", "--state", "zero"]).status.code(), Some(1));
    assert_eq!(kicktop(&["evolve", "--two-j", "3", "--kappa0", "-1", "--state", "zero"]).status.code(), Some(1));
    assert_eq!(
        kicktop(&["evolve", "--two-j", "3", "--kappa0", "1", "--state", "zero", "--theta0", "0.3"]).status.code(),
        Some(1)
    );
}

#[test]
fn injected_fault_fails_verification() {
    let out = kicktop(&["verify", "--inject-fault", "beta-sign"]);
    assert_eq!(out.status.code(), Some(2));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let block = v["checks"].as_array().unwrap().iter().find(|c| c["id"] == "block_power").unwrap();
    assert_eq!(block["passed"], false);
    assert!(block["observed"].as_str().unwrap().contains("exact3 block-power mismatch"));
}
