//! End-to-end behavior of the `sortnet` binary: exit codes, file formats,
//! and determinism contracts.

use std::fs;
use std::path::Path;
use std::process::Command;

fn sortnet() -> Command {
    Command::new(env!("CARGO_BIN_EXE_sortnet"))
}

#[test]
fn sample_is_byte_identical_for_fixed_seed() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for path in [&a, &b] {
        let status = sortnet()
            .args(["sample", "--n", "20", "--seed", "99", "--out"])
            .arg(path)
            .status()
            .unwrap();
        assert!(status.success());
    }
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
    let text = fs::read_to_string(&a).unwrap();
    assert!(text.contains("\"n\": 20"));
    assert!(text.contains("\"metadata\""));
    assert!(!text.contains("wall_time"));
}

#[test]
fn sample_n1_is_the_empty_network() {
    let out = sortnet().args(["sample", "--n", "1"]).output().unwrap();
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["n"], 1);
    assert_eq!(value["swaps"].as_array().unwrap().len(), 0);
}

#[test]
fn sample_n3_yields_a_valid_network() {
    let out = sortnet()
        .args(["sample", "--n", "3", "--seed", "5"])
        .output()
        .unwrap();
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let swaps: Vec<u64> = value["swaps"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_u64().unwrap())
        .collect();
    assert!(swaps == [1, 2, 1] || swaps == [2, 1, 2]);
}

#[test]
fn enumerate_refuses_oversized_n_with_usage_exit() {
    let out = sortnet().args(["enumerate", "--n", "7"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("exceeds"), "stderr: {err}");
}

#[test]
fn enumerate_small_n_lists_all_networks() {
    let out = sortnet().args(["enumerate", "--n", "3"]).output().unwrap();
    assert!(out.status.success());
    let lines: Vec<&str> = std::str::from_utf8(&out.stdout)
        .unwrap()
        .lines()
        .collect();
    assert_eq!(lines.len(), 3); // metadata line + two networks
    assert_eq!(lines[1], "[1,2,1]");
    assert_eq!(lines[2], "[2,1,2]");
}

#[test]
fn double_flip_odd_n_is_a_usage_error() {
    let out = sortnet().args(["double-flip", "--n", "5"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn double_flip_reports_exact_quarter_at_n4() {
    let out = sortnet().args(["double-flip", "--n", "4"]).output().unwrap();
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["probability"]["num"], "1");
    assert_eq!(value["probability"]["den"], "4");
}

#[test]
fn first_swap_dist_emits_exact_rationals() {
    let out = sortnet()
        .args(["first-swap-dist", "--n", "4"])
        .output()
        .unwrap();
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let dist = value["distribution"].as_array().unwrap();
    assert_eq!(dist.len(), 3);
    assert_eq!(dist[0]["num"], "5");
    assert_eq!(dist[0]["den"], "16");
    assert_eq!(dist[1]["num"], "3");
    assert_eq!(dist[1]["den"], "8");
}

#[test]
fn unknown_flags_exit_with_usage_code() {
    let out = sortnet().args(["sample", "--wrong"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

fn write_sample(dir: &Path, n: usize, seed: u64) -> std::path::PathBuf {
    let path = dir.join(format!("net_{n}_{seed}.json"));
    let status = sortnet()
        .args(["sample", "--n", &n.to_string(), "--seed", &seed.to_string(), "--out"])
        .arg(&path)
        .status()
        .unwrap();
    assert!(status.success());
    path
}

#[test]
fn stats_bundle_has_versioned_schemas_and_expected_row_counts() {
    let dir = tempfile::tempdir().unwrap();
    let net = write_sample(dir.path(), 12, 7);
    let out_dir = dir.path().join("stats");
    let status = sortnet()
        .args(["stats"])
        .arg(&net)
        .arg("--out")
        .arg(&out_dir)
        .status()
        .unwrap();
    assert!(status.success());

    let eta = fs::read_to_string(out_dir.join("eta.csv")).unwrap();
    let lines: Vec<&str> = eta.lines().collect();
    assert!(lines[0].starts_with("# schema: eta v1 artifact="));
    assert!(lines[1].starts_with("# metadata: "));
    assert_eq!(lines[2], "k,t,y");
    assert_eq!(lines.len(), 3 + 66); // N = 66 swap rows

    let mu = fs::read_to_string(out_dir.join("mu.csv")).unwrap();
    // 11 time slices × 12 particles
    assert_eq!(mu.lines().count(), 3 + 11 * 12);
    // μ_0 is the identity diagonal
    let first_point = mu.lines().nth(3).unwrap();
    let fields: Vec<f64> = first_point
        .split(',')
        .map(|v| v.parse().unwrap())
        .collect();
    assert_eq!(fields[0], 0.0);
    assert!((fields[1] - fields[2]).abs() < 1e-15);

    for name in ["trajectories.csv", "sliding.csv"] {
        assert!(out_dir.join(name).exists(), "{name} missing");
    }
    // trajectories cover every integer time step by default
    let traj = fs::read_to_string(out_dir.join("trajectories.csv")).unwrap();
    assert_eq!(traj.lines().count(), 3 + 12 * 67); // 12 particles × (N+1) times
}

#[test]
fn check_passes_sampled_and_fails_bubble_sort() {
    let dir = tempfile::tempdir().unwrap();
    let net = write_sample(dir.path(), 100, 3);
    let out = sortnet()
        .args(["check"])
        .arg(&net)
        .args(["--eps", "0.35", "--grid", "80"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "sampled network should pass");

    // bubble sort at the same size violates the octagon bound
    let bubble = sortnet_core::perm::bubble_sort_network(100);
    let bubble_path = dir.path().join("bubble.json");
    fs::write(
        &bubble_path,
        serde_json::to_string(&serde_json::json!({
            "n": 100,
            "swaps": bubble.swaps(),
        }))
        .unwrap(),
    )
    .unwrap();
    let out = sortnet()
        .args(["check"])
        .arg(&bubble_path)
        .args(["--eps", "0.05", "--grid", "80"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1), "bubble sort should fail");
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("octagon_first_violation"));
}

#[test]
fn check_rejects_malformed_networks() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    fs::write(&path, "{\"n\":3,\"swaps\":[1,1,2]}").unwrap();
    let out = sortnet().args(["check"]).arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn great_circle_reports_distances() {
    let dir = tempfile::tempdir().unwrap();
    let net = write_sample(dir.path(), 40, 11);
    let out_dir = dir.path().join("gc");
    let out = sortnet()
        .args(["great-circle"])
        .arg(&net)
        .arg("--out")
        .arg(&out_dir)
        .output()
        .unwrap();
    assert!(out.status.success());
    let value: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(out_dir.join("great_circle.json")).unwrap())
            .unwrap();
    let csd = value["distances"]["constant_speed"].as_f64().unwrap();
    let inf = value["distances"]["inf"].as_f64().unwrap();
    assert!(inf <= csd + 1e-9, "inf {inf} must not exceed constant-speed {csd}");
    assert!(out_dir.join("theta.csv").exists());
    assert!(out_dir.join("nu.csv").exists());
    // θ starts at 0 for the two-point construction
    let theta = fs::read_to_string(out_dir.join("theta.csv")).unwrap();
    let first: Vec<&str> = theta.lines().nth(3).unwrap().split(',').collect();
    assert!(first[1].parse::<f64>().unwrap().abs() < 1e-2);
}

#[test]
fn arch_sample_csv_is_deterministic_and_in_support() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for path in [&a, &b] {
        let status = sortnet()
            .args(["arch-sample", "--samples", "500", "--seed", "4", "--out"])
            .arg(path)
            .status()
            .unwrap();
        assert!(status.success());
    }
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
    let text = fs::read_to_string(&a).unwrap();
    for line in text.lines().skip(3) {
        let xy: Vec<f64> = line.split(',').map(|v| v.parse().unwrap()).collect();
        assert!(xy[0] * xy[0] + xy[1] * xy[1] < 1.0 + 1e-9);
    }
}

#[test]
fn verify_single_exact_criterion_exits_zero() {
    let out = sortnet()
        .args(["verify", "--criteria", "3"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("PASS criterion  3"));
    assert!(stdout.contains("verification PASSED"));
}

#[test]
fn verify_report_file_has_measured_values_and_thresholds() {
    let dir = tempfile::tempdir().unwrap();
    let report_path = dir.path().join("report.json");
    let status = sortnet()
        .args(["verify", "--criteria", "1,3", "--out"])
        .arg(&report_path)
        .status()
        .unwrap();
    assert!(status.success());
    let report: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&report_path).unwrap()).unwrap();
    assert_eq!(report["all_gating_passed"], true);
    let criteria = report["criteria"].as_array().unwrap();
    assert_eq!(criteria.len(), 2);
    for c in criteria {
        assert!(c["measured"].as_str().unwrap().len() > 0);
        assert!(c["threshold"].as_str().unwrap().len() > 0);
        assert!(c["wall_time_ms"].as_f64().unwrap() >= 0.0);
    }
}

#[test]
fn tampered_promotion_output_fails_the_fixture_check() {
    // harness self-check: the fixture comparison must actually compare
    let tampered = sortnet_core::tableaux::StandardYoungTableau::from_rows(vec![
        vec![1, 2, 4, 10],
        vec![3, 6, 11],
        vec![5, 7, 13],
        vec![8, 12, 14],
        vec![9, 15],
    ])
    .unwrap();
    assert!(!sortnet_cli::verify::promotion_fixture_matches(&tampered));
    let honest = sortnet_core::eg::promote(&sortnet_cli::verify::promotion_fixture_input());
    assert!(sortnet_cli::verify::promotion_fixture_matches(&honest));
}
