//! Subcommand implementations. All file formats are documented in [`crate::io`].

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use serde::Serialize;
use serde_json::json;

use sortnet_core::counting::{
    double_flip_probability, enumerate_networks, first_swap_distribution, ln_rational,
    MAX_ENUMERATION_N,
};
use sortnet_core::geometry;
use sortnet_core::hookwalk::sample_usn;
use sortnet_core::limits;
use sortnet_core::perm::NetworkCursor;
use sortnet_core::rng::RandomStream;

use crate::io::{self, CsvField, CsvWriter, RationalJson};
use crate::metadata::RunMetadata;

fn write_json_value(path: Option<&Path>, value: &serde_json::Value) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display()))?,
        None => print!("{}", text),
    }
    Ok(())
}

/// `sortnet sample`: one uniform network, deterministic in `(n, seed)`.
pub fn cmd_sample(n: usize, seed: u64, out: Option<PathBuf>) -> Result<()> {
    let mut rng = RandomStream::new(seed, 0);
    let w = sample_usn(n, &mut rng);
    let metadata = RunMetadata::new(seed, 0).with_param("n", n).with_param("command", "sample");
    match out {
        Some(path) => io::write_network(&path, &w, metadata)?,
        None => {
            let value = json!({"n": w.n(), "swaps": w.swaps(), "metadata": metadata});
            write_json_value(None, &value)?;
        }
    }
    Ok(())
}

/// `sortnet enumerate`: all networks for `n ≤ 6`, one JSON array per line.
pub fn cmd_enumerate(n: usize, out: Option<PathBuf>) -> Result<()> {
    let iter = enumerate_networks(n)?;
    let metadata = RunMetadata::new(0, 0)
        .with_param("n", n)
        .with_param("command", "enumerate");
    let mut body = format!("{}\n", serde_json::to_string(&json!({"metadata": metadata, "n": n}))?);
    let mut count = 0u64;
    for w in iter {
        body.push_str(&serde_json::to_string(w.swaps())?);
        body.push('\n');
        count += 1;
    }
    eprintln!("enumerated {count} networks for n = {n} (max supported n = {MAX_ENUMERATION_N})");
    match out {
        Some(p) => fs::write(&p, body).with_context(|| format!("writing {}", p.display()))?,
        None => print!("{}", body),
    }
    Ok(())
}

/// `sortnet stats`: CSV bundle for one network (swap process, scaled
/// configurations, trajectories, and the half-period sliding window).
pub fn cmd_stats(network: &Path, out_dir: &Path, grid: Option<usize>) -> Result<()> {
    let w = io::read_network(network)?;
    fs::create_dir_all(out_dir)?;
    let n = w.n();
    let big_n = w.len();
    let meta = RunMetadata::new(0, 0)
        .with_param("command", "stats")
        .with_param("network", network.display())
        .with_param("n", n);

    // swap process: one row per swap
    let mut eta = CsvWriter::create(&out_dir.join("eta.csv"), "eta", &["k", "t", "y"], &meta)?;
    for (k0, &s) in w.swaps().iter().enumerate() {
        eta.row(&[
            CsvField::Int(k0 as i64 + 1),
            CsvField::Float((k0 + 1) as f64 / big_n as f64),
            CsvField::Float(2.0 * s as f64 / n as f64 - 1.0),
        ])?;
    }
    eta.finish()?;

    // scaled configurations at eleven evenly spaced times
    let mut mu = CsvWriter::create(&out_dir.join("mu.csv"), "mu", &["t", "x", "y"], &meta)?;
    for tenth in 0..=10 {
        let t = tenth as f64 / 10.0;
        for &(x, y) in w.scaled_configuration(t)?.points() {
            mu.row(&[CsvField::Float(t), CsvField::Float(x), CsvField::Float(y)])?;
        }
    }
    mu.finish()?;

    // trajectories of up to 16 evenly spaced particles; by default sampled
    // at every integer time k/N
    let grid = grid.unwrap_or(big_n.max(1));
    let times: Vec<f64> = (0..=grid).map(|j| j as f64 / grid as f64).collect();
    let rows = sortnet_core::perm::interpolated_locations(&w, &times);
    let particle_count = n.min(16);
    let particles: Vec<usize> = (0..particle_count)
        .map(|j| 1 + j * n / particle_count)
        .collect();
    let mut traj = CsvWriter::create(
        &out_dir.join("trajectories.csv"),
        "trajectories",
        &["i", "t", "position"],
        &meta,
    )?;
    for &i in &particles {
        for (j, row) in rows.iter().enumerate() {
            traj.row(&[
                CsvField::Int(i as i64),
                CsvField::Float(times[j]),
                CsvField::Float(2.0 * row[i - 1] / n as f64 - 1.0),
            ])?;
        }
    }
    traj.finish()?;

    // sliding-window rotation: the graph of σ_k⁻¹ σ_{k+⌊N/2⌋} rotated by
    // −πk/N, at 65 evenly spaced k
    let mut sliding = CsvWriter::create(
        &out_dir.join("sliding.csv"),
        "sliding",
        &["k", "i", "x", "y"],
        &meta,
    )?;
    let half = big_n / 2;
    let k_values: Vec<usize> = (0..=64).map(|j| j * half / 64).collect();
    let mut front = NetworkCursor::new(&w);
    let mut back = NetworkCursor::new(&w);
    for _ in 0..half {
        front.step();
    }
    for &k in k_values.iter().collect::<std::collections::BTreeSet<_>>() {
        while back.k() < k {
            back.step();
            front.step();
        }
        let angle = -std::f64::consts::PI * k as f64 / big_n.max(1) as f64;
        let (sin_a, cos_a) = angle.sin_cos();
        for i in 1..=n {
            // (σ_k⁻¹ ∘ σ_{k+N/2})(i)
            let image = back.sigma_inv().apply(front.sigma().apply(i));
            let x = 2.0 * i as f64 / n as f64 - 1.0;
            let y = 2.0 * image as f64 / n as f64 - 1.0;
            sliding.row(&[
                CsvField::Int(k as i64),
                CsvField::Int(i as i64),
                CsvField::Float(x * cos_a - y * sin_a),
                CsvField::Float(x * sin_a + y * cos_a),
            ])?;
        }
    }
    sliding.finish()?;
    Ok(())
}

/// `sortnet first-swap-dist`: the exact law of the first swap location.
pub fn cmd_first_swap_dist(n: usize, out: Option<PathBuf>) -> Result<()> {
    let dist = first_swap_distribution(n);
    let rows: Vec<serde_json::Value> = dist
        .iter()
        .enumerate()
        .map(|(r0, q)| {
            let rj = RationalJson::from_rational(q);
            json!({"r": r0 + 1, "num": rj.num, "den": rj.den, "float": rj.float})
        })
        .collect();
    let value = json!({
        "metadata": RunMetadata::new(0, 0).with_param("n", n).with_param("command", "first-swap-dist"),
        "n": n,
        "distribution": rows,
    });
    write_json_value(out.as_deref(), &value)
}

/// `sortnet double-flip`: exact probability of the double-flip
/// configuration at its inversion time.
pub fn cmd_double_flip(n: usize, out: Option<PathBuf>) -> Result<()> {
    let p = double_flip_probability(n)?;
    let rj = RationalJson::from_rational(&p);
    let value = json!({
        "metadata": RunMetadata::new(0, 0).with_param("n", n).with_param("command", "double-flip"),
        "n": n,
        "probability": {"num": rj.num, "den": rj.den, "float": rj.float},
        "minus_ln_p_over_n_squared": -ln_rational(&p) / (n * n) as f64,
    });
    write_json_value(out.as_deref(), &value)
}

/// `sortnet limit-profile`: the limit profile `L` on a uniform grid.
pub fn cmd_limit_profile(grid: usize, out: Option<PathBuf>) -> Result<()> {
    let path = out.unwrap_or_else(|| PathBuf::from("limit_profile.csv"));
    let meta = RunMetadata::new(0, 0)
        .with_param("command", "limit-profile")
        .with_param("grid", grid);
    let mut csv = CsvWriter::create(&path, "limit-profile", &["x", "y", "L"], &meta)?;
    for ix in 0..=grid {
        for iy in 0..=grid {
            let (x, y) = (ix as f64 / grid as f64, iy as f64 / grid as f64);
            if let Ok(l) = limits::profile_l(x, y) {
                csv.row(&[CsvField::Float(x), CsvField::Float(y), CsvField::Float(l)])?;
            }
        }
    }
    csv.finish()
}

/// `sortnet arch-sample`: draws from the Archimedes measure.
pub fn cmd_arch_sample(samples: usize, t: f64, seed: u64, out: Option<PathBuf>) -> Result<()> {
    let path = out.unwrap_or_else(|| PathBuf::from("arch_sample.csv"));
    let meta = RunMetadata::new(seed, 0)
        .with_param("command", "arch-sample")
        .with_param("samples", samples)
        .with_param("t", t);
    let mut csv = CsvWriter::create(&path, "arch-sample", &["x", "y"], &meta)?;
    let mut rng = RandomStream::new(seed, 0);
    for _ in 0..samples {
        let (x, y) = limits::arch_sample(t, &mut rng)?;
        csv.row(&[CsvField::Float(x), CsvField::Float(y)])?;
    }
    csv.finish()
}

#[derive(Serialize)]
struct CheckReport {
    octagon_passed: bool,
    octagon_worst_margin: f64,
    octagon_first_violation: Option<String>,
    holder_passed: bool,
    holder_worst_margin: f64,
    lln_distance: f64,
    eps: f64,
    grid: usize,
}

/// `sortnet check`: octagon, Hölder and swap-process checks for one
/// network; exit code 1 when a bound fails.
pub fn cmd_check(
    network: &Path,
    eps: f64,
    grid: usize,
    out: Option<PathBuf>,
) -> Result<bool> {
    let w = io::read_network(network)?;
    let octagon = limits::check_octagon(&w, eps);
    let holder = limits::check_holder(&w, eps, grid);
    let lln = limits::lln_distance(&w, 10, 10);
    let report = CheckReport {
        octagon_passed: octagon.passed,
        octagon_worst_margin: octagon.worst_margin,
        octagon_first_violation: octagon
            .first_violation
            .map(|v| format!("k={} i={} mirrored={}", v.k, v.i, v.mirrored)),
        holder_passed: holder.passed,
        holder_worst_margin: holder.worst_margin,
        lln_distance: lln,
        eps,
        grid,
    };
    let value = json!({
        "metadata": RunMetadata::new(0, 0)
            .with_param("command", "check")
            .with_param("network", network.display())
            .with_param("eps", eps)
            .with_param("grid", grid),
        "report": report,
    });
    write_json_value(out.as_deref(), &value)?;
    Ok(octagon.passed && holder.passed)
}

/// `sortnet great-circle`: two-point circle, distance measurements, angle
/// sequence, circle-coordinate measure, and sine fits.
pub fn cmd_great_circle(network: &Path, out_dir: &Path) -> Result<()> {
    let w = io::read_network(network)?;
    fs::create_dir_all(out_dir)?;
    let n = w.n();
    let meta = RunMetadata::new(0, 0)
        .with_param("command", "great-circle")
        .with_param("network", network.display());

    let circle = geometry::circle_through(&w)?;
    let csd = geometry::constant_speed_distance(&w, &circle);
    let inf = geometry::inf_distance(&w, &circle);
    let theta = geometry::theta_sequence(&w, &circle);
    let fit = geometry::sine_fit(&w);

    let theta_path = out_dir.join("theta.csv");
    let mut csv = CsvWriter::create(&theta_path, "theta", &["k", "theta", "linear"], &meta)?;
    let big_n = w.len().max(1);
    for (k, &t) in theta.theta.iter().enumerate() {
        csv.row(&[
            CsvField::Int(k as i64),
            CsvField::Float(t),
            CsvField::Float(std::f64::consts::PI * k as f64 / big_n as f64),
        ])?;
    }
    csv.finish()?;

    let nu_path = out_dir.join("nu.csv");
    let mut csv = CsvWriter::create(&nu_path, "nu", &["x", "y"], &meta)?;
    for &(x, y) in geometry::empirical_nu(&circle).points() {
        csv.row(&[CsvField::Float(x), CsvField::Float(y)])?;
    }
    csv.finish()?;

    let value = json!({
        "metadata": meta,
        "n": n,
        "distances": {
            "constant_speed": csd,
            "constant_speed_over_n": csd / n as f64,
            "inf": inf.value,
            "inf_tolerance": inf.tolerance,
        },
        "theta": theta_path.display().to_string(),
        "theta_max_deviation_from_linear": theta.max_deviation_from_linear(),
        "nu": nu_path.display().to_string(),
        "sine_residual": fit.max_residual,
    });
    write_json_value(Some(&out_dir.join("great_circle.json")), &value)?;
    println!("{}", serde_json::to_string(&value)?);
    Ok(())
}

/// `sortnet verify`: run the acceptance criteria and write the report.
pub fn cmd_verify(
    seed: u64,
    threads: usize,
    only: Option<Vec<u32>>,
    out: Option<PathBuf>,
) -> Result<bool> {
    let cfg = crate::verify::VerifyConfig { seed, threads, only };
    let report = crate::verify::run(&cfg);
    for line in crate::verify::format_report_lines(&report) {
        println!("{}", line);
    }
    let value = serde_json::to_value(&report)?;
    if let Some(path) = out {
        write_json_value(Some(&path), &value)?;
    }
    println!(
        "verification {}",
        if report.all_gating_passed { "PASSED" } else { "FAILED" }
    );
    Ok(report.all_gating_passed)
}
