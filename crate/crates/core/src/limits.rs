//! The analytic limit objects and the desk-scale checkers for the limit
//! theorems: semicircle law of swap locations, limit-profile contours of
//! staircase tableaux, octagon and Hölder bounds on configurations and
//! trajectories, and the Archimedes measures of the half-time picture.

use thiserror::Error;

use crate::perm::SortingNetwork;
use crate::rng::RandomStream;
use crate::tableaux::{Partition, StandardYoungTableau};

#[derive(Debug, Error, PartialEq)]
pub enum LimitsError {
    #[error("u = {u} outside the contour domain |u| ≤ √(α(2−α)) for α = {alpha}")]
    ContourDomain { alpha: f64, u: f64 },
    #[error("alpha = {0} outside [0,2]")]
    AlphaRange(f64),
    #[error("point ({x},{y}) outside the profile region")]
    OutsideProfileRegion { x: f64, y: f64 },
    #[error("t = {0} outside the open interval (0,1)")]
    TimeRange(f64),
    #[error("tableau shape is not a staircase")]
    NotStaircase,
}

/// Semicircle density `(2/π)√(1−y²)` on `(−1,1)`.
pub fn semicircle_pdf(y: f64) -> f64 {
    if y.abs() >= 1.0 {
        0.0
    } else {
        2.0 / std::f64::consts::PI * (1.0 - y * y).sqrt()
    }
}

/// Semicircle distribution function.
pub fn semicircle_cdf(y: f64) -> f64 {
    if y <= -1.0 {
        0.0
    } else if y >= 1.0 {
        1.0
    } else {
        0.5 + (y * (1.0 - y * y).sqrt() + y.asin()) / std::f64::consts::PI
    }
}

const ALPHA_ONE_EPS: f64 = 1e-9;
const BOUNDARY_CLAMP: f64 = 1e-12;

/// Contour height `h_α(u)`, the limit level curve of staircase and square
/// tableaux.
///
/// For `α ≤ 1` this is `(2/π)[u·arctan(u/R) + arctan R]` with
/// `R = √(α(2−α)−u²)/(1−α)`; the upper branch is `h_{2−α} = 2 − h_α`, and
/// `h_1 ≡ 1` by the `arctan ∞ = π/2` convention.
pub fn h_alpha(alpha: f64, u: f64) -> Result<f64, LimitsError> {
    if !(0.0..=2.0).contains(&alpha) {
        return Err(LimitsError::AlphaRange(alpha));
    }
    if alpha > 1.0 {
        return Ok(2.0 - h_alpha(2.0 - alpha, u)?);
    }
    let bound_sq = alpha * (2.0 - alpha);
    if u * u > bound_sq + 1e-12 {
        return Err(LimitsError::ContourDomain { alpha, u });
    }
    if (1.0 - alpha).abs() < ALPHA_ONE_EPS {
        return Ok(1.0);
    }
    let radic = (bound_sq - u * u).max(0.0);
    if radic == 0.0 {
        // R = 0: the contour meets v = |u|
        return Ok(u.abs());
    }
    let r = radic.sqrt() / (1.0 - alpha);
    Ok(2.0 / std::f64::consts::PI * (u * (u / r).atan() + r.atan()))
}

/// The limit profile `L(x,y)`: the unique `α` with `h_α(x−y) = x+y`,
/// found by monotone bisection to `1e−10`; points within `1e−12` of the
/// region boundary are clamped onto it.
pub fn profile_l(x: f64, y: f64) -> Result<f64, LimitsError> {
    let u = x - y;
    let v = x + y;
    if u.abs() > 1.0 + BOUNDARY_CLAMP {
        return Err(LimitsError::OutsideProfileRegion { x, y });
    }
    let u = u.clamp(-1.0, 1.0);
    // minimal α whose contour domain contains u; h at that α equals |u|
    let alpha_min = 1.0 - (1.0 - u * u).sqrt();
    if v < u.abs() - BOUNDARY_CLAMP || v > 2.0 - u.abs() + BOUNDARY_CLAMP {
        return Err(LimitsError::OutsideProfileRegion { x, y });
    }
    if v <= u.abs() {
        return Ok(alpha_min);
    }
    if v >= 2.0 - u.abs() {
        return Ok(2.0 - alpha_min);
    }
    if v == 1.0 {
        // h_1 ≡ 1: α = 1 exactly for every u, without crossing the
        // singularity plateau of the bisection
        return Ok(1.0);
    }
    let mut lo = alpha_min;
    let mut hi = 2.0 - alpha_min;
    let mut iterations = 0;
    while hi - lo > 1e-10 && iterations < 200 {
        let mid = 0.5 * (lo + hi);
        let h = h_alpha(mid, u).expect("u in domain for α ∈ [α_min, 2−α_min]");
        if h < v {
            lo = mid;
        } else {
            hi = mid;
        }
        iterations += 1;
    }
    Ok(0.5 * (lo + hi))
}

/// Octagon envelope `d_k = n √((k/N)(2 − k/N))`.
pub fn octagon_d(n: usize, k: usize) -> f64 {
    let big_n = (n * (n - 1) / 2) as f64;
    let frac = k as f64 / big_n;
    n as f64 * (frac * (2.0 - frac)).sqrt()
}

/// A single octagon-bound violation: time, position, and which of the two
/// inequality families failed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OctagonViolation {
    pub k: usize,
    pub i: usize,
    /// `false`: `|σ_k(i)−i| < d_k + εn`; `true`: `|σ_k(i)−(n−i)| < d_{N−k} + εn`.
    pub mirrored: bool,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OctagonReport {
    pub passed: bool,
    pub first_violation: Option<OctagonViolation>,
    /// Smallest slack `(bound − displacement)` seen over all `k`; negative
    /// iff the check failed.
    pub worst_margin: f64,
}

/// Check the octagon bounds `|σ_k(i)−i| < d_k + εn` and
/// `|σ_k(i)−(n−i)| < d_{N−k} + εn` for all positions and times.
///
/// Displacement maxima are maintained incrementally (two entries change per
/// swap) with a lazily descending max pointer, so the sweep is `O(N)`.
pub fn check_octagon(w: &SortingNetwork, eps: f64) -> OctagonReport {
    let n = w.n();
    let big_n = w.len();
    let en = eps * n as f64;

    // count tables over displacement magnitude, plus current maxima
    let mut direct = vec![0u32; 2 * n + 2];
    let mut mirror = vec![0u32; 2 * n + 2];
    let mut sigma: Vec<i64> = (1..=n as i64).collect();
    direct[0] = n as u32;
    let mut max_direct = 0usize;
    let mut max_mirror = 0usize;
    for i in 1..=n as i64 {
        let d = (i - (n as i64 - i)).unsigned_abs() as usize;
        mirror[d] += 1;
        max_mirror = max_mirror.max(d);
    }

    let mut report = OctagonReport {
        passed: true,
        first_violation: None,
        worst_margin: f64::INFINITY,
    };

    let mut check_time = |k: usize, max_direct: usize, max_mirror: usize, sigma: &[i64]| {
        let bound_direct = octagon_d(n, k) + en;
        let bound_mirror = octagon_d(n, big_n - k) + en;
        let margin = (bound_direct - max_direct as f64).min(bound_mirror - max_mirror as f64);
        if margin < report.worst_margin {
            report.worst_margin = margin;
        }
        if report.passed && (max_direct as f64 >= bound_direct || max_mirror as f64 >= bound_mirror)
        {
            report.passed = false;
            let mirrored = (max_direct as f64) < bound_direct;
            let want = if mirrored { max_mirror } else { max_direct };
            let witness = (1..=n)
                .find(|&i| {
                    let v = sigma[i - 1];
                    let d = if mirrored {
                        (v - (n as i64 - i as i64)).unsigned_abs()
                    } else {
                        (v - i as i64).unsigned_abs()
                    };
                    d as usize == want
                })
                .unwrap_or(1);
            report.first_violation = Some(OctagonViolation {
                k,
                i: witness,
                mirrored,
            });
        }
    };

    check_time(0, max_direct, max_mirror, &sigma);
    for k in 1..=big_n {
        let s = w.swap_at(k) as usize;
        for pos in [s, s + 1] {
            let old = sigma[pos - 1];
            let dd = (old - pos as i64).unsigned_abs() as usize;
            direct[dd] -= 1;
            let dm = (old - (n as i64 - pos as i64)).unsigned_abs() as usize;
            mirror[dm] -= 1;
        }
        sigma.swap(s - 1, s);
        for pos in [s, s + 1] {
            let new = sigma[pos - 1];
            let dd = (new - pos as i64).unsigned_abs() as usize;
            direct[dd] += 1;
            max_direct = max_direct.max(dd);
            let dm = (new - (n as i64 - pos as i64)).unsigned_abs() as usize;
            mirror[dm] += 1;
            max_mirror = max_mirror.max(dm);
        }
        while max_direct > 0 && direct[max_direct] == 0 {
            max_direct -= 1;
        }
        while max_mirror > 0 && mirror[max_mirror] == 0 {
            max_mirror -= 1;
        }
        check_time(k, max_direct, max_mirror, &sigma);
    }
    report
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HolderReport {
    pub passed: bool,
    /// Largest value of `|T_i(t)−T_i(s)| − √8 |t−s|^{1/2} − ε` over the
    /// grid; the check passes iff it is ≤ 0.
    pub worst_margin: f64,
    /// `(particle, s, t)` attaining the worst margin.
    pub worst_pair: Option<(usize, f64, f64)>,
    pub grid: usize,
}

/// Check the Hölder-1/2 trajectory bound on a uniform time grid of
/// `grid + 1` points (trajectories linearly interpolated between integer
/// times, exactly as defined).
pub fn check_holder(w: &SortingNetwork, eps: f64, grid: usize) -> HolderReport {
    let n = w.n();
    let sqrt8 = 8f64.sqrt();
    let times: Vec<f64> = (0..=grid).map(|j| j as f64 / grid as f64).collect();
    let positions = crate::perm::interpolated_locations(w, &times);

    let scale = 2.0 / n as f64;
    let mut report = HolderReport {
        passed: true,
        worst_margin: f64::NEG_INFINITY,
        worst_pair: None,
        grid,
    };
    for j1 in 0..=grid {
        for j2 in (j1 + 1)..=grid {
            let dt = (j2 - j1) as f64 / grid as f64;
            let allowance = sqrt8 * dt.sqrt() + eps;
            for i in 0..n {
                let diff = scale * (positions[j2][i] - positions[j1][i]).abs();
                let margin = diff - allowance;
                if margin > report.worst_margin {
                    report.worst_margin = margin;
                    report.worst_pair =
                        Some((i + 1, j1 as f64 / grid as f64, j2 as f64 / grid as f64));
                }
            }
        }
    }
    report.passed = report.worst_margin <= 0.0;
    report
}

/// Archimedes density at time `t ∈ (0,1)`.
pub fn arch_density(t: f64, x: f64, y: f64) -> Result<f64, LimitsError> {
    if !(0.0 < t && t < 1.0) {
        return Err(LimitsError::TimeRange(t));
    }
    let pt = std::f64::consts::PI * t;
    let bracket = pt.sin().powi(2) + 2.0 * x * y * pt.cos() - x * x - y * y;
    if bracket <= 0.0 {
        Ok(0.0)
    } else {
        Ok(1.0 / (2.0 * std::f64::consts::PI * bracket.sqrt()))
    }
}

/// Draw from the Archimedes measure: project a uniform point on the
/// 2-sphere to the plane (giving the `t = 1/2` disc law), then shear by
/// `(x, y) ↦ (x, x cos πt + y sin πt)`.
pub fn arch_sample(t: f64, rng: &mut RandomStream) -> Result<(f64, f64), LimitsError> {
    if !(0.0 < t && t < 1.0) {
        return Err(LimitsError::TimeRange(t));
    }
    let z = rng.range_f64(-1.0, 1.0);
    let phi = rng.range_f64(0.0, 2.0 * std::f64::consts::PI);
    let radius = (1.0 - z * z).sqrt();
    let x = radius * phi.cos();
    let y = radius * phi.sin();
    let pt = std::f64::consts::PI * t;
    Ok((x, x * pt.cos() + y * pt.sin()))
}

/// Maximum deviation of a staircase tableau from the limit profile:
/// `max |2 t_{i,j}/n² − L(i/n, j/n)|`.
pub fn staircase_profile_deviation(t: &StandardYoungTableau) -> Result<f64, LimitsError> {
    let n = t.shape().num_rows() + 1;
    if *t.shape() != Partition::staircase(n) {
        return Err(LimitsError::NotStaircase);
    }
    let nf = n as f64;
    let nn = nf * nf;
    let mut worst = 0f64;
    for i in 1..=t.shape().num_rows() {
        for j in 1..=t.shape().row(i) {
            let l = profile_l(i as f64 / nf, j as f64 / nf)
                .expect("staircase cells lie in the profile region");
            let dev = (2.0 * t.entry(i, j) as f64 / nn - l).abs();
            worst = worst.max(dev);
        }
    }
    Ok(worst)
}

/// Total-variation distance on a `bins_t × bins_y` product grid between the
/// empirical scaled swap process `η` and the product of Lebesgue and
/// semicircle measure.
pub fn lln_distance(w: &SortingNetwork, bins_t: usize, bins_y: usize) -> f64 {
    let big_n = w.len();
    let n = w.n() as f64;
    let mut counts = vec![0u64; bins_t * bins_y];
    for k in 1..=big_n {
        let t = k as f64 / big_n as f64;
        let y = 2.0 * w.swap_at(k) as f64 / n - 1.0;
        let bt = ((t * bins_t as f64) as usize).min(bins_t - 1);
        let by = (((y + 1.0) / 2.0 * bins_y as f64) as usize).min(bins_y - 1);
        counts[bt * bins_y + by] += 1;
    }
    let mut tv = 0f64;
    for bt in 0..bins_t {
        for by in 0..bins_y {
            let y_lo = -1.0 + 2.0 * by as f64 / bins_y as f64;
            let y_hi = -1.0 + 2.0 * (by + 1) as f64 / bins_y as f64;
            let exact = (semicircle_cdf(y_hi) - semicircle_cdf(y_lo)) / bins_t as f64;
            let emp = counts[bt * bins_y + by] as f64 / big_n as f64;
            tv += (emp - exact).abs();
        }
    }
    0.5 * tv
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn semicircle_values() {
        assert!((semicircle_cdf(0.0) - 0.5).abs() < 1e-15);
        assert!((semicircle_pdf(0.0) - 2.0 / PI).abs() < 1e-15);
        assert_eq!(semicircle_cdf(1.0), 1.0);
        assert_eq!(semicircle_cdf(-1.0), 0.0);
        assert_eq!(semicircle_pdf(1.5), 0.0);
    }

    #[test]
    fn semicircle_cdf_integrates_pdf() {
        // Simpson quadrature oracle, substituting x = −cos φ so the
        // integrand pdf(−cos φ)·sin φ is smooth at the endpoints
        let quad = |y: f64| {
            let upper = (-y as f64).acos();
            let m = 2_000;
            let h = upper / m as f64;
            let f = |phi: f64| semicircle_pdf(-phi.cos()) * phi.sin();
            let mut s = f(0.0) + f(upper);
            for i in 1..m {
                s += f(i as f64 * h) * if i % 2 == 1 { 4.0 } else { 2.0 };
            }
            s * h / 3.0
        };
        for y in [-0.9, -0.5, 0.0, 0.3, 0.77] {
            assert!((semicircle_cdf(y) - quad(y)).abs() < 1e-8, "y = {}", y);
        }
    }

    #[test]
    fn h_alpha_known_values() {
        for u in [-1.0, -0.3, 0.0, 0.5, 1.0] {
            assert!((h_alpha(1.0, u).unwrap() - 1.0).abs() < 1e-12);
        }
        assert!((h_alpha(0.5, 0.0).unwrap() - 2.0 / 3.0).abs() < 1e-12);
        // boundary: h meets v = |u|
        let alpha = 0.3f64;
        let u = (alpha * (2.0 - alpha)).sqrt();
        assert!((h_alpha(alpha, u).unwrap() - u).abs() < 1e-9);
        assert!(h_alpha(0.1, 0.9).is_err());
        assert!(h_alpha(2.5, 0.0).is_err());
    }

    #[test]
    fn h_alpha_symmetries() {
        for &alpha in &[0.2f64, 0.5, 0.8, 1.3, 1.9] {
            let cap = (alpha.min(2.0 - alpha) * (2.0 - alpha.min(2.0 - alpha))).sqrt();
            for i in 0..20 {
                let u = cap * (i as f64 / 19.0 * 2.0 - 1.0) * 0.999;
                let h = h_alpha(alpha, u).unwrap();
                let h_mirror = h_alpha(2.0 - alpha, u).unwrap();
                assert!((h + h_mirror - 2.0).abs() < 1e-12);
                let h_even = h_alpha(alpha, -u).unwrap();
                assert!((h - h_even).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn profile_examples() {
        assert!((profile_l(0.5, 0.5).unwrap() - 1.0).abs() < 1e-9);
        assert!((profile_l(1.0 / 3.0, 1.0 / 3.0).unwrap() - 0.5).abs() < 1e-9);
        assert!(profile_l(0.0, 0.0).unwrap().abs() < 1e-9);
        // first-row boundary: L(0, x) = 1 − √(1−x²)
        for x in [0.1f64, 0.4, 0.8] {
            let expect = 1.0 - (1.0 - x * x).sqrt();
            assert!((profile_l(0.0, x).unwrap() - expect).abs() < 1e-9);
        }
        // the top corner of the region inverts the upper branch
        assert!((profile_l(1.0, 1.0).unwrap() - 2.0).abs() < 1e-9);
        assert!(profile_l(1.5, 1.4).is_err());
        assert!(profile_l(-0.2, 0.1).is_err());
    }

    #[test]
    fn profile_inverts_h() {
        let mut rng = RandomStream::new(5, 0);
        for _ in 0..500 {
            let alpha = rng.range_f64(0.02, 1.98);
            let cap = (alpha.min(2.0 - alpha) * (2.0 - alpha.min(2.0 - alpha))).sqrt();
            let u = rng.range_f64(-cap * 0.999, cap * 0.999);
            let v = h_alpha(alpha, u).unwrap();
            let x = (u + v) / 2.0;
            let y = (v - u) / 2.0;
            let back = profile_l(x, y).unwrap();
            let v_back = h_alpha(back, u).unwrap();
            assert!((v_back - v).abs() < 1e-8, "α={} u={}", alpha, u);
        }
    }

    #[test]
    fn contour_first_order_expansion_is_cubic() {
        // h_{1−δ}(u) = 1 − (2/π)√(1−u²) δ + O(δ³): fit C at δ = 0.1, then
        // smaller δ must satisfy the cubic bound with 25% slack.
        let err_max = |delta: f64| {
            let mut worst = 0f64;
            for i in 0..=180 {
                let u = -0.9 + i as f64 * 0.01;
                let h = h_alpha(1.0 - delta, u).unwrap();
                let lin = 1.0 - 2.0 / PI * (1.0 - u * u).sqrt() * delta;
                worst = worst.max((h - lin).abs());
            }
            worst
        };
        let c = err_max(0.1) / 0.1f64.powi(3);
        for delta in [0.05, 0.025, 0.0125] {
            assert!(
                err_max(delta) <= 1.25 * c * delta.powi(3),
                "δ = {} err = {} vs C δ³ = {}",
                delta,
                err_max(delta),
                c * delta.powi(3)
            );
        }
    }

    #[test]
    fn octagon_d_values() {
        assert_eq!(octagon_d(10, 0), 0.0);
        assert!((octagon_d(10, 45) - 10.0).abs() < 1e-12);
        let k_half = 22;
        let expect = 10.0 * ((22.0f64 / 45.0) * (2.0 - 22.0 / 45.0)).sqrt();
        assert!((octagon_d(10, k_half) - expect).abs() < 1e-12);
    }

    #[test]
    fn octagon_loose_eps_always_passes() {
        let w = crate::perm::bubble_sort_network(8);
        assert!(check_octagon(&w, 1.0).passed);
        let fixture =
            SortingNetwork::new(6, vec![1, 2, 1, 3, 4, 5, 2, 1, 3, 2, 1, 4, 3, 2, 1]).unwrap();
        assert!(check_octagon(&fixture, 1.0).passed);
    }

    #[test]
    fn octagon_rejects_bubble_sort_at_scale() {
        // bubble sort drags particle 1 across the whole line early
        let w = crate::perm::bubble_sort_network(60);
        let report = check_octagon(&w, 0.01);
        assert!(!report.passed);
        assert!(report.first_violation.is_some());
        assert!(report.worst_margin < 0.0);
    }

    #[test]
    fn octagon_margin_matches_direct_scan() {
        // independent quadratic-time oracle on a small network
        let w = SortingNetwork::new(6, vec![1, 2, 1, 3, 4, 5, 2, 1, 3, 2, 1, 4, 3, 2, 1]).unwrap();
        let eps = 0.4;
        let report = check_octagon(&w, eps);
        let n = 6usize;
        let big_n = 15usize;
        let mut worst = f64::INFINITY;
        for k in 0..=big_n {
            let sigma = w.configuration(k).unwrap();
            let mut d1 = 0i64;
            let mut d2 = 0i64;
            for i in 1..=n {
                d1 = d1.max((sigma.apply(i) as i64 - i as i64).abs());
                d2 = d2.max((sigma.apply(i) as i64 - (n as i64 - i as i64)).abs());
            }
            worst = worst
                .min(octagon_d(n, k) + eps * n as f64 - d1 as f64)
                .min(octagon_d(n, big_n - k) + eps * n as f64 - d2 as f64);
        }
        assert!((report.worst_margin - worst).abs() < 1e-9);
    }

    #[test]
    fn holder_trivial_cases() {
        let w = SortingNetwork::new(6, vec![1, 2, 1, 3, 4, 5, 2, 1, 3, 2, 1, 4, 3, 2, 1]).unwrap();
        let report = check_holder(&w, 3.0, 30);
        assert!(report.passed, "ε = 3 dominates the diameter");
    }

    #[test]
    fn holder_margin_matches_direct_evaluation() {
        let w = SortingNetwork::new(5, vec![1, 3, 4, 2, 1, 3, 4, 2, 1, 3]).unwrap();
        let grid = 40;
        let eps = 0.15;
        let report = check_holder(&w, eps, grid);
        let mut worst = f64::NEG_INFINITY;
        for j1 in 0..=grid {
            for j2 in (j1 + 1)..=grid {
                let (s, t) = (j1 as f64 / grid as f64, j2 as f64 / grid as f64);
                for i in 1..=5 {
                    let a = w.scaled_trajectory(i, s).unwrap();
                    let b = w.scaled_trajectory(i, t).unwrap();
                    let margin = (b - a).abs() - 8f64.sqrt() * (t - s).sqrt() - eps;
                    worst = worst.max(margin);
                }
            }
        }
        assert!((report.worst_margin - worst).abs() < 1e-9);
    }

    #[test]
    fn arch_density_values() {
        let d = arch_density(0.5, 0.0, 0.0).unwrap();
        assert!((d - 1.0 / (2.0 * PI)).abs() < 1e-15);
        assert_eq!(arch_density(0.5, 0.8, 0.7).unwrap(), 0.0);
        assert_eq!(arch_density(0.5, 1.0, 0.0).unwrap(), 0.0);
        assert!(arch_density(0.0, 0.0, 0.0).is_err());
        assert!(arch_density(1.0, 0.0, 0.0).is_err());
    }

    #[test]
    fn arch_samples_lie_in_support() {
        let mut rng = RandomStream::new(8, 0);
        for &t in &[0.2, 0.5, 0.8] {
            for _ in 0..2000 {
                let (x, y) = arch_sample(t, &mut rng).unwrap();
                // support is the shear image of the unit disc
                let pt = PI * t;
                let w = (y - x * pt.cos()) / pt.sin();
                assert!(x * x + w * w < 1.0 + 1e-9);
            }
        }
    }

    #[test]
    fn arch_half_projections_are_nearly_uniform() {
        let mut rng = RandomStream::new(21, 0);
        let draws = 20_000;
        let mut xs = Vec::with_capacity(draws);
        for _ in 0..draws {
            let (x, _) = arch_sample(0.5, &mut rng).unwrap();
            xs.push(x);
        }
        let d = crate::stats::ks_distance_to_cdf(&mut xs, |x| ((x + 1.0) / 2.0).clamp(0.0, 1.0));
        assert!(d < 0.02, "KS distance {}", d);
    }

    #[test]
    fn staircase_deviation_smallest_case() {
        let t = StandardYoungTableau::from_rows(vec![vec![1]]).unwrap();
        let dev = staircase_profile_deviation(&t).unwrap();
        assert!((dev - 0.5).abs() < 1e-9);
        let not_staircase = StandardYoungTableau::from_rows(vec![vec![1, 2]]).unwrap();
        assert!(staircase_profile_deviation(&not_staircase).is_err());
    }

    #[test]
    fn lln_distance_bounds() {
        let w = crate::perm::bubble_sort_network(40);
        let d = lln_distance(&w, 10, 10);
        assert!((0.0..=1.0).contains(&d));
        // bubble sort is visibly far from the product law
        assert!(d > 0.2, "bubble distance {}", d);
    }
}
