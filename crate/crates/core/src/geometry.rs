//! The permutahedron embedding, great circles, and geometric distance
//! measurements for sorting networks.
//!
//! A permutation `σ` embeds at the integer point `σ⁻¹ ∈ ℝⁿ`; all such
//! points lie on the sphere of centre `((n+1)/2, …, (n+1)/2)` and radius
//! `√((n³−n)/12)`. A network is a lattice path on that sphere from the
//! identity to its antipode, and the measurements here quantify how close
//! the path stays to a great circle.

use thiserror::Error;

use crate::perm::{NetworkCursor, Permutation, ScaledPointMeasure, SortingNetwork};

#[derive(Debug, Error, PartialEq)]
pub enum GeometryError {
    #[error("the half-time configuration is collinear with the start; no unique circle")]
    DegenerateCircle,
}

/// Embed a permutation: the inverse one-line vector `σ⁻¹`.
pub fn embed(p: &Permutation) -> Vec<i64> {
    p.inverse().as_slice().iter().map(|&v| v as i64).collect()
}

/// Centre coordinate and radius of the permutahedron sphere.
pub fn sphere_params(n: usize) -> (f64, f64) {
    let nf = n as f64;
    ((nf + 1.0) / 2.0, ((nf.powi(3) - nf) / 12.0).sqrt())
}

/// Both sphere identities in exact integer arithmetic:
/// `Σ z_i = n(n+1)/2` and `Σ z_i² = n(n+1)(2n+1)/6`.
pub fn sphere_identities_hold(p: &Permutation) -> bool {
    let n = p.n() as i64;
    let z = embed(p);
    let sum: i64 = z.iter().sum();
    let sum_sq: i64 = z.iter().map(|&v| v * v).sum();
    sum == n * (n + 1) / 2 && sum_sq == n * (n + 1) * (2 * n + 1) / 6
}

/// A great circle `c(θ) = c + u cos θ + v sin θ` on the permutahedron
/// sphere: `Σu = Σv = 0`, `‖u‖ = ‖v‖ = R`, `u ⊥ v`.
#[derive(Debug, Clone, PartialEq)]
pub struct GreatCircle {
    n: usize,
    u: Vec<f64>,
    v: Vec<f64>,
}

impl GreatCircle {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn u(&self) -> &[f64] {
        &self.u
    }

    pub fn v(&self) -> &[f64] {
        &self.v
    }

    pub fn radius(&self) -> f64 {
        sphere_params(self.n).1
    }

    /// The point `c(θ)` as a dense vector.
    pub fn point(&self, theta: f64) -> Vec<f64> {
        let centre = sphere_params(self.n).0;
        let (c, s) = (theta.cos(), theta.sin());
        self.u
            .iter()
            .zip(&self.v)
            .map(|(&ui, &vi)| centre + ui * c + vi * s)
            .collect()
    }

    /// Largest relative violation of the circle invariants.
    pub fn invariant_error(&self) -> f64 {
        let r = self.radius();
        let sum_u: f64 = self.u.iter().sum();
        let sum_v: f64 = self.v.iter().sum();
        let norm_u = self.u.iter().map(|x| x * x).sum::<f64>().sqrt();
        let norm_v = self.v.iter().map(|x| x * x).sum::<f64>().sqrt();
        let dot: f64 = self.u.iter().zip(&self.v).map(|(a, b)| a * b).sum();
        [
            sum_u.abs() / r,
            sum_v.abs() / r,
            (norm_u - r).abs() / r,
            (norm_v - r).abs() / r,
            dot.abs() / (r * r),
        ]
        .into_iter()
        .fold(0.0, f64::max)
    }
}

/// The two-point construction: the great circle through `σ_0⁻¹` (at angle
/// 0) and `σ_{⌊N/2⌋}⁻¹` (at some angle in `(0, π)`).
pub fn circle_through(w: &SortingNetwork) -> Result<GreatCircle, GeometryError> {
    let n = w.n();
    let (centre, radius) = sphere_params(n);
    let u: Vec<f64> = (1..=n).map(|i| i as f64 - centre).collect();
    let mid = w
        .configuration(w.len() / 2)
        .expect("N/2 within range");
    let m: Vec<f64> = embed(&mid).iter().map(|&z| z as f64 - centre).collect();
    let dot_mu: f64 = m.iter().zip(&u).map(|(a, b)| a * b).sum();
    let coeff = dot_mu / (radius * radius);
    let residual: Vec<f64> = m.iter().zip(&u).map(|(&mi, &ui)| mi - coeff * ui).collect();
    let res_norm = residual.iter().map(|x| x * x).sum::<f64>().sqrt();
    if res_norm < 1e-9 * radius {
        return Err(GeometryError::DegenerateCircle);
    }
    let v = residual.iter().map(|&x| x * radius / res_norm).collect();
    Ok(GreatCircle { n, u, v })
}

/// Incremental view of `σ_k⁻¹ − centre` plus the circle data arranged for
/// fast sup-norm evaluation with early exit.
struct CircleSweep<'a> {
    circle: &'a GreatCircle,
    /// particle indices sorted by decreasing oscillation amplitude, so a
    /// poor candidate angle reveals a large deviation within a few terms
    order: Vec<u32>,
}

impl<'a> CircleSweep<'a> {
    fn new(circle: &'a GreatCircle) -> Self {
        let mut order: Vec<u32> = (0..circle.n as u32).collect();
        let amp: Vec<f64> = circle
            .u
            .iter()
            .zip(&circle.v)
            .map(|(&a, &b)| a * a + b * b)
            .collect();
        order.sort_by(|&a, &b| amp[b as usize].partial_cmp(&amp[a as usize]).unwrap());
        CircleSweep { circle, order }
    }

    /// `max_i |a_i − u_i cos θ − v_i sin θ|`, abandoning the scan once the
    /// running max reaches `cap` (the scan order makes this fast for
    /// candidates far from optimal).
    fn eval_capped_cs(&self, a: &[f64], c: f64, s: f64, cap: f64) -> Option<f64> {
        let u = &self.circle.u;
        let v = &self.circle.v;
        let mut m = 0f64;
        for &idx in &self.order {
            let i = idx as usize;
            let d = (a[i] - u[i] * c - v[i] * s).abs();
            if d > m {
                if d >= cap {
                    return None;
                }
                m = d;
            }
        }
        Some(m)
    }

    fn eval(&self, a: &[f64], theta: f64) -> f64 {
        self.eval_capped_cs(a, theta.cos(), theta.sin(), f64::INFINITY)
            .expect("uncapped evaluation always completes")
    }

    /// Minimize over the precomputed candidate grid centred at `centre`.
    ///
    /// Candidates are visited nearest-first. Two exact prunings keep the
    /// scan cheap: per-candidate evaluation aborts at the current best, and
    /// the chord bound `f(θ) ≥ (2R/√n)|sin((θ−φ)/2)| − f(φ)` (from
    /// `‖x‖_∞ ≥ ‖x‖_2/√n` applied to circle chords) terminates the scan
    /// once no remaining candidate can win.
    fn minimize_on_grid(&self, a: &[f64], centre: f64, table: &GridTable) -> (f64, f64) {
        let (sin_c, cos_c) = centre.sin_cos();
        let chord = 2.0 * self.circle.radius() / (self.circle.n as f64).sqrt();
        let mut best = f64::INFINITY;
        let mut best_theta = centre;
        let mut anchor = f64::INFINITY;
        for &(dist, delta, cos_d, sin_d) in &table.offsets {
            if anchor.is_finite() {
                let gap = (dist - table.spacing).max(0.0);
                if chord * (0.5 * gap).sin() - anchor >= best {
                    break;
                }
            }
            let c = cos_c * cos_d - sin_c * sin_d;
            let s = sin_c * cos_d + cos_c * sin_d;
            if let Some(val) = self.eval_capped_cs(a, c, s, best) {
                best = val;
                best_theta = centre + delta;
            }
            if !anchor.is_finite() {
                // first (central) candidate always evaluates fully
                anchor = best;
            }
        }
        (best_theta, best)
    }

    /// Golden-section refinement of the minimum inside `θ* ± half`.
    ///
    /// Each comparison evaluates the new point capped at the incumbent's
    /// value: a capped-out evaluation already decides the branch.
    fn refine_golden(&self, a: &[f64], theta: f64, half: f64, iterations: usize) -> (f64, f64) {
        let inv_phi = 0.618_033_988_749_894_9_f64;
        let mut lo = theta - half;
        let mut hi = theta + half;
        let mut x1 = hi - inv_phi * (hi - lo);
        let mut x2 = lo + inv_phi * (hi - lo);
        let mut f1 = self.eval(a, x1);
        let mut f2 = self
            .eval_capped_cs(a, x2.cos(), x2.sin(), f1)
            .unwrap_or(f64::INFINITY);
        for _ in 0..iterations {
            if f1 <= f2 {
                hi = x2;
                x2 = x1;
                f2 = f1;
                x1 = hi - inv_phi * (hi - lo);
                f1 = self
                    .eval_capped_cs(a, x1.cos(), x1.sin(), f2)
                    .unwrap_or(f64::INFINITY);
            } else {
                lo = x1;
                x1 = x2;
                f1 = f2;
                x2 = lo + inv_phi * (hi - lo);
                f2 = self
                    .eval_capped_cs(a, x2.cos(), x2.sin(), f1)
                    .unwrap_or(f64::INFINITY);
            }
        }
        if f1 <= f2 {
            (x1, f1)
        } else {
            (x2, f2)
        }
    }
}

/// Candidate offsets `δ_g = width·((g+½)/grid − ½)` sorted nearest-first,
/// with their sines and cosines precomputed.
struct GridTable {
    offsets: Vec<(f64, f64, f64, f64)>, // (|δ|, δ, cos δ, sin δ)
    spacing: f64,
}

impl GridTable {
    fn new(width: f64, grid: usize) -> Self {
        let mut offsets: Vec<(f64, f64, f64, f64)> = (0..grid)
            .map(|g| {
                let delta = width * ((g as f64 + 0.5) / grid as f64 - 0.5);
                let (s, c) = delta.sin_cos();
                (delta.abs(), delta, c, s)
            })
            .collect();
        offsets.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
        GridTable {
            offsets,
            spacing: width / grid as f64,
        }
    }
}

fn deviation_vector(n: usize) -> Vec<f64> {
    let centre = sphere_params(n).0;
    (1..=n).map(|i| i as f64 - centre).collect()
}

fn advance(a: &mut [f64], cursor: &mut NetworkCursor) {
    let (p, q) = cursor.step();
    let centre = sphere_params(a.len()).0;
    a[p - 1] = cursor.location_of(p) as f64 - centre;
    a[q - 1] = cursor.location_of(q) as f64 - centre;
}

/// `max_k ‖σ_k⁻¹ − c(πk/N)‖_∞`: distance to a point moving along the
/// circle at constant angular speed.
pub fn constant_speed_distance(w: &SortingNetwork, circle: &GreatCircle) -> f64 {
    let sweep = CircleSweep::new(circle);
    let big_n = w.len();
    let mut a = deviation_vector(w.n());
    let mut cursor = NetworkCursor::new(w);
    let mut worst = sweep.eval(&a, 0.0);
    for k in 1..=big_n {
        advance(&mut a, &mut cursor);
        let theta = std::f64::consts::PI * k as f64 / big_n as f64;
        worst = worst.max(sweep.eval(&a, theta));
    }
    worst
}

/// Number of grid points used for the per-time sup-norm minimization.
pub const CIRCLE_GRID: usize = 8192;
/// Golden-section iterations refining below the grid resolution.
pub const CIRCLE_REFINE_ITERS: usize = 30;

/// `max_k inf_θ ‖σ_k⁻¹ − c(θ)‖_∞` via dense grid plus golden-section
/// refinement per `k`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InfDistance {
    /// Upper bound on the max-over-k of the per-time infima.
    pub value: f64,
    /// Worst-case slack of the grid search: the per-time evaluations are
    /// within this amount of the true infima.
    pub tolerance: f64,
}

pub fn inf_distance(w: &SortingNetwork, circle: &GreatCircle) -> InfDistance {
    let sweep = CircleSweep::new(circle);
    let big_n = w.len();
    let tau = 2.0 * std::f64::consts::PI;
    let table = GridTable::new(tau, CIRCLE_GRID);
    let mut a = deviation_vector(w.n());
    let mut cursor = NetworkCursor::new(w);
    let mut worst = 0f64;
    let mut warm = 0f64;
    for k in 0..=big_n {
        if k > 0 {
            advance(&mut a, &mut cursor);
        }
        let (theta_grid, grid_val) = sweep.minimize_on_grid(&a, warm, &table);
        let (theta_best, refined) = sweep.refine_golden(
            &a,
            theta_grid,
            tau / CIRCLE_GRID as f64,
            CIRCLE_REFINE_ITERS,
        );
        warm = theta_best;
        worst = worst.max(refined.min(grid_val));
    }
    let lipschitz = circle
        .u
        .iter()
        .zip(&circle.v)
        .map(|(&ui, &vi)| (ui * ui + vi * vi).sqrt())
        .fold(0.0, f64::max);
    InfDistance {
        value: worst,
        tolerance: lipschitz * tau / CIRCLE_GRID as f64,
    }
}

/// The branch-continuous angle sequence `θ_k`.
#[derive(Debug, Clone, PartialEq)]
pub struct ThetaSequence {
    pub theta: Vec<f64>,
    /// Angular resolution of the per-step minimizer (no sub-grid
    /// refinement: every consumer tolerance is orders of magnitude above
    /// it).
    pub grid_resolution: f64,
}

impl ThetaSequence {
    pub fn max_step(&self) -> f64 {
        self.theta
            .windows(2)
            .map(|p| (p[1] - p[0]).abs())
            .fold(0.0, f64::max)
    }

    /// `max_k |θ_k − πk/N|`: deviation from constant angular speed.
    pub fn max_deviation_from_linear(&self) -> f64 {
        let big_n = self.theta.len() - 1;
        self.theta
            .iter()
            .enumerate()
            .map(|(k, &t)| (t - std::f64::consts::PI * k as f64 / big_n as f64).abs())
            .fold(0.0, f64::max)
    }
}

/// Per-time sup-norm minimizers `θ_k = argmin_θ ‖σ_k⁻¹ − c(θ)‖_∞`, the
/// branch chosen inductively by `|θ_{k+1} − θ_k| < π` (each step searches
/// one full period centred on the previous angle).
pub fn theta_sequence(w: &SortingNetwork, circle: &GreatCircle) -> ThetaSequence {
    let sweep = CircleSweep::new(circle);
    let big_n = w.len();
    let tau = 2.0 * std::f64::consts::PI;
    let table = GridTable::new(tau, CIRCLE_GRID);
    let mut a = deviation_vector(w.n());
    let mut cursor = NetworkCursor::new(w);
    let mut theta = Vec::with_capacity(big_n + 1);
    let (theta0, _) = sweep.minimize_on_grid(&a, 0.0, &table);
    theta.push(theta0);
    for _ in 1..=big_n {
        advance(&mut a, &mut cursor);
        // the search window is one full period centred on the previous
        // angle, which is the branch rule verbatim; the minimizer moves by
        // ~π/N per step, so the nearest-first scan exits almost at once
        let prev = *theta.last().unwrap();
        let (t, _) = sweep.minimize_on_grid(&a, prev, &table);
        theta.push(t);
    }
    ThetaSequence {
        theta,
        grid_resolution: tau / CIRCLE_GRID as f64,
    }
}

/// The empirical circle-coordinate measure `ν_n`: one point
/// `((2/n)u_i, (2/n)v_i)` per particle.
pub fn empirical_nu(circle: &GreatCircle) -> ScaledPointMeasure {
    let scale = 2.0 / circle.n as f64;
    ScaledPointMeasure::from_points(
        circle
            .u
            .iter()
            .zip(&circle.v)
            .map(|(&ui, &vi)| (scale * ui, scale * vi))
            .collect(),
    )
}

/// Least-squares fit of `A sin(πt + Θ)` to values on a uniform grid over
/// `[0,1]` (endpoints included). Returns `(A, Θ, sup residual)`.
pub fn fit_sine_curve(values: &[f64]) -> (f64, f64, f64) {
    let m = values.len();
    assert!(m >= 3);
    let mut s_ss = 0f64;
    let mut s_cc = 0f64;
    let mut s_sc = 0f64;
    let mut b_s = 0f64;
    let mut b_c = 0f64;
    for (j, &y) in values.iter().enumerate() {
        let t = j as f64 / (m - 1) as f64;
        let (s, c) = (std::f64::consts::PI * t).sin_cos();
        s_ss += s * s;
        s_cc += c * c;
        s_sc += s * c;
        b_s += y * s;
        b_c += y * c;
    }
    let det = s_ss * s_cc - s_sc * s_sc;
    let a = (s_cc * b_s - s_sc * b_c) / det;
    let b = (s_ss * b_c - s_sc * b_s) / det;
    let mut residual = 0f64;
    for (j, &y) in values.iter().enumerate() {
        let t = j as f64 / (m - 1) as f64;
        let (s, c) = (std::f64::consts::PI * t).sin_cos();
        residual = residual.max((y - a * s - b * c).abs());
    }
    (a.hypot(b), b.atan2(a), residual)
}

/// Grid size used by [`sine_fit`].
pub const SINE_FIT_GRID: usize = 512;

#[derive(Debug, Clone, PartialEq)]
pub struct SineFit {
    pub amplitudes: Vec<f64>,
    pub phases: Vec<f64>,
    /// `max_i sup_t |T_i(t) − A_i sin(πt + Θ_i)|` over the fit grid.
    pub max_residual: f64,
}

/// Per-particle least-squares sine fits of the scaled trajectories on a
/// 512-point uniform time grid.
pub fn sine_fit(w: &SortingNetwork) -> SineFit {
    let n = w.n();
    let m = SINE_FIT_GRID;
    let times: Vec<f64> = (0..m).map(|j| j as f64 / (m - 1) as f64).collect();
    let rows = crate::perm::interpolated_locations(w, &times);
    let scale = 2.0 / n as f64;
    let mut amplitudes = Vec::with_capacity(n);
    let mut phases = Vec::with_capacity(n);
    let mut max_residual = 0f64;
    let mut values = vec![0f64; m];
    for i in 0..n {
        for (j, row) in rows.iter().enumerate() {
            values[j] = scale * row[i] - 1.0;
        }
        let (a, theta, res) = fit_sine_curve(&values);
        amplitudes.push(a);
        phases.push(theta);
        max_residual = max_residual.max(res);
    }
    SineFit {
        amplitudes,
        phases,
        max_residual,
    }
}
