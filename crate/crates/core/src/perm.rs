//! Permutations, sorting networks, configurations and scaled processes.
//!
//! Conventions (used verbatim across the crate):
//!
//! * Permutations are one-based bijections of `{1..n}` in one-line
//!   notation; composition is `(στ)(i) = σ(τ(i))`.
//! * A sorting network on `n` elements is a sequence of swap locations
//!   `(s_1, …, s_N)`, `N = n(n−1)/2`, with each `s_k ∈ {1..n−1}`, whose
//!   composition of adjacent transpositions equals the reverse permutation
//!   `ρ = (n, …, 2, 1)`. Applying the swap at location `s` exchanges the
//!   one-line entries at positions `s` and `s+1`.
//! * The configuration at time `k` is the prefix product `σ_k`; the
//!   location of particle `i` at time `k` is `σ_k⁻¹(i)`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum PermError {
    #[error("values of length {0} are not a bijection of 1..={0}")]
    NotABijection(usize),
    #[error("invalid sorting network: {0}")]
    InvalidNetwork(&'static str),
    #[error("index {index} out of range {min}..={max}")]
    OutOfRange {
        index: i64,
        min: i64,
        max: i64,
    },
    #[error("time parameter {0} outside [0,1]")]
    TimeOutOfRange(f64),
}

/// A permutation of `{1..n}` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    values: Vec<u32>,
}

impl Permutation {
    /// Build from one-line notation (one-based values). Validates bijectivity.
    pub fn new(values: Vec<u32>) -> Result<Self, PermError> {
        let n = values.len();
        let mut seen = vec![false; n];
        for &v in &values {
            if v == 0 || v as usize > n || seen[v as usize - 1] {
                return Err(PermError::NotABijection(n));
            }
            seen[v as usize - 1] = true;
        }
        Ok(Permutation { values })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            values: (1..=n as u32).collect(),
        }
    }

    /// The reverse permutation `ρ = (n, …, 2, 1)`.
    pub fn reverse(n: usize) -> Self {
        Permutation {
            values: (1..=n as u32).rev().collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    /// `σ(i)`, one-based.
    pub fn apply(&self, i: usize) -> usize {
        self.values[i - 1] as usize
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.values
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.values.len()];
        for (pos, &v) in self.values.iter().enumerate() {
            inv[v as usize - 1] = pos as u32 + 1;
        }
        Permutation { values: inv }
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.n(), other.n());
        Permutation {
            values: other.values.iter().map(|&v| self.values[v as usize - 1]).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.values.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }
}

/// Number of out-of-order pairs; equivalently the Cayley-graph distance from
/// the identity under adjacent transpositions.
pub fn inversion_number(p: &Permutation) -> usize {
    // Fenwick tree over values: for each j count earlier entries larger
    // than p(j).
    let n = p.n();
    let mut tree = vec![0u32; n + 1];
    let add = |tree: &mut Vec<u32>, mut i: usize| {
        while i <= n {
            tree[i] += 1;
            i += i & i.wrapping_neg();
        }
    };
    let prefix = |tree: &Vec<u32>, mut i: usize| -> u32 {
        let mut s = 0;
        while i > 0 {
            s += tree[i];
            i -= i & i.wrapping_neg();
        }
        s
    };
    let mut inv = 0usize;
    for (j, &v) in p.as_slice().iter().enumerate() {
        // entries seen so far that are > v
        inv += j - prefix(&tree, v as usize) as usize;
        add(&mut tree, v as usize);
    }
    inv
}

/// `true` iff `swaps` has length `n(n−1)/2`, entries in `1..n`, and the
/// composition of the corresponding adjacent transpositions is `ρ`.
pub fn is_sorting_network(n: usize, swaps: &[u32]) -> bool {
    if n == 0 {
        return false;
    }
    let big_n = n * (n - 1) / 2;
    if swaps.len() != big_n {
        return false;
    }
    let mut line: Vec<u32> = (1..=n as u32).collect();
    for &s in swaps {
        if s == 0 || s as usize >= n {
            return false;
        }
        line.swap(s as usize - 1, s as usize);
    }
    line.iter().enumerate().all(|(i, &v)| v as usize == n - i)
}

/// An `n`-element sorting network: swap locations `(s_1, …, s_N)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct SortingNetwork {
    n: usize,
    swaps: Vec<u32>,
}

impl<'de> Deserialize<'de> for SortingNetwork {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            n: usize,
            swaps: Vec<u32>,
        }
        let raw = Raw::deserialize(de)?;
        SortingNetwork::new(raw.n, raw.swaps).map_err(serde::de::Error::custom)
    }
}

impl SortingNetwork {
    /// Validates the full definition (length, range, composition).
    pub fn new(n: usize, swaps: Vec<u32>) -> Result<Self, PermError> {
        if !is_sorting_network(n, &swaps) {
            return Err(PermError::InvalidNetwork(
                "swap sequence does not sort the reverse permutation in minimal length",
            ));
        }
        Ok(SortingNetwork { n, swaps })
    }

    /// For callers that have already established validity (bijections of
    /// validated networks, enumeration). Checked in debug builds.
    pub(crate) fn new_unchecked(n: usize, swaps: Vec<u32>) -> Self {
        debug_assert!(is_sorting_network(n, &swaps));
        SortingNetwork { n, swaps }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `N = n(n−1)/2`.
    pub fn len(&self) -> usize {
        self.swaps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.swaps.is_empty()
    }

    /// Swap location `s_k`, `k` one-based.
    pub fn swap_at(&self, k: usize) -> u32 {
        self.swaps[k - 1]
    }

    pub fn swaps(&self) -> &[u32] {
        &self.swaps
    }

    /// The configuration `σ_k = τ_{s_1} ⋯ τ_{s_k}` (prefix composition).
    pub fn configuration(&self, k: usize) -> Result<Permutation, PermError> {
        if k > self.len() {
            return Err(PermError::OutOfRange {
                index: k as i64,
                min: 0,
                max: self.len() as i64,
            });
        }
        let mut cursor = NetworkCursor::new(self);
        for _ in 0..k {
            cursor.step();
        }
        Ok(cursor.sigma().clone())
    }

    /// Scaled trajectory `T_i(t) = 2 σ_{tN}⁻¹(i)/n − 1`, linearly
    /// interpolated between integer times.
    pub fn scaled_trajectory(&self, i: usize, t: f64) -> Result<f64, PermError> {
        if i == 0 || i > self.n {
            return Err(PermError::OutOfRange {
                index: i as i64,
                min: 1,
                max: self.n as i64,
            });
        }
        if !(0.0..=1.0).contains(&t) {
            return Err(PermError::TimeOutOfRange(t));
        }
        let scaled = t * self.len() as f64;
        let lo = scaled.floor() as usize;
        let frac = scaled - lo as f64;
        let mut cursor = NetworkCursor::new(self);
        for _ in 0..lo {
            cursor.step();
        }
        let n = self.n as f64;
        let pos_lo = cursor.location_of(i) as f64;
        let value = if frac == 0.0 {
            pos_lo
        } else {
            cursor.step();
            let pos_hi = cursor.location_of(i) as f64;
            pos_lo + frac * (pos_hi - pos_lo)
        };
        Ok(2.0 * value / n - 1.0)
    }

    /// `(s_1, …, s_N) ↦ (s_2, …, s_N, n − s_1)` — the stationarity bijection.
    pub fn rotate_shift(&self) -> SortingNetwork {
        if self.swaps.is_empty() {
            return self.clone();
        }
        let mut swaps = Vec::with_capacity(self.swaps.len());
        swaps.extend_from_slice(&self.swaps[1..]);
        swaps.push(self.n as u32 - self.swaps[0]);
        SortingNetwork::new_unchecked(self.n, swaps)
    }

    /// `(s_1, …, s_N) ↦ (s_N, …, s_1)`; an involution on the set of networks.
    pub fn reverse_symmetry(&self) -> SortingNetwork {
        let swaps = self.swaps.iter().rev().copied().collect();
        SortingNetwork::new_unchecked(self.n, swaps)
    }

    /// `(s_1, …, s_N) ↦ (n−s_1, …, n−s_N)`; an involution on the set of networks.
    pub fn reflect_symmetry(&self) -> SortingNetwork {
        let swaps = self.swaps.iter().map(|&s| self.n as u32 - s).collect();
        SortingNetwork::new_unchecked(self.n, swaps)
    }

    /// The scaled swap process `η`: one point `(k/N, 2 s_k/n − 1)` per swap.
    pub fn scaled_swap_measure(&self) -> ScaledPointMeasure {
        let big_n = self.len() as f64;
        let n = self.n as f64;
        let points = self
            .swaps
            .iter()
            .enumerate()
            .map(|(k0, &s)| ((k0 + 1) as f64 / big_n, 2.0 * s as f64 / n - 1.0))
            .collect();
        ScaledPointMeasure { points }
    }

    /// The scaled configuration `μ_t`: points `(2i/n − 1, 2 σ_⌊tN⌋(i)/n − 1)`.
    pub fn scaled_configuration(&self, t: f64) -> Result<ScaledPointMeasure, PermError> {
        if !(0.0..=1.0).contains(&t) {
            return Err(PermError::TimeOutOfRange(t));
        }
        let k = (t * self.len() as f64).floor() as usize;
        let sigma = self.configuration(k.min(self.len()))?;
        let n = self.n as f64;
        let points = (1..=self.n)
            .map(|i| {
                (
                    2.0 * i as f64 / n - 1.0,
                    2.0 * sigma.apply(i) as f64 / n - 1.0,
                )
            })
            .collect();
        Ok(ScaledPointMeasure { points })
    }

    /// Windowed swap statistic: the number of swaps with zero-based time
    /// index in `[sN, tN)` and scaled location `2 s_k/n − 1` in `[a, b]`.
    pub fn windowed_swap_count(&self, s: f64, t: f64, a: f64, b: f64) -> usize {
        let big_n = self.len() as f64;
        let n = self.n as f64;
        self.swaps
            .iter()
            .enumerate()
            .filter(|&(k0, &loc)| {
                let k0 = k0 as f64;
                let y = 2.0 * loc as f64 / n - 1.0;
                k0 >= s * big_n && k0 < t * big_n && y >= a && y <= b
            })
            .count()
    }
}

/// Incremental sweep over the configurations of a network.
///
/// Maintains `σ_k` and `σ_k⁻¹` together so a full pass over `k = 0..N`
/// costs `O(N)`; statistics that visit every configuration use this rather
/// than recomposing prefixes.
pub struct NetworkCursor<'a> {
    net: &'a SortingNetwork,
    k: usize,
    sigma: Permutation,
    sigma_inv: Permutation,
}

impl<'a> NetworkCursor<'a> {
    pub fn new(net: &'a SortingNetwork) -> Self {
        NetworkCursor {
            net,
            k: 0,
            sigma: Permutation::identity(net.n()),
            sigma_inv: Permutation::identity(net.n()),
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn sigma(&self) -> &Permutation {
        &self.sigma
    }

    pub fn sigma_inv(&self) -> &Permutation {
        &self.sigma_inv
    }

    /// Location of particle `i` at the current time.
    pub fn location_of(&self, i: usize) -> usize {
        self.sigma_inv.values[i - 1] as usize
    }

    /// Apply the next swap; returns the pair of particles that moved.
    ///
    /// # Panics
    /// Panics if already at time `N`.
    pub fn step(&mut self) -> (usize, usize) {
        let s = self.net.swap_at(self.k + 1) as usize;
        let a = self.sigma.values[s - 1] as usize;
        let b = self.sigma.values[s] as usize;
        self.sigma.values.swap(s - 1, s);
        self.sigma_inv.values.swap(a - 1, b - 1);
        self.k += 1;
        (a, b)
    }
}

/// Particle locations `σ_{tN}⁻¹` at each requested time, linearly
/// interpolated between integer steps. `times` must be nondecreasing and
/// lie in `[0,1]`; the sweep is a single `O(N + |times|·n)` pass.
pub fn interpolated_locations(w: &SortingNetwork, times: &[f64]) -> Vec<Vec<f64>> {
    let n = w.n();
    let big_n = w.len();
    debug_assert!(times.windows(2).all(|p| p[0] <= p[1]));
    debug_assert!(times.iter().all(|&t| (0.0..=1.0).contains(&t)));
    let mut cursor = NetworkCursor::new(w);
    let mut row: Vec<f64> = (1..=n).map(|i| i as f64).collect();
    // the two entries that changed in the most recent step, with their
    // previous values, so the row one step back stays reconstructible
    let mut last_step: Option<(usize, usize, f64, f64)> = None;
    let mut out = Vec::with_capacity(times.len());
    for &t in times {
        let scaled = t * big_n as f64;
        let lo = (scaled.floor() as usize).min(big_n);
        let frac = scaled - lo as f64;
        let target = if frac > 0.0 { lo + 1 } else { lo };
        while cursor.k() < target {
            let (p, q) = cursor.step();
            last_step = Some((p, q, row[p - 1], row[q - 1]));
            row[p - 1] = cursor.location_of(p) as f64;
            row[q - 1] = cursor.location_of(q) as f64;
        }
        if frac == 0.0 {
            debug_assert_eq!(cursor.k(), lo);
            out.push(row.clone());
        } else {
            debug_assert_eq!(cursor.k(), lo + 1);
            let (p, q, p_old, q_old) = last_step.expect("stepped at least once");
            let mut interp = row.clone();
            interp[p - 1] = (1.0 - frac) * p_old + frac * row[p - 1];
            interp[q - 1] = (1.0 - frac) * q_old + frac * row[q - 1];
            out.push(interp);
        }
    }
    out
}

/// A finite point measure with equal weights summing to 1.
#[derive(Debug, Clone, PartialEq)]
pub struct ScaledPointMeasure {
    points: Vec<(f64, f64)>,
}

impl ScaledPointMeasure {
    pub fn from_points(points: Vec<(f64, f64)>) -> Self {
        ScaledPointMeasure { points }
    }

    pub fn points(&self) -> &[(f64, f64)] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Weight of each point (`1/count`); zero for the empty measure.
    pub fn weight(&self) -> f64 {
        if self.points.is_empty() {
            0.0
        } else {
            1.0 / self.points.len() as f64
        }
    }
}

/// The bubble-sort network `(1..n−1)(1..n−2)…(1)`.
///
/// Serves as the canonical "far from uniform" contrast case in the
/// diagnostics.
pub fn bubble_sort_network(n: usize) -> SortingNetwork {
    let mut swaps = Vec::with_capacity(n * (n - 1) / 2);
    for pass in (1..n).rev() {
        for s in 1..=pass {
            swaps.push(s as u32);
        }
    }
    SortingNetwork::new_unchecked(n, swaps)
}
