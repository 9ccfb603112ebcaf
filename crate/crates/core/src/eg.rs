//! The Edelman–Greene bijection between staircase standard Young tableaux
//! and sorting networks.
//!
//! The forward map reads swap locations off repeated applications of the
//! Schützenberger promotion operator `Φ`; the inverse map is a bumping
//! insertion algorithm whose recording tableau recovers the original
//! tableau. Promotion nominally relabels every entry on each application,
//! which would make the forward map quadratic in the number of cells; the
//! [`PromotionEngine`] stores entries relative to a running offset and a
//! rank-indexed ring of cell positions, so one application costs only the
//! length of the sliding path.

use thiserror::Error;

use crate::perm::{NetworkCursor, SortingNetwork};
use crate::tableaux::{Partition, StandardYoungTableau};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EgError {
    #[error("tableau shape is not a staircase")]
    NotStaircase,
}

/// The sliding sequence of cells from the maximum entry to `(1,1)`,
/// stepping each time to the larger of the entries above and to the left.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlidingSequence {
    pub cells: Vec<(usize, usize)>,
}

/// Sliding sequence of a nonempty standard Young tableau.
pub fn sliding_sequence(t: &StandardYoungTableau) -> SlidingSequence {
    assert!(t.size() > 0, "empty tableau has no sliding sequence");
    let mut cells = Vec::new();
    let (mut i, mut j) = t.max_cell();
    cells.push((i, j));
    while (i, j) != (1, 1) {
        let above = if i > 1 { t.entry(i - 1, j) as i64 } else { i64::MIN };
        let left = if j > 1 { t.entry(i, j - 1) as i64 } else { i64::MIN };
        if above > left {
            i -= 1;
        } else {
            j -= 1;
        }
        cells.push((i, j));
    }
    SlidingSequence { cells }
}

/// Promotion machinery over a fixed shape with offset-relative entries.
///
/// Entries are stored as `actual − offset`; an application of `Φ` bumps the
/// offset instead of rewriting the grid, then fixes up only the sliding
/// path. A ring buffer maps entry rank to cell so the maximum is found in
/// constant time; the global rank shift per application is a single base
/// decrement.
struct PromotionEngine {
    row_start: Vec<u32>,
    row_of: Vec<u32>,
    col_of: Vec<u32>,
    grid: Vec<i32>,
    ring: Vec<u32>,
    // slot(rank) = base + rank, wrapped once into [0, size]
    base: usize,
    offset: i32,
    size: usize,
}

impl PromotionEngine {
    fn new(t: &StandardYoungTableau) -> Self {
        let shape = t.shape();
        let size = shape.size();
        let rows = shape.num_rows();
        let mut row_start = Vec::with_capacity(rows);
        let mut acc = 0u32;
        for i in 1..=rows {
            row_start.push(acc);
            acc += shape.row(i) as u32;
        }
        let mut row_of = vec![0u32; size];
        let mut col_of = vec![0u32; size];
        let mut grid = vec![0i32; size];
        let mut ring = vec![0u32; size + 1];
        for i in 1..=rows {
            for j in 1..=shape.row(i) {
                let f = row_start[i - 1] as usize + j - 1;
                row_of[f] = i as u32;
                col_of[f] = j as u32;
                let v = t.entry(i, j);
                grid[f] = v as i32;
                ring[v as usize] = f as u32;
            }
        }
        PromotionEngine {
            row_start,
            row_of,
            col_of,
            grid,
            ring,
            base: 0,
            offset: 0,
            size,
        }
    }

    #[inline]
    fn slot(&self, rank: usize) -> usize {
        let s = self.base + rank;
        if s > self.size {
            s - (self.size + 1)
        } else {
            s
        }
    }

    /// Column of the maximum entry.
    fn j_max(&self) -> u32 {
        self.col_of[self.ring[self.slot(self.size)] as usize]
    }

    /// One application of `Φ`.
    fn promote(&mut self) {
        let mut f = self.ring[self.slot(self.size)] as usize;
        let mut i = self.row_of[f] as usize;
        let mut j = self.col_of[f] as usize;
        while (i, j) != (1, 1) {
            let above = if i > 1 {
                self.grid[self.row_start[i - 2] as usize + j - 1]
            } else {
                i32::MIN
            };
            let left = if j > 1 { self.grid[f - 1] } else { i32::MIN };
            let next_stored;
            let next;
            if above > left {
                next_stored = above;
                next = self.row_start[i - 2] as usize + j - 1;
                i -= 1;
            } else {
                next_stored = left;
                next = f - 1;
                j -= 1;
            }
            // the path cell inherits its successor's entry (then +1 via the
            // offset); its new rank is the successor's old rank + 1
            let slot = self.slot((next_stored + self.offset) as usize);
            self.ring[slot] = f as u32;
            self.grid[f] = next_stored;
            f = next;
        }
        self.base = if self.base == 0 {
            self.size
        } else {
            self.base - 1
        };
        self.offset += 1;
        self.grid[0] = 1 - self.offset;
        let origin_slot = self.slot(1);
        self.ring[origin_slot] = 0;
    }

    fn to_tableau(&self) -> StandardYoungTableau {
        let mut rows: Vec<Vec<u32>> = Vec::with_capacity(self.row_start.len());
        for (idx, &start) in self.row_start.iter().enumerate() {
            let end = self
                .row_start
                .get(idx + 1)
                .map(|&s| s as usize)
                .unwrap_or(self.size);
            rows.push(
                self.grid[start as usize..end]
                    .iter()
                    .map(|&v| (v + self.offset) as u32)
                    .collect(),
            );
        }
        StandardYoungTableau::from_rows_unchecked(rows)
    }
}

/// The Schützenberger operator `Φ`: slide along the sliding sequence, give
/// every other entry `+1`, and put `1` at the origin. A bijection of
/// `SYT(λ)` onto itself; the input is not mutated.
pub fn promote(t: &StandardYoungTableau) -> StandardYoungTableau {
    if t.size() == 0 {
        return t.clone();
    }
    let mut engine = PromotionEngine::new(t);
    engine.promote();
    engine.to_tableau()
}

fn staircase_order(t: &StandardYoungTableau) -> Result<usize, EgError> {
    let n = t.shape().num_rows() + 1;
    if *t.shape() != Partition::staircase(n) {
        return Err(EgError::NotStaircase);
    }
    Ok(n)
}

/// Forward Edelman–Greene map: `EG(T)_k = j_max(Φ^{N−k}(T))`.
///
/// Costs `O(N·n)`: one promotion per time step, each bounded by the
/// sliding-path length.
pub fn eg_forward(t: &StandardYoungTableau) -> Result<SortingNetwork, EgError> {
    let n = staircase_order(t)?;
    let big_n = t.size();
    if big_n == 0 {
        return Ok(SortingNetwork::new(n, Vec::new()).expect("empty network"));
    }
    let mut engine = PromotionEngine::new(t);
    let mut swaps = vec![0u32; big_n];
    swaps[big_n - 1] = engine.j_max();
    for k in (1..big_n).rev() {
        engine.promote();
        swaps[k - 1] = engine.j_max();
    }
    Ok(SortingNetwork::new_unchecked(n, swaps))
}

/// Single swap location `s_k` of `EG(T)` without materializing the whole
/// network: applies `Φ` only `N−k` times.
pub fn eg_forward_swap_at(t: &StandardYoungTableau, k: usize) -> Result<u32, EgError> {
    staircase_order(t)?;
    let big_n = t.size();
    assert!(
        (1..=big_n).contains(&k),
        "swap index {k} outside 1..={big_n}"
    );
    let mut engine = PromotionEngine::new(t);
    for _ in 0..(big_n - k) {
        engine.promote();
    }
    Ok(engine.j_max())
}

/// A Young tableau with strictly increasing rows and columns whose entries
/// need not be distinct across the diagram (the insertion algorithm's
/// working state).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct YoungTableau {
    rows: Vec<Vec<u32>>,
}

impl YoungTableau {
    pub fn new(rows: Vec<Vec<u32>>) -> Option<Self> {
        for (i, row) in rows.iter().enumerate() {
            if i > 0 && row.len() > rows[i - 1].len() {
                return None;
            }
            for (j, &v) in row.iter().enumerate() {
                if v == 0
                    || (j > 0 && row[j - 1] >= v)
                    || (i > 0 && rows[i - 1][j] >= v)
                {
                    return None;
                }
            }
        }
        Some(YoungTableau { rows })
    }

    pub fn empty() -> Self {
        YoungTableau { rows: Vec::new() }
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }
}

/// One bumping step of the insertion algorithm; returns the added cell.
fn insert_in_place(rows: &mut Vec<Vec<u32>>, u: u32) -> (usize, usize) {
    let mut q = u;
    let mut k = 0usize;
    loop {
        if k == rows.len() {
            rows.push(vec![q]);
            return (k + 1, 1);
        }
        let row = &mut rows[k];
        let pos = row.partition_point(|&v| v < q);
        if pos == row.len() {
            row.push(q);
            return (k + 1, pos + 1);
        }
        let bumped = row[pos];
        row[pos] = q;
        q = if bumped == q { q + 1 } else { bumped };
        k += 1;
    }
}

/// Insertion algorithm: bump `u` into the tableau, growing the shape by one
/// cell. Equal entries bump to `q+1` rather than duplicating.
pub fn insert(t: &YoungTableau, u: u32) -> YoungTableau {
    assert!(u > 0, "entries are positive");
    let mut rows = t.rows.clone();
    insert_in_place(&mut rows, u);
    YoungTableau { rows }
}

/// Output of the inverse Edelman–Greene map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EgInverseResult {
    /// Recording tableau of the insertion shape chain; shape `△_n`.
    pub recording: StandardYoungTableau,
    /// `ℛ_k`: length of the insertion tableau's first row after `k` inputs.
    pub first_row_lengths: Vec<u32>,
}

/// Inverse Edelman–Greene map: insert the swap locations in order and
/// record the shape growth.
pub fn eg_inverse(w: &SortingNetwork) -> EgInverseResult {
    let n = w.n();
    let mut insertion: Vec<Vec<u32>> = Vec::new();
    let mut recording: Vec<Vec<u32>> = (1..n).map(|i| vec![0u32; n - i]).collect();
    let mut first_row_lengths = Vec::with_capacity(w.len());
    for k in 1..=w.len() {
        let (i, j) = insert_in_place(&mut insertion, w.swap_at(k));
        recording[i - 1][j - 1] = k as u32;
        first_row_lengths.push(insertion[0].len() as u32);
    }
    EgInverseResult {
        recording: StandardYoungTableau::from_rows_unchecked(recording),
        first_row_lengths,
    }
}

/// Deterministic first-row displacement bound: `σ_k⁻¹(i) − i ≤ ℛ_k` for
/// every particle `i` and time `k`. Holds for every sorting network.
pub fn check_first_row_bound(w: &SortingNetwork) -> bool {
    let bound = eg_inverse(w).first_row_lengths;
    let n = w.n();
    // Displacements change by ±1 per moved particle, so `max_disp` tracked
    // on moves alone stays an upper estimate of the true maximum; it is
    // re-tightened by a full scan only when it crosses the bound.
    let mut max_disp = 0i64;
    let mut cursor = NetworkCursor::new(w);
    for k in 1..=w.len() {
        let (a, b) = cursor.step();
        for particle in [a, b] {
            let d = cursor.location_of(particle) as i64 - particle as i64;
            max_disp = max_disp.max(d);
        }
        if max_disp > bound[k - 1] as i64 {
            let actual = (1..=n)
                .map(|i| cursor.location_of(i) as i64 - i as i64)
                .max()
                .unwrap_or(0);
            max_disp = actual;
            if actual > bound[k - 1] as i64 {
                return false;
            }
        }
    }
    true
}
