//! Exact-uniform sampling of standard Young tableaux by hook walks, the
//! coupled sampler for nested shapes, and the uniform sorting-network
//! sampler.
//!
//! A hook walk starts at a uniform cell and repeatedly jumps to a uniform
//! cell of the current cell's hook until it reaches a corner; the corner
//! has exactly the law of the maximum entry's cell under the uniform
//! tableau measure. Placing `|λ|, |λ|−1, …, 1` by repeated walks on the
//! shrinking diagram samples `SYT(λ)` exactly uniformly, and composing
//! with the forward Edelman–Greene map samples `Ω_n` exactly uniformly.
//!
//! Within a hook of size `h` the draw is a single integer in `[0, h)`
//! enumerated as: the cell itself, then the rightward arm, then the
//! downward leg. The order is fixed so the coupled sampler's
//! copy-while-inside rule consumes an identical bitstream on every
//! platform.

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

use crate::eg::eg_forward;
use crate::perm::SortingNetwork;
use crate::rng::RandomStream;
use crate::tableaux::{Partition, StandardYoungTableau};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HookWalkError {
    #[error("hook walk requires a nonempty shape")]
    EmptyShape,
    #[error("coupled sampling requires the first shape to be contained in the second")]
    NotContained,
}

/// A realized hook-walk path `c_0, …, c_r` (repeats allowed: each draw is
/// uniform over the full hook, including the current cell).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HookWalkTrace {
    pub cells: Vec<(usize, usize)>,
}

/// Mutable diagram state for the shrinking-shape samplers: row and column
/// lengths plus a Fenwick tree over rows for O(log) uniform cell selection.
struct ShrinkingShape {
    rows: Vec<usize>,
    cols: Vec<usize>,
    fenwick: Vec<usize>,
    cells: usize,
}

impl ShrinkingShape {
    fn new(p: &Partition) -> Self {
        let rows: Vec<usize> = (1..=p.num_rows()).map(|i| p.row(i)).collect();
        let cols: Vec<usize> = {
            let conj = p.conjugate();
            (1..=conj.num_rows()).map(|j| conj.row(j)).collect()
        };
        let mut fenwick = vec![0usize; rows.len() + 1];
        for (i0, &len) in rows.iter().enumerate() {
            let mut idx = i0 + 1;
            while idx < fenwick.len() {
                fenwick[idx] += len;
                idx += idx & idx.wrapping_neg();
            }
        }
        let cells = p.size();
        ShrinkingShape {
            rows,
            cols,
            fenwick,
            cells,
        }
    }

    fn contains(&self, (i, j): (usize, usize)) -> bool {
        i >= 1 && i <= self.rows.len() && j >= 1 && j <= self.rows[i - 1]
    }

    /// Arm (cells to the right) and leg (cells below) of `(i,j)`.
    fn arm_leg(&self, (i, j): (usize, usize)) -> (usize, usize) {
        (self.rows[i - 1] - j, self.cols[j - 1] - i)
    }

    /// Uniform cell of the current diagram.
    fn uniform_cell(&self, rng: &mut RandomStream) -> (usize, usize) {
        debug_assert!(self.cells > 0);
        let g = rng.index(self.cells);
        // Fenwick descent: first row whose cumulative length exceeds g.
        let len = self.rows.len();
        let mut idx = 0usize;
        let mut rem = g;
        let mut step = len.next_power_of_two();
        while step > 0 {
            let next = idx + step;
            if next <= len && self.fenwick[next] <= rem {
                idx = next;
                rem -= self.fenwick[next];
            }
            step >>= 1;
        }
        (idx + 1, rem + 1)
    }

    fn remove_corner(&mut self, (i, j): (usize, usize)) {
        debug_assert_eq!(self.rows[i - 1], j);
        debug_assert_eq!(self.cols[j - 1], i);
        self.rows[i - 1] -= 1;
        self.cols[j - 1] -= 1;
        self.cells -= 1;
        let mut idx = i;
        while idx < self.fenwick.len() {
            self.fenwick[idx] -= 1;
            idx += idx & idx.wrapping_neg();
        }
    }

    /// One hook-walk draw from `(i,j)`; `None` keeps the walk in place.
    fn hook_step(&self, cell: (usize, usize), rng: &mut RandomStream) -> (usize, usize) {
        let (arm, leg) = self.arm_leg(cell);
        let t = rng.index(arm + leg + 1);
        if t == 0 {
            cell
        } else if t <= arm {
            (cell.0, cell.1 + t)
        } else {
            (cell.0 + (t - arm), cell.1)
        }
    }

    /// Run the walk from `start` until it reaches a corner.
    fn walk_to_corner(
        &self,
        mut cell: (usize, usize),
        rng: &mut RandomStream,
        trace: Option<&mut Vec<(usize, usize)>>,
    ) -> (usize, usize) {
        let mut trace = trace;
        loop {
            let (arm, leg) = self.arm_leg(cell);
            if arm + leg == 0 {
                return cell;
            }
            cell = self.hook_step(cell, rng);
            if let Some(t) = trace.as_deref_mut() {
                t.push(cell);
            }
        }
    }
}

/// One hook walk on `λ`; returns the final corner cell.
pub fn hook_walk(p: &Partition, rng: &mut RandomStream) -> Result<(usize, usize), HookWalkError> {
    Ok(hook_walk_trace(p, rng)?.cells.last().copied().unwrap())
}

/// One hook walk on `λ` with its full path.
pub fn hook_walk_trace(
    p: &Partition,
    rng: &mut RandomStream,
) -> Result<HookWalkTrace, HookWalkError> {
    if p.size() == 0 {
        return Err(HookWalkError::EmptyShape);
    }
    let shape = ShrinkingShape::new(p);
    let start = shape.uniform_cell(rng);
    let mut cells = vec![start];
    shape.walk_to_corner(start, rng, Some(&mut cells));
    Ok(HookWalkTrace { cells })
}

/// Exact law of the hook walk's final cell: `c ↦ d(λ∖{c}) / d(λ)` over the
/// corners of `λ`. Sums to one by the branching identity.
pub fn exact_corner_distribution(p: &Partition) -> Vec<((usize, usize), BigRational)> {
    let total = BigInt::from(p.dimension());
    p.corners()
        .into_iter()
        .map(|(i, j)| {
            let sub = p.remove_corner(i, j).expect("corner is removable");
            (
                (i, j),
                BigRational::new(BigInt::from(sub.dimension()), total.clone()),
            )
        })
        .collect()
}

/// Exactly uniform sample from `SYT(λ)`: place `|λ|, |λ|−1, …, 1` by
/// repeated hook walks on the shrinking diagram.
pub fn sample_syt(p: &Partition, rng: &mut RandomStream) -> StandardYoungTableau {
    let mut shape = ShrinkingShape::new(p);
    let mut grid: Vec<Vec<u32>> = (1..=p.num_rows()).map(|i| vec![0u32; p.row(i)]).collect();
    for value in (1..=p.size()).rev() {
        let start = shape.uniform_cell(rng);
        let corner = shape.walk_to_corner(start, rng, None);
        grid[corner.0 - 1][corner.1 - 1] = value as u32;
        shape.remove_corner(corner);
    }
    StandardYoungTableau::from_rows_unchecked(grid)
}

/// Coupled uniform samples on `λ ⊆ μ` satisfying, surely,
/// `mu_entry(c) ≤ lambda_entry(c) + |μ∖λ|` for every cell `c ∈ λ`.
///
/// Per round the walk runs in `μ`; the walk in `λ` copies it while it stays
/// inside `λ` and continues with fresh randomness from the moment it
/// leaves (a uniform draw from the bigger hook conditioned to stay inside
/// the smaller one is uniform on the smaller). Returns `(λ-tableau,
/// μ-tableau)`.
pub fn coupled_sample(
    lambda: &Partition,
    mu: &Partition,
    rng: &mut RandomStream,
) -> Result<(StandardYoungTableau, StandardYoungTableau), HookWalkError> {
    if !lambda.is_contained(mu) {
        return Err(HookWalkError::NotContained);
    }
    let size_small = lambda.size();
    let size_big = mu.size();
    let mut small = ShrinkingShape::new(lambda);
    let mut big = ShrinkingShape::new(mu);
    let mut grid_small: Vec<Vec<u32>> = (1..=lambda.num_rows())
        .map(|i| vec![0u32; lambda.row(i)])
        .collect();
    let mut grid_big: Vec<Vec<u32>> = (1..=mu.num_rows()).map(|i| vec![0u32; mu.row(i)]).collect();

    for round in 0..size_big {
        let small_active = round < size_small;
        let mut cell = big.uniform_cell(rng);
        let mut coupled = small_active && small.contains(cell);
        let mut small_corner = None;
        if small_active && !coupled {
            let start = small.uniform_cell(rng);
            small_corner = Some(small.walk_to_corner(start, rng, None));
        }
        loop {
            let (arm, leg) = big.arm_leg(cell);
            if arm + leg == 0 {
                break;
            }
            let next = big.hook_step(cell, rng);
            if coupled && !small.contains(next) {
                coupled = false;
                small_corner = Some(small.walk_to_corner(cell, rng, None));
            }
            cell = next;
        }
        grid_big[cell.0 - 1][cell.1 - 1] = (size_big - round) as u32;
        let big_corner = cell;
        if small_active {
            // while coupled the small walk sits at the same cell, and a
            // corner of the big shape inside the small one is a corner there
            let corner = if coupled { big_corner } else { small_corner.unwrap() };
            grid_small[corner.0 - 1][corner.1 - 1] = (size_small - round) as u32;
            small.remove_corner(corner);
        }
        big.remove_corner(big_corner);
    }
    Ok((
        StandardYoungTableau::from_rows_unchecked(grid_small),
        StandardYoungTableau::from_rows_unchecked(grid_big),
    ))
}

/// Exactly uniform sorting network: forward Edelman–Greene image of a
/// uniform staircase tableau.
pub fn sample_usn(n: usize, rng: &mut RandomStream) -> SortingNetwork {
    let tableau = sample_syt(&Partition::staircase(n), rng);
    eg_forward(&tableau).expect("staircase shape by construction")
}

/// Sample the first swap location `s_1` of a uniform `n`-element network
/// without materializing the network: the law of `s_1` equals the law of
/// the column of the maximum-entry cell of a uniform staircase tableau,
/// which is exactly what one hook walk produces.
pub fn sample_first_swap(n: usize, rng: &mut RandomStream) -> u32 {
    assert!(n >= 2);
    let (_, j) = hook_walk(&Partition::staircase(n), rng).expect("nonempty staircase");
    j as u32
}
