//! Partitions, Young diagrams, standard Young tableaux and exact counting.
//!
//! Cells are addressed `(row, column)`, one-based, with `(1,1)` the
//! top-left corner. All counts are exact big integers: the tableau counts
//! used as test oracles overflow machine words almost immediately.

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Exact nonnegative count.
pub type BigCount = BigUint;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TableauxError {
    #[error("parts must be positive and weakly decreasing")]
    NotAPartition,
    #[error("cell ({0},{1}) lies outside the diagram")]
    CellOutsideDiagram(usize, usize),
    #[error("chain step {0} does not add exactly one cell")]
    InvalidChainStep(usize),
    #[error("entries do not form a standard Young tableau")]
    InvalidTableau,
}

/// A partition `λ_1 ≥ λ_2 ≥ … ≥ λ_k > 0`, identified with its Young diagram.
///
/// The empty partition is a first-class value (the start of every growth
/// chain, and the staircase of order 1).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, TableauxError> {
        if parts.iter().any(|&p| p == 0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(TableauxError::NotAPartition);
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The staircase diagram `△_n = (n−1, n−2, …, 1)`; `△_1` is empty.
    pub fn staircase(n: usize) -> Self {
        Partition {
            parts: (1..n as u32).rev().collect(),
        }
    }

    /// The `n × n` square diagram `□_n`.
    pub fn square(n: usize) -> Self {
        Partition {
            parts: vec![n as u32; n],
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn num_rows(&self) -> usize {
        self.parts.len()
    }

    /// Row length, zero for rows below the diagram.
    pub fn row(&self, i: usize) -> usize {
        if i == 0 || i > self.parts.len() {
            0
        } else {
            self.parts[i - 1] as usize
        }
    }

    /// Total number of cells `|λ|`.
    pub fn size(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    pub fn contains_cell(&self, i: usize, j: usize) -> bool {
        i >= 1 && j >= 1 && j <= self.row(i)
    }

    /// The conjugate partition (reflection along the main diagonal).
    pub fn conjugate(&self) -> Partition {
        let cols = self.row(1);
        let parts = (1..=cols)
            .map(|j| self.parts.iter().filter(|&&p| p as usize >= j).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Hook number `h_{i,j} = λ_i − j + λ′_j − i + 1`.
    pub fn hook_number(&self, i: usize, j: usize) -> Result<usize, TableauxError> {
        if !self.contains_cell(i, j) {
            return Err(TableauxError::CellOutsideDiagram(i, j));
        }
        let col_len = self.parts.iter().filter(|&&p| p as usize >= j).count();
        Ok(self.row(i) - j + col_len - i + 1)
    }

    /// `true` iff `self ⊆ other` as subsets of the plane.
    pub fn is_contained(&self, other: &Partition) -> bool {
        self.parts
            .iter()
            .enumerate()
            .all(|(idx, &p)| other.row(idx + 1) >= p as usize)
    }

    /// Removable corner cells `(i, λ_i)`, top to bottom.
    pub fn corners(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 1..=self.parts.len() {
            if self.row(i) > self.row(i + 1) {
                out.push((i, self.row(i)));
            }
        }
        out
    }

    /// The diagram with one corner cell removed.
    pub fn remove_corner(&self, i: usize, j: usize) -> Result<Partition, TableauxError> {
        if !self.contains_cell(i, j) || j != self.row(i) || self.row(i + 1) >= j {
            return Err(TableauxError::CellOutsideDiagram(i, j));
        }
        let mut parts = self.parts.clone();
        parts[i - 1] -= 1;
        if parts[i - 1] == 0 {
            parts.remove(i - 1);
        }
        Ok(Partition { parts })
    }

    /// Exact number of standard Young tableaux of this shape (hook formula).
    pub fn dimension(&self) -> BigCount {
        let mut num = BigUint::one();
        for k in 1..=self.size() {
            num *= BigUint::from(k);
        }
        let conj = self.conjugate();
        let mut den = BigUint::one();
        for (i0, &p) in self.parts.iter().enumerate() {
            for j in 1..=p as usize {
                let hook = p as usize - j + conj.row(j) - (i0 + 1) + 1;
                den *= BigUint::from(hook);
            }
        }
        num / den
    }

    /// All partitions of `n`, in lexicographically decreasing order.
    pub fn enumerate(n: usize) -> Vec<Partition> {
        fn rec(remaining: usize, max_part: usize, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition {
                    parts: prefix.clone(),
                });
                return;
            }
            for p in (1..=remaining.min(max_part)).rev() {
                prefix.push(p as u32);
                rec(remaining - p, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n.max(1), &mut Vec::new(), &mut out);
        out
    }
}

/// A standard Young tableau: entries `1..=|shape|`, strictly increasing
/// along rows and columns.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct StandardYoungTableau {
    shape: Partition,
    rows: Vec<Vec<u32>>,
}

impl<'de> Deserialize<'de> for StandardYoungTableau {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            #[allow(dead_code)]
            shape: Partition,
            rows: Vec<Vec<u32>>,
        }
        let raw = Raw::deserialize(de)?;
        StandardYoungTableau::from_rows(raw.rows).map_err(serde::de::Error::custom)
    }
}

impl StandardYoungTableau {
    /// Build from ragged rows, validating all tableau invariants.
    pub fn from_rows(rows: Vec<Vec<u32>>) -> Result<Self, TableauxError> {
        let parts: Vec<u32> = rows.iter().map(|r| r.len() as u32).collect();
        let shape = Partition::new(parts).map_err(|_| TableauxError::InvalidTableau)?;
        let n = shape.size();
        let mut seen = vec![false; n];
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                if v == 0 || v as usize > n || seen[v as usize - 1] {
                    return Err(TableauxError::InvalidTableau);
                }
                seen[v as usize - 1] = true;
                if j > 0 && row[j - 1] >= v {
                    return Err(TableauxError::InvalidTableau);
                }
                if i > 0 && rows[i - 1][j] >= v {
                    return Err(TableauxError::InvalidTableau);
                }
            }
        }
        Ok(StandardYoungTableau { shape, rows })
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<u32>>) -> Self {
        let parts: Vec<u32> = rows.iter().map(|r| r.len() as u32).collect();
        debug_assert!(StandardYoungTableau::from_rows(rows.clone()).is_ok());
        StandardYoungTableau {
            shape: Partition { parts },
            rows,
        }
    }

    pub fn empty() -> Self {
        StandardYoungTableau {
            shape: Partition::empty(),
            rows: Vec::new(),
        }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Entry `t_{i,j}` (one-based cell).
    pub fn entry(&self, i: usize, j: usize) -> u32 {
        self.rows[i - 1][j - 1]
    }

    /// Cell holding the maximum entry `|λ|` (always a removable corner).
    pub fn max_cell(&self) -> (usize, usize) {
        let n = self.size() as u32;
        for (i0, row) in self.rows.iter().enumerate() {
            if let Some(j0) = row.iter().position(|&v| v == n) {
                return (i0 + 1, j0 + 1);
            }
        }
        unreachable!("standard tableau always contains its size")
    }

    /// Entries `≤ k` in the first row; the first-row tracker of the
    /// insertion shape chain.
    pub fn first_row_count(&self, k: u32) -> usize {
        match self.rows.first() {
            None => 0,
            Some(row) => row.iter().take_while(|&&v| v <= k).count(),
        }
    }
}

/// Recording tableau of an increasing chain `∅ = λ_0 ↗ λ_1 ↗ ⋯ ↗ λ_N`:
/// the entry at each cell is the step at which the cell appeared.
pub fn recording_tableau(chain: &[Partition]) -> Result<StandardYoungTableau, TableauxError> {
    if chain.is_empty() || chain[0] != Partition::empty() {
        return Err(TableauxError::InvalidChainStep(0));
    }
    let last = chain.last().unwrap();
    let mut rows: Vec<Vec<u32>> = (1..=last.num_rows())
        .map(|i| vec![0u32; last.row(i)])
        .collect();
    for (step, pair) in chain.windows(2).enumerate() {
        let (prev, next) = (&pair[0], &pair[1]);
        if next.size() != prev.size() + 1 || !prev.is_contained(next) {
            return Err(TableauxError::InvalidChainStep(step + 1));
        }
        // locate the added cell
        let mut added = None;
        for i in 1..=next.num_rows() {
            if next.row(i) == prev.row(i) + 1 {
                added = Some((i, next.row(i)));
                break;
            }
        }
        let (i, j) = added.ok_or(TableauxError::InvalidChainStep(step + 1))?;
        rows[i - 1][j - 1] = (step + 1) as u32;
    }
    StandardYoungTableau::from_rows(rows)
}

/// Exhaustive enumeration of `SYT(λ)`, in the order induced by always
/// placing the next entry in the topmost admissible row.
///
/// Test oracle; practical for `|λ|` up to the mid-teens.
pub fn enumerate_syt(shape: &Partition) -> Vec<StandardYoungTableau> {
    let n = shape.size();
    let rows = shape.num_rows();
    let mut fill = vec![0usize; rows];
    let mut grid: Vec<Vec<u32>> = (1..=rows).map(|i| vec![0u32; shape.row(i)]).collect();
    let mut out = Vec::new();
    fn rec(
        next: usize,
        n: usize,
        shape: &Partition,
        fill: &mut [usize],
        grid: &mut [Vec<u32>],
        out: &mut Vec<StandardYoungTableau>,
    ) {
        if next > n {
            out.push(StandardYoungTableau::from_rows_unchecked(
                grid.to_vec(),
            ));
            return;
        }
        for i in 0..fill.len() {
            if fill[i] < shape.row(i + 1) && (i == 0 || fill[i - 1] > fill[i]) {
                grid[i][fill[i]] = next as u32;
                fill[i] += 1;
                rec(next + 1, n, shape, fill, grid, out);
                fill[i] -= 1;
            }
        }
    }
    rec(1, n, shape, &mut fill, &mut grid, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjugate_examples() {
        let p = Partition::new(vec![4, 4, 1]).unwrap();
        assert_eq!(p.conjugate().parts(), &[3, 2, 2, 2]);
        let single = Partition::new(vec![1]).unwrap();
        assert_eq!(single.conjugate(), single);
    }

    #[test]
    fn conjugate_is_an_involution() {
        for n in 0..=9 {
            for p in Partition::enumerate(n) {
                assert_eq!(p.conjugate().conjugate(), p);
            }
        }
    }

    #[test]
    fn hook_numbers() {
        let p = Partition::new(vec![4, 4, 1]).unwrap();
        assert_eq!(p.hook_number(1, 1).unwrap(), 6);
        assert_eq!(p.hook_number(3, 1).unwrap(), 1);
        assert_eq!(p.hook_number(1, 4).unwrap(), 2);
        assert!(p.hook_number(2, 5).is_err());
        assert_eq!(Partition::square(2).hook_number(1, 1).unwrap(), 3);
    }

    #[test]
    fn dimension_examples_match_enumeration() {
        // brute-force oracle: enumerate all standard fillings
        for shape in [
            Partition::new(vec![4, 4, 1]).unwrap(),
            Partition::square(2),
            Partition::staircase(4),
            Partition::staircase(5),
            Partition::new(vec![3, 2]).unwrap(),
        ] {
            let listed = enumerate_syt(&shape).len();
            assert_eq!(BigUint::from(listed), shape.dimension());
        }
        assert_eq!(
            Partition::new(vec![4, 4, 1]).unwrap().dimension(),
            BigUint::from(84u32)
        );
        assert_eq!(Partition::square(2).dimension(), BigUint::from(2u32));
        assert_eq!(Partition::staircase(5).dimension(), BigUint::from(768u32));
    }

    #[test]
    fn named_shapes() {
        assert_eq!(Partition::staircase(4).parts(), &[3, 2, 1]);
        assert_eq!(Partition::square(1).parts(), &[1]);
        assert_eq!(Partition::staircase(1), Partition::empty());
        for n in 1..10 {
            assert_eq!(Partition::staircase(n).size(), n * (n - 1) / 2);
        }
    }

    #[test]
    fn dimension_symmetric_under_conjugation() {
        for n in 0..=10 {
            for p in Partition::enumerate(n) {
                assert_eq!(p.dimension(), p.conjugate().dimension());
            }
        }
    }

    #[test]
    fn dimension_satisfies_branching_recurrence() {
        use num_traits::Zero;
        for n in 1..=12 {
            for p in Partition::enumerate(n) {
                let mut total = BigUint::zero();
                for (i, j) in p.corners() {
                    total += p.remove_corner(i, j).unwrap().dimension();
                }
                assert_eq!(total, p.dimension(), "branching failed at {:?}", p);
            }
        }
    }

    #[test]
    fn recording_tableau_examples() {
        let chain = vec![Partition::empty(), Partition::new(vec![1]).unwrap()];
        assert_eq!(recording_tableau(&chain).unwrap().rows(), &[vec![1]]);

        let chain = vec![
            Partition::empty(),
            Partition::new(vec![1]).unwrap(),
            Partition::new(vec![1, 1]).unwrap(),
            Partition::new(vec![2, 1]).unwrap(),
        ];
        assert_eq!(
            recording_tableau(&chain).unwrap().rows(),
            &[vec![1, 3], vec![2]]
        );

        let bad = vec![Partition::empty(), Partition::new(vec![2]).unwrap()];
        assert!(recording_tableau(&bad).is_err());
    }

    #[test]
    fn containment() {
        assert!(Partition::staircase(3).is_contained(&Partition::staircase(4)));
        assert!(!Partition::new(vec![2, 2])
            .unwrap()
            .is_contained(&Partition::new(vec![3, 1]).unwrap()));
        let p = Partition::new(vec![3, 1]).unwrap();
        assert!(p.is_contained(&p));
        assert!(Partition::empty().is_contained(&p));
    }

    #[test]
    fn corners_and_removal() {
        let p = Partition::new(vec![4, 4, 1]).unwrap();
        assert_eq!(p.corners(), vec![(2, 4), (3, 1)]);
        assert_eq!(p.remove_corner(3, 1).unwrap().parts(), &[4, 4]);
        assert_eq!(p.remove_corner(2, 4).unwrap().parts(), &[4, 3, 1]);
        assert!(p.remove_corner(1, 4).is_err());
    }

    #[test]
    fn syt_validation() {
        assert!(StandardYoungTableau::from_rows(vec![vec![1, 2], vec![3]]).is_ok());
        assert!(StandardYoungTableau::from_rows(vec![vec![1, 3], vec![2]]).is_ok());
        assert!(StandardYoungTableau::from_rows(vec![vec![2, 1], vec![3]]).is_err());
        assert!(StandardYoungTableau::from_rows(vec![vec![1, 2], vec![2]]).is_err());
        assert!(StandardYoungTableau::from_rows(vec![vec![1], vec![2, 3]]).is_err());
    }

    #[test]
    fn enumerate_syt_counts() {
        assert_eq!(enumerate_syt(&Partition::staircase(4)).len(), 16);
        assert_eq!(enumerate_syt(&Partition::square(2)).len(), 2);
        assert_eq!(enumerate_syt(&Partition::empty()).len(), 1);
    }

    #[test]
    fn tableau_json_shape() {
        let t = StandardYoungTableau::from_rows(vec![vec![1, 3], vec![2]]).unwrap();
        let js = serde_json::to_string(&t).unwrap();
        assert_eq!(js, "{\"shape\":[2,1],\"rows\":[[1,3],[2]]}");
        let back: StandardYoungTableau = serde_json::from_str(&js).unwrap();
        assert_eq!(back, t);
    }
}
