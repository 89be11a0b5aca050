//! Plane partitions and their statistics.
//!
//! All indices are 1-based. A cell outside the stored array reads as 0.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// A cell `(i, j)`: row `i`, column `j`, both starting at 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub i: usize,
    pub j: usize,
}

impl Cell {
    pub fn new(i: usize, j: usize) -> Result<Self> {
        if i == 0 || j == 0 {
            return Err(Error::InvalidCell(i, j));
        }
        Ok(Cell { i, j })
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

/// A finite array of positive integers, weakly decreasing along rows and
/// columns. Zero entries are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<u32>>", into = "Vec<Vec<u32>>")]
pub struct PlanePartition {
    rows: Vec<Vec<u32>>,
}

impl PlanePartition {
    /// Validates an array of nonnegative integers (ragged rows allowed) and
    /// trims it to canonical form.
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let at = |i: usize, j: usize| rows.get(i).and_then(|r| r.get(j)).copied().unwrap_or(0);
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                if v < at(i, j + 1) {
                    return Err(Error::InvalidPlanePartition(format!(
                        "row {} increases at column {}",
                        i + 1,
                        j + 1
                    )));
                }
                if v < at(i + 1, j) {
                    return Err(Error::InvalidPlanePartition(format!(
                        "column {} increases below row {}",
                        j + 1,
                        i + 1
                    )));
                }
            }
            // a shorter row followed by a longer one reads as 0 above a positive entry
            if let Some(next) = rows.get(i + 1) {
                if next.iter().skip(row.len()).any(|&v| v > 0) {
                    return Err(Error::InvalidPlanePartition(format!(
                        "row {} extends past row {}",
                        i + 2,
                        i + 1
                    )));
                }
            }
        }
        Ok(Self::from_rows_trimmed(rows))
    }

    /// Builds from rows already known to be monotone; only trims zeros.
    pub(crate) fn from_rows_trimmed(mut rows: Vec<Vec<u32>>) -> Self {
        for row in rows.iter_mut() {
            while row.last() == Some(&0) {
                row.pop();
            }
        }
        while rows.last().is_some_and(|r| r.is_empty()) {
            rows.pop();
        }
        PlanePartition { rows }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    /// Length of the first row.
    pub fn num_cols(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    /// The largest entry, `π_11`.
    pub fn max_entry(&self) -> u32 {
        self.entry(1, 1)
    }

    /// `π_ij` with 1-based indices; absent cells read 0.
    pub fn entry(&self, i: usize, j: usize) -> u32 {
        if i == 0 || j == 0 {
            return 0;
        }
        self.rows.get(i - 1).and_then(|r| r.get(j - 1)).copied().unwrap_or(0)
    }

    pub fn cells(&self) -> impl Iterator<Item = (Cell, u32)> + '_ {
        self.rows.iter().enumerate().flat_map(|(r, row)| {
            row.iter().enumerate().map(move |(c, &v)| (Cell { i: r + 1, j: c + 1 }, v))
        })
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.len() as u32).collect())
            .expect("row lengths of a plane partition are weakly decreasing")
    }

    /// Sum of all entries.
    pub fn volume(&self) -> u64 {
        self.rows.iter().flatten().map(|&v| v as u64).sum()
    }

    /// Sum of the diagonal entries.
    pub fn trace(&self) -> u64 {
        (1..=self.rows.len()).map(|i| self.entry(i, i) as u64).sum()
    }

    pub fn is_descent(&self, i: usize, j: usize) -> bool {
        let v = self.entry(i, j);
        v > 0 && v > self.entry(i + 1, j)
    }

    /// Cells whose entry is strictly larger than the entry directly below.
    pub fn descent_set(&self) -> BTreeSet<Cell> {
        self.descents().map(|(c, _)| c).collect()
    }

    /// Descent cells with their entries, in row-major order.
    pub fn descents(&self) -> impl Iterator<Item = (Cell, u32)> + '_ {
        self.cells().filter(|(c, _)| self.is_descent(c.i, c.j))
    }

    /// Number of descent cells.
    pub fn des(&self) -> u64 {
        self.descents().count() as u64
    }

    /// Map `(i, ℓ)` to the columns `j` with `π_ij = ℓ > π_{i+1,j}`.
    /// Only nonempty sets are present.
    pub fn descent_level_sets(&self) -> BTreeMap<(usize, u32), BTreeSet<usize>> {
        let mut out: BTreeMap<(usize, u32), BTreeSet<usize>> = BTreeMap::new();
        for (c, v) in self.descents() {
            out.entry((c.i, v)).or_default().insert(c.j);
        }
        out
    }

    /// Sum over descent cells of `π_ij + i - 1`.
    pub fn up_hook_volume(&self) -> u64 {
        self.descents().map(|(c, v)| v as u64 + c.i as u64 - 1).sum()
    }

    /// Sum of the entries in descent cells.
    pub fn corner_volume(&self) -> u64 {
        self.descents().map(|(_, v)| v as u64).sum()
    }

    /// `c_ℓ` for `ℓ = 1..=m`: the number of columns containing `ℓ`.
    pub fn column_counts(&self, m: u32) -> Result<Vec<u32>> {
        if self.max_entry() > m {
            return Err(Error::ValueOutOfRange(format!(
                "entry {} exceeds m = {m}",
                self.max_entry()
            )));
        }
        let mut counts = vec![0u32; m as usize];
        // each value occupies a contiguous run of a column, ending at a descent
        for (_, v) in self.descents() {
            counts[v as usize - 1] += 1;
        }
        Ok(counts)
    }

    /// `d_i`: number of descent cells in row `i`, for every stored row.
    pub fn row_descent_counts(&self) -> Vec<u32> {
        let mut counts = vec![0u32; self.rows.len()];
        for (c, _) in self.descents() {
            counts[c.i - 1] += 1;
        }
        counts
    }

    /// Entrywise sum.
    pub fn add(&self, other: &PlanePartition) -> PlanePartition {
        let n = self.rows.len().max(other.rows.len());
        let rows = (1..=n)
            .map(|i| {
                let k = self.rows.get(i - 1).map_or(0, Vec::len).max(other.rows.get(i - 1).map_or(0, Vec::len));
                (1..=k).map(|j| self.entry(i, j) + other.entry(i, j)).collect()
            })
            .collect();
        PlanePartition { rows }
    }

    /// Every entry multiplied by `k`.
    pub fn scale(&self, k: u32) -> PlanePartition {
        if k == 0 {
            return Self::empty();
        }
        PlanePartition { rows: self.rows.iter().map(|r| r.iter().map(|&v| v * k).collect()).collect() }
    }

    /// Fits in the `k × n × m` box: at most `k` columns, `n` rows, entries `<= m`.
    pub fn fits_box(&self, k: usize, n: usize, m: u32) -> bool {
        self.num_cols() <= k && self.num_rows() <= n && self.max_entry() <= m
    }

    /// Shape exactly the rectangle `k × n` and entries `<= m`.
    pub fn exact_base(&self, k: usize, n: usize, m: u32) -> bool {
        self.num_rows() == n && self.rows.iter().all(|r| r.len() == k) && self.max_entry() <= m
    }
}

impl TryFrom<Vec<Vec<u32>>> for PlanePartition {
    type Error = Error;

    fn try_from(rows: Vec<Vec<u32>>) -> Result<Self> {
        PlanePartition::new(rows)
    }
}

impl From<PlanePartition> for Vec<Vec<u32>> {
    fn from(p: PlanePartition) -> Self {
        p.rows
    }
}

impl fmt::Display for PlanePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return writeln!(f, "∅");
        }
        let width = self.max_entry().to_string().len();
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(|v| format!("{v:>width$}")).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}
