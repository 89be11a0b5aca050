//! Exhaustive generators for the finite families used throughout the crate,
//! and exact counters built on top of them.
//!
//! Every generator is a lazy iterator in lexicographic order of its row-major
//! encoding, so listings are stable across runs.

use std::collections::HashMap;

use crate::bijection::{is_strict_tableau, phi_inverse};
use crate::error::{Error, Result};
use crate::matrix::NMatrix;
use crate::partition::Partition;
use crate::plane::PlanePartition;
use crate::word::Word;

/// The `k × n × m` box: at most `k` columns (`None` for unbounded), at most
/// `n` rows, entries at most `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BoxSpec {
    pub k: Option<usize>,
    pub n: usize,
    pub m: u32,
}

impl BoxSpec {
    pub fn new(k: usize, n: usize, m: u32) -> Self {
        BoxSpec { k: Some(k), n, m }
    }

    pub fn unbounded(n: usize, m: u32) -> Self {
        BoxSpec { k: None, n, m }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Phase {
    Fresh,
    Running,
    Done,
}

/// Odometer over fillings of a fixed sequence of cells in row-major order.
///
/// Each cell is bounded above by its left neighbour, its upper neighbour
/// (strictly when `strict_columns`), and `cap`; below by a static bound.
/// The static lower bounds must themselves form a valid filling, so that
/// resetting a suffix to its lower bounds never breaks a constraint.
struct Filling {
    left: Vec<Option<usize>>,
    above: Vec<Option<usize>>,
    lower: Vec<u32>,
    /// suffix sums of `lower`, one longer than `lower`
    lower_tail: Vec<u64>,
    cap: u32,
    strict_columns: bool,
    volume_cap: Option<u64>,
    values: Vec<u32>,
    phase: Phase,
}

impl Filling {
    fn new(cells: &[(usize, usize)], lower: Vec<u32>, cap: u32, strict_columns: bool, volume_cap: Option<u64>) -> Self {
        let index: HashMap<(usize, usize), usize> = cells.iter().enumerate().map(|(p, &c)| (c, p)).collect();
        let left = cells
            .iter()
            .map(|&(r, c)| c.checked_sub(1).and_then(|c| index.get(&(r, c)).copied()))
            .collect();
        let above = cells
            .iter()
            .map(|&(r, c)| r.checked_sub(1).and_then(|r| index.get(&(r, c)).copied()))
            .collect();
        let mut lower_tail = vec![0u64; lower.len() + 1];
        for p in (0..lower.len()).rev() {
            lower_tail[p] = lower_tail[p + 1] + lower[p] as u64;
        }
        Filling {
            left,
            above,
            lower,
            lower_tail,
            cap,
            strict_columns,
            volume_cap,
            values: Vec::new(),
            phase: Phase::Fresh,
        }
    }

    /// Largest admissible value at `p` given the values before it; `None`
    /// when no value is admissible.
    fn upper(&self, p: usize) -> Option<u32> {
        let mut u = self.cap;
        if let Some(l) = self.left[p] {
            u = u.min(self.values[l]);
        }
        if let Some(a) = self.above[p] {
            let v = self.values[a];
            if self.strict_columns {
                u = u.min(v.checked_sub(1)?);
            } else {
                u = u.min(v);
            }
        }
        Some(u)
    }

    fn advance(&mut self) -> Option<&[u32]> {
        match self.phase {
            Phase::Done => return None,
            Phase::Fresh => {
                self.values = self.lower.clone();
                let feasible = (0..self.values.len()).all(|p| self.upper(p).is_some_and(|u| self.lower[p] <= u))
                    && self.volume_cap.is_none_or(|cap| self.lower_tail[0] <= cap);
                self.phase = if feasible { Phase::Running } else { Phase::Done };
            }
            Phase::Running => {
                let mut before = Vec::with_capacity(self.values.len());
                let mut acc = 0u64;
                for &v in &self.values {
                    before.push(acc);
                    acc += v as u64;
                }
                let mut stepped = false;
                for p in (0..self.values.len()).rev() {
                    let next = self.values[p] + 1;
                    if self.upper(p).is_none_or(|u| next > u) {
                        continue;
                    }
                    if let Some(cap) = self.volume_cap {
                        if before[p] + next as u64 + self.lower_tail[p + 1] > cap {
                            continue;
                        }
                    }
                    self.values[p] = next;
                    let tail = p + 1;
                    self.values[tail..].copy_from_slice(&self.lower[tail..]);
                    stepped = true;
                    break;
                }
                if !stepped {
                    self.phase = Phase::Done;
                }
            }
        }
        (self.phase == Phase::Running).then_some(self.values.as_slice())
    }
}

/// Lazy stream of plane partitions produced by a [`Filling`].
pub struct PlanePartitions {
    filling: Filling,
    rows_of: Vec<usize>,
    num_rows: usize,
}

impl PlanePartitions {
    fn new(cells: Vec<(usize, usize)>, filling: Filling) -> Self {
        let num_rows = cells.iter().map(|&(r, _)| r + 1).max().unwrap_or(0);
        PlanePartitions { filling, rows_of: cells.into_iter().map(|(r, _)| r).collect(), num_rows }
    }

    fn exhausted() -> Self {
        let mut filling = Filling::new(&[], Vec::new(), 0, false, None);
        filling.phase = Phase::Done;
        PlanePartitions { filling, rows_of: Vec::new(), num_rows: 0 }
    }
}

impl Iterator for PlanePartitions {
    type Item = PlanePartition;

    fn next(&mut self) -> Option<PlanePartition> {
        let values = self.filling.advance()?;
        let mut rows = vec![Vec::new(); self.num_rows];
        for (&r, &v) in self.rows_of.iter().zip(values) {
            if v > 0 {
                rows[r].push(v);
            }
        }
        Some(PlanePartition::from_rows_trimmed(rows))
    }
}

fn grid(n: usize, k: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|r| (0..k).map(move |c| (r, c))).collect()
}

fn shape_cells(shape: &Partition) -> Vec<(usize, usize)> {
    shape.cells().map(|c| (c.i - 1, c.j - 1)).collect()
}

/// All partitions with at most `n` parts, each at most `k`.
pub fn gen_partitions_in_box(k: u32, n: usize) -> impl Iterator<Item = Partition> {
    let cells: Vec<(usize, usize)> = (0..n).map(|c| (0, c)).collect();
    let mut filling = Filling::new(&cells, vec![0; n], k, false, None);
    std::iter::from_fn(move || {
        filling.advance().map(|v| Partition::new(v.to_vec()).expect("odometer keeps parts decreasing"))
    })
}

/// `PP(k, n, m)`, including the empty plane partition.
pub fn gen_pp_box(k: usize, n: usize, m: u32) -> PlanePartitions {
    let cells = grid(n, k);
    let filling = Filling::new(&cells, vec![0; cells.len()], m, false, None);
    PlanePartitions::new(cells, filling)
}

/// Plane partitions in the `k × n × m` box with volume at most `max_volume`.
pub fn gen_pp_box_volume(k: usize, n: usize, m: u32, max_volume: u64) -> PlanePartitions {
    let cells = grid(n, k);
    let filling = Filling::new(&cells, vec![0; cells.len()], m, false, Some(max_volume));
    PlanePartitions::new(cells, filling)
}

/// Every plane partition of volume at most `max_volume`.
pub fn gen_pp_volume_at_most(max_volume: u32) -> PlanePartitions {
    let s = max_volume as usize;
    gen_pp_box_volume(s, s, max_volume, max_volume as u64)
}

/// `PP'(k, n, m)`: shape exactly the rectangle `(k^n)`, entries at most `m`.
pub fn gen_pp_exact(k: usize, n: usize, m: u32) -> PlanePartitions {
    if (k == 0) != (n == 0) {
        return PlanePartitions::exhausted();
    }
    gen_pp_shape(&Partition::rectangle(k as u32, n), m)
}

/// Plane partitions of shape exactly `shape` with entries in `[1, m]`.
pub fn gen_pp_shape(shape: &Partition, m: u32) -> PlanePartitions {
    let cells = shape_cells(shape);
    let filling = Filling::new(&cells, vec![1; cells.len()], m, false, None);
    PlanePartitions::new(cells, filling)
}

/// Column-strict plane partitions of shape `shape` (strictly decreasing down
/// each column) with entries at most `m`.
pub fn gen_column_strict(shape: &Partition, m: u32) -> PlanePartitions {
    let cells = shape_cells(shape);
    let conj = shape.conjugate();
    // the smallest admissible entry counts the cells at or below in the column
    let lower = cells.iter().map(|&(r, c)| conj.part(c + 1) - r as u32).collect();
    let filling = Filling::new(&cells, lower, m, true, None);
    PlanePartitions::new(cells, filling)
}

/// Strict tableaux of shape `shape` with filling `[n]`.
pub fn gen_strict_tableaux(shape: &Partition, n: u32) -> Box<dyn Iterator<Item = PlanePartition>> {
    if shape.first() > n || (n as u64) > shape.size() {
        return Box::new(PlanePartitions::exhausted());
    }
    Box::new(gen_pp_shape(shape, n).filter(move |pp| is_strict_tableau(pp, n)))
}

/// `f_λ(n)`: number of strict tableaux of shape `shape` with filling `[n]`.
pub fn count_strict_tableaux(shape: &Partition, n: u32) -> u64 {
    gen_strict_tableaux(shape, n).count() as u64
}

/// Bound selecting a finite window of `n × m` matrices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MatrixBound {
    /// Entry sum at most the given value.
    TotalSum(u64),
    /// `Σ d_{iℓ} · w(i,ℓ) <= max`; weights row-major, all positive.
    Weighted { weights: Vec<u64>, max: u64 },
}

impl MatrixBound {
    /// Weighted bound with weights given by `w(i, ℓ)` (1-based).
    pub fn weighted(n: usize, m: usize, max: u64, w: impl Fn(usize, usize) -> u64) -> Self {
        let weights = (1..=n).flat_map(|i| (1..=m).map(move |l| (i, l))).map(|(i, l)| w(i, l)).collect();
        MatrixBound::Weighted { weights, max }
    }
}

/// Lazy stream of every `n × m` matrix within a [`MatrixBound`].
pub struct Matrices {
    rows: usize,
    cols: usize,
    weights: Vec<u64>,
    max: u64,
    values: Vec<u32>,
    phase: Phase,
}

impl Iterator for Matrices {
    type Item = NMatrix;

    fn next(&mut self) -> Option<NMatrix> {
        match self.phase {
            Phase::Done => return None,
            Phase::Fresh => self.phase = Phase::Running,
            Phase::Running => {
                let mut before = Vec::with_capacity(self.values.len());
                let mut acc = 0u64;
                for (v, w) in self.values.iter().zip(&self.weights) {
                    before.push(acc);
                    acc += *v as u64 * w;
                }
                match (0..self.values.len())
                    .rev()
                    .find(|&p| before[p] + (self.values[p] as u64 + 1) * self.weights[p] <= self.max)
                {
                    Some(p) => {
                        self.values[p] += 1;
                        self.values[p + 1..].fill(0);
                    }
                    None => {
                        self.phase = Phase::Done;
                        return None;
                    }
                }
            }
        }
        Some(NMatrix::from_flat(self.rows, self.cols, self.values.clone()).expect("dimensions fixed"))
    }
}

/// Every `n × m` matrix of nonnegative integers within `bound`.
pub fn gen_matrices(n: usize, m: usize, bound: &MatrixBound) -> Result<Matrices> {
    let (weights, max) = match bound {
        MatrixBound::TotalSum(max) => (vec![1; n * m], *max),
        MatrixBound::Weighted { weights, max } => {
            if weights.len() != n * m {
                return Err(Error::InvalidMatrix(format!("{} weights for a {n}×{m} matrix", weights.len())));
            }
            if let Some(p) = weights.iter().position(|&w| w == 0) {
                return Err(Error::NonPositiveWeight(p / m.max(1) + 1, p % m.max(1) + 1));
            }
            (weights.clone(), *max)
        }
    };
    Ok(Matrices { rows: n, cols: m, weights, max, values: vec![0; n * m], phase: Phase::Fresh })
}

/// Every `n × m` matrix whose column sums are `col_sums`.
pub fn gen_matrices_with_col_sums(n: usize, col_sums: &[u32]) -> impl Iterator<Item = NMatrix> {
    let m = col_sums.len();
    // each column independently ranges over the compositions of its sum into n parts
    let choices: Vec<Vec<Vec<u32>>> = col_sums.iter().map(|&s| weak_compositions(s, n)).collect();
    let mut index = vec![0usize; m];
    let mut done = choices.iter().any(Vec::is_empty);
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let mut d = NMatrix::zeros(n, m);
        for (l, (&pick, col)) in index.iter().zip(&choices).enumerate() {
            for (i, &v) in col[pick].iter().enumerate() {
                d.set(i + 1, l + 1, v);
            }
        }
        done = true;
        for l in (0..m).rev() {
            if index[l] + 1 < choices[l].len() {
                index[l] += 1;
                index[l + 1..].fill(0);
                done = false;
                break;
            }
        }
        Some(d)
    })
}

/// Ordered ways of writing `total` as a sum of `parts` nonnegative integers.
fn weak_compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    fn rec(prefix: &mut Vec<u32>, parts: usize, left: u32, out: &mut Vec<Vec<u32>>) {
        if prefix.len() + 1 == parts {
            prefix.push(left);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for v in 0..=left {
            prefix.push(v);
            rec(prefix, parts, left - v, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if parts == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(&mut Vec::with_capacity(parts), parts, total, &mut out);
    out
}

/// All `m^n` words of length `n` over `[m]`.
pub fn gen_words(n: usize, m: u32) -> impl Iterator<Item = Word> {
    let mut letters = vec![1u32; n];
    let mut phase = if m == 0 && n > 0 { Phase::Done } else { Phase::Fresh };
    std::iter::from_fn(move || {
        match phase {
            Phase::Done => return None,
            Phase::Fresh => phase = Phase::Running,
            Phase::Running => match (0..n).rev().find(|&p| letters[p] < m) {
                Some(p) => {
                    letters[p] += 1;
                    letters[p + 1..].fill(1);
                }
                None => {
                    phase = Phase::Done;
                    return None;
                }
            },
        }
        Some(Word::new(m.max(1), letters.clone()).expect("letters within alphabet"))
    })
}

/// Kostka number `K_{λα}`: column-strict fillings of `shape` with exactly
/// `alpha[i-1]` entries equal to `i`.
pub fn kostka(shape: &Partition, alpha: &[u32]) -> u64 {
    let total: u64 = alpha.iter().map(|&a| a as u64).sum();
    if total != shape.size() {
        return 0;
    }
    gen_column_strict(shape, alpha.len() as u32)
        .filter(|pp| {
            let mut content = vec![0u32; alpha.len()];
            for (_, v) in pp.cells() {
                content[v as usize - 1] += 1;
            }
            content == alpha
        })
        .count() as u64
}

/// `s_{outer/inner}(1^n)`: column-strict fillings of the skew shape with
/// entries at most `n`.
pub fn skew_schur_ones(outer: &Partition, inner: &Partition, n: u32) -> Result<u64> {
    if !outer.contains(inner) {
        return Err(Error::NotContained { outer: outer.to_string(), inner: inner.to_string() });
    }
    let cells: Vec<(usize, usize)> = (0..outer.len())
        .flat_map(|r| (inner.part(r + 1) as usize..outer.part(r + 1) as usize).map(move |c| (r, c)))
        .collect();
    let conj = outer.conjugate();
    let lower = cells.iter().map(|&(r, c)| conj.part(c + 1) - r as u32).collect();
    let mut filling = Filling::new(&cells, lower, n, true, None);
    let mut count = 0u64;
    while filling.advance().is_some() {
        count += 1;
    }
    Ok(count)
}

/// `D_α(k, n, m)`: plane partitions in the box whose value `i` occupies
/// exactly `alpha[i-1]` columns.
///
/// With unbounded `k` the count runs over matrices with column sums `alpha`,
/// mapped back to plane partitions.
pub fn count_d_alpha(spec: BoxSpec, alpha: &[u32]) -> Result<u64> {
    if alpha.len() != spec.m as usize {
        return Err(Error::CompositionLength { expected: spec.m as usize, got: alpha.len() });
    }
    let matches = |pp: &PlanePartition| pp.column_counts(spec.m).is_ok_and(|c| c == alpha);
    let count = match spec.k {
        Some(k) => gen_pp_box(k, spec.n, spec.m).filter(matches).count(),
        None => gen_matrices_with_col_sums(spec.n, alpha).map(|d| phi_inverse(&d)).filter(matches).count(),
    };
    Ok(count as u64)
}
