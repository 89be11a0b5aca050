//! The descent-level bijection between plane partitions with at most `n` rows
//! and entries at most `m`, and `n × m` matrices of nonnegative integers.
//!
//! The forward map records, for every row `i` and value `ℓ`, how many columns
//! have `ℓ` in row `i` sitting strictly above a smaller entry. The inverse
//! rebuilds the plane partition column by column, scanning the matrix from
//! the last column to the first and, inside a column, from the bottom row up.
//!
//! Words of length `n` over `[m]` embed as `m × n` 0/1 matrices with a single
//! 1 per column; their preimages are exactly the strict tableaux.

use crate::error::{Error, Result};
use crate::matrix::NMatrix;
use crate::partition::Partition;
use crate::plane::{Cell, PlanePartition};
use crate::word::Word;

/// Forward map into `n × m` matrices.
pub fn phi(pp: &PlanePartition, n: usize, m: u32) -> Result<NMatrix> {
    if pp.num_rows() > n || pp.max_entry() > m {
        return Err(Error::OutOfDomain { n, m });
    }
    let mut d = NMatrix::zeros(n, m as usize);
    for (cell, v) in pp.descents() {
        d.increment(cell.i, v as usize);
    }
    Ok(d)
}

/// Inverse map: the unique plane partition with `phi(pp, rows, cols) == d`.
pub fn phi_inverse(d: &NMatrix) -> PlanePartition {
    let mut builder = ColumnBuilder::default();
    for l in (1..=d.cols()).rev() {
        for i in (1..=d.rows()).rev() {
            for _ in 0..d.get(i, l) {
                builder
                    .insert(l as u32, i)
                    .expect("insertions in descending value order never break monotonicity");
            }
        }
    }
    builder.finish()
}

/// Adds `value` in row `row`: the leftmost column shorter than `row` is
/// extended with copies of `value` until it has length `row`.
pub fn add_entry_in_row(pp: &PlanePartition, value: u32, row: usize) -> Result<PlanePartition> {
    let mut builder = ColumnBuilder::from_plane_partition(pp);
    builder.insert(value, row)?;
    Ok(builder.finish())
}

/// A plane partition stored by columns, top to bottom.
#[derive(Default)]
struct ColumnBuilder {
    columns: Vec<Vec<u32>>,
}

impl ColumnBuilder {
    fn from_plane_partition(pp: &PlanePartition) -> Self {
        let columns = (1..=pp.num_cols())
            .map(|j| (1..=pp.num_rows()).map(|i| pp.entry(i, j)).take_while(|&v| v > 0).collect())
            .collect();
        ColumnBuilder { columns }
    }

    fn insert(&mut self, value: u32, row: usize) -> Result<()> {
        let invalid = Error::InvalidInsertion { value, row };
        if value == 0 || row == 0 {
            return Err(invalid);
        }
        let j = self.columns.iter().position(|c| c.len() < row).unwrap_or(self.columns.len());
        let start = self.columns.get(j).map_or(0, Vec::len);
        if let Some(&above) = self.columns.get(j).and_then(|c| c.last()) {
            if above < value {
                return Err(invalid);
            }
        }
        if j > 0 {
            let left = &self.columns[j - 1];
            if left.len() < row || left[start..row].iter().any(|&v| v < value) {
                return Err(invalid);
            }
        }
        if j == self.columns.len() {
            self.columns.push(Vec::new());
        }
        self.columns[j].resize(row, value);
        Ok(())
    }

    fn finish(self) -> PlanePartition {
        let n = self.columns.first().map_or(0, Vec::len);
        let rows = (0..n)
            .map(|i| self.columns.iter().map_while(|c| c.get(i).copied()).collect())
            .collect();
        PlanePartition::from_rows_trimmed(rows)
    }
}

/// Maximum total weight of a path from `start` to `end` using unit steps down
/// or right.
pub fn max_downright_path_weight(d: &NMatrix, start: Cell, end: Cell) -> Result<u64> {
    if start.i == 0 || start.j == 0 || end.i > d.rows() || end.j > d.cols() {
        return Err(Error::ValueOutOfRange(format!("path {start} → {end} leaves the {}×{} matrix", d.rows(), d.cols())));
    }
    if start.i > end.i || start.j > end.j {
        return Err(Error::EmptyPathSet);
    }
    let width = end.j - start.j + 1;
    let mut best = vec![0u64; width];
    for i in start.i..=end.i {
        for (c, j) in (start.j..=end.j).enumerate() {
            let from_left = if c > 0 { best[c - 1] } else { 0 };
            // best[c] still holds the row above
            best[c] = best[c].max(from_left) + d.get(i, j) as u64;
        }
    }
    Ok(best[width - 1])
}

/// The `m × n` 0/1 matrix with `d_{w_i, i} = 1`.
pub fn word_to_matrix(w: &Word) -> NMatrix {
    let mut d = NMatrix::zeros(w.alphabet_size() as usize, w.len());
    for (pos, &letter) in w.letters().iter().enumerate() {
        d.set(letter as usize, pos + 1, 1);
    }
    d
}

pub fn word_to_strict_tableau(w: &Word) -> PlanePartition {
    phi_inverse(&word_to_matrix(w))
}

/// Reads the word back: letter `v` is the deepest row index containing `v`.
pub fn strict_tableau_to_word(pp: &PlanePartition, m: u32) -> Result<Word> {
    let n = pp.max_entry();
    if !is_strict_tableau(pp, n) {
        return Err(Error::NotStrictTableau);
    }
    if pp.num_rows() > m as usize {
        return Err(Error::ValueOutOfRange(format!("{} rows exceed alphabet size {m}", pp.num_rows())));
    }
    let mut deepest = vec![0u32; n as usize];
    for (cell, v) in pp.cells() {
        let slot = &mut deepest[v as usize - 1];
        *slot = (*slot).max(cell.i as u32);
    }
    Word::new(m, deepest)
}

/// Entries are exactly `{1, ..., n}` and every value sits in a single column.
pub fn is_strict_tableau(pp: &PlanePartition, n: u32) -> bool {
    let mut column_of = vec![0usize; n as usize];
    for (cell, v) in pp.cells() {
        if v > n {
            return false;
        }
        let slot = &mut column_of[v as usize - 1];
        if *slot == 0 {
            *slot = cell.j;
        } else if *slot != cell.j {
            return false;
        }
    }
    column_of.iter().all(|&c| c > 0)
}

/// `L_i(w)`: longest weakly increasing subsequence of `w` using only the
/// letters `m - i + 1, ..., m`.
pub fn lis_tail(w: &Word, i: u32) -> Result<usize> {
    let m = w.alphabet_size();
    if i == 0 || i > m {
        return Err(Error::ValueOutOfRange(format!("i = {i} outside [1,{m}]")));
    }
    let low = m - i + 1;
    // best[a - low]: longest admissible subsequence ending in letter a so far
    let mut best = vec![0usize; i as usize];
    for &a in w.letters().iter().filter(|&&a| a >= low) {
        let idx = (a - low) as usize;
        let len = 1 + best[..=idx].iter().copied().max().unwrap_or(0);
        best[idx] = best[idx].max(len);
    }
    Ok(best.into_iter().max().unwrap_or(0))
}

/// `(L_m(w), ..., L_1(w))` with zeros trimmed.
pub fn greene_shape(w: &Word) -> Partition {
    let m = w.alphabet_size();
    let parts = (1..=m)
        .rev()
        .map(|i| lis_tail(w, i).expect("i within alphabet") as u32)
        .collect();
    Partition::new(parts).expect("L_i(w) grows with i")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pp(rows: &[&[u32]]) -> PlanePartition {
        PlanePartition::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn example() -> PlanePartition {
        pp(&[&[4, 4, 2], &[4, 2, 1], &[2, 2]])
    }

    fn example_matrix() -> NMatrix {
        NMatrix::from_vec(vec![vec![0, 1, 0, 1], vec![1, 0, 0, 1], vec![0, 2, 0, 0]]).unwrap()
    }

    fn strict_example() -> PlanePartition {
        pp(&[&[6, 5, 3, 1], &[6, 5, 3], &[6, 5, 2], &[6, 4]])
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(&example(), 3, 4).unwrap(), example_matrix());
        assert_eq!(phi(&PlanePartition::empty(), 2, 2).unwrap(), NMatrix::zeros(2, 2));
        assert_eq!(phi(&pp(&[&[1]]), 1, 1).unwrap(), NMatrix::from_vec(vec![vec![1]]).unwrap());
    }

    #[test]
    fn phi_rejects_out_of_domain() {
        assert_eq!(phi(&example(), 2, 4), Err(Error::OutOfDomain { n: 2, m: 4 }));
        assert_eq!(phi(&example(), 3, 3), Err(Error::OutOfDomain { n: 3, m: 3 }));
    }

    #[test]
    fn phi_inverse_examples() {
        assert_eq!(phi_inverse(&example_matrix()), example());
        assert_eq!(phi_inverse(&NMatrix::zeros(3, 2)), PlanePartition::empty());
        let w = Word::parse("132434", 4).unwrap();
        assert_eq!(phi_inverse(&word_to_matrix(&w)), strict_example());
    }

    #[test]
    fn insertion_steps() {
        let mut p = PlanePartition::empty();
        p = add_entry_in_row(&p, 4, 2).unwrap();
        assert_eq!(p, pp(&[&[4], &[4]]));
        p = add_entry_in_row(&p, 4, 1).unwrap();
        assert_eq!(p, pp(&[&[4, 4], &[4]]));
        p = add_entry_in_row(&p, 2, 3).unwrap();
        p = add_entry_in_row(&p, 2, 3).unwrap();
        assert_eq!(p, pp(&[&[4, 4], &[4, 2], &[2, 2]]));
        assert_eq!(add_entry_in_row(&PlanePartition::empty(), 1, 1).unwrap(), pp(&[&[1]]));
    }

    #[test]
    fn insertion_rejects_increase() {
        // a larger value under a smaller one
        assert!(matches!(add_entry_in_row(&pp(&[&[1]]), 2, 2), Err(Error::InvalidInsertion { .. })));
        // a larger value to the right of a smaller one
        assert!(matches!(add_entry_in_row(&pp(&[&[1]]), 3, 1), Err(Error::InvalidInsertion { .. })));
        assert!(add_entry_in_row(&pp(&[&[1]]), 0, 1).is_err());
    }

    #[test]
    fn path_weight_examples() {
        let d = example_matrix();
        let w = max_downright_path_weight(&d, Cell { i: 1, j: 1 }, Cell { i: 3, j: 4 }).unwrap();
        assert_eq!(w, 3);
        assert_eq!(w, example().num_cols() as u64);
        let z = NMatrix::zeros(2, 3);
        assert_eq!(max_downright_path_weight(&z, Cell { i: 1, j: 1 }, Cell { i: 2, j: 3 }).unwrap(), 0);
        let single = NMatrix::from_vec(vec![vec![5]]).unwrap();
        assert_eq!(max_downright_path_weight(&single, Cell { i: 1, j: 1 }, Cell { i: 1, j: 1 }).unwrap(), 5);
        assert_eq!(
            max_downright_path_weight(&d, Cell { i: 2, j: 2 }, Cell { i: 1, j: 4 }),
            Err(Error::EmptyPathSet)
        );
    }

    #[test]
    fn word_matrix_examples() {
        let w = Word::parse("132434", 4).unwrap();
        let expected = NMatrix::from_vec(vec![
            vec![1, 0, 0, 0, 0, 0],
            vec![0, 0, 1, 0, 0, 0],
            vec![0, 1, 0, 0, 1, 0],
            vec![0, 0, 0, 1, 0, 1],
        ])
        .unwrap();
        assert_eq!(word_to_matrix(&w), expected);
        assert_eq!(word_to_matrix(&Word::parse("1", 1).unwrap()), NMatrix::from_vec(vec![vec![1]]).unwrap());
        assert_eq!(
            word_to_matrix(&Word::parse("11", 2).unwrap()),
            NMatrix::from_vec(vec![vec![1, 1], vec![0, 0]]).unwrap()
        );
    }

    #[test]
    fn word_tableau_examples() {
        assert_eq!(word_to_strict_tableau(&Word::parse("132434", 4).unwrap()), strict_example());
        assert_eq!(word_to_strict_tableau(&Word::parse("1", 1).unwrap()), pp(&[&[1]]));
        assert_eq!(word_to_strict_tableau(&Word::parse("21", 2).unwrap()), pp(&[&[2], &[1]]));
        assert_eq!(word_to_strict_tableau(&Word::parse("12", 2).unwrap()), pp(&[&[2, 1], &[2]]));
    }

    #[test]
    fn tableau_word_examples() {
        assert_eq!(strict_tableau_to_word(&strict_example(), 4).unwrap().to_string(), "132434");
        assert_eq!(strict_tableau_to_word(&pp(&[&[1]]), 1).unwrap().to_string(), "1");
        assert_eq!(strict_tableau_to_word(&pp(&[&[2], &[1]]), 2).unwrap().to_string(), "21");
        assert_eq!(strict_tableau_to_word(&pp(&[&[2, 1], &[2]]), 2).unwrap().to_string(), "12");
        assert_eq!(strict_tableau_to_word(&pp(&[&[1, 1]]), 2), Err(Error::NotStrictTableau));
    }

    #[test]
    fn strict_tableau_predicate() {
        assert!(is_strict_tableau(&strict_example(), 6));
        assert!(!is_strict_tableau(&pp(&[&[1, 1]]), 1));
        assert!(is_strict_tableau(&pp(&[&[2], &[1]]), 2));
        assert!(!is_strict_tableau(&pp(&[&[3], &[1]]), 3));
        assert!(is_strict_tableau(&PlanePartition::empty(), 0));
    }

    #[test]
    fn lis_examples() {
        let w = Word::parse("132434", 4).unwrap();
        let ls: Vec<usize> = (1..=4).map(|i| lis_tail(&w, i).unwrap()).collect();
        assert_eq!(ls, vec![2, 3, 3, 4]);
        assert_eq!(lis_tail(&Word::parse("1122", 4).unwrap(), 2).unwrap(), 0);
        assert_eq!(lis_tail(&Word::parse("33333", 3).unwrap(), 1).unwrap(), 5);
        assert!(lis_tail(&w, 0).is_err());
        assert!(lis_tail(&w, 5).is_err());
    }

    #[test]
    fn greene_examples() {
        assert_eq!(greene_shape(&Word::parse("132434", 4).unwrap()).parts(), &[4, 3, 3, 2]);
        assert!(greene_shape(&Word::new(3, vec![]).unwrap()).is_empty());
        assert_eq!(greene_shape(&Word::parse("4444", 4).unwrap()).parts(), &[4, 4, 4, 4]);
    }
}
