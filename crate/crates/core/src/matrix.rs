use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A dense `rows × cols` matrix of nonnegative integers, indexed from 1.
///
/// The dimensions are part of the value: zero rows and columns are kept.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "MatrixJson", into = "MatrixJson")]
pub struct NMatrix {
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    rows: usize,
    cols: usize,
    data: Vec<Vec<u32>>,
}

impl NMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        NMatrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn from_rows(rows: usize, cols: usize, data: Vec<Vec<u32>>) -> Result<Self> {
        if data.len() != rows {
            return Err(Error::InvalidMatrix(format!("expected {rows} rows, got {}", data.len())));
        }
        if let Some((r, row)) = data.iter().enumerate().find(|(_, r)| r.len() != cols) {
            return Err(Error::InvalidMatrix(format!("row {} has {} entries, expected {cols}", r + 1, row.len())));
        }
        Ok(NMatrix { rows, cols, data: data.into_iter().flatten().collect() })
    }

    /// Infers the dimensions from a nonempty rectangular array.
    pub fn from_vec(data: Vec<Vec<u32>>) -> Result<Self> {
        let rows = data.len();
        let cols = data.first().map_or(0, Vec::len);
        Self::from_rows(rows, cols, data)
    }

    /// Row-major entries, `rows * cols` of them.
    pub fn from_flat(rows: usize, cols: usize, data: Vec<u32>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::InvalidMatrix(format!("expected {} entries, got {}", rows * cols, data.len())));
        }
        Ok(NMatrix { rows, cols, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn as_flat(&self) -> &[u32] {
        &self.data
    }

    /// Entry `d_{iℓ}`, 1-based.
    pub fn get(&self, i: usize, l: usize) -> u32 {
        assert!((1..=self.rows).contains(&i) && (1..=self.cols).contains(&l), "index ({i},{l}) out of bounds");
        self.data[(i - 1) * self.cols + (l - 1)]
    }

    pub fn set(&mut self, i: usize, l: usize, value: u32) {
        assert!((1..=self.rows).contains(&i) && (1..=self.cols).contains(&l), "index ({i},{l}) out of bounds");
        self.data[(i - 1) * self.cols + (l - 1)] = value;
    }

    pub(crate) fn increment(&mut self, i: usize, l: usize) {
        self.data[(i - 1) * self.cols + (l - 1)] += 1;
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        if self.cols == 0 {
            return vec![Vec::new(); self.rows];
        }
        self.data.chunks(self.cols).map(<[u32]>::to_vec).collect()
    }

    pub fn row_sums(&self) -> Vec<u64> {
        (1..=self.rows).map(|i| (1..=self.cols).map(|l| self.get(i, l) as u64).sum()).collect()
    }

    pub fn col_sums(&self) -> Vec<u64> {
        (1..=self.cols).map(|l| (1..=self.rows).map(|i| self.get(i, l) as u64).sum()).collect()
    }

    pub fn total(&self) -> u64 {
        self.data.iter().map(|&v| v as u64).sum()
    }

    pub fn transpose(&self) -> NMatrix {
        let mut t = NMatrix::zeros(self.cols, self.rows);
        for i in 1..=self.rows {
            for l in 1..=self.cols {
                t.set(l, i, self.get(i, l));
            }
        }
        t
    }
}

impl TryFrom<MatrixJson> for NMatrix {
    type Error = Error;

    fn try_from(m: MatrixJson) -> Result<Self> {
        NMatrix::from_rows(m.rows, m.cols, m.data)
    }
}

impl From<NMatrix> for MatrixJson {
    fn from(m: NMatrix) -> Self {
        MatrixJson { rows: m.rows, cols: m.cols, data: m.to_rows() }
    }
}

impl fmt::Display for NMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.data.iter().max().map_or(1, |v| v.to_string().len());
        for row in self.to_rows() {
            let line: Vec<String> = row.iter().map(|v| format!("{v:>width$}")).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}
