//! Dense exact matrices: the interpolation data `(a_ij)` and every other
//! small matrix the library builds.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// An `m x n` matrix of exact scalars, stored row-major. Indexing through
/// [`MatrixData::get`] is 1-based to match grid nodes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MatrixData {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl MatrixData {
    pub fn new(rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidShape { rows, cols });
        }
        if entries.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(MatrixData {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let m = rows.len();
        let n = rows.first().map_or(0, Vec::len);
        if m == 0 || n == 0 {
            return Err(Error::InvalidShape { rows: m, cols: n });
        }
        let mut entries = Vec::with_capacity(m * n);
        for (r, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(Error::RaggedRows {
                    row: r + 1,
                    expected: n,
                    found: row.len(),
                });
            }
            entries.extend(row);
        }
        MatrixData::new(m, n, entries)
    }

    /// Convenience constructor from integer rows.
    ///
    /// # Panics
    /// On an empty or ragged input.
    pub fn from_ints<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let rows = rows
            .iter()
            .map(|r| r.as_ref().iter().map(|&v| Scalar::from(v)).collect())
            .collect();
        MatrixData::from_rows(rows).expect("well-formed integer matrix")
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Result<Self> {
        let entries = (1..=rows)
            .flat_map(|i| (1..=cols).map(move |j| (i, j)))
            .map(|(i, j)| f(i, j))
            .collect();
        MatrixData::new(rows, cols, entries)
    }

    pub fn zeros(rows: usize, cols: usize) -> Result<Self> {
        MatrixData::new(rows, cols, vec![Scalar::zero(); rows * cols])
    }

    pub fn identity(order: usize) -> Result<Self> {
        MatrixData::from_fn(order, order, |i, j| {
            if i == j {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        })
    }

    /// The matrix unit `E_ij` (1-based).
    pub fn unit(rows: usize, cols: usize, i: usize, j: usize) -> Result<Self> {
        if i == 0 || j == 0 || i > rows || j > cols {
            return Err(Error::IndexOutOfRange { i, j, m: rows, n: cols });
        }
        MatrixData::from_fn(rows, cols, |a, b| {
            if (a, b) == (i, j) {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Entry `a_ij`, 1-based.
    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        assert!(i >= 1 && i <= self.rows && j >= 1 && j <= self.cols);
        &self.entries[(i - 1) * self.cols + (j - 1)]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        assert!(i >= 1 && i <= self.rows && j >= 1 && j <= self.cols);
        self.entries[(i - 1) * self.cols + (j - 1)] = v;
    }

    /// Entries in row-major order: `a_11, a_12, ..., a_1n, a_21, ...`.
    pub fn row_major(&self) -> &[Scalar] {
        &self.entries
    }

    /// Entries in column-major order: `a_11, a_21, ..., a_m1, a_12, ...`.
    pub fn col_major(&self) -> Vec<Scalar> {
        (1..=self.cols)
            .flat_map(|j| (1..=self.rows).map(move |i| (i, j)))
            .map(|(i, j)| self.get(i, j).clone())
            .collect()
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[(i - 1) * self.cols..i * self.cols]
    }

    pub fn transpose(&self) -> MatrixData {
        MatrixData {
            rows: self.cols,
            cols: self.rows,
            entries: self.col_major(),
        }
    }

    pub fn scale(&self, k: &Scalar) -> MatrixData {
        MatrixData {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * k).collect(),
        }
    }

    pub fn add(&self, other: &MatrixData) -> Result<MatrixData> {
        if self.shape() != other.shape() {
            return Err(Error::ShapeMismatch(format!(
                "cannot add {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(MatrixData {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn mul(&self, other: &MatrixData) -> Result<MatrixData> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        MatrixData::from_fn(self.rows, other.cols, |i, j| {
            (1..=self.cols)
                .map(|k| self.get(i, k) * other.get(k, j))
                .sum()
        })
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (1..=self.rows).all(|i| {
                (1..=self.cols).all(|j| {
                    let e = self.get(i, j);
                    if i == j {
                        *e == Scalar::one()
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    pub fn trace(&self) -> Result<Scalar> {
        if !self.is_square() {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok((1..=self.rows).map(|i| self.get(i, i).clone()).sum())
    }

    /// Parses the plain-text matrix format: one row per line,
    /// comma-separated entries (integers, `p/q` or decimals), no header.
    /// Blank lines are ignored.
    pub fn parse_csv(text: &str) -> Result<MatrixData> {
        let mut rows = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let row = line
                .split(',')
                .map(|cell| cell.trim().parse::<Scalar>())
                .collect::<Result<Vec<_>>>()?;
            rows.push(row);
        }
        MatrixData::from_rows(rows)
    }

    /// Exact-rational CSV, the inverse of [`MatrixData::parse_csv`].
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for i in 1..=self.rows {
            let cells: Vec<String> = self.row(i).iter().map(Scalar::to_string).collect();
            let _ = writeln!(out, "{}", cells.join(","));
        }
        out
    }
}
