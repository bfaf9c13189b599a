//! Dense 0/1 incidence matrices.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Axis, MatrixError};

/// A dense `m x n` 0/1 matrix stored row-major, with optional row and column
/// labels (species names in ecological data).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BinaryMatrix {
    rows: usize,
    cols: usize,
    data: Vec<u8>,
    row_labels: Option<Vec<String>>,
    col_labels: Option<Vec<String>>,
}

/// Row and column sums of a matrix, in the matrix's own order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Margins {
    pub row_sums: Vec<usize>,
    pub col_sums: Vec<usize>,
}

impl BinaryMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<u8>) -> Result<Self, MatrixError> {
        let expected = rows.checked_mul(cols).ok_or(MatrixError::ShapeMismatch {
            rows,
            cols,
            expected: usize::MAX,
            actual: data.len(),
        })?;
        if data.len() != expected {
            return Err(MatrixError::ShapeMismatch {
                rows,
                cols,
                expected,
                actual: data.len(),
            });
        }
        if let Some(pos) = data.iter().position(|&v| v > 1) {
            return Err(MatrixError::NotBinary {
                row: pos / cols,
                col: pos % cols,
                value: data[pos],
            });
        }
        Ok(Self {
            rows,
            cols,
            data,
            row_labels: None,
            col_labels: None,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![0; rows * cols],
            row_labels: None,
            col_labels: None,
        }
    }

    /// Builds a matrix from a list of equal-length rows. An empty list gives
    /// the `0 x 0` matrix.
    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R]) -> Result<Self, MatrixError> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(MatrixError::ShapeMismatch {
                    rows: rows.len(),
                    cols,
                    expected: rows.len() * cols,
                    actual: data.len() + r.len(),
                });
            }
            data.extend_from_slice(r);
        }
        Self::new(rows.len(), cols, data)
    }

    /// Attaches labels. Either list may be `None`; present lists must have the
    /// right length and be duplicate-free.
    pub fn with_labels(
        mut self,
        row_labels: Option<Vec<String>>,
        col_labels: Option<Vec<String>>,
    ) -> Result<Self, MatrixError> {
        if let Some(labels) = &row_labels {
            check_labels(Axis::Row, labels, self.rows)?;
        }
        if let Some(labels) = &col_labels {
            check_labels(Axis::Column, labels, self.cols)?;
        }
        self.row_labels = row_labels;
        self.col_labels = col_labels;
        Ok(self)
    }

    /// Same entries, labels removed.
    pub fn unlabeled(&self) -> Self {
        Self {
            row_labels: None,
            col_labels: None,
            ..self.clone()
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row_labels(&self) -> Option<&[String]> {
        self.row_labels.as_deref()
    }

    pub fn col_labels(&self) -> Option<&[String]> {
        self.col_labels.as_deref()
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> u8 {
        assert!(row < self.rows && col < self.cols, "index out of bounds");
        self.data[row * self.cols + col]
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize, value: bool) {
        assert!(row < self.rows && col < self.cols, "index out of bounds");
        self.data[row * self.cols + col] = value as u8;
    }

    pub fn row(&self, row: usize) -> &[u8] {
        &self.data[row * self.cols..(row + 1) * self.cols]
    }

    pub fn column(&self, col: usize) -> Vec<u8> {
        assert!(col < self.cols, "column out of bounds");
        (0..self.rows)
            .map(|i| self.data[i * self.cols + col])
            .collect()
    }

    /// Iterates the rows as slices.
    pub fn iter_rows(&self) -> impl Iterator<Item = &[u8]> + '_ {
        (0..self.rows).map(move |i| self.row(i))
    }

    /// Total number of 1 entries.
    pub fn ones(&self) -> u64 {
        self.data.iter().map(|&v| v as u64).sum()
    }

    pub fn row_sums(&self) -> Vec<usize> {
        self.iter_rows()
            .map(|r| r.iter().map(|&v| v as usize).sum())
            .collect()
    }

    pub fn col_sums(&self) -> Vec<usize> {
        let mut sums = vec![0usize; self.cols];
        for r in self.iter_rows() {
            for (s, &v) in sums.iter_mut().zip(r) {
                *s += v as usize;
            }
        }
        sums
    }

    pub fn margins(&self) -> Margins {
        Margins {
            row_sums: self.row_sums(),
            col_sums: self.col_sums(),
        }
    }

    /// `n x m` transpose; row and column labels trade places.
    pub fn transpose(&self) -> Self {
        let mut data = vec![0u8; self.data.len()];
        for i in 0..self.rows {
            for j in 0..self.cols {
                data[j * self.rows + i] = self.data[i * self.cols + j];
            }
        }
        Self {
            rows: self.cols,
            cols: self.rows,
            data,
            row_labels: self.col_labels.clone(),
            col_labels: self.row_labels.clone(),
        }
    }

    /// Reorders columns so that column `j` of the result is column `sigma[j]`
    /// of `self` ("destination `j` holds source `sigma[j]`"). Every column
    /// permutation reported by this crate uses this convention. Column labels
    /// travel with their columns.
    pub fn apply_col_permutation(&self, sigma: &[usize]) -> Result<Self, MatrixError> {
        check_permutation(sigma, self.cols)?;
        let mut data = Vec::with_capacity(self.data.len());
        for r in self.iter_rows() {
            data.extend(sigma.iter().map(|&s| r[s]));
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data,
            row_labels: self.row_labels.clone(),
            col_labels: self
                .col_labels
                .as_ref()
                .map(|l| sigma.iter().map(|&s| l[s].clone()).collect()),
        })
    }

    /// Row analogue of [`apply_col_permutation`](Self::apply_col_permutation):
    /// row `i` of the result is row `perm[i]` of `self`.
    pub fn apply_row_permutation(&self, perm: &[usize]) -> Result<Self, MatrixError> {
        check_permutation(perm, self.rows)?;
        let mut data = Vec::with_capacity(self.data.len());
        for &p in perm {
            data.extend_from_slice(self.row(p));
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data,
            row_labels: self
                .row_labels
                .as_ref()
                .map(|l| perm.iter().map(|&p| l[p].clone()).collect()),
            col_labels: self.col_labels.clone(),
        })
    }

    /// Entries only comparison, ignoring labels.
    pub fn same_entries(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.data == other.data
    }
}

/// Inverse of a permutation given in "destination holds source" form.
pub fn invert_permutation(perm: &[usize]) -> Result<Vec<usize>, MatrixError> {
    check_permutation(perm, perm.len())?;
    let mut inv = vec![0; perm.len()];
    for (dst, &src) in perm.iter().enumerate() {
        inv[src] = dst;
    }
    Ok(inv)
}

pub(crate) fn check_permutation(perm: &[usize], len: usize) -> Result<(), MatrixError> {
    if perm.len() != len {
        return Err(MatrixError::NotAPermutation { len });
    }
    let mut seen = vec![false; len];
    for &p in perm {
        if p >= len || std::mem::replace(&mut seen[p], true) {
            return Err(MatrixError::NotAPermutation { len });
        }
    }
    Ok(())
}

fn check_labels(axis: Axis, labels: &[String], expected: usize) -> Result<(), MatrixError> {
    if labels.len() != expected {
        return Err(MatrixError::LabelCount {
            axis,
            expected,
            actual: labels.len(),
        });
    }
    let mut seen = HashSet::with_capacity(labels.len());
    for l in labels {
        if !seen.insert(l.as_str()) {
            return Err(MatrixError::DuplicateLabel {
                axis,
                label: l.clone(),
            });
        }
    }
    Ok(())
}

/// Writes the matrix in the dense text format, one row per line.
impl fmt::Display for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in self.iter_rows() {
            for &v in r {
                f.write_str(if v == 1 { "1" } else { "0" })?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
