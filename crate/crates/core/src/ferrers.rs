//! Ferrers (perfectly nested) matrices and the labeled discrepancy.

use crate::canonical::{is_canonical, non_increasing};
use crate::error::MatrixError;
use crate::matrix::BinaryMatrix;

/// Row sums together with their conjugate sequence.
///
/// The implied Ferrers matrix has row `i` made of `row_sums[i]` leading ones;
/// its column sums are `conjugate`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FerrersProfile {
    pub row_sums: Vec<usize>,
    pub conjugate: Vec<usize>,
}

impl FerrersProfile {
    pub fn rows(&self) -> usize {
        self.row_sums.len()
    }

    pub fn cols(&self) -> usize {
        self.conjugate.len()
    }

    #[inline]
    pub fn entry(&self, row: usize, col: usize) -> u8 {
        (col < self.row_sums[row]) as u8
    }

    pub fn column(&self, col: usize) -> Vec<u8> {
        (0..self.rows()).map(|i| self.entry(i, col)).collect()
    }

    pub fn matrix(&self) -> BinaryMatrix {
        let n = self.cols();
        let data = self
            .row_sums
            .iter()
            .flat_map(|&r| (0..n).map(move |j| (j < r) as u8))
            .collect();
        BinaryMatrix::new(self.rows(), n, data).expect("ferrers entries are binary")
    }

    /// True when column `col` is all ones or all zeros.
    pub fn is_constant_column(&self, col: usize) -> bool {
        let c = self.conjugate[col];
        c == 0 || c == self.rows()
    }
}

/// Computes `conjugate[i] = |{ j : row_sums[j] > i }|` for `i in 0..n`
/// (the count of rows reaching column `i`).
pub fn ferrers_profile(row_sums: &[usize], n: usize) -> Result<FerrersProfile, MatrixError> {
    let mut counts = vec![0usize; n + 1];
    for (index, &r) in row_sums.iter().enumerate() {
        if r > n {
            return Err(MatrixError::RowSumOutOfRange {
                index,
                value: r,
                cols: n,
            });
        }
        counts[r] += 1;
    }
    // conjugate[i] = number of rows with sum >= i + 1
    let mut conjugate = vec![0usize; n];
    let mut acc = 0;
    for i in (0..n).rev() {
        acc += counts[i + 1];
        conjugate[i] = acc;
    }
    Ok(FerrersProfile {
        row_sums: row_sums.to_vec(),
        conjugate,
    })
}

/// `sum_i max(v_i - u_i, 0)`: the 1's of `v` missing from `u`.
pub fn column_diff(v: &[u8], u: &[u8]) -> Result<u64, MatrixError> {
    if v.len() != u.len() {
        return Err(MatrixError::LengthMismatch {
            left: v.len(),
            right: u.len(),
        });
    }
    Ok(v.iter().zip(u).filter(|(&a, &b)| a > b).count() as u64)
}

/// Profile of `a`'s own row sums.
pub fn profile_of(a: &BinaryMatrix) -> FerrersProfile {
    ferrers_profile(&a.row_sums(), a.cols()).expect("row sums never exceed the column count")
}

/// Minimum number of left shifts turning `a` into its Ferrers matrix,
/// evaluated column by column as `sum_j column_diff(F_j, A_j)`.
///
/// Only defined for canonical input (both margins non-increasing).
pub fn disc(a: &BinaryMatrix) -> Result<u64, MatrixError> {
    if !is_canonical(a) {
        return Err(MatrixError::NotCanonical(
            "row and column sums must be non-increasing",
        ));
    }
    let f = profile_of(a);
    (0..a.cols())
        .map(|j| column_diff(&f.column(j), &a.column(j)))
        .sum()
}

/// `sum_j max(c'_j - c_j, 0)`, the smallest discrepancy attainable by any
/// matrix sharing `a`'s margins. Column sums are taken in non-increasing
/// order, so the value does not depend on the labeling.
pub fn lower_bound(a: &BinaryMatrix) -> u64 {
    let f = profile_of(a);
    let mut col_sums = a.col_sums();
    if !non_increasing(&col_sums) {
        col_sums.sort_unstable_by(|x, y| y.cmp(x));
    }
    f.conjugate
        .iter()
        .zip(&col_sums)
        .map(|(&cp, &c)| cp.saturating_sub(c) as u64)
        .sum()
}
