//! Stable sorting of rows and columns into non-increasing margin order.

use crate::matrix::BinaryMatrix;

/// A matrix with non-increasing row and column sums, together with the
/// permutations that produced it.
///
/// `row_perm[i]` is the original index of canonical row `i` and
/// `col_perm[j]` the original index of canonical column `j`. Ties keep their
/// original relative order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalForm {
    pub matrix: BinaryMatrix,
    pub row_perm: Vec<usize>,
    pub col_perm: Vec<usize>,
}

impl CanonicalForm {
    pub fn is_identity(&self) -> bool {
        is_identity(&self.row_perm) && is_identity(&self.col_perm)
    }

    /// Undoes the sorting, reproducing the original input.
    pub fn restore(&self) -> BinaryMatrix {
        let row_inv = inverse(&self.row_perm);
        let col_inv = inverse(&self.col_perm);
        self.matrix
            .apply_row_permutation(&row_inv)
            .and_then(|m| m.apply_col_permutation(&col_inv))
            .expect("canonical permutations are bijections")
    }
}

pub fn canonicalize(a: &BinaryMatrix) -> CanonicalForm {
    let row_perm = stable_descending_order(&a.row_sums());
    let col_perm = stable_descending_order(&a.col_sums());
    let matrix = a
        .apply_row_permutation(&row_perm)
        .and_then(|m| m.apply_col_permutation(&col_perm))
        .expect("sort orders are bijections");
    CanonicalForm {
        matrix,
        row_perm,
        col_perm,
    }
}

/// True when both margins are non-increasing.
pub fn is_canonical(a: &BinaryMatrix) -> bool {
    non_increasing(&a.row_sums()) && non_increasing(&a.col_sums())
}

pub(crate) fn non_increasing(v: &[usize]) -> bool {
    v.windows(2).all(|w| w[0] >= w[1])
}

fn stable_descending_order(sums: &[usize]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..sums.len()).collect();
    order.sort_by(|&x, &y| sums[y].cmp(&sums[x]));
    order
}

fn is_identity(p: &[usize]) -> bool {
    p.iter().enumerate().all(|(i, &v)| i == v)
}

fn inverse(p: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; p.len()];
    for (i, &v) in p.iter().enumerate() {
        inv[v] = i;
    }
    inv
}
