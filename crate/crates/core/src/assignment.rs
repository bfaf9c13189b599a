//! Exact minimum-weight perfect matching on the complete bipartite graph
//! between the Ferrers columns and the matrix columns of one block.
//!
//! The solver is the shortest-augmenting-path Hungarian method with row and
//! column potentials, `O(n^3)` for an `n x n` block. Once optimal potentials
//! are known, every optimal matching uses only tight edges (zero reduced
//! cost), so the lexicographically smallest optimal pairing is recovered by a
//! second `O(n^3)` pass that walks rows in order and re-routes alternating
//! paths inside the tight subgraph.

use crate::error::MatrixError;
use crate::ferrers::{column_diff, FerrersProfile};
use crate::matrix::BinaryMatrix;

/// Edge weights of one block graph: `cost(p, q)` is the number of 1's of
/// Ferrers column `ferrers_cols[p]` missing from matrix column `ferrers_cols[q]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CostMatrix {
    size: usize,
    costs: Vec<u64>,
    pub ferrers_cols: Vec<usize>,
    pub block_value: usize,
}

impl CostMatrix {
    /// Wraps raw square costs. `ferrers_cols` defaults to `0..n`.
    pub fn from_rows(rows: Vec<Vec<u64>>) -> Self {
        let size = rows.len();
        assert!(
            rows.iter().all(|r| r.len() == size),
            "cost matrix must be square"
        );
        Self {
            size,
            costs: rows.into_iter().flatten().collect(),
            ferrers_cols: (0..size).collect(),
            block_value: 0,
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn cost(&self, p: usize, q: usize) -> u64 {
        self.costs[p * self.size + q]
    }

    pub fn row(&self, p: usize) -> &[u64] {
        &self.costs[p * self.size..(p + 1) * self.size]
    }

    /// Adds `delta` to every entry of row `p`.
    pub fn shift_row(&mut self, p: usize, delta: u64) {
        let n = self.size;
        for c in &mut self.costs[p * n..(p + 1) * n] {
            *c += delta;
        }
    }
}

/// A perfect matching: Ferrers position `p` is paired with matrix position
/// `pairing[p]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Assignment {
    pub pairing: Vec<usize>,
    pub total_weight: u64,
}

impl Assignment {
    fn evaluate(c: &CostMatrix, pairing: Vec<usize>) -> Self {
        let total_weight = pairing.iter().enumerate().map(|(p, &q)| c.cost(p, q)).sum();
        Self {
            pairing,
            total_weight,
        }
    }
}

/// Builds the cost matrix of the block whose (canonical) column indices are
/// `block`. All block columns must share one column sum.
pub fn build_block_cost_matrix(
    a: &BinaryMatrix,
    f: &FerrersProfile,
    block: &[usize],
) -> Result<CostMatrix, MatrixError> {
    if f.rows() != a.rows() || f.cols() != a.cols() {
        return Err(MatrixError::LengthMismatch {
            left: f.rows(),
            right: a.rows(),
        });
    }
    let col_sums = a.col_sums();
    let block_value = block.first().map_or(0, |&j| col_sums[j]);
    for (pos, &j) in block.iter().enumerate() {
        if j >= a.cols() {
            return Err(MatrixError::NotAPermutation { len: a.cols() });
        }
        if col_sums[j] != block_value {
            return Err(MatrixError::NotNonIncreasing(pos));
        }
    }
    let a_cols: Vec<Vec<u8>> = block.iter().map(|&j| a.column(j)).collect();
    let mut costs = Vec::with_capacity(block.len() * block.len());
    for &j in block {
        let fj = f.column(j);
        for aq in &a_cols {
            costs.push(column_diff(&fj, aq)?);
        }
    }
    Ok(CostMatrix {
        size: block.len(),
        costs,
        ferrers_cols: block.to_vec(),
        block_value,
    })
}

/// Minimum-weight perfect matching; ties are broken towards the
/// lexicographically smallest pairing.
pub fn solve_assignment(c: &CostMatrix) -> Assignment {
    let n = c.size();
    if n == 0 {
        return Assignment {
            pairing: Vec::new(),
            total_weight: 0,
        };
    }
    let rows: Vec<usize> = (0..n).collect();
    let duals = hungarian(&rows, n, |p, q| c.cost(p, q) as i64);
    let pairing = lexicographic_refine(n, duals.row_to_col.clone(), |p, q| {
        c.cost(p, q) as i64 - duals.row_pot[p] - duals.col_pot[q] == 0
    });
    Assignment::evaluate(c, pairing)
}

/// Same result as [`solve_assignment`], computed on a smaller graph.
///
/// * When every Ferrers column of the block is identical, every pairing is
///   optimal and the identity is returned without solving.
/// * Ferrers columns that are all zeros or all ones give constant cost rows;
///   only the remaining rows enter the matching (a rectangular problem), and
///   the constant rows take whatever columns are left.
pub fn solve_assignment_reduced(c: &CostMatrix, f: &FerrersProfile, m: usize) -> Assignment {
    let n = c.size();
    debug_assert_eq!(f.rows(), m);
    let conj = |p: usize| f.conjugate[c.ferrers_cols[p]];
    let identical = (1..n).all(|p| conj(p) == conj(0));
    let active: Vec<usize> = (0..n)
        .filter(|&p| {
            let v = conj(p);
            v != 0 && v != m
        })
        .collect();
    if identical || active.is_empty() {
        return Assignment::evaluate(c, (0..n).collect());
    }

    let duals = hungarian(&active, n, |p, q| c.cost(p, q) as i64);
    let mut is_active = vec![false; n];
    let mut row_pot = vec![0i64; n];
    let mut pairing = vec![usize::MAX; n];
    let mut taken = vec![false; n];
    for (k, &p) in active.iter().enumerate() {
        is_active[p] = true;
        row_pot[p] = duals.row_pot[k];
        pairing[p] = duals.row_to_col[k];
        taken[duals.row_to_col[k]] = true;
    }
    // Constant rows act as zero-cost dummies; columns left free by the
    // rectangular solve keep potential 0 and are tight for them.
    let mut free = (0..n).filter(|&q| !taken[q]);
    for p in 0..n {
        if !is_active[p] {
            pairing[p] = free.next().expect("one free column per constant row");
        }
    }
    let col_pot = &duals.col_pot;
    let pairing = lexicographic_refine(n, pairing, |p, q| {
        if is_active[p] {
            c.cost(p, q) as i64 - row_pot[p] - col_pot[q] == 0
        } else {
            col_pot[q] == 0
        }
    });
    Assignment::evaluate(c, pairing)
}

struct Duals {
    /// Column matched to each entry of `rows`, indexed like `rows`.
    row_to_col: Vec<usize>,
    /// Row potentials, indexed like `rows`.
    row_pot: Vec<i64>,
    col_pot: Vec<i64>,
}

/// Shortest augmenting path Hungarian method for `rows.len() <= cols`.
///
/// Maintains `row_pot[p] + col_pot[q] <= cost(p, q)` with equality on
/// matched edges. Column potentials never increase, and columns left
/// unmatched keep potential 0.
fn hungarian(rows: &[usize], cols: usize, cost: impl Fn(usize, usize) -> i64) -> Duals {
    let r = rows.len();
    assert!(r <= cols);
    const INF: i64 = i64::MAX / 4;
    // 1-based, slot 0 is the virtual root column.
    let mut u = vec![0i64; r + 1];
    let mut v = vec![0i64; cols + 1];
    let mut owner = vec![0usize; cols + 1];
    let mut way = vec![0usize; cols + 1];
    let mut minv = vec![INF; cols + 1];
    let mut used = vec![false; cols + 1];

    for i in 1..=r {
        owner[0] = i;
        let mut j0 = 0usize;
        minv.iter_mut().for_each(|x| *x = INF);
        used.iter_mut().for_each(|x| *x = false);
        loop {
            used[j0] = true;
            let i0 = owner[j0];
            let row = rows[i0 - 1];
            let mut delta = INF;
            let mut j1 = 0usize;
            for j in 1..=cols {
                if !used[j] {
                    let cur = cost(row, j - 1) - u[i0] - v[j];
                    if cur < minv[j] {
                        minv[j] = cur;
                        way[j] = j0;
                    }
                    if minv[j] < delta {
                        delta = minv[j];
                        j1 = j;
                    }
                }
            }
            for j in 0..=cols {
                if used[j] {
                    u[owner[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
            if owner[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            owner[j0] = owner[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }

    let mut row_to_col = vec![usize::MAX; r];
    for j in 1..=cols {
        if owner[j] != 0 {
            row_to_col[owner[j] - 1] = j - 1;
        }
    }
    Duals {
        row_to_col,
        row_pot: u[1..].to_vec(),
        col_pot: v[1..].to_vec(),
    }
}

/// Turns a perfect matching of the tight subgraph into the lexicographically
/// smallest one.
///
/// For row `p` (rows before `p` already fixed) a column `q` is reachable iff
/// its current owner can be re-routed, through an alternating path over
/// unfixed rows, onto the column `p` gives up. One reverse search from that
/// column marks every reachable `q` at once.
fn lexicographic_refine(
    n: usize,
    mut row_to_col: Vec<usize>,
    tight: impl Fn(usize, usize) -> bool,
) -> Vec<usize> {
    let mut col_to_row = vec![0usize; n];
    for (p, &q) in row_to_col.iter().enumerate() {
        col_to_row[q] = p;
    }
    let mut reachable = vec![false; n];
    let mut seen_row = vec![false; n];
    // For a reachable column, the column its owner moves to.
    let mut moves_to = vec![usize::MAX; n];
    let mut queue = Vec::with_capacity(n);

    for p in 0..n {
        let home = row_to_col[p];
        reachable.iter_mut().for_each(|x| *x = false);
        seen_row.iter_mut().for_each(|x| *x = false);
        queue.clear();
        reachable[home] = true;
        queue.push(home);
        let mut head = 0;
        while head < queue.len() {
            let col = queue[head];
            head += 1;
            for r in p + 1..n {
                if !seen_row[r] && tight(r, col) {
                    seen_row[r] = true;
                    let released = row_to_col[r];
                    if !reachable[released] {
                        reachable[released] = true;
                        moves_to[released] = col;
                        queue.push(released);
                    }
                }
            }
        }
        let best = (0..n)
            .find(|&q| reachable[q] && tight(p, q))
            .expect("current column is reachable and tight");
        if best == home {
            continue;
        }
        let mut col = best;
        let mut row = p;
        loop {
            let displaced = col_to_row[col];
            row_to_col[row] = col;
            col_to_row[col] = row;
            if col == home {
                break;
            }
            row = displaced;
            col = moves_to[col];
        }
    }
    row_to_col
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ferrers::profile_of;
    use itertools::Itertools;
    use proptest::prelude::*;

    fn example3() -> BinaryMatrix {
        BinaryMatrix::from_rows(&[[1, 1, 0, 1, 0], [0, 1, 1, 0, 0], [1, 0, 0, 0, 1]]).unwrap()
    }

    fn brute_min(c: &CostMatrix) -> (u64, Vec<usize>) {
        let n = c.size();
        (0..n)
            .permutations(n)
            .map(|p| {
                (
                    p.iter()
                        .enumerate()
                        .map(|(i, &q)| c.cost(i, q))
                        .sum::<u64>(),
                    p,
                )
            })
            .min()
            .unwrap_or((0, vec![]))
    }

    #[test]
    fn example3_block_costs() {
        let a = example3();
        let f = profile_of(&a);
        let g1 = build_block_cost_matrix(&a, &f, &[0, 1]).unwrap();
        assert_eq!(g1.block_value, 2);
        assert!((0..2).all(|p| g1.row(p) == [1, 1]));
        let g2 = build_block_cost_matrix(&a, &f, &[2, 3, 4]).unwrap();
        assert_eq!(g2.row(0), [1, 0, 1]);
        assert_eq!(g2.row(1), [0, 0, 0]);
        assert_eq!(g2.row(2), [0, 0, 0]);
    }

    #[test]
    fn singleton_block() {
        let a = example3();
        let f = profile_of(&a);
        let g = build_block_cost_matrix(&a, &f, &[2]).unwrap();
        assert_eq!(g.size(), 1);
        assert_eq!(
            g.cost(0, 0),
            column_diff(&f.column(2), &a.column(2)).unwrap()
        );
    }

    #[test]
    fn block_with_mixed_sums_is_rejected() {
        let a = example3();
        let f = profile_of(&a);
        assert!(build_block_cost_matrix(&a, &f, &[1, 2]).is_err());
    }

    #[test]
    fn example3_solutions() {
        let a = example3();
        let f = profile_of(&a);
        let g2 = build_block_cost_matrix(&a, &f, &[2, 3, 4]).unwrap();
        let s = solve_assignment(&g2);
        assert_eq!(s.total_weight, 0);
        assert_eq!(s.pairing[0], 1, "F_3 must take A_4");
        assert_eq!(s.pairing, vec![1, 0, 2]);
        assert_eq!(solve_assignment_reduced(&g2, &f, 3), s);

        let g1 = build_block_cost_matrix(&a, &f, &[0, 1]).unwrap();
        let s = solve_assignment(&g1);
        assert_eq!(
            s,
            Assignment {
                pairing: vec![0, 1],
                total_weight: 2
            }
        );
        assert_eq!(solve_assignment_reduced(&g1, &f, 3), s);
    }

    #[test]
    fn one_by_one() {
        let c = CostMatrix::from_rows(vec![vec![7]]);
        assert_eq!(
            solve_assignment(&c),
            Assignment {
                pairing: vec![0],
                total_weight: 7
            }
        );
    }

    #[test]
    fn empty() {
        let c = CostMatrix::from_rows(vec![]);
        assert_eq!(solve_assignment(&c).total_weight, 0);
    }

    #[test]
    fn lexicographic_tie_break() {
        // Every pairing costs the same.
        let c = CostMatrix::from_rows(vec![vec![3; 4]; 4]);
        assert_eq!(solve_assignment(&c).pairing, vec![0, 1, 2, 3]);
        // Several weight-1 optima.
        let c = CostMatrix::from_rows(vec![vec![1, 0, 0], vec![0, 1, 1], vec![0, 1, 0]]);
        let (w, p) = brute_min(&c);
        let s = solve_assignment(&c);
        assert_eq!((s.total_weight, s.pairing), (w, p));
    }

    fn arb_costs(max_n: usize) -> impl Strategy<Value = CostMatrix> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(proptest::collection::vec(0u64..5, n), n)
                .prop_map(CostMatrix::from_rows)
        })
    }

    proptest! {
        #[test]
        fn matches_exhaustive_minimum_and_tie_break(c in arb_costs(6)) {
            let (w, p) = brute_min(&c);
            let s = solve_assignment(&c);
            prop_assert_eq!(s.total_weight, w);
            prop_assert_eq!(s.pairing, p);
        }

        #[test]
        fn row_shift_adds_constant(c in arb_costs(7), row in 0usize..7, delta in 0u64..20) {
            let row = row % c.size();
            let base = solve_assignment(&c).total_weight;
            let mut shifted = c.clone();
            shifted.shift_row(row, delta);
            prop_assert_eq!(solve_assignment(&shifted).total_weight, base + delta);
        }

        #[test]
        fn zero_weight_iff_zero_permutation_exists(c in arb_costs(6)) {
            let n = c.size();
            let exists = (0..n).permutations(n)
                .any(|p| p.iter().enumerate().all(|(i, &q)| c.cost(i, q) == 0));
            prop_assert_eq!(solve_assignment(&c).total_weight == 0, exists);
        }

        #[test]
        fn deterministic(c in arb_costs(8)) {
            prop_assert_eq!(solve_assignment(&c), solve_assignment(&c));
        }
    }
}
