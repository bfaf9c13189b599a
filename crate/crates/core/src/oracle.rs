//! Brute-force and simulation oracles. These are deliberately naive: they
//! enumerate or simulate instead of reusing the solver, so they can certify it
//! on small inputs.

use itertools::Itertools;

use crate::assignment::CostMatrix;
use crate::canonical::{canonicalize, is_canonical};
use crate::error::{MatrixError, OracleError};
use crate::ferrers::{disc, lower_bound};
use crate::matrix::BinaryMatrix;

/// Limits on exhaustive enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBudget {
    /// Cap on the product of all per-block factorials.
    pub max_total_permutations: u128,
    /// Cap on any single block's factorial.
    pub max_block_factorial: u128,
}

impl Default for OracleBudget {
    fn default() -> Self {
        Self {
            max_total_permutations: 1_000_000,
            max_block_factorial: 1_000_000,
        }
    }
}

/// Counts shifts by actually performing them.
///
/// Columns are processed right to left. Every cell where the Ferrers matrix
/// has a 1 and the working matrix a 0 receives the rightmost 1 of its row that
/// sits outside the row's Ferrers prefix. The loop ends with the Ferrers
/// matrix itself; each move is one shift.
pub fn shift_simulation_disc(a: &BinaryMatrix) -> Result<u64, OracleError> {
    if !is_canonical(a) {
        return Err(MatrixError::NotCanonical("row and column sums must be non-increasing").into());
    }
    let n = a.cols();
    let mut work: Vec<Vec<u8>> = a.iter_rows().map(<[u8]>::to_vec).collect();
    let row_sums = a.row_sums();
    let mut shifts = 0u64;
    for col in (0..n).rev() {
        for (i, row) in work.iter_mut().enumerate() {
            let prefix = row_sums[i];
            if col < prefix && row[col] == 0 {
                let src = (prefix.max(col + 1)..n)
                    .rev()
                    .find(|&k| row[k] == 1)
                    .ok_or(OracleError::Stuck { row: i, col })?;
                row[src] = 0;
                row[col] = 1;
                shifts += 1;
            }
        }
    }
    for (i, row) in work.iter().enumerate() {
        if row
            .iter()
            .enumerate()
            .any(|(k, &v)| v != (k < row_sums[i]) as u8)
        {
            return Err(OracleError::Stuck { row: i, col: 0 });
        }
    }
    Ok(shifts)
}

/// Minimum discrepancy over every relabeling of equal-sum columns.
pub fn brute_force_id(a: &BinaryMatrix, budget: OracleBudget) -> Result<u64, OracleError> {
    brute_force(a, budget, false)
}

/// As [`brute_force_id`], additionally relabeling equal-sum rows. Only
/// useful as a desk check that row relabelings never matter.
pub fn brute_force_id_with_rows(
    a: &BinaryMatrix,
    budget: OracleBudget,
) -> Result<u64, OracleError> {
    brute_force(a, budget, true)
}

/// Number of column (and optionally row) relabelings the oracle would visit.
pub fn required_permutations(a: &BinaryMatrix, include_rows: bool) -> u128 {
    let c = canonicalize(a).matrix;
    let mut sizes = run_lengths(&c.col_sums());
    if include_rows {
        sizes.extend(run_lengths(&c.row_sums()));
    }
    sizes
        .iter()
        .map(|&s| factorial(s))
        .fold(1u128, |acc, f| acc.saturating_mul(f))
}

fn brute_force(
    a: &BinaryMatrix,
    budget: OracleBudget,
    include_rows: bool,
) -> Result<u64, OracleError> {
    let c = canonicalize(a).matrix.unlabeled();
    let col_groups = runs(&c.col_sums());
    let row_groups = if include_rows {
        runs(&c.row_sums())
    } else {
        (0..c.rows()).map(|i| vec![i]).collect()
    };
    for g in col_groups.iter().chain(&row_groups) {
        if factorial(g.len()) > budget.max_block_factorial {
            return Err(OracleError::BlockTooLarge {
                size: g.len(),
                cap: max_size_within(budget.max_block_factorial),
            });
        }
    }
    let required = required_permutations(&c, include_rows);
    if required > budget.max_total_permutations {
        return Err(OracleError::BudgetExceeded {
            required,
            allowed: budget.max_total_permutations,
        });
    }

    let floor = lower_bound(&c);
    let mut best = u64::MAX;
    let mut col_sigma: Vec<usize> = (0..c.cols()).collect();
    let mut row_sigma: Vec<usize> = (0..c.rows()).collect();
    let groups: Vec<(bool, &Vec<usize>)> = col_groups
        .iter()
        .map(|g| (true, g))
        .chain(
            row_groups
                .iter()
                .filter(|g| g.len() > 1)
                .map(|g| (false, g)),
        )
        .collect();
    enumerate(&groups, 0, &mut col_sigma, &mut row_sigma, &mut |cs, rs| {
        let b = c
            .apply_row_permutation(rs)
            .and_then(|m| m.apply_col_permutation(cs))
            .expect("block permutations are bijections");
        let d = disc(&b).expect("equal-sum relabelings keep the matrix canonical");
        best = best.min(d);
        best > floor
    });
    Ok(if best == u64::MAX { 0 } else { best })
}

/// Visits the product of per-group permutations in lexicographic order.
/// `visit` returns `false` to stop early.
fn enumerate(
    groups: &[(bool, &Vec<usize>)],
    depth: usize,
    col_sigma: &mut Vec<usize>,
    row_sigma: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize], &[usize]) -> bool,
) -> bool {
    let Some(&(is_col, group)) = groups.get(depth) else {
        return visit(col_sigma, row_sigma);
    };
    for perm in group.iter().copied().permutations(group.len()) {
        let target = if is_col {
            &mut *col_sigma
        } else {
            &mut *row_sigma
        };
        for (&dst, src) in group.iter().zip(perm) {
            target[dst] = src;
        }
        if !enumerate(groups, depth + 1, col_sigma, row_sigma, visit) {
            return false;
        }
    }
    true
}

/// Exhaustive assignment: the lexicographically first permutation of minimum
/// total cost.
pub fn brute_force_assignment(c: &CostMatrix) -> (u64, Vec<usize>) {
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
        .unwrap_or((0, Vec::new()))
}

fn runs(sums: &[usize]) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = Vec::new();
    for (i, &s) in sums.iter().enumerate() {
        match out.last_mut() {
            Some(g) if sums[g[0]] == s => g.push(i),
            _ => out.push(vec![i]),
        }
    }
    out
}

fn run_lengths(sums: &[usize]) -> Vec<usize> {
    runs(sums).iter().map(Vec::len).collect()
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).fold(1u128, |acc, k| acc.saturating_mul(k))
}

fn max_size_within(cap: u128) -> usize {
    (0..)
        .take_while(|&s| factorial(s) <= cap)
        .last()
        .unwrap_or(0)
}
