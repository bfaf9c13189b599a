//! Isomorphic discrepancy: the smallest discrepancy over all relabelings of
//! equal-sum columns, computed block by block as independent assignment
//! problems.
//!
//! Row relabelings are never enumerated. Rows with equal sums have identical
//! Ferrers rows, so swapping them cannot change the number of shifts.

use std::fmt;
use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::assignment::{
    build_block_cost_matrix, solve_assignment, solve_assignment_reduced, Assignment,
};
use crate::canonical::{canonicalize, CanonicalForm};
use crate::error::MatrixError;
use crate::ferrers::{disc, lower_bound, profile_of};
use crate::matrix::BinaryMatrix;

/// One maximal run of equal column sums.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub value: usize,
    pub columns: Range<usize>,
}

impl Block {
    pub fn len(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockPartition {
    pub blocks: Vec<Block>,
}

impl BlockPartition {
    pub fn k(&self) -> usize {
        self.blocks.len()
    }
}

/// Splits non-increasing column sums into maximal equal runs.
pub fn block_partition(col_sums: &[usize]) -> Result<BlockPartition, MatrixError> {
    if let Some(pos) = col_sums.windows(2).position(|w| w[0] < w[1]) {
        return Err(MatrixError::NotNonIncreasing(pos + 1));
    }
    let mut blocks: Vec<Block> = Vec::new();
    for (j, &value) in col_sums.iter().enumerate() {
        match blocks.last_mut() {
            Some(b) if b.value == value => b.columns.end = j + 1,
            _ => blocks.push(Block {
                value,
                columns: j..j + 1,
            }),
        }
    }
    Ok(BlockPartition { blocks })
}

/// Which assignment routine solves each block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SolverPath {
    Full,
    #[default]
    Reduced,
}

/// Outcome for a single block.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockReport {
    /// Shared column sum of the block.
    pub value: usize,
    /// First canonical column of the block.
    pub start: usize,
    pub size: usize,
    pub weight: u64,
    /// Per Ferrers column: all zeros or all ones, so its pairing carries no
    /// information and was settled by the tie-break.
    pub forced_constant: Vec<bool>,
    /// True when every pairing of the block has the same weight.
    pub all_pairings_optimal: bool,
}

/// Exact mean of two integers (denominator 1 or 2).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HalfInteger {
    pub numerator: u64,
    pub denominator: u64,
}

impl HalfInteger {
    pub fn mean(a: u64, b: u64) -> Self {
        let sum = a + b;
        if sum.is_multiple_of(2) {
            Self {
                numerator: sum / 2,
                denominator: 1,
            }
        } else {
            Self {
                numerator: sum,
                denominator: 2,
            }
        }
    }

    pub fn as_f64(&self) -> f64 {
        self.numerator as f64 / self.denominator as f64
    }
}

impl fmt::Display for HalfInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denominator == 1 {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "{}.5", self.numerator / 2)
        }
    }
}

/// Orientation-free variant: both `A` and its transpose.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneralDiscrepancy {
    pub id: u64,
    pub id_transposed: u64,
    pub min: u64,
    pub mean: HalfInteger,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscrepancyReport {
    /// Discrepancy of the canonical form as labeled.
    pub disc: u64,
    pub id: u64,
    pub lower_bound: u64,
    /// Canonical destination `j` holds canonical column `sigma[j]`.
    pub sigma: Vec<usize>,
    /// Destination `j` holds original column `sigma_original[j]`.
    pub sigma_original: Vec<usize>,
    pub per_block: Vec<BlockReport>,
    pub canonical: CanonicalForm,
    pub general: Option<GeneralDiscrepancy>,
}

impl DiscrepancyReport {
    /// The canonical matrix with columns relabeled by `sigma`; its
    /// discrepancy is `id`.
    pub fn witness(&self) -> BinaryMatrix {
        self.canonical
            .matrix
            .apply_col_permutation(&self.sigma)
            .expect("sigma is a bijection")
    }

    /// `sigma_original` in terms of the input's column labels, when it had any.
    pub fn sigma_labels(&self) -> Option<Vec<String>> {
        let labels = self.canonical.matrix.col_labels()?;
        Some(self.sigma.iter().map(|&s| labels[s].clone()).collect())
    }

    pub fn input_was_canonical(&self) -> bool {
        self.canonical.is_identity()
    }
}

pub fn isomorphic_discrepancy(a: &BinaryMatrix) -> DiscrepancyReport {
    isomorphic_discrepancy_with(a, SolverPath::default())
}

pub fn isomorphic_discrepancy_with(a: &BinaryMatrix, path: SolverPath) -> DiscrepancyReport {
    let canonical = canonicalize(a);
    let c = &canonical.matrix;
    let m = c.rows();
    let f = profile_of(c);
    let partition = block_partition(&c.col_sums()).expect("canonical column sums");

    let mut sigma: Vec<usize> = (0..c.cols()).collect();
    let mut per_block = Vec::with_capacity(partition.k());
    for block in &partition.blocks {
        let cols: Vec<usize> = block.columns.clone().collect();
        let costs = build_block_cost_matrix(c, &f, &cols).expect("block columns share one sum");
        let Assignment {
            pairing,
            total_weight,
        } = match path {
            SolverPath::Full => solve_assignment(&costs),
            SolverPath::Reduced => solve_assignment_reduced(&costs, &f, m),
        };
        // Ferrers column cols[p] is paired with matrix column cols[pairing[p]],
        // so that matrix column moves to destination cols[p].
        for (p, &q) in pairing.iter().enumerate() {
            sigma[cols[p]] = cols[q];
        }
        let forced_constant: Vec<bool> = cols.iter().map(|&j| f.is_constant_column(j)).collect();
        let all_pairings_optimal = cols.iter().all(|&j| f.conjugate[j] == f.conjugate[cols[0]])
            || forced_constant.iter().all(|&x| x);
        per_block.push(BlockReport {
            value: block.value,
            start: block.columns.start,
            size: block.len(),
            weight: total_weight,
            forced_constant,
            all_pairings_optimal,
        });
    }

    let id = per_block.iter().map(|b| b.weight).sum();
    let sigma_original = sigma.iter().map(|&s| canonical.col_perm[s]).collect();
    DiscrepancyReport {
        disc: disc(c).expect("canonical"),
        id,
        lower_bound: lower_bound(c),
        sigma,
        sigma_original,
        per_block,
        canonical,
        general: None,
    }
}

/// Computes `Id(A)` and `Id(A^t)` and reports both, their minimum, and their
/// exact mean. The returned report describes `A` itself.
pub fn general_isomorphic_discrepancy(a: &BinaryMatrix) -> DiscrepancyReport {
    let mut report = isomorphic_discrepancy(a);
    let transposed = isomorphic_discrepancy(&a.transpose());
    report.general = Some(GeneralDiscrepancy {
        id: report.id,
        id_transposed: transposed.id,
        min: report.id.min(transposed.id),
        mean: HalfInteger::mean(report.id, transposed.id),
    });
    report
}
