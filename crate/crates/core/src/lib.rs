//! Nestedness discrepancy of 0/1 matrices.
//!
//! The discrepancy of a matrix with non-increasing margins counts the 1's
//! that must be shifted left, within their rows, to reach the Ferrers matrix
//! with the same row sums. The isomorphic discrepancy minimizes that count
//! over all relabelings of equal-sum columns; it splits into one independent
//! assignment problem per block of equal column sums.
//!
//! ```
//! use isodisc::{disc, isomorphic_discrepancy, BinaryMatrix};
//!
//! let a = BinaryMatrix::from_rows(&[
//!     [1, 0, 1, 1],
//!     [1, 0, 1, 1],
//!     [1, 1, 0, 1],
//!     [1, 1, 0, 0],
//!     [1, 1, 0, 0],
//!     [1, 0, 1, 0],
//! ])
//! .unwrap();
//! assert_eq!(disc(&a).unwrap(), 4);
//! assert_eq!(isomorphic_discrepancy(&a).id, 3);
//! ```

pub mod assignment;
pub mod canonical;
pub mod cli;
pub mod error;
pub mod ferrers;
pub mod isodisc;
pub mod matrix;
pub mod oracle;
pub mod parse;

pub use assignment::{
    build_block_cost_matrix, solve_assignment, solve_assignment_reduced, Assignment, CostMatrix,
};
pub use canonical::{canonicalize, is_canonical, CanonicalForm};
pub use error::{Axis, MatrixError, OracleError, ParseError, ParseErrorKind};
pub use ferrers::{column_diff, disc, ferrers_profile, lower_bound, profile_of, FerrersProfile};
pub use isodisc::{
    block_partition, general_isomorphic_discrepancy, isomorphic_discrepancy,
    isomorphic_discrepancy_with, Block, BlockPartition, BlockReport, DiscrepancyReport,
    GeneralDiscrepancy, HalfInteger, SolverPath,
};
pub use matrix::{invert_permutation, BinaryMatrix, Margins};
pub use oracle::{
    brute_force_assignment, brute_force_id, brute_force_id_with_rows, shift_simulation_disc,
    OracleBudget,
};
pub use parse::{parse_matrix, Format};
