//! Moment matrices and the determinant / inverse / eigenvalue-bound
//! machinery built from orthonormal coefficient rows, together with the
//! per-family closed forms and the independent exact oracles that check
//! them.

mod closed_form;
mod eigen;
mod matrix;
mod oracle;
mod report;
mod theorem;

pub use closed_form::{
    bound_cd, bound_qpoch, bound_qpoch_limit, det_family_formula, inverse_family_formula,
};
pub use eigen::{smallest_eig_float, DEFAULT_EIG_MAX_ITER, DEFAULT_EIG_TOL};
pub use matrix::SymRationalMatrix;
pub use oracle::{certify_bound, det_oracle, inverse_oracle};
pub use report::{bound_report, BoundReport};
pub use theorem::{bound_sum, det_theorem, inverse_from_rows, inverse_theorem, moment_matrix};
