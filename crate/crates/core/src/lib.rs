//! Exact Hankel moment matrices of the Laguerre, Jacobi and q-Laguerre
//! families.
//!
//! For each family the crate builds `G_n = (mu_{j+k})` and evaluates its
//! determinant, inverse and a lower bound for its smallest eigenvalue in
//! two independent ways: from the orthonormal polynomial coefficients and
//! from explicit product/sum formulas. Exact oracles (Bareiss determinant,
//! Gauss-Jordan inverse, LDL^T positivity certificate) cross-check both.
//! [`asymptotics`] evaluates the bounds at large `n` in log-domain floating
//! point.

pub mod asymptotics;
pub mod error;
pub mod exact_scalar;
pub mod families;
pub mod hankel_engine;
pub mod verify;

pub use error::{Error, Result};
pub use exact_scalar::{FloatApprox, Rational};
pub use families::{Family, FamilyParams};
pub use hankel_engine::{BoundReport, SymRationalMatrix};
