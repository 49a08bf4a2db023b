//! Determinant, inverse and eigenvalue bound of `G_n = (mu_{j+k})` from the
//! orthonormal coefficient rows `a_{n,k} = sqrt(r_n) b_{n,k}`:
//!
//! * `det G_n = prod_j 1 / a_{j,j}^2`
//! * `(G_n^{-1})_{j,k} = sum_{l >= max(j,k)} a_{l,j} a_{l,k}`
//! * `lambda_min(G_n) >= 1 / sum_m p_m(z0)^2` when every row has one sign
//!   at `z0`.

use super::SymRationalMatrix;
use crate::error::{Error, Result};
use crate::exact_scalar::Rational;
use crate::families::{self, coeff_rows, CoeffRow, FamilyParams};

pub fn moment_matrix(fam: &FamilyParams, n: usize) -> SymRationalMatrix {
    let mu = families::moments(fam, 2 * n + 1);
    SymRationalMatrix::from_upper(n + 1, |j, k| mu[j + k].clone())
}

pub fn det_theorem(fam: &FamilyParams, n: usize) -> Rational {
    coeff_rows(fam, n)
        .iter()
        .map(|row| row.leading_sq().recip())
        .product()
}

pub fn inverse_from_rows(rows: &[CoeffRow]) -> SymRationalMatrix {
    let order = rows.len();
    SymRationalMatrix::from_upper(order, |j, k| {
        rows[k.max(j)..]
            .iter()
            .map(|row| &row.r * &row.b[j] * &row.b[k])
            .sum()
    })
}

pub fn inverse_theorem(fam: &FamilyParams, n: usize) -> SymRationalMatrix {
    inverse_from_rows(&coeff_rows(fam, n))
}

/// `(sum_{m<=n} p_m(-1)^2)^{-1}`; refuses when the sign condition fails.
pub fn bound_sum(fam: &FamilyParams, n: usize) -> Result<Rational> {
    let mut total = Rational::zero();
    for m in 0..=n {
        let (p_sq, same_sign) = families::eval_at_sign_point(fam, m);
        if !same_sign {
            return Err(Error::SignConditionViolated { row: m });
        }
        total += p_sq;
    }
    Ok(total.recip())
}
