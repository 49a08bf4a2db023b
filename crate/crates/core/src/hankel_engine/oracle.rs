//! Exact linear-algebra oracles, independent of the coefficient rows.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::SymRationalMatrix;
use crate::error::{Error, Result};
use crate::exact_scalar::{common_denominator, Rational};

/// Determinant by Bareiss fraction-free elimination.
///
/// Each row is scaled to integers by the lcm of its denominators; the
/// elimination then runs entirely in `BigInt` with exact divisions.
pub fn det_oracle(g: &SymRationalMatrix) -> Rational {
    let m = g.order();
    if m == 0 {
        return Rational::one();
    }
    let mut scale = BigInt::one();
    let mut a: Vec<Vec<BigInt>> = g
        .rows()
        .iter()
        .map(|row| {
            let d = common_denominator(row);
            let out = row
                .iter()
                .map(|v| v.numer() * (&d / v.denom()))
                .collect();
            scale *= &d;
            out
        })
        .collect();

    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..m - 1 {
        if a[k][k].is_zero() {
            match (k + 1..m).find(|&i| !a[i][k].is_zero()) {
                Some(p) => {
                    a.swap(k, p);
                    negate = !negate;
                }
                None => return Rational::zero(),
            }
        }
        for i in k + 1..m {
            for j in k + 1..m {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[m - 1][m - 1].clone();
    let det = if negate { -det } else { det };
    Rational::new(det, scale).expect("nonzero scale")
}

/// Inverse by Gauss-Jordan elimination with exact pivot search.
pub fn inverse_oracle(g: &SymRationalMatrix) -> Result<SymRationalMatrix> {
    let m = g.order();
    let mut a: Vec<Vec<Rational>> = g.rows().to_vec();
    let mut inv: Vec<Vec<Rational>> = SymRationalMatrix::identity(m).rows().to_vec();
    for col in 0..m {
        let pivot = (col..m)
            .find(|&i| !a[i][col].is_zero())
            .ok_or(Error::SingularMatrix)?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].recip();
        for v in a[col].iter_mut() {
            *v *= &p;
        }
        for v in inv[col].iter_mut() {
            *v *= &p;
        }
        for i in 0..m {
            if i == col || a[i][col].is_zero() {
                continue;
            }
            let f = a[i][col].clone();
            for j in 0..m {
                let dv = &f * &a[col][j];
                a[i][j] -= dv;
                let di = &f * &inv[col][j];
                inv[i][j] -= di;
            }
        }
    }
    Ok(SymRationalMatrix::from_rows_unchecked(inv))
}

/// Exact certificate that `lambda_min(G) >= b`: the LDL^T pivots of
/// `G - b I` are all nonnegative.
///
/// Pivots are taken in natural order. A zero pivot is accepted only when the
/// rest of its column is exactly zero; otherwise the shifted matrix is
/// indefinite and the certificate fails.
pub fn certify_bound(g: &SymRationalMatrix, b: &Rational) -> bool {
    let m = g.order();
    let mut a: Vec<Vec<Rational>> = g.shifted(b).rows().to_vec();
    for k in 0..m {
        let d = a[k][k].clone();
        if d.is_negative() {
            return false;
        }
        if d.is_zero() {
            if (k + 1..m).any(|i| !a[i][k].is_zero()) {
                return false;
            }
            continue;
        }
        for i in k + 1..m {
            if a[i][k].is_zero() {
                continue;
            }
            let l = &a[i][k] / &d;
            for j in i..m {
                let delta = &l * &a[k][j];
                a[i][j] -= &delta;
                if j != i {
                    a[j][i] = a[i][j].clone();
                }
            }
        }
    }
    true
}
