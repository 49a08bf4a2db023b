use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact_scalar::Rational;

/// Dense symmetric matrix of exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymRationalMatrix {
    rows: Vec<Vec<Rational>>,
}

impl SymRationalMatrix {
    /// Validates squareness and exact symmetry.
    pub fn new(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let m = rows.len();
        if rows.iter().any(|r| r.len() != m) {
            return Err(Error::domain("matrix is not square"));
        }
        for j in 0..m {
            for k in 0..j {
                if rows[j][k] != rows[k][j] {
                    return Err(Error::domain(format!("matrix is not symmetric at ({j},{k})")));
                }
            }
        }
        Ok(SymRationalMatrix { rows })
    }

    /// Builds the matrix from the upper triangle `f(j, k)`, `j <= k`.
    pub fn from_upper(order: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut rows = vec![vec![Rational::zero(); order]; order];
        for j in 0..order {
            for k in j..order {
                let v = f(j, k);
                if j != k {
                    rows[k][j] = v.clone();
                }
                rows[j][k] = v;
            }
        }
        SymRationalMatrix { rows }
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<Rational>>) -> Self {
        debug_assert!(Self::new(rows.clone()).is_ok());
        SymRationalMatrix { rows }
    }

    pub fn identity(order: usize) -> Self {
        Self::from_upper(order, |j, k| if j == k { Rational::one() } else { Rational::zero() })
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, j: usize, k: usize) -> &Rational {
        &self.rows[j][k]
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn is_hankel(&self) -> bool {
        let m = self.order();
        (0..m).all(|j| (0..m).all(|k| j == 0 || k + 1 == m || self.rows[j][k] == self.rows[j - 1][k + 1]))
    }

    /// Plain matrix product; the result need not be symmetric.
    pub fn mul(&self, other: &SymRationalMatrix) -> Vec<Vec<Rational>> {
        let m = self.order();
        assert_eq!(m, other.order(), "order mismatch");
        (0..m)
            .map(|i| {
                (0..m)
                    .map(|k| {
                        self.rows[i]
                            .iter()
                            .zip(other.rows.iter())
                            .map(|(a, row)| a * &row[k])
                            .sum()
                    })
                    .collect()
            })
            .collect()
    }

    pub fn product_is_identity(&self, other: &SymRationalMatrix) -> bool {
        self.mul(other).iter().enumerate().all(|(i, row)| {
            row.iter()
                .enumerate()
                .all(|(k, v)| if i == k { v.is_one() } else { v.is_zero() })
        })
    }

    /// `self - b I`
    pub fn shifted(&self, b: &Rational) -> SymRationalMatrix {
        let mut rows = self.rows.clone();
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] -= b;
        }
        SymRationalMatrix { rows }
    }

    pub fn to_f64(&self) -> Vec<Vec<f64>> {
        self.rows
            .iter()
            .map(|r| r.iter().map(Rational::to_f64).collect())
            .collect()
    }

    pub fn all_integer(&self) -> bool {
        self.rows.iter().flatten().all(Rational::is_integer)
    }
}

impl Serialize for SymRationalMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.order()))?;
        for row in &self.rows {
            seq.serialize_element(row)?;
        }
        seq.end()
    }
}
