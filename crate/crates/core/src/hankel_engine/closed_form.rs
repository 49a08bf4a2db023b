//! Explicit per-family formulas for the determinant, the inverse and the
//! eigenvalue bound. These never touch the coefficient rows, so comparing
//! them with the row-based routes in `theorem` is a genuine check.

use super::SymRationalMatrix;
use crate::error::{Error, Result};
use crate::exact_scalar::{pochhammer, q_pochhammer, q_pochhammer_infinite, FloatApprox, Rational};
use crate::families::{jacobi_p, laguerre_l, Family, FamilyParams};

fn factorial(n: usize) -> Rational {
    pochhammer(&Rational::one(), n)
}

/// Product formula for `det G_n`.
///
/// The q-Laguerre exponent `n(n+1)(4n+6 alpha+5)/6` is applied as
/// `t^{n(n+1)} q^{n(n+1)(4n+5)/6 - n(n+1)}`, and the `(t;q)_{j+k}` factor
/// `q^{n(n+1) alpha / 2}` as `t^{n(n+1)/2} q^{-n(n+1)/2}`.
pub fn det_family_formula(fam: &FamilyParams, n: usize) -> Rational {
    let tri = (n * (n + 1)) as i64;
    match fam.family() {
        Family::Laguerre { alpha } => (0..=n)
            .map(|k| factorial(k) * pochhammer(&(alpha + 1), k))
            .product(),
        Family::Jacobi { alpha, beta } => {
            let s = alpha + beta;
            (0..=n)
                .map(|m| {
                    pochhammer(&(beta + 1), m) * pochhammer(&(alpha + 1), m) * factorial(m)
                        / (pochhammer(&(&s + 2), 2 * m)
                            * pochhammer(&(&s + Rational::from(m + 1)), m))
                })
                .product()
        }
        Family::QLaguerre { q, t } => {
            let num: Rational = (0..=n)
                .map(|m| q_pochhammer(q, q, m) * q_pochhammer(t, q, m))
                .product();
            let cubic = tri * (4 * n as i64 + 5) / 6;
            num / (t.pow(tri) * q.pow(cubic - tri))
        }
        Family::QPochHankel { q, t } => {
            let num: Rational = (0..=n)
                .map(|m| q_pochhammer(q, q, m) * q_pochhammer(t, q, m))
                .product();
            let cubic = tri * (2 * n as i64 + 1) / 6;
            num * t.pow(tri / 2) * q.pow(-tri / 2) * q.pow(cubic)
        }
    }
}

/// Explicit closed form for the entries of `G_n^{-1}`.
pub fn inverse_family_formula(fam: &FamilyParams, n: usize) -> SymRationalMatrix {
    let order = n + 1;
    match fam.family() {
        Family::Laguerre { alpha } => {
            let a1 = alpha + 1;
            let side: Vec<Rational> = (0..order)
                .map(|j| pochhammer(&a1, j) * factorial(j))
                .collect();
            SymRationalMatrix::from_upper(order, |j, k| {
                (k..order)
                    .map(|l| {
                        let ml = Rational::from(-(l as i64));
                        pochhammer(&a1, l) * pochhammer(&ml, j) * pochhammer(&ml, k)
                            / factorial(l)
                    })
                    .sum::<Rational>()
                    / (&side[j] * &side[k])
            })
        }
        Family::Jacobi { alpha, beta } => {
            let s = alpha + beta;
            let weight = |m: usize| -> Rational {
                if m == 0 {
                    return Rational::one();
                }
                (Rational::from(2 * m) + &s + 1)
                    * pochhammer(&(alpha + 1), m)
                    * pochhammer(&(&s + 2), m - 1)
                    / (pochhammer(&(beta + 1), m) * factorial(m))
            };
            let col = |m: usize, j: usize| -> Rational {
                pochhammer(&Rational::from(-(m as i64)), j)
                    * pochhammer(&(&s + Rational::from(m + 1)), j)
                    / (factorial(j) * pochhammer(&(alpha + 1), j))
            };
            SymRationalMatrix::from_upper(order, |j, k| {
                (k..order).map(|m| weight(m) * col(m, j) * col(m, k)).sum()
            })
        }
        Family::QLaguerre { q, t } => {
            let side = |j: usize| -> Rational {
                q_pochhammer(q, q, j) * q_pochhammer(t, q, j)
            };
            let qa = t / q;
            SymRationalMatrix::from_upper(order, |j, k| {
                let jk = (j + k) as i64;
                let tri = ((j * (j + 1) + k * (k + 1)) / 2) as i64;
                let factor = qa.pow(jk) * q.pow(tri) / (side(j) * side(k));
                (k..order)
                    .map(|m| {
                        let qm = q.pow(-(m as i64));
                        q_pochhammer(t, q, m)
                            * q.pow(m as i64 * (jk + 1))
                            * q_pochhammer(&qm, q, j)
                            * q_pochhammer(&qm, q, k)
                            / q_pochhammer(q, q, m)
                    })
                    .sum::<Rational>()
                    * factor
            })
        }
        Family::QPochHankel { q, t } => {
            let side = |j: usize| -> Rational {
                q_pochhammer(q, q, j) * q_pochhammer(t, q, j)
            };
            SymRationalMatrix::from_upper(order, |j, k| {
                let factor = q.pow((j + k) as i64) / (side(j) * side(k));
                (k..order)
                    .map(|m| {
                        let qm = q.pow(-(m as i64));
                        q_pochhammer(t, q, m) * q_pochhammer(&qm, q, j) * q_pochhammer(&qm, q, k)
                            / (q_pochhammer(q, q, m) * t.pow(m as i64))
                    })
                    .sum::<Rational>()
                    * factor
            })
        }
    }
}

/// Christoffel-Darboux form of the eigenvalue bound, Laguerre and Jacobi only.
///
/// Laguerre uses `d/dx L_n^{(a)} = -L_{n-1}^{(a+1)}`:
/// `(a+1)_n / (n+1)! / (L_n^{(a+1)} L_n^{(a)} - L_{n+1}^{(a)} L_{n-1}^{(a+1)})` at -1.
///
/// Jacobi works in `y = (1+x)/2`, so `y = -1` is `x = -3` and, by reflection,
/// the values are taken at `x = 3`. With `s = alpha + beta`, the kernel sum is
/// `(n+1)! (s+2)_n / ((alpha+1)_n (beta+1)_n (2n+s+2))` times
/// `(n+s+2) P_n^{(alpha+1,beta+1)} P_n^{(alpha,beta)} - (n+s+1) P_{n+1}^{(alpha,beta)} P_{n-1}^{(alpha+1,beta+1)}`.
pub fn bound_cd(fam: &FamilyParams, n: usize) -> Result<Rational> {
    let ni = n as i64;
    match fam.family() {
        Family::Laguerre { alpha } => {
            let x = Rational::from(-1);
            let a1 = alpha + 1;
            let wronskian = laguerre_l(&a1, ni, &x) * laguerre_l(alpha, ni, &x)
                - laguerre_l(alpha, ni + 1, &x) * laguerre_l(&a1, ni - 1, &x);
            Ok(pochhammer(&a1, n) / factorial(n + 1) / wronskian)
        }
        Family::Jacobi { alpha, beta } => {
            let x = Rational::from(3);
            let s = alpha + beta;
            let (a1, b1) = (alpha + 1, beta + 1);
            let nr = Rational::from(n);
            let bracket = (&nr + &s + 2)
                * jacobi_p(&a1, &b1, ni, &x)
                * jacobi_p(alpha, beta, ni, &x)
                - (&nr + &s + 1)
                    * jacobi_p(alpha, beta, ni + 1, &x)
                    * jacobi_p(&a1, &b1, ni - 1, &x);
            let prefactor = factorial(n + 1) * pochhammer(&(&s + 2), n)
                / (pochhammer(&a1, n) * pochhammer(&b1, n) * (Rational::from(2 * n) + &s + 2));
            Ok((prefactor * bracket).recip())
        }
        _ => Err(Error::UnsupportedFamily {
            op: "bound_cd",
            family: fam.name(),
        }),
    }
}

/// `(sum_{m<=n} q^{m(m-1)} t^m / ((q;q)_m (t;q)_m))^{-1}` for the
/// `(t;q)_{j+k}` matrix, the form obtained by carrying the q-Laguerre bound
/// through `q -> 1/q`.
///
/// These terms are the squared orthonormal polynomials at `+1`, where the
/// rows of this matrix alternate in sign, so the value is *not* a certified
/// eigenvalue bound; compare [`super::bound_sum`], which evaluates at `-1`.
/// The partial sums do converge to `1/(t;q)_inf` (Cauchy's formula).
pub fn bound_qpoch(fam: &FamilyParams, n: usize) -> Result<Rational> {
    let Family::QPochHankel { q, t } = fam.family() else {
        return Err(Error::UnsupportedFamily {
            op: "bound_qpoch",
            family: fam.name(),
        });
    };
    let total: Rational = (0..=n)
        .map(|m| {
            let mi = m as i64;
            q.pow(mi * (mi - 1)) * t.pow(mi) / (q_pochhammer(q, q, m) * q_pochhammer(t, q, m))
        })
        .sum();
    Ok(total.recip())
}

/// `(t;q)_inf`, the limit of [`bound_qpoch`] as `n` grows.
pub fn bound_qpoch_limit(q: &Rational, t: &Rational, tol: f64) -> Result<FloatApprox> {
    if !(q.is_positive() && *q < 1) || !(t.is_positive() && *t < 1) {
        return Err(Error::domain("q and t must lie strictly between 0 and 1"));
    }
    q_pochhammer_infinite(t, q, tol)
}
