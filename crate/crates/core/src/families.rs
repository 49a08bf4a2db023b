//! The orthogonal-polynomial families whose moment matrices are studied.
//!
//! Every family is described by its moment sequence and by the coefficient
//! rows of its orthonormal polynomials. A row is stored as a rational
//! radicand `r` and a rational vector `b` with `a_{n,k} = sqrt(r) * b_k`, so
//! that determinants, inverses and squared evaluations stay rational.
//!
//! The q-families use `t` in place of `q^(alpha+1)`; `q^alpha` is then
//! `t / q` and every formula is a rational function of `(q, t)`.
//!
//! Jacobi is handled in the shifted variable `y` on `[0, 1]` with moments
//! `(alpha+1)_n / (alpha+beta+2)_n`, i.e. the density
//! `y^alpha (1-y)^beta`. Its rows are the Jacobi polynomials
//! `P_n^{(beta,alpha)}(2y-1)` normalized, whose hypergeometric expansion in
//! `y` has `(alpha+1)_k` in the denominator.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact_scalar::{pochhammer, q_pochhammer, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Family {
    Laguerre { alpha: Rational },
    Jacobi { alpha: Rational, beta: Rational },
    /// The q-Laguerre moment matrix, `t = q^(alpha+1)`.
    QLaguerre { q: Rational, t: Rational },
    /// The `((t;q)_{j+k})` matrix obtained from q-Laguerre by `q -> 1/q`.
    QPochHankel { q: Rational, t: Rational },
}

/// A [`Family`] whose parameters have passed the domain checks.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FamilyParams(Family);

fn in_unit_interval(x: &Rational) -> bool {
    x.is_positive() && *x < 1
}

impl FamilyParams {
    pub fn new(family: Family) -> Result<Self> {
        let minus_one = Rational::from(-1);
        match &family {
            Family::Laguerre { alpha } => {
                if *alpha <= minus_one {
                    return Err(Error::domain("alpha must exceed -1"));
                }
            }
            Family::Jacobi { alpha, beta } => {
                if *alpha <= minus_one {
                    return Err(Error::domain("alpha must exceed -1"));
                }
                if *beta <= minus_one {
                    return Err(Error::domain("beta must exceed -1"));
                }
            }
            Family::QLaguerre { q, t } | Family::QPochHankel { q, t } => {
                if !in_unit_interval(q) {
                    return Err(Error::domain("q must lie strictly between 0 and 1"));
                }
                if !in_unit_interval(t) {
                    return Err(Error::domain("t must lie strictly between 0 and 1"));
                }
            }
        }
        Ok(FamilyParams(family))
    }

    pub fn laguerre(alpha: Rational) -> Result<Self> {
        Self::new(Family::Laguerre { alpha })
    }

    pub fn jacobi(alpha: Rational, beta: Rational) -> Result<Self> {
        Self::new(Family::Jacobi { alpha, beta })
    }

    pub fn q_laguerre(q: Rational, t: Rational) -> Result<Self> {
        Self::new(Family::QLaguerre { q, t })
    }

    pub fn q_poch_hankel(q: Rational, t: Rational) -> Result<Self> {
        Self::new(Family::QPochHankel { q, t })
    }

    pub fn family(&self) -> &Family {
        &self.0
    }

    pub fn name(&self) -> &'static str {
        match self.0 {
            Family::Laguerre { .. } => "laguerre",
            Family::Jacobi { .. } => "jacobi",
            Family::QLaguerre { .. } => "qlaguerre",
            Family::QPochHankel { .. } => "qpoch",
        }
    }

    pub fn is_q_family(&self) -> bool {
        matches!(self.0, Family::QLaguerre { .. } | Family::QPochHankel { .. })
    }
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Family::Laguerre { alpha } => write!(f, "laguerre:alpha={alpha}"),
            Family::Jacobi { alpha, beta } => write!(f, "jacobi:alpha={alpha},beta={beta}"),
            Family::QLaguerre { q, t } => write!(f, "qlaguerre:q={q},t={t}"),
            Family::QPochHankel { q, t } => write!(f, "qpoch:q={q},t={t}"),
        }
    }
}

impl FromStr for FamilyParams {
    type Err = Error;

    /// Parses `laguerre:alpha=1/2`, `jacobi:alpha=0,beta=0`,
    /// `qlaguerre:q=1/2,t=1/2` or `qpoch:q=1/2,t=1/2`.
    fn from_str(s: &str) -> Result<Self> {
        let parse_err = |reason: String| Error::Parse {
            what: "family spec",
            input: s.to_string(),
            reason,
        };
        let (name, rest) = s
            .trim()
            .split_once(':')
            .ok_or_else(|| parse_err("expected <family>:<key>=<value>,...".into()))?;
        let mut pairs = Vec::new();
        for item in rest.split(',').filter(|p| !p.trim().is_empty()) {
            let (k, v) = item
                .split_once('=')
                .ok_or_else(|| parse_err(format!("missing '=' in {item:?}")))?;
            pairs.push((k.trim().to_string(), v.trim().parse::<Rational>()?));
        }
        let mut take = |key: &str| -> Result<Rational> {
            let idx = pairs
                .iter()
                .position(|(k, _)| k == key)
                .ok_or_else(|| parse_err(format!("missing parameter {key}")))?;
            Ok(pairs.remove(idx).1)
        };
        let family = match name.trim() {
            "laguerre" => Family::Laguerre {
                alpha: take("alpha")?,
            },
            "jacobi" => Family::Jacobi {
                alpha: take("alpha")?,
                beta: take("beta")?,
            },
            "qlaguerre" => Family::QLaguerre {
                q: take("q")?,
                t: take("t")?,
            },
            "qpoch" => Family::QPochHankel {
                q: take("q")?,
                t: take("t")?,
            },
            other => return Err(parse_err(format!("unknown family {other:?}"))),
        };
        if let Some((k, _)) = pairs.first() {
            return Err(parse_err(format!("unexpected parameter {k}")));
        }
        FamilyParams::new(family)
    }
}

impl Serialize for FamilyParams {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for FamilyParams {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// One orthonormal polynomial, `p_n(x) = sqrt(r) * sum_k b_k x^k`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CoeffRow {
    pub n: usize,
    pub r: Rational,
    pub b: Vec<Rational>,
}

impl CoeffRow {
    /// `a_{n,n}^2`, the squared leading coefficient.
    pub fn leading_sq(&self) -> Rational {
        let lead = &self.b[self.n];
        &self.r * lead * lead
    }

    /// `sum_k b_k x^k`, i.e. `p_n(x) / sqrt(r)`.
    pub fn reduced_value(&self, x: &Rational) -> Rational {
        self.b
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// `p_n(x)^2`, exact.
    pub fn value_sq(&self, x: &Rational) -> Rational {
        let v = self.reduced_value(x);
        &self.r * &v * &v
    }

    /// True when the nonzero `b_k z^k` share one sign.
    pub fn same_sign_at(&self, z: &Rational) -> bool {
        let mut seen_pos = false;
        let mut seen_neg = false;
        let mut zk = Rational::one();
        for c in &self.b {
            let term = c * &zk;
            seen_pos |= term.is_positive();
            seen_neg |= term.is_negative();
            zk *= z;
        }
        !(seen_pos && seen_neg)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EvalData {
    pub n: usize,
    pub p_sq: Rational,
}

fn parity_sign(n: usize) -> Rational {
    if n.is_multiple_of(2) {
        Rational::one()
    } else {
        Rational::from(-1)
    }
}

fn factorial(n: usize) -> Rational {
    pochhammer(&Rational::one(), n)
}

/// The z0 at which the same-sign condition is checked, in each family's
/// natural variable.
pub fn sign_point() -> Rational {
    Rational::from(-1)
}

pub fn moment(fam: &FamilyParams, n: usize) -> Rational {
    match fam.family() {
        Family::Laguerre { alpha } => pochhammer(&(alpha + 1), n),
        Family::Jacobi { alpha, beta } => {
            pochhammer(&(alpha + 1), n) / pochhammer(&(alpha + beta + 2), n)
        }
        Family::QLaguerre { q, t } => {
            let tri = (n * (n + 1) / 2) as i64;
            q_pochhammer(t, q, n) * q.pow(n as i64 - tri) * t.pow(-(n as i64))
        }
        Family::QPochHankel { q, t } => q_pochhammer(t, q, n),
    }
}

/// `mu_0 .. mu_{count-1}`, computed incrementally.
pub fn moments(fam: &FamilyParams, count: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(count);
    if count == 0 {
        return out;
    }
    let mut mu = Rational::one();
    out.push(mu.clone());
    for n in 0..count - 1 {
        // mu_{n+1} / mu_n
        let ratio = match fam.family() {
            Family::Laguerre { alpha } => alpha + Rational::from(n + 1),
            Family::Jacobi { alpha, beta } => {
                (alpha + Rational::from(n + 1)) / (alpha + beta + Rational::from(n + 2))
            }
            Family::QLaguerre { q, t } => {
                (Rational::one() - t * q.pow(n as i64)) * q.pow(-(n as i64)) / t
            }
            Family::QPochHankel { q, t } => Rational::one() - t * q.pow(n as i64),
        };
        mu *= ratio;
        out.push(mu.clone());
    }
    out
}

fn radicand(fam: &FamilyParams, n: usize) -> Rational {
    let nq = n as i64;
    match fam.family() {
        Family::Laguerre { alpha } => pochhammer(&(alpha + 1), n) / factorial(n),
        Family::Jacobi { alpha, beta } => {
            if n == 0 {
                return Rational::one();
            }
            // (s+1)_n / (s+1) written as (s+2)_{n-1}, finite at s = -1
            let s = alpha + beta;
            (Rational::from(2 * n) + &s + 1)
                * pochhammer(&(alpha + 1), n)
                * pochhammer(&(&s + 2), n - 1)
                / (pochhammer(&(beta + 1), n) * factorial(n))
        }
        Family::QLaguerre { q, t } => q_pochhammer(t, q, n) * q.pow(nq) / q_pochhammer(q, q, n),
        Family::QPochHankel { q, t } => {
            q_pochhammer(t, q, n) / (q_pochhammer(q, q, n) * t.pow(nq))
        }
    }
}

/// `b_{k+1} / b_k` in row `n`.
fn coeff_ratio(fam: &FamilyParams, n: usize, k: usize) -> Rational {
    let kk = Rational::from(k);
    let k_minus_n = Rational::from(k as i64 - n as i64);
    match fam.family() {
        Family::Laguerre { alpha } => k_minus_n / ((alpha + &kk + 1) * (&kk + 1)),
        Family::Jacobi { alpha, beta } => {
            k_minus_n * (alpha + beta + Rational::from(n + k + 1))
                / ((alpha + &kk + 1) * (&kk + 1))
        }
        Family::QLaguerre { q, t } => {
            let one = Rational::one();
            (&one - q.pow(k as i64 - n as i64)) * q.pow((k + n) as i64) * t
                / ((&one - q.pow(k as i64 + 1)) * (&one - t * q.pow(k as i64)))
        }
        Family::QPochHankel { q, t } => {
            let one = Rational::one();
            (&one - q.pow(k as i64 - n as i64)) * q
                / ((&one - q.pow(k as i64 + 1)) * (&one - t * q.pow(k as i64)))
        }
    }
}

pub fn coeff_row(fam: &FamilyParams, n: usize) -> CoeffRow {
    let mut b = Vec::with_capacity(n + 1);
    let mut c = parity_sign(n);
    b.push(c.clone());
    for k in 0..n {
        c *= coeff_ratio(fam, n, k);
        b.push(c.clone());
    }
    CoeffRow {
        n,
        r: radicand(fam, n),
        b,
    }
}

/// `p_n(-1)^2` together with the sign condition for row `n`, without
/// materialising the row.
///
/// With `b_0 = (-1)^n` the terms `b_k (-1)^k` are the partial products of
/// `-b_{k+1}/b_k`, so the row has one sign at -1 iff every ratio is `<= 0`.
/// The sum is accumulated by Horner's rule on unreduced integer fractions
/// and reduced once at the end.
pub(crate) fn eval_at_sign_point(fam: &FamilyParams, n: usize) -> (Rational, bool) {
    let mut same_sign = true;
    let steps: Vec<Rational> = (0..n)
        .map(|k| {
            let step = -coeff_ratio(fam, n, k);
            same_sign &= !step.is_negative();
            step
        })
        .collect();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for step in steps.iter().rev() {
        num = &den * step.denom() + step.numer() * &num;
        den *= step.denom();
    }
    let sum = Rational::new(num, den).expect("denominators are nonzero");
    (radicand(fam, n) * &sum * &sum, same_sign)
}

pub fn coeff_rows(fam: &FamilyParams, n: usize) -> Vec<CoeffRow> {
    (0..=n).map(|m| coeff_row(fam, m)).collect()
}

/// `p_n(-1)^2` in the family's natural variable.
pub fn eval_sq(fam: &FamilyParams, n: usize) -> EvalData {
    EvalData {
        n,
        p_sq: eval_at_sign_point(fam, n).0,
    }
}

/// Closed form of the squared q-Laguerre orthonormal polynomial at -1,
/// `q^m / ((q;q)_m (t;q)_m)`.
pub fn eval_sq_closed_qlaguerre(q: &Rational, t: &Rational, m: usize) -> Rational {
    q.pow(m as i64) / (q_pochhammer(q, q, m) * q_pochhammer(t, q, m))
}

pub fn check_sign_condition(fam: &FamilyParams, n: usize) -> bool {
    (0..=n).all(|m| eval_at_sign_point(fam, m).1)
}

/// Index of the first row violating the sign condition, if any.
pub fn first_sign_violation(rows: &[CoeffRow]) -> Option<usize> {
    let z = sign_point();
    rows.iter().position(|row| !row.same_sign_at(&z))
}

/// Classical Laguerre polynomial `L_n^{(alpha)}(x)`, with `L_{-1} = 0`.
pub fn laguerre_l(alpha: &Rational, n: i64, x: &Rational) -> Rational {
    if n < 0 {
        return Rational::zero();
    }
    let n = n as usize;
    let a1 = alpha + 1;
    let mut term = Rational::one();
    let mut sum = Rational::one();
    for k in 0..n {
        let kk = Rational::from(k);
        term *= Rational::from(k as i64 - n as i64) * x / ((&a1 + &kk) * (&kk + 1));
        sum += &term;
    }
    pochhammer(&a1, n) / factorial(n) * sum
}

/// Classical Jacobi polynomial `P_n^{(a,b)}(x)` on `[-1, 1]`, with `P_{-1} = 0`.
pub fn jacobi_p(a: &Rational, b: &Rational, n: i64, x: &Rational) -> Rational {
    if n < 0 {
        return Rational::zero();
    }
    let n = n as usize;
    let z = (Rational::one() - x) / 2;
    let a1 = a + 1;
    let c = a + b + Rational::from(n + 1);
    let mut term = Rational::one();
    let mut sum = Rational::one();
    for k in 0..n {
        let kk = Rational::from(k);
        term *= Rational::from(k as i64 - n as i64) * (&c + &kk) * &z / ((&a1 + &kk) * (&kk + 1));
        sum += &term;
    }
    pochhammer(&a1, n) / factorial(n) * sum
}

/// Squared norm of `P_n^{(alpha,beta)}` for the probability-normalized
/// weight; symmetric in `alpha, beta`.
pub fn jacobi_h(alpha: &Rational, beta: &Rational, n: usize) -> Rational {
    if n == 0 {
        return Rational::one();
    }
    let s = alpha + beta;
    pochhammer(&(alpha + 1), n) * pochhammer(&(beta + 1), n)
        / ((Rational::from(2 * n) + &s + 1) * factorial(n) * pochhammer(&(&s + 2), n - 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::frac(n, d)
    }

    fn lag(a: Rational) -> FamilyParams {
        FamilyParams::laguerre(a).unwrap()
    }

    fn jac(a: Rational, b: Rational) -> FamilyParams {
        FamilyParams::jacobi(a, b).unwrap()
    }

    fn ql(q: Rational, t: Rational) -> FamilyParams {
        FamilyParams::q_laguerre(q, t).unwrap()
    }

    fn qp(q: Rational, t: Rational) -> FamilyParams {
        FamilyParams::q_poch_hankel(q, t).unwrap()
    }

    fn all_samples() -> Vec<FamilyParams> {
        vec![
            lag(Rational::zero()),
            lag(r(-1, 2)),
            jac(Rational::zero(), Rational::zero()),
            jac(r(-1, 2), r(-1, 2)),
            jac(Rational::one(), Rational::zero()),
            ql(r(1, 2), r(1, 2)),
            qp(r(1, 3), r(1, 4)),
        ]
    }

    #[test]
    fn horner_path_matches_materialised_rows() {
        let z = sign_point();
        for fam in all_samples() {
            for n in 0..=7 {
                let row = coeff_row(&fam, n);
                let (p_sq, same) = eval_at_sign_point(&fam, n);
                assert_eq!(p_sq, row.value_sq(&z), "{fam} n={n}");
                assert_eq!(same, row.same_sign_at(&z), "{fam} n={n}");
            }
        }
        let row = coeff_row(&qp(r(1, 2), r(1, 2)), 2);
        assert!(!row.same_sign_at(&Rational::one()));
    }

    #[test]
    fn moment_examples() {
        assert_eq!(moment(&lag(Rational::zero()), 3), Rational::from(6));
        assert_eq!(moment(&jac(Rational::zero(), Rational::zero()), 2), r(1, 3));
        assert_eq!(moment(&ql(r(1, 2), r(1, 2)), 2), Rational::from(3));
        assert_eq!(moment(&qp(r(1, 2), r(1, 2)), 2), r(3, 8));
    }

    #[test]
    fn moments_incremental_matches_direct() {
        for fam in all_samples() {
            let inc = moments(&fam, 9);
            for (n, mu) in inc.iter().enumerate() {
                assert_eq!(*mu, moment(&fam, n), "{fam} n={n}");
            }
            assert_eq!(inc[0], Rational::one());
        }
    }

    #[test]
    fn coeff_row_examples() {
        let row = coeff_row(&lag(Rational::zero()), 1);
        assert_eq!(row.r, Rational::one());
        assert_eq!(row.b, vec![Rational::from(-1), Rational::one()]);

        let row = coeff_row(&jac(Rational::zero(), Rational::zero()), 1);
        assert_eq!(row.r, Rational::from(3));
        assert_eq!(row.b, vec![Rational::from(-1), Rational::from(2)]);

        for fam in all_samples() {
            assert_eq!(coeff_row(&fam, 0).leading_sq(), Rational::one());
        }
    }

    #[test]
    fn jacobi_row_is_normalized_against_moments() {
        // int p_1^2 dmu = 1 computed from the moments directly
        for fam in [jac(Rational::one(), Rational::zero()), jac(r(1, 2), r(-1, 2))] {
            let mu = moments(&fam, 3);
            let row = coeff_row(&fam, 1);
            let (b0, b1) = (&row.b[0], &row.b[1]);
            let norm = &row.r * (b0 * b0 * &mu[0] + Rational::from(2) * b0 * b1 * &mu[1] + b1 * b1 * &mu[2]);
            assert_eq!(norm, Rational::one(), "{fam}");
        }
    }

    #[test]
    fn coeff_row_matches_direct_qlaguerre_formula() {
        let (q, t) = (r(1, 3), r(1, 2));
        let fam = ql(q.clone(), t.clone());
        for n in 0..6usize {
            let row = coeff_row(&fam, n);
            for k in 0..=n {
                let direct = parity_sign(n)
                    * q_pochhammer(&q.pow(-(n as i64)), &q, k)
                    * q.pow((k * (k + 1) / 2) as i64)
                    * t.pow(k as i64)
                    * q.pow((n as i64 - 1) * k as i64)
                    / (q_pochhammer(&q, &q, k) * q_pochhammer(&t, &q, k));
                assert_eq!(row.b[k], direct, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn eval_sq_examples() {
        assert_eq!(eval_sq(&lag(Rational::zero()), 1).p_sq, Rational::from(4));
        for fam in all_samples() {
            assert_eq!(eval_sq(&fam, 0).p_sq, Rational::one());
        }
        assert_eq!(eval_sq(&ql(r(1, 2), r(1, 2)), 2).p_sq, r(16, 9));
        assert_eq!(eval_sq(&qp(r(1, 2), r(1, 2)), 1).p_sq, Rational::from(18));
    }

    #[test]
    fn closed_qlaguerre_examples() {
        let h = r(1, 2);
        assert_eq!(eval_sq_closed_qlaguerre(&h, &h, 0), Rational::one());
        assert_eq!(eval_sq_closed_qlaguerre(&h, &h, 1), Rational::from(2));
        assert_eq!(eval_sq_closed_qlaguerre(&h, &h, 2), r(16, 9));
    }

    #[test]
    fn closed_qlaguerre_matches_expansion() {
        for (q, t) in [(r(1, 2), r(1, 2)), (r(3, 4), r(1, 4)), (r(1, 3), r(1, 2))] {
            let fam = ql(q.clone(), t.clone());
            for m in 0..=12 {
                assert_eq!(eval_sq(&fam, m).p_sq, eval_sq_closed_qlaguerre(&q, &t, m));
            }
        }
    }

    #[test]
    fn sign_condition_holds() {
        for fam in all_samples() {
            assert!(check_sign_condition(&fam, 12), "{fam}");
        }
        assert!(check_sign_condition(&lag(Rational::zero()), 20));
        assert!(check_sign_condition(&jac(Rational::zero(), Rational::zero()), 20));
    }

    #[test]
    fn sign_condition_fails_at_plus_one_for_qpoch() {
        let row = coeff_row(&qp(r(1, 2), r(1, 2)), 2);
        assert!(!row.same_sign_at(&Rational::one()));
        assert!(row.same_sign_at(&Rational::from(-1)));
    }

    #[test]
    fn jacobi_reflection() {
        // p_n(y=-1)^2 = P_n^{(alpha,beta)}(3)^2 / h_n = P_n^{(beta,alpha)}(-3)^2 / h_n
        let three = Rational::from(3);
        for (a, b) in [(Rational::zero(), r(1, 2)), (r(-1, 2), r(-1, 2)), (r(1, 2), r(-1, 2))] {
            let fam = jac(a.clone(), b.clone());
            for n in 0..=8usize {
                let p = jacobi_p(&a, &b, n as i64, &three);
                let reflected = jacobi_p(&b, &a, n as i64, &(-&three));
                assert_eq!(p.abs(), reflected.abs());
                let want = &p * &p / jacobi_h(&a, &b, n);
                assert_eq!(eval_sq(&fam, n).p_sq, want, "{fam} n={n}");
            }
        }
    }

    #[test]
    fn laguerre_values() {
        let zero = Rational::zero();
        let m1 = Rational::from(-1);
        assert_eq!(laguerre_l(&zero, -1, &m1), zero);
        assert_eq!(laguerre_l(&zero, 0, &m1), Rational::one());
        assert_eq!(laguerre_l(&zero, 1, &m1), Rational::from(2));
        assert_eq!(laguerre_l(&zero, 2, &m1), r(7, 2));
        assert_eq!(laguerre_l(&Rational::one(), 1, &m1), Rational::from(3));
    }

    #[test]
    fn parse_and_display() {
        for s in [
            "laguerre:alpha=1/2",
            "jacobi:alpha=0,beta=0",
            "qlaguerre:q=1/2,t=1/2",
            "qpoch:q=1/2,t=1/2",
        ] {
            let fam: FamilyParams = s.parse().unwrap();
            assert_eq!(fam.to_string(), s);
        }
        let err = "laguerre:alpha=-2".parse::<FamilyParams>().unwrap_err();
        assert_eq!(err.to_string(), "alpha must exceed -1");
        assert!("laguerre:alpha=-1".parse::<FamilyParams>().is_err());
        assert!("jacobi:alpha=0,beta=-1".parse::<FamilyParams>().is_err());
        assert!("qlaguerre:q=1,t=1/2".parse::<FamilyParams>().is_err());
        assert!("qpoch:q=1/2,t=0".parse::<FamilyParams>().is_err());
        assert!("hermite:alpha=0".parse::<FamilyParams>().is_err());
        assert!("laguerre:alpha=0,beta=1".parse::<FamilyParams>().is_err());
        assert!("laguerre".parse::<FamilyParams>().is_err());
    }
}
