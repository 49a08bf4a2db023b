//! Large-`n` behaviour of the eigenvalue bounds, evaluated in floating point
//! on a log scale.
//!
//! Laguerre and Jacobi use the orthonormal three-term recurrence at the
//! evaluation point. There the polynomials alternate in sign and grow, so
//! the recurrence has no cancellation; only overflow is an issue, handled by
//! rescaling with powers of two.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact_scalar::{log_abs, q_pochhammer_infinite, Rational};
use crate::families::{Family, FamilyParams};
use crate::hankel_engine::{bound_qpoch, bound_qpoch_limit};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AsymptoteSample {
    pub n: usize,
    pub bound_log: f64,
    pub asymptote_log: f64,
    pub ratio: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gap: Option<f64>,
}

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

/// `ln Gamma(x)` for `x > 0` (Lanczos, g = 7, nine terms).
pub fn ln_gamma(x: f64) -> f64 {
    if x < 0.5 {
        // reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
        let pi = std::f64::consts::PI;
        return (pi / (pi * x).sin()).ln() - ln_gamma(1.0 - x);
    }
    let x = x - 1.0;
    let mut acc = LANCZOS[0];
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        acc += c / (x + i as f64);
    }
    let t = x + LANCZOS_G + 0.5;
    0.5 * (2.0 * std::f64::consts::PI).ln() + (x + 0.5) * t.ln() - t + acc.ln()
}

const RESCALE_BITS: i32 = 250;

/// `-ln sum_{j<=m} p_j(x)^2` for `m = 0..=n`, where
/// `x p_k = a(k+1) p_{k+1} + b(k) p_k + a(k) p_{k-1}` and `p_0 = 1`.
fn recurrence_bound_logs(
    x: f64,
    n: usize,
    a: impl Fn(usize) -> f64,
    b: impl Fn(usize) -> f64,
) -> Vec<f64> {
    let up = 2f64.powi(RESCALE_BITS);
    let down = 2f64.powi(-RESCALE_BITS);
    let step_log = 2.0 * RESCALE_BITS as f64 * std::f64::consts::LN_2;

    let mut out = Vec::with_capacity(n + 1);
    let (mut prev, mut cur) = (0.0f64, 1.0f64);
    let mut sum = 1.0f64;
    let mut offset = 0.0f64;
    out.push(0.0);
    for k in 0..n {
        let ak = if k == 0 { 0.0 } else { a(k) };
        let next = ((x - b(k)) * cur - ak * prev) / a(k + 1);
        prev = cur;
        cur = next;
        sum += cur * cur;
        if cur.abs() > up {
            prev *= down;
            cur *= down;
            sum *= down * down;
            offset += step_log;
        }
        out.push(-(sum.ln() + offset));
    }
    out
}

fn laguerre_bound_logs(alpha: f64, n: usize) -> Result<Vec<f64>> {
    if alpha.is_nan() || alpha <= -1.0 {
        return Err(Error::domain("alpha must exceed -1"));
    }
    Ok(recurrence_bound_logs(
        -1.0,
        n,
        |k| ((k as f64) * (k as f64 + alpha)).sqrt(),
        |k| 2.0 * k as f64 + alpha + 1.0,
    ))
}

/// Natural log of the Laguerre eigenvalue bound at order `n`.
pub fn bound_log_laguerre(alpha: f64, n: usize) -> Result<f64> {
    Ok(laguerre_bound_logs(alpha, n)?[n])
}

/// `ln(8 pi e) - ln Gamma(alpha+1) - 4 sqrt(n)`.
pub fn laguerre_asymptote_log(alpha: f64, n: usize) -> Result<f64> {
    if alpha.is_nan() || alpha <= -1.0 {
        return Err(Error::domain("alpha must exceed -1"));
    }
    let c = (8.0 * std::f64::consts::PI * std::f64::consts::E).ln();
    Ok(c - ln_gamma(alpha + 1.0) - 4.0 * (n as f64).sqrt())
}

/// Bound logs for the Jacobi moment matrix, `m = 0..=n`.
///
/// The density `y^alpha (1-y)^beta` on `[0,1]` becomes the Jacobi weight
/// with parameters `(beta, alpha)` in `x = 2y - 1`; `y = -1` is `x = -3`.
pub fn jacobi_bound_logs(alpha: f64, beta: f64, n: usize) -> Result<Vec<f64>> {
    if alpha.is_nan() || alpha <= -1.0 {
        return Err(Error::domain("alpha must exceed -1"));
    }
    if beta.is_nan() || beta <= -1.0 {
        return Err(Error::domain("beta must exceed -1"));
    }
    let (pa, pb) = (beta, alpha);
    let s = pa + pb;
    let off_diag = move |k: usize| {
        let k = k as f64;
        if k == 1.0 {
            return (4.0 * (1.0 + pa) * (1.0 + pb) / ((s + 2.0).powi(2) * (s + 3.0))).sqrt();
        }
        let d = 2.0 * k + s;
        (4.0 * k * (k + pa) * (k + pb) * (k + s) / (d * d * (d + 1.0) * (d - 1.0))).sqrt()
    };
    let diag = move |k: usize| {
        if k == 0 {
            return (pb - pa) / (s + 2.0);
        }
        let d = 2.0 * k as f64 + s;
        (pb * pb - pa * pa) / (d * (d + 2.0))
    };
    Ok(recurrence_bound_logs(-3.0, n, off_diag, diag))
}

/// `bound(n) / bound(n-1)` for the Jacobi family; tends to `(3+2 sqrt 2)^{-2}`.
pub fn jacobi_decay_ratio(alpha: f64, beta: f64, n: usize) -> Result<f64> {
    if n == 0 {
        return Err(Error::domain("decay ratio needs n >= 1"));
    }
    let logs = jacobi_bound_logs(alpha, beta, n)?;
    Ok((logs[n] - logs[n - 1]).exp())
}

/// `(3 + 2 sqrt 2)^{-2} = 1 / (17 + 12 sqrt 2)`.
pub fn jacobi_decay_limit() -> f64 {
    1.0 / (17.0 + 12.0 * 2f64.sqrt())
}

/// `bound_qpoch(n) - (t;q)_inf` in floating point.
pub fn qlaguerre_limit_gap(q: &Rational, t: &Rational, n: usize) -> Result<f64> {
    let fam = FamilyParams::q_poch_hankel(q.clone(), t.clone())?;
    let limit = bound_qpoch_limit(q, t, 1e-14)?;
    Ok(bound_qpoch(&fam, n)?.to_f64() - limit.value)
}

fn log_sum_exp(acc: f64, x: f64) -> f64 {
    if acc == f64::NEG_INFINITY {
        return x;
    }
    let (hi, lo) = if acc > x { (acc, x) } else { (x, acc) };
    hi + (lo - hi).exp().ln_1p()
}

/// `ln(1 - x)` for `0 <= x < 1`.
fn ln_one_minus(x: f64) -> f64 {
    (-x).ln_1p()
}

/// Float log-domain evaluation of `ln(bound_sum(fam, n))`, computed
/// without any exact arithmetic.
pub fn bound_log_float(fam: &FamilyParams, n: usize) -> Result<f64> {
    match fam.family() {
        Family::Laguerre { alpha } => bound_log_laguerre(alpha.to_f64(), n),
        Family::Jacobi { alpha, beta } => Ok(jacobi_bound_logs(alpha.to_f64(), beta.to_f64(), n)?[n]),
        Family::QLaguerre { q, t } => {
            // terms q^m / ((q;q)_m (t;q)_m), all positive
            let (q, t) = (q.to_f64(), t.to_f64());
            let (lq, mut term, mut total) = (q.ln(), 0.0f64, 0.0f64);
            let mut qm = 1.0;
            for _ in 0..n {
                let tq = t * qm;
                qm *= q;
                term += lq - ln_one_minus(qm) - ln_one_minus(tq);
                total = log_sum_exp(total, term);
            }
            Ok(-total)
        }
        Family::QPochHankel { q, t } => {
            // p_m(-1)^2 = r_m (sum_k |b_{m,k}|)^2 with
            // r_m = (t;q)_m / ((q;q)_m t^m),
            // |b_{m,k+1}| / |b_{m,k}| = (q^{k-m} - 1) q / ((1 - q^{k+1})(1 - t q^k))
            let (q, t) = (q.to_f64(), t.to_f64());
            let (lq, lt, l_inv_q) = (q.ln(), t.ln(), -q.ln());
            let mut total = 0.0f64;
            let mut log_r = 0.0f64;
            for m in 1..=n {
                let j = (m - 1) as i32;
                log_r += ln_one_minus(t * q.powi(j)) - ln_one_minus(q.powi(j + 1)) - lt;
                let mut log_b = 0.0f64;
                let mut row = 0.0f64;
                for k in 0..m {
                    let gap = (m - k) as i32;
                    log_b += gap as f64 * l_inv_q + ln_one_minus(q.powi(gap)) + lq
                        - ln_one_minus(q.powi(k as i32 + 1))
                        - ln_one_minus(t * q.powi(k as i32));
                    row = log_sum_exp(row, log_b);
                }
                total = log_sum_exp(total, log_r + 2.0 * row);
            }
            Ok(-total)
        }
    }
}

/// Comparison table of bound against its asymptote.
///
/// * Laguerre: `(8 pi e / Gamma(alpha+1)) e^{-4 sqrt n}`.
/// * Jacobi: the previous bound times `(3+2 sqrt 2)^{-2}`; `n >= 1`.
/// * `qpoch`: the constant `(t;q)_inf`; rows also carry the gap.
pub fn asymptote_samples(fam: &FamilyParams, ns: &[usize]) -> Result<Vec<AsymptoteSample>> {
    let n_max = ns.iter().copied().max().unwrap_or(0);
    let sample = |n: usize, bound_log: f64, asymptote_log: f64, gap: Option<f64>| AsymptoteSample {
        n,
        bound_log,
        asymptote_log,
        ratio: (bound_log - asymptote_log).exp(),
        gap,
    };
    match fam.family() {
        Family::Laguerre { alpha } => {
            let a = alpha.to_f64();
            let logs = laguerre_bound_logs(a, n_max)?;
            ns.iter()
                .map(|&n| Ok(sample(n, logs[n], laguerre_asymptote_log(a, n)?, None)))
                .collect()
        }
        Family::Jacobi { alpha, beta } => {
            if ns.contains(&0) {
                return Err(Error::domain("the Jacobi decay comparison needs n >= 1"));
            }
            let logs = jacobi_bound_logs(alpha.to_f64(), beta.to_f64(), n_max)?;
            let step = jacobi_decay_limit().ln();
            Ok(ns
                .iter()
                .map(|&n| sample(n, logs[n], logs[n - 1] + step, None))
                .collect())
        }
        Family::QPochHankel { q, t } => {
            let limit = q_pochhammer_infinite(t, q, 1e-14)?.value;
            ns.iter()
                .map(|&n| {
                    let b = bound_qpoch(fam, n)?;
                    Ok(sample(n, log_abs(&b), limit.ln(), Some(b.to_f64() - limit)))
                })
                .collect()
        }
        Family::QLaguerre { .. } => Err(Error::UnsupportedFamily {
            op: "asymptote",
            family: fam.name(),
        }),
    }
}
