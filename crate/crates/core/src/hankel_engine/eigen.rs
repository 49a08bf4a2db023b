use super::inverse_theorem;
use crate::error::{Error, Result};
use crate::exact_scalar::FloatApprox;
use crate::families::FamilyParams;

pub const DEFAULT_EIG_TOL: f64 = 1e-13;
pub const DEFAULT_EIG_MAX_ITER: usize = 200_000;

/// Float estimate of `lambda_min(G_n)` as `1 / lambda_max(G_n^{-1})`.
///
/// Power iteration runs on the float image of the exact inverse and stops
/// once successive Rayleigh quotients agree to `tol` relative. The result is
/// heuristic; [`super::certify_bound`] gives the rigorous statement.
pub fn smallest_eig_float(
    fam: &FamilyParams,
    n: usize,
    tol: f64,
    max_iter: usize,
) -> Result<FloatApprox> {
    let a = inverse_theorem(fam, n).to_f64();
    let rho = largest_eigenvalue(&a, tol, max_iter)?;
    Ok(FloatApprox::heuristic(1.0 / rho))
}

fn largest_eigenvalue(a: &[Vec<f64>], tol: f64, max_iter: usize) -> Result<f64> {
    let m = a.len();
    // The top eigenvector of a moment-matrix inverse alternates in sign.
    let mut v: Vec<f64> = (0..m)
        .map(|i| {
            let s = if i % 2 == 0 { 1.0 } else { -1.0 };
            s * (1.0 + 0.1 * i as f64)
        })
        .collect();
    normalize(&mut v);
    let mut prev: Option<f64> = None;
    for _ in 0..max_iter {
        let w: Vec<f64> = a
            .iter()
            .map(|row| row.iter().zip(&v).map(|(x, y)| x * y).sum())
            .collect();
        let rho: f64 = v.iter().zip(&w).map(|(x, y)| x * y).sum();
        if let Some(p) = prev {
            if (rho - p).abs() <= tol * rho.abs() {
                return Ok(rho);
            }
        }
        prev = Some(rho);
        v = w;
        normalize(&mut v);
    }
    Err(Error::ConvergenceFailure {
        iterations: max_iter,
    })
}

fn normalize(v: &mut [f64]) {
    let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    if norm > 0.0 {
        v.iter_mut().for_each(|x| *x /= norm);
    }
}
