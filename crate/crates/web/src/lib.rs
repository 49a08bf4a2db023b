//! WebAssembly bindings for the browser demo in `www/`.
//!
//! Every export takes a family spec such as `laguerre:alpha=1/2` and returns
//! a JSON string; errors become JavaScript exceptions carrying the message.
//! The `*_json` functions hold the logic and are plain Rust so they can be
//! tested natively.

use hankel_core::asymptotics::asymptote_samples;
use hankel_core::hankel_engine::{
    bound_report, det_family_formula, det_oracle, det_theorem, inverse_theorem, moment_matrix,
};
use hankel_core::{FamilyParams, Rational, SymRationalMatrix};
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Largest order the exact pages accept; beyond it the page stalls.
pub const MAX_EXACT_N: usize = 14;
pub const MAX_ASYMPTOTE_N: usize = 20_000;
pub const MAX_QPOCH_ASYMPTOTE_N: usize = 200;

fn parse(family: &str) -> Result<FamilyParams, String> {
    family.trim().parse().map_err(|e: hankel_core::Error| e.to_string())
}

fn check_exact_n(n: usize) -> Result<(), String> {
    if n > MAX_EXACT_N {
        Err(format!("n must be at most {MAX_EXACT_N} in the browser"))
    } else {
        Ok(())
    }
}

#[derive(Serialize)]
struct BoundPoint {
    n: usize,
    bound: Rational,
    bound_log10: f64,
    lambda_min_log10: f64,
    certified: bool,
}

/// Certified bound and float smallest eigenvalue for `n = 0..=max_n`.
pub fn bound_curve_json(family: &str, max_n: usize) -> Result<String, String> {
    let fam = parse(family)?;
    check_exact_n(max_n)?;
    let points = (0..=max_n)
        .map(|n| {
            let rep = bound_report(&fam, n).map_err(|e| e.to_string())?;
            Ok(BoundPoint {
                n,
                bound_log10: hankel_core::exact_scalar::log_abs(&rep.bound) / std::f64::consts::LN_10,
                lambda_min_log10: rep.lambda_min_float.value.log10(),
                bound: rep.bound,
                certified: rep.certified,
            })
        })
        .collect::<Result<Vec<_>, String>>()?;
    Ok(serde_json::to_string(&points).expect("serializable"))
}

#[derive(Serialize)]
struct MatrixSummary {
    family: String,
    n: usize,
    moments: SymRationalMatrix,
    inverse: SymRationalMatrix,
    det_theorem: Rational,
    det_family: Rational,
    det_oracle: Rational,
    agree: bool,
    identity_check: bool,
}

/// Moment matrix, its inverse and the three determinants at order `n`.
pub fn matrix_summary_json(family: &str, n: usize) -> Result<String, String> {
    let fam = parse(family)?;
    check_exact_n(n)?;
    let g = moment_matrix(&fam, n);
    let inverse = inverse_theorem(&fam, n);
    let (t, f, o) = (det_theorem(&fam, n), det_family_formula(&fam, n), det_oracle(&g));
    let summary = MatrixSummary {
        family: fam.to_string(),
        n,
        identity_check: g.product_is_identity(&inverse),
        agree: t == f && f == o,
        moments: g,
        inverse,
        det_theorem: t,
        det_family: f,
        det_oracle: o,
    };
    Ok(serde_json::to_string(&summary).expect("serializable"))
}

/// `points` orders spread evenly over `1..=max_n`, compared with the
/// family's asymptote.
pub fn asymptote_curve_json(family: &str, max_n: usize, points: usize) -> Result<String, String> {
    let fam = parse(family)?;
    let cap = if fam.is_q_family() {
        MAX_QPOCH_ASYMPTOTE_N
    } else {
        MAX_ASYMPTOTE_N
    };
    if max_n == 0 || max_n > cap {
        return Err(format!("max_n must lie in 1..={cap} for this family"));
    }
    let points = points.clamp(2, 400).min(max_n);
    let mut ns: Vec<usize> = (0..points)
        .map(|i| 1 + i * (max_n - 1) / (points - 1).max(1))
        .collect();
    ns.dedup();
    let samples = asymptote_samples(&fam, &ns).map_err(|e| e.to_string())?;
    Ok(serde_json::to_string(&samples).expect("serializable"))
}

#[wasm_bindgen]
pub fn bound_curve(family: &str, max_n: usize) -> Result<String, JsError> {
    bound_curve_json(family, max_n).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn matrix_summary(family: &str, n: usize) -> Result<String, JsError> {
    matrix_summary_json(family, n).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn asymptote_curve(family: &str, max_n: usize, points: usize) -> Result<String, JsError> {
    asymptote_curve_json(family, max_n, points).map_err(|e| JsError::new(&e))
}
