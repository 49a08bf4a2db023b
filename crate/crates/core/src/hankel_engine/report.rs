use serde::{Serialize, Serializer};

use super::{
    bound_cd, bound_sum, certify_bound, moment_matrix, smallest_eig_float, DEFAULT_EIG_MAX_ITER,
    DEFAULT_EIG_TOL,
};
use crate::error::Result;
use crate::exact_scalar::{FloatApprox, Rational};
use crate::families::{check_sign_condition, Family, FamilyParams};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub n: usize,
    pub bound: Rational,
    /// `None` for families without a Christoffel-Darboux closed form;
    /// serialized as `"not available"`.
    #[serde(serialize_with = "cd_or_unavailable")]
    pub bound_cd: Option<Rational>,
    pub lambda_min_float: FloatApprox,
    pub certified: bool,
    pub sign_condition_ok: bool,
}

fn cd_or_unavailable<S: Serializer>(v: &Option<Rational>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(r) => r.serialize(s),
        None => s.serialize_str("not available"),
    }
}

pub fn bound_report(fam: &FamilyParams, n: usize) -> Result<BoundReport> {
    let sign_condition_ok = check_sign_condition(fam, n);
    let bound = bound_sum(fam, n)?;
    let bound_cd = match fam.family() {
        Family::Laguerre { .. } | Family::Jacobi { .. } => Some(bound_cd(fam, n)?),
        _ => None,
    };
    let lambda_min_float = smallest_eig_float(fam, n, DEFAULT_EIG_TOL, DEFAULT_EIG_MAX_ITER)?;
    let certified = certify_bound(&moment_matrix(fam, n), &bound);
    Ok(BoundReport {
        n,
        bound,
        bound_cd,
        lambda_min_float,
        certified,
        sign_condition_ok,
    })
}
