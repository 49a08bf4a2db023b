use std::fmt;

use hankel_core::asymptotics::asymptote_samples;
use hankel_core::hankel_engine::{
    bound_qpoch, bound_report, certify_bound, det_family_formula, det_oracle, det_theorem,
    inverse_oracle, inverse_theorem, moment_matrix,
};
use hankel_core::verify::{run_case, summarize, ClosedForms, Formula, Grid};
use hankel_core::{Error, Family, FamilyParams};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::nlist::NList;
use crate::output::Report;
use crate::GridKind;

pub const EXIT_DISAGREE: u8 = 3;
pub const EXIT_CERTIFY: u8 = 4;
pub const EXIT_VERIFY: u8 = 5;

#[derive(Debug)]
pub struct CmdError(Error);

impl CmdError {
    pub fn exit_code(&self) -> u8 {
        match self.0 {
            Error::Domain(_) | Error::Parse { .. } | Error::UnsupportedFamily { .. } => 2,
            Error::SingularMatrix => EXIT_DISAGREE,
            Error::SignConditionViolated { .. } => EXIT_CERTIFY,
            Error::ConvergenceFailure { .. } => 1,
        }
    }
}

impl From<Error> for CmdError {
    fn from(e: Error) -> Self {
        CmdError(e)
    }
}

impl fmt::Display for CmdError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

type Out = Result<Report, CmdError>;

fn family_params(fam: &FamilyParams, n: usize) -> Value {
    json!({ "family": fam.to_string(), "n": n })
}

pub fn det(fam: &FamilyParams, n: usize) -> Out {
    let theorem = det_theorem(fam, n);
    let family = det_family_formula(fam, n);
    let oracle = det_oracle(&moment_matrix(fam, n));
    let agree = theorem == family && family == oracle;
    let result = json!({
        "det_theorem": theorem,
        "det_family": family,
        "det_oracle": oracle,
        "agree": agree,
    });
    let row = vec![
        theorem.to_string(),
        family.to_string(),
        oracle.to_string(),
        agree.to_string(),
    ];
    let report = Report::new("det", family_params(fam, n), result)
        .table(&["det_theorem", "det_family", "det_oracle", "agree"], vec![row]);
    Ok(if agree {
        report
    } else {
        report.fail_with(EXIT_DISAGREE, "determinants disagree")
    })
}

pub fn inv(fam: &FamilyParams, n: usize, verify: bool) -> Out {
    let inverse = inverse_theorem(fam, n);
    let mut result = json!({ "inverse": inverse });
    let mut failure = None;
    if verify {
        let g = moment_matrix(fam, n);
        let identity_check = g.product_is_identity(&inverse);
        let oracle_check = inverse_oracle(&g)? == inverse;
        result["identity_check"] = json!(identity_check);
        result["oracle_check"] = json!(oracle_check);
        if !identity_check {
            failure = Some("G times the inverse is not the identity");
        } else if !oracle_check {
            failure = Some("inverse differs from Gauss-Jordan");
        }
    }
    let rows = (0..inverse.order())
        .flat_map(|j| (0..inverse.order()).map(move |k| (j, k)))
        .map(|(j, k)| vec![j.to_string(), k.to_string(), inverse.get(j, k).to_string()])
        .collect();
    let report = Report::new("inv", family_params(fam, n), result).table(&["j", "k", "value"], rows);
    Ok(match failure {
        Some(msg) => report.fail_with(EXIT_DISAGREE, msg),
        None => report,
    })
}

pub fn bound(fam: &FamilyParams, n: usize, cd: bool, certify: bool) -> Out {
    let rep = bound_report(fam, n)?;
    let mut result = serde_json::to_value(&rep).expect("report serializes");
    let mut header = vec!["n", "bound"];
    let mut row = vec![rep.n.to_string(), rep.bound.to_string()];
    if cd {
        header.push("bound_cd");
        row.push(result["bound_cd"].as_str().unwrap_or_default().to_string());
    } else {
        result.as_object_mut().expect("object").remove("bound_cd");
    }
    header.extend(["lambda_min_float", "certified", "sign_condition_ok"]);
    row.extend([
        rep.lambda_min_float.value.to_string(),
        rep.certified.to_string(),
        rep.sign_condition_ok.to_string(),
    ]);
    if let Family::QPochHankel { .. } = fam.family() {
        // The series bound for this family, reported next to the certified
        // one with its own certificate.
        let b = bound_qpoch(fam, n)?;
        let ok = certify_bound(&moment_matrix(fam, n), &b);
        result["bound_qpoch"] = json!(b);
        result["bound_qpoch_certified"] = json!(ok);
        header.extend(["bound_qpoch", "bound_qpoch_certified"]);
        row.extend([b.to_string(), ok.to_string()]);
    }
    let report = Report::new("bound", family_params(fam, n), result).table(&header, vec![row]);
    Ok(if certify && !rep.certified {
        report.fail_with(EXIT_CERTIFY, "certificate failed: G - bound*I is not PSD")
    } else {
        report
    })
}

pub fn asymptote(fam: &FamilyParams, ns: &NList) -> Out {
    let samples = asymptote_samples(fam, &ns.0)?;
    let with_gap = samples.iter().any(|s| s.gap.is_some());
    let mut header = vec!["n", "bound_log", "asymptote_log", "ratio"];
    if with_gap {
        header.push("gap");
    }
    let rows = samples
        .iter()
        .map(|s| {
            let mut row = vec![
                s.n.to_string(),
                s.bound_log.to_string(),
                s.asymptote_log.to_string(),
                s.ratio.to_string(),
            ];
            if let Some(g) = s.gap {
                row.push(g.to_string());
            }
            row
        })
        .collect();
    let params = json!({ "family": fam.to_string(), "n": ns.0 });
    Ok(Report::new("asymptote", params, json!(samples)).table(&header, rows))
}

pub fn verify(
    max_n: usize,
    families: &[FamilyParams],
    kind: GridKind,
    mutate: Option<Formula>,
) -> Out {
    let grid = match kind {
        GridKind::Empty => Grid::empty(),
        GridKind::Default if families.is_empty() => Grid::standard(max_n),
        GridKind::Default => Grid {
            families: families.to_vec(),
            max_n,
        },
    };
    let forms = match mutate {
        Some(f) => ClosedForms::mutated(f),
        None => ClosedForms::default(),
    };
    let outcomes: Vec<_> = grid
        .cases()
        .par_iter()
        .map(|case| run_case(case, &forms))
        .collect();
    let summary = summarize(&outcomes);
    let params = json!({
        "grid": match kind { GridKind::Default => "default", GridKind::Empty => "empty" },
        "max_n": grid.max_n,
        "families": grid.families.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
    });
    let row = vec![
        summary.cases.to_string(),
        summary.passed.to_string(),
        summary.failed.to_string(),
        summary.first_failure.clone().unwrap_or_default(),
    ];
    let report = Report::new("verify", params, json!(summary))
        .table(&["cases", "passed", "failed", "first_failure"], vec![row]);
    Ok(match &summary.first_failure {
        Some(first) => {
            let msg = format!("{} of {} cases failed; first: {first}", summary.failed, summary.cases);
            report.fail_with(EXIT_VERIFY, msg)
        }
        None => report,
    })
}
