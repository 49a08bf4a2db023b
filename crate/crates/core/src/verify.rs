//! Grid verification: every closed form against the row-based routes and
//! the exact oracles, case by case.
//!
//! The closed forms are injected through [`ClosedForms`] so a deliberately
//! corrupted formula can be run through the same grid and must be caught.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact_scalar::Rational;
use crate::families::{self, Family, FamilyParams};
use crate::hankel_engine::{
    self as engine, certify_bound, det_oracle, inverse_oracle, moment_matrix, SymRationalMatrix,
};

/// Largest order at which the eigenvalue certificate is run.
pub const CERTIFY_MAX_N: usize = 8;
/// Largest order at which the Hilbert inverse must be integral.
pub const HILBERT_INTEGRAL_MAX_N: usize = 8;
/// Relative slack allowed between the bound and the float eigenvalue.
pub const EIGEN_SLACK: f64 = 1e-9;

type DetFn = Box<dyn Fn(&FamilyParams, usize) -> Rational + Send + Sync>;
type InverseFn = Box<dyn Fn(&FamilyParams, usize) -> SymRationalMatrix + Send + Sync>;
type BoundCdFn = Box<dyn Fn(&FamilyParams, usize) -> Result<Rational> + Send + Sync>;
type EvalClosedFn = Box<dyn Fn(&Rational, &Rational, usize) -> Rational + Send + Sync>;

/// The closed-form formulas under test.
pub struct ClosedForms {
    pub det: DetFn,
    pub inverse: InverseFn,
    pub bound_cd: BoundCdFn,
    pub eval_sq_closed: EvalClosedFn,
}

impl Default for ClosedForms {
    fn default() -> Self {
        ClosedForms {
            det: Box::new(engine::det_family_formula),
            inverse: Box::new(engine::inverse_family_formula),
            bound_cd: Box::new(engine::bound_cd),
            eval_sq_closed: Box::new(families::eval_sq_closed_qlaguerre),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Formula {
    Det,
    Inverse,
    BoundCd,
    EvalSqClosed,
}

impl FromStr for Formula {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "det" => Ok(Formula::Det),
            "inverse" => Ok(Formula::Inverse),
            "cd" => Ok(Formula::BoundCd),
            "qseries" => Ok(Formula::EvalSqClosed),
            _ => Err(Error::Parse {
                what: "formula",
                input: s.into(),
                reason: "expected det, inverse, cd or qseries".into(),
            }),
        }
    }
}

fn nudge(v: Rational) -> Rational {
    v * (Rational::one() + Rational::frac(1, 1_000_000_007))
}

impl ClosedForms {
    /// The standard formulas with one of them perturbed by a tiny relative
    /// factor at every order `n >= 1`.
    pub fn mutated(formula: Formula) -> Self {
        let mut forms = ClosedForms::default();
        match formula {
            Formula::Det => {
                forms.det = Box::new(|f, n| {
                    let v = engine::det_family_formula(f, n);
                    if n >= 1 {
                        nudge(v)
                    } else {
                        v
                    }
                })
            }
            Formula::Inverse => {
                forms.inverse = Box::new(|f, n| {
                    let m = engine::inverse_family_formula(f, n);
                    if n == 0 {
                        return m;
                    }
                    SymRationalMatrix::from_upper(n + 1, |j, k| {
                        if j == n && k == n {
                            nudge(m.get(j, k).clone())
                        } else {
                            m.get(j, k).clone()
                        }
                    })
                })
            }
            Formula::BoundCd => {
                forms.bound_cd = Box::new(|f, n| {
                    let v = engine::bound_cd(f, n)?;
                    Ok(if n >= 1 { nudge(v) } else { v })
                })
            }
            Formula::EvalSqClosed => {
                forms.eval_sq_closed = Box::new(|q, t, m| {
                    let v = families::eval_sq_closed_qlaguerre(q, t, m);
                    if m >= 1 {
                        nudge(v)
                    } else {
                        v
                    }
                })
            }
        }
        forms
    }
}

#[derive(Debug, Clone)]
pub struct Grid {
    pub families: Vec<FamilyParams>,
    pub max_n: usize,
}

impl Grid {
    /// Laguerre alpha in {0, 1/2, -1/2, 3}; Jacobi (alpha, beta) in
    /// {0, 1/2, -1/2}^2; both q-families over {1/2, 1/3, 3/4} x {1/2, 1/4}.
    pub fn standard(max_n: usize) -> Self {
        let r = Rational::frac;
        let mut families = Vec::new();
        for a in [r(0, 1), r(1, 2), r(-1, 2), r(3, 1)] {
            families.push(FamilyParams::laguerre(a).expect("grid point"));
        }
        let ab = [r(0, 1), r(1, 2), r(-1, 2)];
        for a in &ab {
            for b in &ab {
                families.push(FamilyParams::jacobi(a.clone(), b.clone()).expect("grid point"));
            }
        }
        for q in [r(1, 2), r(1, 3), r(3, 4)] {
            for t in [r(1, 2), r(1, 4)] {
                families.push(FamilyParams::q_laguerre(q.clone(), t.clone()).expect("grid point"));
            }
        }
        for q in [r(1, 2), r(1, 3), r(3, 4)] {
            for t in [r(1, 2), r(1, 4)] {
                families.push(FamilyParams::q_poch_hankel(q.clone(), t.clone()).expect("grid point"));
            }
        }
        Grid { families, max_n }
    }

    pub fn empty() -> Self {
        Grid {
            families: Vec::new(),
            max_n: 0,
        }
    }

    pub fn cases(&self) -> Vec<Case> {
        self.families
            .iter()
            .flat_map(|f| (0..=self.max_n).map(move |n| Case { family: f.clone(), n }))
            .collect()
    }
}

#[derive(Debug, Clone)]
pub struct Case {
    pub family: FamilyParams,
    pub n: usize,
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} n={}", self.family, self.n)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckFailure {
    pub check: &'static str,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct CaseOutcome {
    pub case: String,
    pub checks: usize,
    pub failures: Vec<CheckFailure>,
}

impl CaseOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

struct Checker {
    checks: usize,
    failures: Vec<CheckFailure>,
}

impl Checker {
    fn check(&mut self, name: &'static str, ok: bool, detail: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(CheckFailure {
                check: name,
                detail: detail(),
            });
        }
    }

    fn fail(&mut self, name: &'static str, err: &Error) {
        self.check(name, false, || err.to_string());
    }
}

pub fn run_case(case: &Case, forms: &ClosedForms) -> CaseOutcome {
    let (fam, n) = (&case.family, case.n);
    let mut c = Checker {
        checks: 0,
        failures: Vec::new(),
    };
    let g = moment_matrix(fam, n);

    let det_t = engine::det_theorem(fam, n);
    let det_f = (forms.det)(fam, n);
    let det_o = det_oracle(&g);
    c.check("det", det_t == det_f && det_f == det_o, || {
        format!("theorem {det_t}, formula {det_f}, oracle {det_o}")
    });
    c.check("det_positive", det_t.is_positive(), || format!("det {det_t}"));

    let inv = engine::inverse_theorem(fam, n);
    c.check("inverse_identity", g.product_is_identity(&inv), || {
        "G * inverse_theorem != I".into()
    });
    match inverse_oracle(&g) {
        Ok(o) => c.check("inverse_oracle", o == inv, || "inverse_theorem != Gauss-Jordan".into()),
        Err(e) => c.fail("inverse_oracle", &e),
    }
    c.check("inverse_formula", (forms.inverse)(fam, n) == inv, || {
        "closed-form inverse != inverse_theorem".into()
    });

    c.check("sign_condition", families::check_sign_condition(fam, n), || {
        "sign condition fails".into()
    });

    match engine::bound_sum(fam, n) {
        Ok(bound) => {
            if n <= CERTIFY_MAX_N {
                c.check("certificate", certify_bound(&g, &bound), || {
                    format!("G - {bound} I is not PSD")
                });
                match engine::smallest_eig_float(
                    fam,
                    n,
                    engine::DEFAULT_EIG_TOL,
                    engine::DEFAULT_EIG_MAX_ITER,
                ) {
                    Ok(lam) => {
                        let b = bound.to_f64();
                        c.check("eigen_slack", b <= lam.value + EIGEN_SLACK * lam.value.abs(), || {
                            format!("bound {b:e} above lambda_min {:e}", lam.value)
                        })
                    }
                    Err(e) => c.fail("eigen_slack", &e),
                }
            }
            if n >= 1 {
                match engine::bound_sum(fam, n - 1) {
                    Ok(prev) => c.check("monotone", bound < prev, || {
                        format!("bound({n}) = {bound} not below bound({}) = {prev}", n - 1)
                    }),
                    Err(e) => c.fail("monotone", &e),
                }
            }
            if matches!(fam.family(), Family::Laguerre { .. } | Family::Jacobi { .. }) {
                match (forms.bound_cd)(fam, n) {
                    Ok(cd) => c.check("bound_cd", cd == bound, || format!("cd {cd} vs sum {bound}")),
                    Err(e) => c.fail("bound_cd", &e),
                }
            }
        }
        Err(e) => c.fail("bound_sum", &e),
    }

    if let Family::QLaguerre { q, t } = fam.family() {
        let expansion = families::eval_sq(fam, n).p_sq;
        let closed = (forms.eval_sq_closed)(q, t, n);
        c.check("q_identity", expansion == closed, || {
            format!("expansion {expansion} vs closed form {closed}")
        });
    }

    if let Family::Jacobi { alpha, beta } = fam.family() {
        if alpha.is_zero() && beta.is_zero() && n <= HILBERT_INTEGRAL_MAX_N {
            c.check("hilbert_integral", inv.all_integer(), || {
                "Hilbert inverse has a non-integer entry".into()
            });
        }
    }

    CaseOutcome {
        case: case.to_string(),
        checks: c.checks,
        failures: c.failures,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Summary {
    pub cases: usize,
    pub passed: usize,
    pub failed: usize,
    pub first_failure: Option<String>,
}

impl Summary {
    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

/// Summary in case order; `outcomes` must already be ordered.
pub fn summarize(outcomes: &[CaseOutcome]) -> Summary {
    let failed = outcomes.iter().filter(|o| !o.passed()).count();
    let first_failure = outcomes.iter().find(|o| !o.passed()).map(|o| {
        let f = &o.failures[0];
        format!("{}: {} ({})", o.case, f.check, f.detail)
    });
    Summary {
        cases: outcomes.len(),
        passed: outcomes.len() - failed,
        failed,
        first_failure,
    }
}

pub fn run_grid(grid: &Grid, forms: &ClosedForms) -> Summary {
    let outcomes: Vec<CaseOutcome> = grid.cases().iter().map(|c| run_case(c, forms)).collect();
    summarize(&outcomes)
}
