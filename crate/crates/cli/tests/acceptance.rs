//! Acceptance suite: one PASS/FAIL line per criterion.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use hankel_core::asymptotics::{
    bound_log_float, bound_log_laguerre, jacobi_decay_limit, jacobi_decay_ratio,
    laguerre_asymptote_log, qlaguerre_limit_gap,
};
use hankel_core::exact_scalar::log_abs;
use hankel_core::families::{check_sign_condition, eval_sq, eval_sq_closed_qlaguerre, Family};
use hankel_core::hankel_engine::{
    bound_cd, bound_qpoch, bound_qpoch_limit, bound_sum, certify_bound, det_family_formula,
    det_oracle, det_theorem, inverse_oracle, inverse_theorem, moment_matrix, smallest_eig_float,
    DEFAULT_EIG_MAX_ITER, DEFAULT_EIG_TOL,
};
use hankel_core::verify::{run_grid, ClosedForms, Formula, Grid};
use hankel_core::{FamilyParams, Rational, SymRationalMatrix};

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn grid() -> Vec<FamilyParams> {
    Grid::standard(0).families
}

fn within(budget: Duration, start: Instant) -> Check {
    let took = start.elapsed();
    ensure(took <= budget, || format!("took {took:.1?}, budget {budget:?}"))
}

fn determinants() -> Check {
    let start = Instant::now();
    for fam in grid() {
        for n in 0..=10 {
            let t = det_theorem(&fam, n);
            let f = det_family_formula(&fam, n);
            let o = det_oracle(&moment_matrix(&fam, n));
            ensure(t == f && f == o, || format!("{fam} n={n}: {t} / {f} / {o}"))?;
        }
    }
    within(Duration::from_secs(60), start)
}

fn inverses() -> Check {
    for fam in grid() {
        for n in 0..=10 {
            let g = moment_matrix(&fam, n);
            let inv = inverse_theorem(&fam, n);
            ensure(g.product_is_identity(&inv), || format!("{fam} n={n}: G * inverse != I"))?;
            let oracle = inverse_oracle(&g).map_err(|e| format!("{fam} n={n}: {e}"))?;
            ensure(oracle == inv, || format!("{fam} n={n}: differs from Gauss-Jordan"))?;
        }
    }
    Ok(())
}

fn hilbert() -> Check {
    let h = FamilyParams::jacobi(Rational::zero(), Rational::zero()).unwrap();
    let det = det_theorem(&h, 1);
    ensure(det == Rational::frac(1, 12), || format!("det(H_1) = {det}"))?;
    let want = SymRationalMatrix::new(vec![
        vec![Rational::from(4), Rational::from(-6)],
        vec![Rational::from(-6), Rational::from(12)],
    ])
    .unwrap();
    ensure(inverse_theorem(&h, 1) == want, || "inverse(H_1) is wrong".into())?;
    for n in 0..=8 {
        ensure(inverse_theorem(&h, n).all_integer(), || format!("n={n}: non-integer entry"))?;
    }
    Ok(())
}

fn certification() -> Check {
    for fam in grid() {
        for n in 0..=8 {
            ensure(check_sign_condition(&fam, n), || format!("{fam} n={n}: sign condition"))?;
            let b = bound_sum(&fam, n).map_err(|e| format!("{fam} n={n}: {e}"))?;
            let g = moment_matrix(&fam, n);
            ensure(certify_bound(&g, &b), || format!("{fam} n={n}: G - {b} I not PSD"))?;
            let lam = smallest_eig_float(&fam, n, DEFAULT_EIG_TOL, DEFAULT_EIG_MAX_ITER)
                .map_err(|e| format!("{fam} n={n}: {e}"))?;
            let bf = b.to_f64();
            ensure(bf <= lam.value * (1.0 + 1e-9), || {
                format!("{fam} n={n}: bound {bf:e} > lambda {:e}", lam.value)
            })?;
        }
    }
    Ok(())
}

fn christoffel_darboux() -> Check {
    for fam in grid() {
        if fam.is_q_family() {
            continue;
        }
        for n in 0..=10 {
            let cd = bound_cd(&fam, n).map_err(|e| e.to_string())?;
            let sum = bound_sum(&fam, n).map_err(|e| e.to_string())?;
            ensure(cd == sum, || format!("{fam} n={n}: {cd} vs {sum}"))?;
        }
    }
    Ok(())
}

fn q_series() -> Check {
    for fam in grid() {
        if let Family::QLaguerre { q, t } = fam.family() {
            for m in 0..=20 {
                let lhs = eval_sq(&fam, m).p_sq;
                let rhs = eval_sq_closed_qlaguerre(q, t, m);
                ensure(lhs == rhs, || format!("{fam} m={m}: {lhs} vs {rhs}"))?;
            }
        }
    }
    Ok(())
}

fn laguerre_asymptote() -> Check {
    let start = Instant::now();
    for alpha in [0.0, 0.5] {
        let r = |n: usize| -> Result<f64, String> {
            let b = bound_log_laguerre(alpha, n).map_err(|e| e.to_string())?;
            let a = laguerre_asymptote_log(alpha, n).map_err(|e| e.to_string())?;
            Ok((b - a).exp())
        };
        let (r256, r4096) = (r(256)?, r(4096)?);
        ensure((0.8..=1.25).contains(&r4096), || format!("alpha={alpha}: r(4096) = {r4096}"))?;
        ensure((r4096 - 1.0).abs() < (r256 - 1.0).abs(), || {
            format!("alpha={alpha}: r(256) = {r256}, r(4096) = {r4096}")
        })?;
    }
    within(Duration::from_secs(30), start)
}

fn jacobi_decay() -> Check {
    let limit = jacobi_decay_limit();
    ensure((limit - 0.029_437_251_5).abs() < 1e-10, || format!("limit {limit}"))?;
    for (a, b) in [(0.0, 0.0), (0.5, -0.5)] {
        let ratio = jacobi_decay_ratio(a, b, 200).map_err(|e| e.to_string())?;
        ensure((ratio - limit).abs() <= 1e-3, || format!("({a},{b}): ratio {ratio}"))?;
    }
    Ok(())
}

fn q_limit() -> Check {
    let half = Rational::frac(1, 2);
    let fam = FamilyParams::q_poch_hankel(half.clone(), half.clone()).unwrap();
    let bounds: Vec<Rational> = (0..=50)
        .map(|n| bound_qpoch(&fam, n).map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()?;
    ensure(bounds.windows(2).all(|w| w[1] < w[0]), || "bound_qpoch not strictly decreasing".into())?;
    let limit = bound_qpoch_limit(&half, &half, 1e-14).map_err(|e| e.to_string())?;
    ensure((limit.value - 0.288_788_095_087).abs() < 1e-12, || {
        format!("(1/2;1/2)_inf = {}", limit.value)
    })?;
    let gap = qlaguerre_limit_gap(&half, &half, 50).map_err(|e| e.to_string())?;
    ensure((-1e-12..=1e-10).contains(&gap), || format!("gap(50) = {gap:e}"))
}

fn float_bridge() -> Check {
    for fam in grid() {
        for n in [10, 50, 100] {
            let exact = log_abs(&bound_sum(&fam, n).map_err(|e| e.to_string())?);
            let float = bound_log_float(&fam, n).map_err(|e| e.to_string())?;
            let rel = (exact - float).abs() / exact.abs();
            ensure(rel <= 1e-6, || format!("{fam} n={n}: exact {exact}, float {float}"))?;
        }
    }
    Ok(())
}

fn cli_contract() -> Check {
    let run = |extra: &[&str]| -> Result<i32, String> {
        let out = Command::new(env!("CARGO_BIN_EXE_hankel"))
            .arg("verify")
            .args(extra)
            .output()
            .map_err(|e| e.to_string())?;
        out.status.code().ok_or_else(|| "killed by signal".to_string())
    };
    let code = run(&[])?;
    ensure(code == 0, || format!("default grid exited {code}"))?;
    for m in ["det", "inverse", "cd", "qseries"] {
        let code = run(&["--mutate", m])?;
        ensure(code != 0, || format!("mutation {m} still exits 0"))?;
        let forms = ClosedForms::mutated(m.parse::<Formula>().map_err(|e| e.to_string())?);
        ensure(!run_grid(&Grid::standard(10), &forms).ok(), || {
            format!("mutation {m} passes the library grid")
        })?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("determinant three-way agreement", determinants),
        ("inverse correctness", inverses),
        ("Hilbert special case", hilbert),
        ("bound validity and certification", certification),
        ("Christoffel-Darboux consistency", christoffel_darboux),
        ("q-series identity", q_series),
        ("Laguerre asymptote", laguerre_asymptote),
        ("Jacobi decay", jacobi_decay),
        ("q-limit", q_limit),
        ("exact/float bridge", float_bridge),
        ("CLI contract", cli_contract),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let res = check();
        let took = start.elapsed();
        match res {
            Ok(()) => println!("PASS {:>2} {name} ({took:.2?})", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({took:.2?}): {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
