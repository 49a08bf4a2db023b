use hankel_core::asymptotics::bound_log_float;
use hankel_core::exact_scalar::log_abs;
use hankel_core::families::{eval_sq, eval_sq_closed_qlaguerre, Family};
use hankel_core::hankel_engine::bound_sum;
use hankel_core::verify::Grid;

#[test]
fn exact_and_float_logs_agree() {
    for fam in Grid::standard(0).families {
        for n in [10, 50, 100] {
            let exact = log_abs(&bound_sum(&fam, n).unwrap());
            let float = bound_log_float(&fam, n).unwrap();
            let rel = (exact - float).abs() / exact.abs();
            assert!(rel <= 1e-6, "{fam} n={n}: exact {exact}, float {float}");
        }
    }
}

#[test]
fn q_series_identity_to_twenty() {
    for fam in Grid::standard(0).families {
        if let Family::QLaguerre { q, t } = fam.family() {
            for m in 0..=20 {
                assert_eq!(eval_sq(&fam, m).p_sq, eval_sq_closed_qlaguerre(q, t, m), "{fam} m={m}");
            }
        }
    }
}
