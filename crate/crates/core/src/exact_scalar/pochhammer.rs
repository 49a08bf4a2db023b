use super::{FloatApprox, Rational};
use crate::error::{Error, Result};

/// Rising factorial `(z)_n = z(z+1)...(z+n-1)`, with `(z)_0 = 1`.
pub fn pochhammer(z: &Rational, n: usize) -> Rational {
    (0..n).map(|k| z + Rational::from(k)).product()
}

/// Finite q-Pochhammer symbol `(a;q)_m = prod_{j<m} (1 - a q^j)`.
pub fn q_pochhammer(a: &Rational, q: &Rational, m: usize) -> Rational {
    let mut aq = a.clone();
    (0..m)
        .map(|_| {
            let factor = Rational::one() - &aq;
            aq *= q;
            factor
        })
        .product()
}

// Per-factor relative rounding allowance: one for forming a q^m, one for the
// subtraction, one for the running product.
const ROUNDING_PER_FACTOR: f64 = 3.0 * f64::EPSILON;
const MAX_FACTORS: usize = 1 << 20;

/// `(a;q)_inf` truncated so the certified tail is below `target_abs_error`.
///
/// The log of the neglected tail `prod_{m>=M}(1 - a q^m)` is bounded by
/// `|a| q^M / ((1-q)(1-|a|))`, which turns into an absolute bound on the
/// product through `expm1`. Floating-point rounding of the kept factors is
/// included in the reported bound.
pub fn q_pochhammer_infinite(
    a: &Rational,
    q: &Rational,
    target_abs_error: f64,
) -> Result<FloatApprox> {
    if !(q.is_positive() && *q < 1) {
        return Err(Error::domain(format!("q must lie in (0,1), got {q}")));
    }
    if !(a.abs() < 1) {
        return Err(Error::domain(format!("|a| must be below 1, got {a}")));
    }
    if a.is_zero() {
        return Ok(FloatApprox::exact(1.0));
    }
    let af = a.to_f64();
    let qf = q.to_f64();
    let abs_a = af.abs();
    let tail_scale = abs_a / ((1.0 - qf) * (1.0 - abs_a));

    let mut product = 1.0f64;
    let mut aq = af;
    let mut q_pow = 1.0f64;
    let mut factors = 0usize;
    loop {
        let tail_log = tail_scale * q_pow;
        let bound = product.abs() * tail_log.exp_m1()
            + factors as f64 * ROUNDING_PER_FACTOR * product.abs();
        if bound < target_abs_error || factors >= MAX_FACTORS || tail_log == 0.0 {
            return Ok(FloatApprox {
                value: product,
                abs_error_bound: Some(bound),
            });
        }
        product *= 1.0 - aq;
        aq *= qf;
        q_pow *= qf;
        factors += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::frac(n, d)
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(&Rational::one(), 4), Rational::from(24));
        assert_eq!(pochhammer(&r(-7, 3), 0), Rational::one());
        assert_eq!(pochhammer(&r(3, 2), 2), r(15, 4));
        // (-n)_k vanishes once k > n
        assert!(pochhammer(&Rational::from(-3), 4).is_zero());
    }

    #[test]
    fn q_pochhammer_examples() {
        let h = r(1, 2);
        assert_eq!(q_pochhammer(&h, &h, 2), r(3, 8));
        assert_eq!(q_pochhammer(&r(2, 7), &r(5, 3), 0), Rational::one());
        for m in 1..6 {
            assert!(q_pochhammer(&Rational::one(), &r(1, 3), m).is_zero());
        }
    }

    #[test]
    fn euler_function_at_half() {
        let h = r(1, 2);
        let v = q_pochhammer_infinite(&h, &h, 1e-12).unwrap();
        assert!(v.abs_error_bound.unwrap() < 1e-12);
        assert!((v.value - 0.288_788_095_087).abs() < 1e-11);
    }

    #[test]
    fn zero_a_is_exactly_one() {
        let v = q_pochhammer_infinite(&Rational::zero(), &r(1, 3), 1e-3).unwrap();
        assert_eq!(v, FloatApprox::exact(1.0));
    }

    #[test]
    fn infinite_matches_long_finite_truncation() {
        let (a, q) = (r(1, 4), r(1, 2));
        let v = q_pochhammer_infinite(&a, &q, 1e-10).unwrap();
        let finite = q_pochhammer(&a, &q, 60).to_f64();
        assert!((v.value - finite).abs() < 1e-10);
        assert!(v.contains(finite));
    }

    #[test]
    fn infinite_domain_errors() {
        let h = r(1, 2);
        assert!(q_pochhammer_infinite(&h, &Rational::one(), 1e-9).is_err());
        assert!(q_pochhammer_infinite(&h, &Rational::zero(), 1e-9).is_err());
        assert!(q_pochhammer_infinite(&Rational::one(), &h, 1e-9).is_err());
        assert!(q_pochhammer_infinite(&r(-3, 2), &h, 1e-9).is_err());
    }

    #[test]
    fn q_binomial_specialisation() {
        // (z;q)_inf = sum_k q^{k(k-1)/2} (-z)^k / (q;q)_k
        let (z, q) = (r(1, 2), r(1, 2));
        let target = q_pochhammer_infinite(&z, &q, 1e-14).unwrap().value;
        let mut partial = Rational::zero();
        let mut gaps = Vec::new();
        for k in 0..=60usize {
            let e = (k * k.saturating_sub(1) / 2) as i64;
            partial += q.pow(e) * (-&z).pow(k as i64) / q_pochhammer(&q, &q, k);
            gaps.push((partial.to_f64() - target).abs());
        }
        assert!(gaps[60] < 1e-10);
        assert!(gaps[60] <= gaps[5]);
    }

    proptest! {
        #[test]
        fn pochhammer_splits(n in -20i64..20, d in 1i64..9, m in 0usize..=20, k in 0usize..=20) {
            let z = r(n, d);
            let lhs = pochhammer(&z, m + k);
            let rhs = pochhammer(&z, m) * pochhammer(&(&z + Rational::from(m)), k);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn q_pochhammer_splits(an in -9i64..9, ad in 1i64..9, qn in 1i64..8, m in 0usize..=12, k in 0usize..=12) {
            let a = r(an, ad);
            let q = r(qn, 8);
            let lhs = q_pochhammer(&a, &q, m + k);
            let shifted = &a * q.pow(m as i64);
            let rhs = q_pochhammer(&a, &q, m) * q_pochhammer(&shifted, &q, k);
            prop_assert_eq!(lhs, rhs);
        }
    }
}
