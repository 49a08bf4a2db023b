use std::cmp::Ordering;
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator.
///
/// The text form is `p/q` (or just `p` when the denominator is one), which
/// is also the serde representation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    /// `num/den`, reduced. Fails if `den` is zero.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        let den = den.into();
        if den.is_zero() {
            return Err(Error::domain("zero denominator"));
        }
        Ok(Rational(BigRational::new(num.into(), den)))
    }

    /// Shorthand for small literals; panics on a zero denominator.
    pub fn frac(num: i64, den: i64) -> Self {
        Self::new(num, den).expect("nonzero denominator")
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn checked_recip(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Rational(self.0.recip()))
        }
    }

    /// Panics on zero.
    pub fn recip(&self) -> Self {
        self.checked_recip().expect("reciprocal of zero")
    }

    /// Exact integer power; negative exponents invert. Panics for `0^e`, `e < 0`.
    pub fn pow(&self, exp: i64) -> Self {
        let mag = exp.unsigned_abs();
        let mut acc = BigRational::one();
        let mut base = self.0.clone();
        let mut e = mag;
        while e > 0 {
            if e & 1 == 1 {
                acc *= &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        let r = Rational(acc);
        if exp < 0 {
            r.recip()
        } else {
            r
        }
    }

    /// Nearest `f64`; very large or small magnitudes saturate to infinity or zero.
    pub fn to_f64(&self) -> f64 {
        if let Some(v) = self.0.to_f64() {
            if v.is_finite() && (v != 0.0 || self.is_zero()) {
                return v;
            }
        }
        if self.is_zero() {
            return 0.0;
        }
        let sign = if self.is_negative() { -1.0 } else { 1.0 };
        sign * log_abs(self).exp()
    }

    pub fn inner(&self) -> &BigRational {
        &self.0
    }
}

/// `|n| = m * 2^e` with `m` in `[1, 2)`, keeping 64 significant bits.
fn split_mantissa(n: &BigInt) -> (f64, i64) {
    let bits = n.bits();
    let shift = bits.saturating_sub(64);
    let top: BigInt = n.abs() >> shift;
    let m = top.to_f64().expect("at most 64 bits") / 2f64.powi((bits - shift - 1) as i32);
    (m, (bits - 1) as i64)
}

/// `ln |r|` without overflow, for rationals of any size.
///
/// The mantissas are divided before taking the log, so a value near 1 with
/// huge numerator and denominator keeps full relative precision.
pub fn log_abs(r: &Rational) -> f64 {
    if r.is_zero() {
        panic!("log_abs of zero");
    }
    let (mn, en) = split_mantissa(r.numer());
    let (md, ed) = split_mantissa(r.denom());
    (mn / md).ln() + (en - ed) as f64 * std::f64::consts::LN_2
}

impl Rational {
    /// Checked variant of [`log_abs`].
    pub fn try_log_abs(&self) -> Result<f64> {
        if self.is_zero() {
            Err(Error::domain("log of zero"))
        } else {
            Ok(log_abs(self))
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = |reason: &str| Error::Parse {
            what: "rational",
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let num: BigInt = num.parse().map_err(|_| err("bad numerator"))?;
        let den: BigInt = den.parse().map_err(|_| err("bad denominator"))?;
        if den.is_zero() {
            return Err(err("zero denominator"));
        }
        Ok(Rational(BigRational::new(num, den)))
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl From<i32> for Rational {
    fn from(n: i32) -> Self {
        Rational::from_integer(i64::from(n))
    }
}

impl From<usize> for Rational {
    fn from(n: usize) -> Self {
        Rational::from_integer(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_integer(n)
    }
}

impl From<BigRational> for Rational {
    fn from(r: BigRational) -> Self {
        Rational(r)
    }
}

impl PartialEq<i64> for Rational {
    fn eq(&self, other: &i64) -> bool {
        self.0.is_integer() && *self.0.numer() == BigInt::from(*other)
    }
}

impl PartialOrd<i64> for Rational {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        self.0.partial_cmp(&BigRational::from_integer(BigInt::from(*other)))
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $atr:ident, $am:ident) => {
        impl $tr<Rational> for Rational {
            type Output = Rational;
            fn $m(self, rhs: Rational) -> Rational {
                Rational(self.0.$m(rhs.0))
            }
        }
        impl<'a> $tr<&'a Rational> for Rational {
            type Output = Rational;
            fn $m(self, rhs: &'a Rational) -> Rational {
                Rational(self.0.$m(&rhs.0))
            }
        }
        impl<'a> $tr<Rational> for &'a Rational {
            type Output = Rational;
            fn $m(self, rhs: Rational) -> Rational {
                Rational((&self.0).$m(rhs.0))
            }
        }
        impl<'a, 'b> $tr<&'b Rational> for &'a Rational {
            type Output = Rational;
            fn $m(self, rhs: &'b Rational) -> Rational {
                Rational((&self.0).$m(&rhs.0))
            }
        }
        impl $tr<i64> for Rational {
            type Output = Rational;
            fn $m(self, rhs: i64) -> Rational {
                self.$m(Rational::from(rhs))
            }
        }
        impl<'a> $tr<i64> for &'a Rational {
            type Output = Rational;
            fn $m(self, rhs: i64) -> Rational {
                self.$m(Rational::from(rhs))
            }
        }
        impl $atr<Rational> for Rational {
            fn $am(&mut self, rhs: Rational) {
                self.0.$am(rhs.0);
            }
        }
        impl<'a> $atr<&'a Rational> for Rational {
            fn $am(&mut self, rhs: &'a Rational) {
                self.0.$am(&rhs.0);
            }
        }
    };
}

binop!(Add, add, AddAssign, add_assign);
binop!(Sub, sub, SubAssign, sub_assign);
binop!(Mul, mul, MulAssign, mul_assign);
binop!(Div, div, DivAssign, div_assign);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |a, b| a + b)
    }
}

impl<'a> Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |a, b| a + b)
    }
}

/// Multiplies numerators and denominators separately and reduces once.
impl Product for Rational {
    fn product<I: Iterator<Item = Rational>>(iter: I) -> Self {
        let (num, den) = iter.fold((BigInt::one(), BigInt::one()), |(n, d), r| {
            let (rn, rd) = r.0.into_raw();
            (n * rn, d * rd)
        });
        Rational(BigRational::new(num, den))
    }
}

/// Least common multiple of the denominators.
pub(crate) fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
}


#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn canonical_form() {
        let r = Rational::new(6, -4).unwrap();
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
        assert_eq!(r.to_string(), "-3/2");
        assert_eq!(Rational::from(7).to_string(), "7");
        assert!(Rational::new(1, 0).is_err());
    }

    #[test]
    fn parse_forms() {
        assert_eq!("4/6".parse::<Rational>().unwrap(), Rational::frac(2, 3));
        assert_eq!("-5".parse::<Rational>().unwrap(), Rational::from(-5));
        assert!("1/0".parse::<Rational>().is_err());
        assert!("x".parse::<Rational>().is_err());
    }

    #[test]
    fn pow_negative() {
        let q = Rational::frac(1, 2);
        assert_eq!(q.pow(-3), Rational::from(8));
        assert_eq!(q.pow(0), Rational::one());
        assert_eq!(q.pow(5), Rational::frac(1, 32));
    }

    #[test]
    fn log_abs_examples() {
        assert_eq!(log_abs(&Rational::one()), 0.0);
        let big = Rational::from_integer(BigInt::one() << 1000usize);
        let want = 1000.0 * std::f64::consts::LN_2;
        assert!((log_abs(&big) - want).abs() <= 1e-9 * want);
        let r = Rational::frac(1, 12);
        assert!((log_abs(&r) + 12f64.ln()).abs() < 1e-12);
        assert!(Rational::zero().try_log_abs().is_err());
        // near 1 with 3000-bit parts: no cancellation between the two logs
        let p = BigInt::from(3) * (BigInt::one() << 3000usize) + 1;
        let q = BigInt::one() << 3001usize;
        let v = Rational::new(p, q).unwrap();
        assert!((log_abs(&v) - 1.5f64.ln()).abs() < 1e-15);
    }

    #[test]
    fn to_f64_huge_ratio() {
        let n = Rational::from_integer(BigInt::one() << 3000usize);
        let d = Rational::from_integer((BigInt::one() << 3000usize) * 3);
        assert!((((n / d).to_f64()) - 1.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn serde_string_form() {
        let r = Rational::frac(-22, 7);
        let s = serde_json::to_string(&r).unwrap();
        assert_eq!(s, "\"-22/7\"");
        let back: Rational = serde_json::from_str(&s).unwrap();
        assert_eq!(back, r);
    }

    proptest! {
        #[test]
        fn format_parse_round_trip(n in any::<i64>(), d in 1i64..i64::MAX) {
            let r = Rational::new(n, d).unwrap();
            let back: Rational = r.to_string().parse().unwrap();
            prop_assert_eq!(back, r);
        }

        #[test]
        fn arithmetic_stays_reduced(a in -1000i64..1000, b in 1i64..1000, c in -1000i64..1000, d in 1i64..1000) {
            let x = Rational::frac(a, b);
            let y = Rational::frac(c, d);
            for z in [&x + &y, &x - &y, &x * &y] {
                prop_assert!(z.denom() > &BigInt::zero());
                prop_assert!(z.numer().gcd(z.denom()).is_one());
            }
            if !y.is_zero() {
                prop_assert_eq!((&x / &y) * &y, x.clone());
            }
        }
    }
}
