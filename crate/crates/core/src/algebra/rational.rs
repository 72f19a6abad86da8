//! Exact rationals and small integer helpers.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `num/den`, reduced. Panics on a zero denominator.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"p"` or `"p/q"` (optional leading sign).
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let err = |msg: &str| Error::Parse {
        pos: 0,
        msg: format!("{msg}: {s:?}"),
    };
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| err("bad numerator"))?;
    let den: BigInt = den.parse().map_err(|_| err("bad denominator"))?;
    if den.is_zero() {
        return Err(err("zero denominator"));
    }
    Ok(Rational::new(num, den))
}

/// Exact text form: `"p"` for integers, `"p/q"` otherwise.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Generalized binomial coefficient `C(a, m)` for any integer `a` and `m >= 0`.
pub fn binomial(a: i64, m: i64) -> Rational {
    if m < 0 {
        return Rational::zero();
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for t in 0..m {
        num *= BigInt::from(a - t);
        den *= BigInt::from(t + 1);
    }
    Rational::new(num, den)
}

/// `C(a, m)` as an `i64` for `0 <= m`, any integer `a`.
pub fn binomial_i64(a: i64, m: i64) -> i64 {
    let b = binomial(a, m);
    debug_assert!(b.is_integer());
    i64::try_from(b.to_integer()).expect("binomial overflow")
}

pub fn is_unit_sign(r: &Rational) -> bool {
    r.abs().is_one()
}
