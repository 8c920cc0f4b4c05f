//! Exact rational helpers shared by every module.

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always stored in lowest terms.
pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qf(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `int` or `int/uint`, where `int` may carry a leading `-`.
pub fn parse_rational(text: &str) -> Result<Q> {
    let text = text.trim();
    if text.is_empty() {
        return Err(Error::Malformed("empty rational".into()));
    }
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (text, None),
    };
    let num = parse_int(num, true)?;
    let den = match den {
        Some(d) => parse_int(d, false)?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(Error::Malformed(format!("zero denominator in {text:?}")));
    }
    Ok(Q::new(num, den))
}

fn parse_int(text: &str, signed: bool) -> Result<BigInt> {
    let digits = match text.strip_prefix('-') {
        Some(rest) if signed => rest,
        _ => text,
    };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Malformed(format!("not an integer: {text:?}")));
    }
    text.parse::<BigInt>().map_err(|_| Error::Malformed(format!("not an integer: {text:?}")))
}

/// Canonical text form: `p` for integers, `p/q` otherwise.
pub fn format_rational(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Exact `k`-th root of a rational, if it exists in Q.
///
/// Even roots of negative numbers return `None`.
pub fn exact_root(x: &Q, k: u32) -> Option<Q> {
    if k == 0 {
        return None;
    }
    if x.is_zero() {
        return Some(Q::zero());
    }
    if x.is_negative() && k.is_multiple_of(2) {
        return None;
    }
    let num = int_root(&x.numer().abs(), k)?;
    let den = int_root(x.denom(), k)?;
    let r = Q::new(num, den);
    Some(if x.is_negative() { -r } else { r })
}

fn int_root(x: &BigInt, k: u32) -> Option<BigInt> {
    let r = x.nth_root(k);
    (num_traits::pow(r.clone(), k as usize) == *x).then_some(r)
}

pub fn sign(x: &Q) -> i32 {
    match x.numer().sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

/// Nearest `f64` to a rational; fine for display and plotting.
pub fn to_f64(x: &Q) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap_or_else(|| {
        // Ratio of huge integers: scale both sides down first.
        let shift = x.numer().bits().max(x.denom().bits()).saturating_sub(1000);
        let n = (x.numer() >> shift).to_f64().unwrap_or(f64::NAN);
        let d = (x.denom() >> shift).to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

/// Exact rational value of a finite `f64`.
pub fn from_f64(x: f64) -> Option<Q> {
    Q::from_float(x)
}
