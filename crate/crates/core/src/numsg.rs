//! Two-generator numerical semigroups: sign-split Bezout pairs,
//! representations of large integers, and the Frobenius number.

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};

/// `a*m + b*n == 1` with `a < 0 < b`, for the orientation `(m, n)` stored here.
///
/// `swapped` records whether `(m, n)` is the caller's pair reversed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BezoutPair {
    pub a: i64,
    pub b: i64,
    pub m: u64,
    pub n: u64,
    pub swapped: bool,
}

impl BezoutPair {
    /// Coefficients on the caller's original `(m, n)`.
    pub fn coefficients(&self) -> (i64, i64) {
        if self.swapped {
            (self.b, self.a)
        } else {
            (self.a, self.b)
        }
    }

    /// Smallest target covered by the closed-form representation: `(-a)*m*n`.
    pub fn threshold(&self) -> u64 {
        self.a.unsigned_abs() * self.m * self.n
    }
}

/// `c1*m + c2*n == r`, with `c1`, `c2` on the caller's `(m, n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Representation {
    pub c1: u64,
    pub c2: u64,
    pub r: u64,
}

fn check_coprime(m: u64, n: u64) -> Result<()> {
    if m == 0 || n == 0 {
        return Err(Error::ZeroExponent);
    }
    if m.gcd(&n) != 1 {
        return Err(Error::CoprimeRequired { m, n });
    }
    Ok(())
}

/// Least positive `b` with `b*n ≡ 1 (mod m)`, and the matching `a`.
fn canonical(m: u64, n: u64) -> (i64, i64) {
    let b = if m == 1 {
        1
    } else {
        let ext = (n as i64 % m as i64).extended_gcd(&(m as i64));
        ext.x.rem_euclid(m as i64)
    };
    let a = (1 - b as i128 * n as i128) / m as i128;
    (a as i64, b)
}

/// Canonical Bezout pair with `a < 0 < b`, switching `m` and `n` when needed.
pub fn bezout_neg_pos(m: u64, n: u64) -> Result<BezoutPair> {
    check_coprime(m, n)?;
    if m == 1 && n == 1 {
        return Ok(BezoutPair { a: -1, b: 2, m, n, swapped: false });
    }
    let (a, b) = canonical(m, n);
    if a < 0 {
        return Ok(BezoutPair { a, b, m, n, swapped: false });
    }
    let (a, b) = canonical(n, m);
    debug_assert!(a < 0 && b > 0);
    Ok(BezoutPair { a, b, m: n, n: m, swapped: true })
}

/// Largest integer that is not a non-negative combination of `m` and `n`.
pub fn frobenius(m: u64, n: u64) -> Result<u64> {
    check_coprime(m, n)?;
    if m == 1 || n == 1 {
        return Err(Error::NoFrobenius(1));
    }
    Ok(m * n - m - n)
}

/// Writes `r >= (-a)mn` as `(-a)(n-j)*m + (A+b*j)*n`, where `r = (-a)mn + A*n + j`, `0 <= j < n`.
pub fn represent_paper(m: u64, n: u64, r: u64) -> Result<Representation> {
    let pair = bezout_neg_pos(m, n)?;
    let threshold = pair.threshold();
    if r < threshold {
        return Err(Error::BelowThreshold { r, threshold });
    }
    let neg_a = pair.a.unsigned_abs();
    let rest = r - threshold;
    let big_a = rest / pair.n;
    let j = rest % pair.n;
    let on_m = neg_a * (pair.n - j);
    let on_n = big_a + pair.b as u64 * j;
    let (c1, c2) = if pair.swapped { (on_n, on_m) } else { (on_m, on_n) };
    debug_assert_eq!(c1 * m + c2 * n, r);
    Ok(Representation { c1, c2, r })
}

/// Lexicographically least `(c1, c2)` with `c1*m + c2*n == r`, by exhaustive scan.
pub fn represent_search(m: u64, n: u64, r: u64) -> Option<Representation> {
    if m == 0 || n == 0 {
        return None;
    }
    (0..=r / m).find_map(|c1| {
        let rest = r - c1 * m;
        rest.is_multiple_of(n).then_some(Representation { c1, c2: rest / n, r })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bezout_examples() {
        let p = bezout_neg_pos(2, 3).unwrap();
        assert_eq!((p.a, p.b, p.swapped), (-1, 1, false));
        let p = bezout_neg_pos(3, 5).unwrap();
        assert_eq!((p.a, p.b), (-3, 2));
        let p = bezout_neg_pos(1, 1).unwrap();
        assert_eq!((p.a, p.b), (-1, 2));
    }

    #[test]
    fn bezout_switches_when_n_is_one() {
        let p = bezout_neg_pos(4, 1).unwrap();
        assert!(p.swapped);
        assert_eq!((p.m, p.n), (1, 4));
        assert_eq!(p.a + p.b * 4, 1);
        let (cm, cn) = p.coefficients();
        assert_eq!(cm * 4 + cn, 1);
    }

    #[test]
    fn bezout_rejects_common_factor() {
        assert_eq!(bezout_neg_pos(4, 6), Err(Error::CoprimeRequired { m: 4, n: 6 }));
    }

    #[test]
    fn frobenius_examples() {
        assert_eq!(frobenius(2, 3), Ok(1));
        assert_eq!(frobenius(3, 5), Ok(7));
        assert_eq!(frobenius(2, 1), Err(Error::NoFrobenius(1)));
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(represent_paper(2, 3, 7).unwrap(), Representation { c1: 2, c2: 1, r: 7 });
        assert_eq!(represent_paper(2, 3, 6).unwrap(), Representation { c1: 3, c2: 0, r: 6 });
        assert_eq!(represent_paper(3, 5, 45).unwrap(), Representation { c1: 15, c2: 0, r: 45 });
        assert_eq!(represent_paper(3, 5, 44), Err(Error::BelowThreshold { r: 44, threshold: 45 }));
    }

    #[test]
    fn represent_search_examples() {
        assert_eq!(represent_search(2, 3, 1), None);
        assert_eq!(represent_search(2, 3, 2), Some(Representation { c1: 1, c2: 0, r: 2 }));
        assert_eq!(represent_search(3, 5, 8), Some(Representation { c1: 1, c2: 1, r: 8 }));
    }
}
