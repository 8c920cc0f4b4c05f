//! Sturm sequences, real-root counting and isolation over Q.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rational::{format_rational, parse_rational, sign, to_f64, Q};

/// Interval endpoint that may be infinite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bound {
    NegInf,
    Finite(Q),
    PosInf,
}

impl Bound {
    pub fn finite(&self) -> Option<&Q> {
        match self {
            Bound::Finite(q) => Some(q),
            _ => None,
        }
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bound::NegInf => f.write_str("-inf"),
            Bound::PosInf => f.write_str("inf"),
            Bound::Finite(q) => f.write_str(&format_rational(q)),
        }
    }
}

/// A real interval with optional infinite ends; infinite ends are always open.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    pub lo: Bound,
    pub hi: Bound,
    pub lo_closed: bool,
    pub hi_closed: bool,
}

impl Interval {
    pub fn real_line() -> Interval {
        Interval { lo: Bound::NegInf, hi: Bound::PosInf, lo_closed: false, hi_closed: false }
    }

    pub fn open(lo: Bound, hi: Bound) -> Result<Interval> {
        Interval::new(lo, hi, false, false)
    }

    pub fn new(lo: Bound, hi: Bound, lo_closed: bool, hi_closed: bool) -> Result<Interval> {
        if matches!(lo, Bound::PosInf) || matches!(hi, Bound::NegInf) {
            return Err(Error::InvalidDomain("misplaced infinite endpoint".into()));
        }
        let lo_closed = lo_closed && lo.finite().is_some();
        let hi_closed = hi_closed && hi.finite().is_some();
        if let (Some(a), Some(b)) = (lo.finite(), hi.finite()) {
            let nonempty = a < b || (a == b && lo_closed && hi_closed);
            if !nonempty {
                return Err(Error::InvalidDomain(format!("empty interval {}..{}", lo, hi)));
            }
        }
        Ok(Interval { lo, hi, lo_closed, hi_closed })
    }

    pub fn contains(&self, x: &Q) -> bool {
        let above = match &self.lo {
            Bound::NegInf => true,
            Bound::Finite(a) => x > a || (self.lo_closed && x == a),
            Bound::PosInf => false,
        };
        let below = match &self.hi {
            Bound::PosInf => true,
            Bound::Finite(b) => x < b || (self.hi_closed && x == b),
            Bound::NegInf => false,
        };
        above && below
    }

    pub fn is_real_line(&self) -> bool {
        self.lo == Bound::NegInf && self.hi == Bound::PosInf
    }

    /// Some rational point of the interval.
    pub fn sample_point(&self) -> Q {
        match (&self.lo, &self.hi) {
            (Bound::Finite(a), Bound::Finite(b)) => (a + b) / Q::from_integer(2.into()),
            (Bound::Finite(a), _) => a + Q::one(),
            (_, Bound::Finite(b)) => b - Q::one(),
            _ => Q::zero(),
        }
    }
}

impl std::str::FromStr for Interval {
    type Err = Error;

    /// `LO..HI`, optionally bracketed: `(0..inf)`, `[-1..1]`, `-inf..2`.
    /// Unbracketed ends are open.
    fn from_str(text: &str) -> Result<Interval> {
        let text = text.trim();
        let bad = || Error::InvalidDomain(format!("expected LO..HI, got {text:?}"));
        let (lo_closed, rest) = match text.as_bytes().first() {
            Some(b'[') => (true, &text[1..]),
            Some(b'(') => (false, &text[1..]),
            _ => (false, text),
        };
        let (hi_closed, rest) = match rest.as_bytes().last() {
            Some(b']') => (true, &rest[..rest.len() - 1]),
            Some(b')') => (false, &rest[..rest.len() - 1]),
            _ => (false, rest),
        };
        let (lo, hi) = rest.split_once("..").ok_or_else(bad)?;
        let bound = |s: &str| -> Result<Bound> {
            match s.trim() {
                "-inf" => Ok(Bound::NegInf),
                "inf" | "+inf" => Ok(Bound::PosInf),
                other => parse_rational(other).map(Bound::Finite).map_err(|_| bad()),
            }
        };
        Interval::new(bound(lo)?, bound(hi)?, lo_closed, hi_closed)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let open = if self.lo_closed { '[' } else { '(' };
        let close = if self.hi_closed { ']' } else { ')' };
        write!(f, "{open}{}..{}{close}", self.lo, self.hi)
    }
}

/// Multiplies by a positive rational so the coefficients are coprime integers.
fn positive_primitive(p: &Polynomial) -> Polynomial {
    let pp = p.primitive_part();
    if p.leading().is_negative() {
        -&pp
    } else {
        pp
    }
}

/// Sturm chain of the squarefree part of `p`.
pub fn sturm_chain(p: &Polynomial) -> Vec<Polynomial> {
    let p0 = positive_primitive(&p.squarefree_part());
    let mut chain = vec![p0.clone()];
    if p0.is_constant() {
        return chain;
    }
    let mut prev = p0;
    let mut cur = positive_primitive(&prev.derivative());
    while !cur.is_zero() {
        let rem = prev.div_rem(&cur).1;
        chain.push(cur.clone());
        prev = cur;
        cur = positive_primitive(&-&rem);
    }
    chain
}

fn sign_at(p: &Polynomial, at: &Bound) -> i32 {
    match at {
        Bound::Finite(x) => sign(&p.eval(x)),
        Bound::PosInf => sign(&p.leading()),
        Bound::NegInf => {
            let s = sign(&p.leading());
            if p.degree().unwrap_or(0) % 2 == 1 {
                -s
            } else {
                s
            }
        }
    }
}

fn variations(chain: &[Polynomial], at: &Bound) -> usize {
    let signs = chain.iter().map(|p| sign_at(p, at)).filter(|&s| s != 0);
    let mut count = 0;
    let mut last = 0;
    for s in signs {
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Number of distinct real roots of `p` in `(lo, hi]`.
pub fn sturm_count(p: &Polynomial, lo: &Bound, hi: &Bound) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let chain = sturm_chain(p);
    Ok(count_with_chain(&chain, lo, hi))
}

fn count_with_chain(chain: &[Polynomial], lo: &Bound, hi: &Bound) -> usize {
    if bound_le(hi, lo) {
        return 0;
    }
    variations(chain, lo).saturating_sub(variations(chain, hi))
}

fn bound_le(a: &Bound, b: &Bound) -> bool {
    match (a, b) {
        (Bound::NegInf, _) | (_, Bound::PosInf) => true,
        (Bound::PosInf, _) | (_, Bound::NegInf) => false,
        (Bound::Finite(x), Bound::Finite(y)) => x <= y,
    }
}

/// Distinct real roots of `p` inside `domain`, honouring open and closed ends.
pub fn count_in(p: &Polynomial, domain: &Interval) -> Result<usize> {
    let mut c = sturm_count(p, &domain.lo, &domain.hi)?;
    if let (true, Some(a)) = (domain.lo_closed, domain.lo.finite()) {
        if p.eval(a).is_zero() {
            c += 1;
        }
    }
    if let (false, Some(b)) = (domain.hi_closed, domain.hi.finite()) {
        if p.eval(b).is_zero() && c > 0 {
            c -= 1;
        }
    }
    Ok(c)
}

/// Cauchy bound: every root lies strictly inside `(-B, B)`.
pub fn cauchy_bound(p: &Polynomial) -> Q {
    let lc = p.leading().abs();
    let d = p.degree().unwrap_or(0);
    let max = p.coeffs()[..d].iter().map(|c| c.abs() / &lc).max().unwrap_or_else(Q::zero);
    max + Q::one()
}

/// A real algebraic number: exact, or the unique root of a squarefree
/// polynomial in the open interval `(lo, hi)` with nonzero values at both ends.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RealRoot {
    Exact(Q),
    Isolated { poly: Polynomial, lo: Q, hi: Q },
}

impl RealRoot {
    pub fn exact(&self) -> Option<&Q> {
        match self {
            RealRoot::Exact(q) => Some(q),
            RealRoot::Isolated { .. } => None,
        }
    }

    pub fn approx(&self) -> f64 {
        match self {
            RealRoot::Exact(q) => to_f64(q),
            RealRoot::Isolated { lo, hi, .. } => (to_f64(lo) + to_f64(hi)) / 2.0,
        }
    }

    /// Lower and upper rational bounds (equal for exact roots).
    pub fn bounds(&self) -> (Q, Q) {
        match self {
            RealRoot::Exact(q) => (q.clone(), q.clone()),
            RealRoot::Isolated { lo, hi, .. } => (lo.clone(), hi.clone()),
        }
    }

    /// Halves the isolating interval once; may discover the root exactly.
    pub fn bisect(&mut self) {
        if let RealRoot::Isolated { poly, lo, hi } = self {
            let mid = (&*lo + &*hi) / Q::from_integer(2.into());
            let s_mid = sign(&poly.eval(&mid));
            if s_mid == 0 {
                *self = RealRoot::Exact(mid);
            } else if s_mid == sign(&poly.eval(lo)) {
                *lo = mid;
            } else {
                *hi = mid;
            }
        }
    }

    pub fn refine_to(&mut self, width: &Q) {
        while let RealRoot::Isolated { lo, hi, .. } = self {
            if &(&*hi - &*lo) < width {
                break;
            }
            self.bisect();
        }
    }

    /// Tries to identify a rational root; exact whenever the root is rational.
    pub fn try_exact(&mut self) {
        let RealRoot::Isolated { poly, .. } = self else { return };
        let lc = poly.primitive_part().leading().numer().abs();
        if lc.bits() > 4096 {
            return;
        }
        // rationals with denominator dividing lc are at least 1/lc^2 apart
        let width = Q::new(BigInt::one(), &lc * &lc);
        self.refine_to(&width);
        if let RealRoot::Isolated { poly, lo, hi } = self {
            let candidate = simplest_between(lo, hi);
            if poly.eval(&candidate).is_zero() {
                *self = RealRoot::Exact(candidate);
            }
        }
    }

    /// Exact sign of `q` at this root.
    pub fn sign_of(&self, q: &Polynomial) -> i32 {
        let mut root = self.clone();
        loop {
            match &root {
                RealRoot::Exact(x) => return sign(&q.eval(x)),
                RealRoot::Isolated { poly, lo, hi } => {
                    let g = poly.gcd(q);
                    if !g.is_constant() && sign(&g.eval(lo)) * sign(&g.eval(hi)) < 0 {
                        return 0;
                    }
                    if q.is_zero() {
                        return 0;
                    }
                    let inside =
                        sturm_count(q, &Bound::Finite(lo.clone()), &Bound::Finite(hi.clone())).expect("nonzero");
                    if inside == 0 && !q.eval(lo).is_zero() {
                        return sign(&q.eval(lo));
                    }
                }
            }
            root.bisect();
        }
    }

    /// Compares this root with a rational.
    pub fn cmp_rational(&self, x: &Q) -> Ordering {
        match self {
            RealRoot::Exact(r) => r.cmp(x),
            RealRoot::Isolated { poly, lo, hi } => {
                if x <= lo {
                    return Ordering::Greater;
                }
                if x >= hi {
                    return Ordering::Less;
                }
                let s = sign(&poly.eval(x));
                if s == 0 {
                    Ordering::Equal
                } else if s == sign(&poly.eval(lo)) {
                    Ordering::Greater
                } else {
                    Ordering::Less
                }
            }
        }
    }

    pub fn in_interval(&self, domain: &Interval) -> bool {
        let above = match &domain.lo {
            Bound::NegInf => true,
            Bound::Finite(a) => match self.cmp_rational(a) {
                Ordering::Greater => true,
                Ordering::Equal => domain.lo_closed,
                Ordering::Less => false,
            },
            Bound::PosInf => false,
        };
        let below = match &domain.hi {
            Bound::PosInf => true,
            Bound::Finite(b) => match self.cmp_rational(b) {
                Ordering::Less => true,
                Ordering::Equal => domain.hi_closed,
                Ordering::Greater => false,
            },
            Bound::NegInf => false,
        };
        above && below
    }
}

impl fmt::Display for RealRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RealRoot::Exact(q) => f.write_str(&format_rational(q)),
            RealRoot::Isolated { poly, lo, hi } => {
                write!(f, "root of {poly} in ({}, {})", format_rational(lo), format_rational(hi))
            }
        }
    }
}

/// The rational with the smallest denominator in the open interval `(lo, hi)`.
pub fn simplest_between(lo: &Q, hi: &Q) -> Q {
    debug_assert!(lo < hi);
    if lo.is_negative() && hi.is_positive() {
        return Q::zero();
    }
    if !hi.is_positive() {
        return -simplest_between(&-hi, &-lo);
    }
    simplest_positive(lo, Some(hi))
}

/// Simplest rational in `(lo, hi)` for `lo >= 0`; `hi = None` means infinity.
fn simplest_positive(lo: &Q, hi: Option<&Q>) -> Q {
    let next = lo.floor() + Q::one();
    if hi.is_none_or(|h| &next < h) {
        return next;
    }
    let hi = hi.expect("bounded here");
    let fl = lo.floor();
    let frac_lo = lo - &fl;
    let frac_hi = hi - &fl;
    // lo and hi share the integer part; recurse on reciprocals of the fractional parts
    let inner = if frac_lo.is_zero() {
        simplest_positive(&frac_hi.recip(), None)
    } else {
        simplest_positive(&frac_hi.recip(), Some(&frac_lo.recip()))
    };
    fl + inner.recip()
}

/// Isolates the distinct real roots of `p` in `domain`, sorted increasingly.
pub fn isolate_roots(p: &Polynomial, domain: &Interval) -> Result<Vec<RealRoot>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let sqf = positive_primitive(&p.squarefree_part());
    if sqf.is_constant() {
        return Ok(Vec::new());
    }
    let chain = sturm_chain(&sqf);
    let bound = cauchy_bound(&sqf);
    let lo = match &domain.lo {
        Bound::Finite(a) => a.clone().max(-&bound),
        _ => -&bound,
    };
    let hi = match &domain.hi {
        Bound::Finite(b) => b.clone().min(bound.clone()),
        _ => bound.clone(),
    };
    let mut out = Vec::new();
    if let (true, Some(a)) = (domain.lo_closed, domain.lo.finite()) {
        if sqf.eval(a).is_zero() {
            out.push(RealRoot::Exact(a.clone()));
        }
    }
    if lo < hi {
        let count = count_with_chain(&chain, &Bound::Finite(lo.clone()), &Bound::Finite(hi.clone()));
        isolate_rec(&sqf, &chain, lo, hi, count, &mut out);
    }
    if let (false, Some(b)) = (domain.hi_closed, domain.hi.finite()) {
        out.retain(|r| r.exact() != Some(b));
    }
    Ok(out)
}

fn isolate_rec(p: &Polynomial, chain: &[Polynomial], lo: Q, hi: Q, count: usize, out: &mut Vec<RealRoot>) {
    if count == 0 {
        return;
    }
    if count == 1 {
        if p.eval(&hi).is_zero() {
            out.push(RealRoot::Exact(hi));
            return;
        }
        if !p.eval(&lo).is_zero() {
            out.push(RealRoot::Isolated { poly: p.clone(), lo, hi });
            return;
        }
    }
    let mid = (&lo + &hi) / Q::from_integer(2.into());
    let left = count_with_chain(chain, &Bound::Finite(lo.clone()), &Bound::Finite(mid.clone()));
    isolate_rec(p, chain, lo, mid.clone(), left, out);
    isolate_rec(p, chain, mid, hi, count - left, out);
}

/// Whether `p` is strictly monotone on `domain` (no sign change of `p'` inside).
pub fn is_strictly_monotone(p: &Polynomial, domain: &Interval) -> bool {
    let d = p.derivative();
    if d.is_zero() {
        return false;
    }
    let factors = d.squarefree_decomposition();
    let odd = factors.iter().enumerate().filter(|(i, _)| i % 2 == 0).fold(Polynomial::one(), |acc, (_, f)| &acc * f);
    let interior = Interval { lo: domain.lo.clone(), hi: domain.hi.clone(), lo_closed: false, hi_closed: false };
    count_in(&odd, &interior).map(|c| c == 0).unwrap_or(false)
}

/// Integer content helper for callers that need a primitive integer polynomial.
pub fn integer_coeffs(p: &Polynomial) -> Vec<BigInt> {
    let lcm = p.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    p.coeffs().iter().map(|c| (c * Q::from_integer(lcm.clone())).to_integer()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qf};

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    fn fin(x: i64) -> Bound {
        Bound::Finite(q(x))
    }

    #[test]
    fn interval_parsing() {
        let i: Interval = "0..inf".parse().unwrap();
        assert_eq!(i, Interval::open(fin(0), Bound::PosInf).unwrap());
        let i: Interval = "[-1/2..3]".parse().unwrap();
        assert_eq!(i, Interval::new(Bound::Finite(qf(-1, 2)), fin(3), true, true).unwrap());
        assert_eq!(i.to_string().parse::<Interval>().unwrap(), i);
        assert!("(-inf..inf)".parse::<Interval>().unwrap().is_real_line());
        assert!("2..1".parse::<Interval>().is_err());
        assert!("0,1".parse::<Interval>().is_err());
        assert!("a..1".parse::<Interval>().is_err());
    }

    #[test]
    fn sturm_examples() {
        assert_eq!(sturm_count(&p(&[-1, 0, 1]), &fin(-2), &fin(2)).unwrap(), 2);
        assert_eq!(sturm_count(&p(&[1, 0, 1]), &Bound::NegInf, &Bound::PosInf).unwrap(), 0);
        assert_eq!(sturm_count(&p(&[0, 0, 0, 1]), &fin(-1), &fin(1)).unwrap(), 1);
        assert_eq!(sturm_count(&Polynomial::zero(), &fin(0), &fin(1)), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn half_open_counting() {
        let f = p(&[-1, 0, 1]);
        assert_eq!(sturm_count(&f, &fin(-1), &fin(1)).unwrap(), 1);
        assert_eq!(sturm_count(&f, &fin(1), &fin(3)).unwrap(), 0);
        assert_eq!(sturm_count(&f, &fin(3), &fin(-3)).unwrap(), 0);
        let closed = Interval::new(fin(-1), fin(1), true, true).unwrap();
        assert_eq!(count_in(&f, &closed).unwrap(), 2);
        let open = Interval::open(fin(-1), fin(1)).unwrap();
        assert_eq!(count_in(&f, &open).unwrap(), 0);
    }

    #[test]
    fn isolation_and_exact_detection() {
        // (t - 1/2)(t^2 - 2)(t + 3)
        let f = &(&p(&[-1, 2]) * &p(&[-2, 0, 1])) * &p(&[3, 1]);
        let mut roots = isolate_roots(&f, &Interval::real_line()).unwrap();
        assert_eq!(roots.len(), 4);
        for r in &mut roots {
            r.try_exact();
        }
        let exact: Vec<_> = roots.iter().filter_map(|r| r.exact().cloned()).collect();
        assert_eq!(exact, vec![q(-3), qf(1, 2)]);
        let approx: Vec<f64> = roots.iter().map(RealRoot::approx).collect();
        assert!((approx[1] + 2f64.sqrt()).abs() < 0.5);
    }

    #[test]
    fn sign_at_algebraic_root() {
        let mut roots = isolate_roots(&p(&[-2, 0, 1]), &Interval::real_line()).unwrap();
        let sqrt2 = roots.pop().unwrap();
        assert_eq!(sqrt2.sign_of(&p(&[-2, 0, 1])), 0);
        assert_eq!(sqrt2.sign_of(&p(&[-1, 1])), 1);
        assert_eq!(sqrt2.sign_of(&p(&[-3, 2])), -1); // 2t - 3 < 0 at 1.414
        assert_eq!(sqrt2.cmp_rational(&qf(3, 2)), Ordering::Less);
        assert_eq!(sqrt2.cmp_rational(&qf(7, 5)), Ordering::Greater);
    }

    #[test]
    fn simplest_rationals() {
        assert_eq!(simplest_between(&qf(1, 3), &qf(2, 3)), qf(1, 2));
        assert_eq!(simplest_between(&qf(-7, 2), &qf(-3, 1)), qf(-10, 3));
        assert_eq!(simplest_between(&qf(-1, 2), &qf(1, 2)), q(0));
        assert_eq!(simplest_between(&q(2), &qf(5, 2)), qf(7, 3));
    }

    #[test]
    fn monotonicity() {
        assert!(is_strictly_monotone(&p(&[0, 0, 0, 1]), &Interval::real_line()));
        assert!(!is_strictly_monotone(&p(&[0, 0, 1]), &Interval::real_line()));
        let pos = Interval::open(fin(0), Bound::PosInf).unwrap();
        assert!(is_strictly_monotone(&p(&[0, 0, 1]), &pos));
        assert!(!is_strictly_monotone(&p(&[5]), &pos));
    }

    #[test]
    fn domain_validation() {
        assert!(Interval::open(fin(1), fin(1)).is_err());
        assert!(Interval::new(fin(1), fin(1), true, true).is_ok());
        assert!(Interval::open(Bound::PosInf, fin(1)).is_err());
    }
}
