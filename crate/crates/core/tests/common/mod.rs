//! Independent oracles for the integration tests.
//!
//! Nothing here calls into the library's polynomial or root-finding code: the
//! root counter has its own exact arithmetic, so a shared bug cannot make both
//! sides agree.
#![allow(dead_code)]

use jetworks::jet::Jet;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;

type Q = BigRational;
type P = Vec<Q>;

fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

fn trim(mut p: P) -> P {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn eval(p: &P, x: &Q) -> Q {
    p.iter().rev().fold(Q::zero(), |acc, c| acc * x + c)
}

fn derivative(p: &P) -> P {
    trim(p.iter().enumerate().skip(1).map(|(k, c)| c * qi(k as i64)).collect())
}

fn rem(a: &P, b: &P) -> P {
    let mut r = a.clone();
    let lb = b.last().unwrap().clone();
    while r.len() >= b.len() {
        let c = r.last().unwrap() / &lb;
        let shift = r.len() - b.len();
        for (i, bc) in b.iter().enumerate() {
            r[shift + i] -= &c * bc;
        }
        r.pop();
        r = trim(r);
    }
    r
}

fn quot(a: &P, b: &P) -> P {
    let mut r = a.clone();
    let lb = b.last().unwrap().clone();
    let mut q = vec![Q::zero(); a.len().saturating_sub(b.len()) + 1];
    while r.len() >= b.len() && !r.is_empty() {
        let c = r.last().unwrap() / &lb;
        let shift = r.len() - b.len();
        for (i, bc) in b.iter().enumerate() {
            r[shift + i] -= &c * bc;
        }
        q[shift] = c;
        r.pop();
    }
    trim(q)
}

fn gcd(a: &P, b: &P) -> P {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_empty() {
        let r = rem(&a, &b);
        a = b;
        b = r;
    }
    a
}

/// `p(a + w*y)` as a polynomial in `y`.
fn affine_substitute(p: &P, a: &Q, w: &Q) -> P {
    let mut acc: P = Vec::new();
    for c in p.iter().rev() {
        // acc = acc * (a + w y) + c
        let mut next = vec![Q::zero(); acc.len() + 1];
        for (i, v) in acc.iter().enumerate() {
            next[i] += v * a;
            next[i + 1] += v * w;
        }
        next[0] += c;
        acc = trim(next);
    }
    acc
}

fn sign_variations(p: &P) -> usize {
    let signs: Vec<bool> = p.iter().filter(|c| !c.is_zero()).map(|c| c.is_positive()).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Roots of a squarefree `p` in the open interval `(a, b)`, by Descartes' rule
/// on the Möbius image of the interval and bisection (Vincent's theorem
/// guarantees termination).
fn count_open(p: &P, a: &Q, b: &Q) -> usize {
    let q = affine_substitute(p, a, &(b - a));
    // (1+z)^deg q(1/(1+z)): reverse, then shift by one
    let mut rev = q.clone();
    rev.reverse();
    let r = affine_substitute(&rev, &Q::one(), &Q::one());
    match sign_variations(&r) {
        0 => 0,
        1 => 1,
        _ => {
            let mid = (a + b) / qi(2);
            let at_mid = usize::from(eval(p, &mid).is_zero());
            count_open(p, a, &mid) + at_mid + count_open(p, &mid, b)
        }
    }
}

/// Distinct real roots of the integer polynomial `coeffs` in `(lo, hi]`.
pub fn root_count_oracle(coeffs: &[i64], lo: i64, hi: i64) -> usize {
    let p = trim(coeffs.iter().map(|&c| qi(c)).collect());
    assert!(!p.is_empty(), "zero polynomial");
    if p.len() == 1 {
        return 0;
    }
    let g = gcd(&p, &derivative(&p));
    let sqf = quot(&p, &g);
    let (lo, hi) = (qi(lo), qi(hi));
    count_open(&sqf, &lo, &hi) + usize::from(eval(&sqf, &hi).is_zero())
}

/// Largest integer not of the form `c1*m + c2*n`, by direct search.
pub fn brute_frobenius(m: u64, n: u64) -> Option<u64> {
    let limit = (m * n) as usize;
    let mut reachable = vec![false; limit + 1];
    reachable[0] = true;
    for r in 1..=limit {
        reachable[r] = (r >= m as usize && reachable[r - m as usize]) || (r >= n as usize && reachable[r - n as usize]);
    }
    (0..=limit).rev().find(|&r| !reachable[r]).map(|r| r as u64)
}

/// Whether `r = c1*m + c2*n` for some non-negative `c1, c2`.
pub fn brute_representable(m: u64, n: u64, r: u64) -> bool {
    (0..=r / m).any(|c1| (r - c1 * m).is_multiple_of(n))
}

/// Determinant by cofactor expansion; fine for the small matrices used in tests.
pub fn laplace_det(m: &[Vec<Q>]) -> Q {
    let n = m.len();
    if n == 0 {
        return Q::one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut total = Q::zero();
    for col in 0..n {
        if m[0][col].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Q>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(j, _)| j != col).map(|(_, v)| v.clone()).collect())
            .collect();
        let term = &m[0][col] * laplace_det(&minor);
        if col % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// A rational with numerator in `[-9, 9]` and denominator in `[1, 5]`.
pub fn small_rational(rng: &mut impl Rng) -> Q {
    Q::new(BigInt::from(rng.gen_range(-9i64..=9)), BigInt::from(rng.gen_range(1i64..=5)))
}

/// A random jet of the given order with valuation exactly `val` (`val <= order`).
pub fn random_jet(rng: &mut impl Rng, order: usize, val: usize) -> Jet {
    let coeffs = (0..=order)
        .map(|k| match k.cmp(&val) {
            std::cmp::Ordering::Less => Q::zero(),
            std::cmp::Ordering::Equal => loop {
                let c = small_rational(rng);
                if !c.is_zero() {
                    break c;
                }
            },
            std::cmp::Ordering::Greater => small_rational(rng),
        })
        .collect();
    Jet::new(coeffs).unwrap()
}

#[test]
fn oracle_self_check() {
    // (t-1)^2 (t+3) (t^2-2): roots 1, -3, ±sqrt 2
    assert_eq!(root_count_oracle(&[-6, 10, 1, -7, 1, 1], -10, 10), 4);
    // (t-1)^3: one distinct root; excluded when it sits on the open left end
    assert_eq!(root_count_oracle(&[-1, 3, -3, 1], -10, 10), 1);
    assert_eq!(root_count_oracle(&[-1, 3, -3, 1], 1, 10), 0);
    assert_eq!(root_count_oracle(&[-1, 3, -3, 1], 0, 1), 1);
    assert_eq!(root_count_oracle(&[-1, 0, 1], -1, 1), 1);
    assert_eq!(root_count_oracle(&[1, 0, 1], -10, 10), 0);
    assert_eq!(brute_frobenius(3, 5), Some(7));
    assert_eq!(laplace_det(&[vec![qi(1), qi(2)], vec![qi(3), qi(4)]]), qi(-2));
}
