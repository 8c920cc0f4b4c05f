//! Truncated power series at 0 with exact rational coefficients.
//!
//! A [`Jet`] of order `K` stores `c_0..c_K`; everything at `t^(K+1)` and
//! beyond is unknown. Each operation states the order of its output.

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{exact_root, format_rational, parse_rational, Q};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Jet {
    coeffs: Vec<Q>,
}

/// Result of factoring `t^valuation * unit` out of a jet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HadamardSplit {
    /// Every known coefficient vanishes.
    Flat,
    Split {
        valuation: usize,
        unit: Jet,
    },
}

/// Valuation of a jet, with `Flat` above every finite order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Valuation {
    Finite(usize),
    Flat,
}

impl Jet {
    /// Builds a jet whose order is `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<Q>) -> Result<Jet> {
        if coeffs.is_empty() {
            return Err(Error::Malformed("a jet needs at least one coefficient".into()));
        }
        Ok(Jet { coeffs })
    }

    pub fn from_ints(coeffs: &[i64]) -> Jet {
        Jet::new(coeffs.iter().map(|&c| crate::rational::q(c)).collect()).expect("non-empty coefficient list")
    }

    pub fn zero(order: usize) -> Jet {
        Jet { coeffs: vec![Q::zero(); order + 1] }
    }

    pub fn constant(c: Q, order: usize) -> Jet {
        let mut j = Jet::zero(order);
        j.coeffs[0] = c;
        j
    }

    /// `c * t^power` at the given order (zero if the power exceeds it).
    pub fn monomial(c: Q, power: usize, order: usize) -> Jet {
        let mut j = Jet::zero(order);
        if power <= order {
            j.coeffs[power] = c;
        }
        j
    }

    /// Parses the comma-separated text form, e.g. `"0,1/2,-3"`.
    pub fn parse(text: &str) -> Result<Jet> {
        if text.trim().is_empty() {
            return Err(Error::Malformed("empty jet".into()));
        }
        let coeffs = text.split(',').map(parse_rational).collect::<Result<Vec<_>>>()?;
        Jet::new(coeffs)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Q {
        self.coeffs.get(k).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_flat(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn valuation(&self) -> Valuation {
        match self.coeffs.iter().position(|c| !c.is_zero()) {
            Some(v) => Valuation::Finite(v),
            None => Valuation::Flat,
        }
    }

    /// Drops coefficients above `order`; never raises the order.
    pub fn truncate(&self, order: usize) -> Jet {
        let keep = order.min(self.order()) + 1;
        Jet { coeffs: self.coeffs[..keep].to_vec() }
    }

    /// Reinterprets at `order`, dropping coefficients or appending zeros.
    ///
    /// Appending zeros asserts that the unlisted coefficients vanish.
    pub fn resize(&self, order: usize) -> Jet {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order + 1, Q::zero());
        Jet { coeffs }
    }

    /// Multiplies by `t^shift` and reinterprets at `order`.
    ///
    /// The caller is responsible for `order` not exceeding `self.order() + shift`.
    pub fn shift_up(&self, shift: usize, order: usize) -> Jet {
        let mut out = Jet::zero(order);
        for (k, c) in self.coeffs.iter().enumerate() {
            if k + shift > order {
                break;
            }
            out.coeffs[k + shift] = c.clone();
        }
        out
    }

    /// Coefficientwise equality through degree `order`.
    pub fn agrees_with(&self, other: &Jet, order: usize) -> bool {
        (0..=order).all(|k| self.coeff(k) == other.coeff(k))
    }

    /// Comma-separated text form (inverse of [`Jet::parse`]).
    pub fn to_text(&self) -> String {
        self.coeffs.iter().map(format_rational).collect::<Vec<_>>().join(",")
    }
}

impl fmt::Display for Jet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            first = false;
            let a = c.abs();
            let coef = format_rational(&a);
            match k {
                0 => write!(f, "{coef}")?,
                _ if a.is_one() => {}
                _ => write!(f, "{coef}*")?,
            }
            match k {
                0 => {}
                1 => f.write_str("t")?,
                _ => write!(f, "t^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(t^{})", self.order() + 1)
    }
}

fn same_order(f: &Jet, g: &Jet) -> Result<usize> {
    if f.order() != g.order() {
        return Err(Error::OrderMismatch { left: f.order(), right: g.order() });
    }
    Ok(f.order())
}

/// `a*f + b*g`, coefficientwise; orders must agree.
pub fn linear_combine(a: &Q, f: &Jet, b: &Q, g: &Jet) -> Result<Jet> {
    same_order(f, g)?;
    let coeffs = f.coeffs.iter().zip(&g.coeffs).map(|(x, y)| a * x + b * y).collect();
    Ok(Jet { coeffs })
}

/// Truncated Cauchy product.
pub fn mul(f: &Jet, g: &Jet) -> Result<Jet> {
    let order = same_order(f, g)?;
    Ok(mul_truncated(f, g, order))
}

fn mul_truncated(f: &Jet, g: &Jet, order: usize) -> Jet {
    let mut out = Jet::zero(order);
    for (i, a) in f.coeffs.iter().enumerate().take(order + 1) {
        if a.is_zero() {
            continue;
        }
        for (j, b) in g.coeffs.iter().enumerate().take(order + 1 - i) {
            if !b.is_zero() {
                out.coeffs[i + j] += a * b;
            }
        }
    }
    out
}

/// `f^e` by binary powering; `e = 0` gives the constant 1.
pub fn pow(f: &Jet, e: u64) -> Jet {
    let order = f.order();
    let mut result = Jet::constant(Q::one(), order);
    let mut base = f.clone();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            result = mul_truncated(&result, &base, order);
        }
        e >>= 1;
        if e > 0 {
            base = mul_truncated(&base, &base, order);
        }
    }
    result
}

/// `f ∘ g` for an inner jet with zero constant term, at order `min(f.order, g.order)`.
pub fn compose(f: &Jet, g: &Jet) -> Result<Jet> {
    if !g.coeffs[0].is_zero() {
        return Err(Error::NonzeroConstantTerm);
    }
    let order = f.order().min(g.order());
    let g = g.truncate(order);
    let mut acc = Jet::constant(f.coeff(order), order);
    for k in (0..order).rev() {
        acc = mul_truncated(&acc, &g, order);
        acc.coeffs[0] += &f.coeffs[k];
    }
    Ok(acc)
}

/// Termwise derivative; the order drops by one.
pub fn derivative(f: &Jet) -> Result<Jet> {
    if f.order() == 0 {
        return Err(Error::NoDerivative);
    }
    let coeffs = f.coeffs[1..].iter().enumerate().map(|(k, c)| c * Q::from_integer((k as i64 + 1).into())).collect();
    Ok(Jet { coeffs })
}

/// Factors `f = t^v * unit` with `unit(0) != 0`; the unit has order `K - v`.
pub fn hadamard_split(f: &Jet) -> HadamardSplit {
    match f.valuation() {
        Valuation::Flat => HadamardSplit::Flat,
        Valuation::Finite(v) => HadamardSplit::Split { valuation: v, unit: Jet { coeffs: f.coeffs[v..].to_vec() } },
    }
}

/// Reciprocal of a unit jet at the same order.
pub fn invert_unit(u: &Jet) -> Result<Jet> {
    let u0 = &u.coeffs[0];
    if u0.is_zero() {
        return Err(Error::DivisionByFlat);
    }
    let order = u.order();
    let inv0 = u0.recip();
    let mut out = Vec::with_capacity(order + 1);
    out.push(inv0.clone());
    for k in 1..=order {
        let s: Q = (1..=k).map(|j| &u.coeffs[j] * &out[k - j]).sum();
        out.push(-s * &inv0);
    }
    Ok(Jet { coeffs: out })
}

/// `f / g` when `val(g) <= val(f)`.
///
/// The quotient has order `min(f.order, g.order) - val(g)`.
pub fn div_exact(f: &Jet, g: &Jet) -> Result<Jet> {
    let (vg, ug) = match hadamard_split(g) {
        HadamardSplit::Flat => return Err(Error::DivisionByFlat),
        HadamardSplit::Split { valuation, unit } => (valuation, unit),
    };
    let base = f.order().min(g.order());
    if base < vg {
        return Err(Error::NotAJet(format!("divisor valuation {vg} exceeds the common order {base}")));
    }
    let order = base - vg;
    match hadamard_split(f) {
        HadamardSplit::Flat => Ok(Jet::zero(order)),
        HadamardSplit::Split { valuation: vf, unit: uf } => {
            if vf < vg {
                return Err(Error::NotAJet(format!("divisor valuation {vg} exceeds dividend valuation {vf}")));
            }
            let shift = vf - vg;
            if shift > order {
                return Ok(Jet::zero(order));
            }
            let unit_order = order - shift;
            let q = mul_truncated(&uf.truncate(unit_order), &invert_unit(&ug.truncate(unit_order))?, unit_order);
            Ok(q.shift_up(shift, order))
        }
    }
}

/// Rational power `u^alpha` of a unit jet, given the constant term of the result.
///
/// Uses the recurrence obtained from `u * r' = alpha * u' * r`.
fn unit_power(u: &Jet, alpha: &Q, r0: Q) -> Jet {
    let order = u.order();
    let u0 = &u.coeffs[0];
    let mut r = Vec::with_capacity(order + 1);
    r.push(r0);
    let alpha1 = alpha + Q::one();
    for k in 1..=order {
        let kq = Q::from_integer((k as i64).into());
        let mut s = Q::zero();
        for j in 1..=k {
            let weight = &alpha1 * Q::from_integer((j as i64).into()) - &kq;
            if !u.coeffs[j].is_zero() && !weight.is_zero() {
                s += weight * &u.coeffs[j] * &r[k - j];
            }
        }
        r.push(s / (kq * u0));
    }
    Jet { coeffs: r }
}

/// Exact `m`-th root of a unit jet.
///
/// The constant term must be an exact rational `m`-th power. For even `m` the
/// positive root is chosen.
pub fn root_unit(u: &Jet, m: u64) -> Result<Jet> {
    if m == 0 {
        return Err(Error::ZeroExponent);
    }
    let u0 = &u.coeffs[0];
    if u0.is_zero() {
        return Err(Error::DivisionByFlat);
    }
    if m.is_multiple_of(2) && u0.is_negative() {
        return Err(Error::NoRealRoot(format_rational(u0)));
    }
    let m32 = u32::try_from(m).map_err(|_| Error::ResourceLimit(format!("root index {m}")))?;
    let r0 = exact_root(u0, m32).ok_or_else(|| Error::ExactRootUnavailable(format_rational(u0)))?;
    let alpha = Q::new(1.into(), (m as i64).into());
    Ok(unit_power(u, &alpha, r0))
}
