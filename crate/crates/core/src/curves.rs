//! Exact tests on polynomial plane curves `t -> (x(t), y(t))`.
//!
//! Immersion reduces to real roots of `gcd(x', y')`. Injectivity looks for
//! pairs `s != t` with `p(s,t) = q(s,t) = 0`, where `p`, `q` are the divided
//! differences of `x` and `y`; `s` is eliminated with a resultant and the
//! partner of each candidate `t` is read off the first subresultant.

use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rational::{qf, Q};
use crate::real_roots::{is_strictly_monotone, isolate_roots, Bound, Interval, RealRoot};
use crate::resultant::{first_subresultant, resultant_s, BiPoly};

pub const DEFAULT_MAX_COMPONENT_DEGREE: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CurveConfig {
    /// Largest degree accepted for either component by the injectivity test.
    pub max_degree: usize,
}

impl Default for CurveConfig {
    fn default() -> Self {
        CurveConfig { max_degree: DEFAULT_MAX_COMPONENT_DEGREE }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneCurve {
    pub x: Polynomial,
    pub y: Polynomial,
    pub domain: Interval,
}

impl PlaneCurve {
    pub fn new(x: Polynomial, y: Polynomial, domain: Interval) -> PlaneCurve {
        PlaneCurve { x, y, domain }
    }

    pub fn on_real_line(x: Polynomial, y: Polynomial) -> PlaneCurve {
        PlaneCurve::new(x, y, Interval::real_line())
    }

    /// Both components constant.
    pub fn is_degenerate(&self) -> bool {
        self.x.is_constant() && self.y.is_constant()
    }

    pub fn point(&self, t: &Q) -> (Q, Q) {
        (self.x.eval(t), self.y.eval(t))
    }

    fn nondegenerate(&self) -> Result<()> {
        if self.is_degenerate() {
            Err(Error::DegenerateCurve)
        } else {
            Ok(())
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Truth {
    True,
    False,
    Unknown,
}

impl fmt::Display for Truth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Truth::True => "TRUE",
            Truth::False => "FALSE",
            Truth::Unknown => "UNKNOWN",
        })
    }
}

/// Evidence attached to a verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// A parameter where a property fails (e.g. a critical point).
    Parameter(RealRoot),
    /// Two distinct parameters with the same image. When either is not exact,
    /// `relation = (A, B)` certifies `s = -B(t)/A(t)`.
    Pair { s: RealRoot, t: RealRoot, relation: Option<(Polynomial, Polynomial)> },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Parameter(t) => write!(f, "t = {t}"),
            Witness::Pair { s, t, .. } => write!(f, "(s, t) = ({s}, {t})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThreeValued {
    pub value: Truth,
    pub witness: Option<Witness>,
    /// How the verdict was reached.
    pub method: &'static str,
}

impl ThreeValued {
    fn yes(method: &'static str) -> Self {
        ThreeValued { value: Truth::True, witness: None, method }
    }

    fn no(witness: Witness, method: &'static str) -> Self {
        ThreeValued { value: Truth::False, witness: Some(witness), method }
    }

    fn unknown(method: &'static str) -> Self {
        ThreeValued { value: Truth::Unknown, witness: None, method }
    }
}

/// TRUE iff `x'` and `y'` have no common real zero in the domain.
pub fn immersion_test(c: &PlaneCurve) -> Result<ThreeValued> {
    c.nondegenerate()?;
    let g = c.x.derivative().gcd(&c.y.derivative());
    if g.is_constant() {
        return Ok(ThreeValued::yes("gcd(x', y') is constant"));
    }
    let mut roots = isolate_roots(&g, &c.domain)?;
    if roots.is_empty() {
        return Ok(ThreeValued::yes("gcd(x', y') has no real root in the domain"));
    }
    let mut first = roots.remove(0);
    first.try_exact();
    Ok(ThreeValued::no(Witness::Parameter(first), "common real root of x' and y'"))
}

/// Vanishing order of a component at a point; constant components never stop vanishing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum VanishingOrder {
    Finite(usize),
    Infinite,
}

impl fmt::Display for VanishingOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VanishingOrder::Finite(k) => write!(f, "{k}"),
            VanishingOrder::Infinite => f.write_str("inf"),
        }
    }
}

fn order_at(p: &Polynomial, t0: &Q) -> VanishingOrder {
    let shifted = &p.taylor_shift(t0) - &Polynomial::constant(p.eval(t0));
    match shifted.valuation() {
        Some(k) => VanishingOrder::Finite(k),
        None => VanishingOrder::Infinite,
    }
}

/// Orders of vanishing of `x - x(t0)` and `y - y(t0)` at `t0`.
pub fn vanishing_orders(c: &PlaneCurve, t0: &Q) -> (VanishingOrder, VanishingOrder) {
    (order_at(&c.x, t0), order_at(&c.y, t0))
}

/// Sign of `s(alpha) - bound` where `s = -B/A`, given `sign(A(alpha))`.
fn partner_minus(a: &Polynomial, b: &Polynomial, alpha: &RealRoot, bound: &Q, sign_a: i32) -> i32 {
    // s - bound = -(B + bound*A)/A
    let num = b + &a.scale(bound);
    -alpha.sign_of(&num) * sign_a
}

fn partner_in_domain(a: &Polynomial, b: &Polynomial, alpha: &RealRoot, domain: &Interval, sign_a: i32) -> bool {
    let above = match &domain.lo {
        Bound::Finite(lo) => {
            let s = partner_minus(a, b, alpha, lo, sign_a);
            s > 0 || (s == 0 && domain.lo_closed)
        }
        _ => true,
    };
    let below = match &domain.hi {
        Bound::Finite(hi) => {
            let s = partner_minus(a, b, alpha, hi, sign_a);
            s < 0 || (s == 0 && domain.hi_closed)
        }
        _ => true,
    };
    above && below
}

/// Locates `s = -B(alpha)/A(alpha)` among the other real roots of the eliminant.
fn identify_partner(
    a: &Polynomial,
    b: &Polynomial,
    alpha: &RealRoot,
    sign_a: i32,
    roots: &[RealRoot],
) -> Option<RealRoot> {
    if let Some(t) = alpha.exact() {
        return Some(RealRoot::Exact(-b.eval(t) / a.eval(t)));
    }
    roots.iter().find_map(|beta| match beta {
        RealRoot::Exact(v) => (partner_minus(a, b, alpha, v, sign_a) == 0).then(|| beta.clone()),
        RealRoot::Isolated { lo, hi, .. } => {
            let inside = partner_minus(a, b, alpha, lo, sign_a) > 0 && partner_minus(a, b, alpha, hi, sign_a) < 0;
            inside.then(|| beta.clone())
        }
    })
}

/// Rational parameters used to probe for coincidences when elimination degenerates.
fn sample_parameters(c: &PlaneCurve) -> Vec<Q> {
    let mut out = Vec::new();
    for k in -8..=8i64 {
        for d in [1i64, 2, 3, 5] {
            out.push(qf(k, d));
        }
    }
    let critical = &c.x.derivative() * &c.y.derivative();
    if !critical.is_zero() {
        if let Ok(roots) = isolate_roots(&critical, &c.domain) {
            for mut r in roots {
                for k in 1..=6u32 {
                    let w = Q::new(1.into(), num_bigint::BigInt::from(4).pow(k));
                    r.refine_to(&w);
                    let (lo, hi) = r.bounds();
                    out.extend([&lo - &w, lo, hi.clone(), &hi + &w]);
                }
            }
        }
    }
    out.retain(|t| c.domain.contains(t));
    out.sort();
    out.dedup();
    out
}

/// For a fixed rational `t`, real `s != t` in the domain with the same image.
fn coincidence_at(c: &PlaneCurve, p: &BiPoly, qq: &BiPoly, t: &Q) -> Option<RealRoot> {
    let g = p.at_t(t).gcd(&qq.at_t(t));
    if g.is_constant() {
        return None;
    }
    // drop the diagonal factor (s - t)
    let mut g = g;
    let lin = Polynomial::new(vec![-t.clone(), Q::from_integer(1.into())]);
    while let Some(rest) = g.div_exact(&lin) {
        if g.is_constant() {
            break;
        }
        g = rest;
    }
    if g.is_constant() {
        return None;
    }
    let roots = isolate_roots(&g, &c.domain).ok()?;
    roots.into_iter().next().map(|mut r| {
        r.try_exact();
        r
    })
}

fn sampled_witness(c: &PlaneCurve, p: &BiPoly, qq: &BiPoly) -> Option<Witness> {
    sample_parameters(c)
        .into_iter()
        .find_map(|t| coincidence_at(c, p, qq, &t).map(|s| Witness::Pair { s, t: RealRoot::Exact(t), relation: None }))
}

fn fallback(c: &PlaneCurve, p: &BiPoly, qq: &BiPoly, why: &'static str) -> ThreeValued {
    if let Some(w) = sampled_witness(c, p, qq) {
        return ThreeValued::no(w, "coincidence found by exact sampling");
    }
    if is_strictly_monotone(&c.x, &c.domain) || is_strictly_monotone(&c.y, &c.domain) {
        return ThreeValued::yes("a component is strictly monotone on the domain");
    }
    ThreeValued::unknown(why)
}

/// Decides whether the curve is one-to-one on its domain.
pub fn injectivity_test(c: &PlaneCurve, cfg: &CurveConfig) -> Result<ThreeValued> {
    c.nondegenerate()?;
    for comp in [&c.x, &c.y] {
        let d = comp.degree().unwrap_or(0);
        if d > cfg.max_degree {
            return Err(Error::ResourceLimit(format!("component degree {d} exceeds the limit {}", cfg.max_degree)));
        }
    }
    let p = BiPoly::divided_difference(&c.x);
    let qq = BiPoly::divided_difference(&c.y);
    if p.is_zero() || qq.is_zero() {
        return Ok(fallback(c, &p, &qq, "a component is constant"));
    }
    if p.degree_s() == Some(0) || qq.degree_s() == Some(0) {
        return Ok(ThreeValued::yes("a component is affine and nonconstant"));
    }
    let r = resultant_s(&p, &qq);
    if r.is_zero() {
        return Ok(fallback(c, &p, &qq, "resultant vanishes identically"));
    }
    let mut roots = isolate_roots(&r, &c.domain)?;
    if roots.is_empty() {
        return Ok(ThreeValued::yes("resultant has no real root in the domain"));
    }
    roots.iter_mut().for_each(RealRoot::try_exact);
    let (a, b) = first_subresultant(&p, &qq).expect("both divided differences have positive s-degree");
    let diagonal = &b + &(&a * &Polynomial::t());

    let mut unresolved = false;
    for alpha in &roots {
        let sign_a = alpha.sign_of(&a);
        if sign_a == 0 {
            // more than one common root in s here
            match alpha.exact() {
                Some(t) => {
                    if let Some(s) = coincidence_at(c, &p, &qq, t) {
                        let w = Witness::Pair { s, t: alpha.clone(), relation: None };
                        return Ok(ThreeValued::no(w, "coincidence at a rational eliminant root"));
                    }
                }
                None => unresolved = true,
            }
            continue;
        }
        if alpha.sign_of(&diagonal) == 0 {
            continue;
        }
        if !partner_in_domain(&a, &b, alpha, &c.domain, sign_a) {
            continue;
        }
        let Some(s) = identify_partner(&a, &b, alpha, sign_a, &roots) else {
            unresolved = true;
            continue;
        };
        let relation = (alpha.exact().is_none()).then(|| (a.clone(), b.clone()));
        let w = Witness::Pair { s, t: alpha.clone(), relation };
        return Ok(ThreeValued::no(w, "resultant root with a partner parameter"));
    }
    if unresolved {
        return Ok(fallback(c, &p, &qq, "elimination degenerates at an irrational root"));
    }
    Ok(ThreeValued::yes("every resultant root lies on the diagonal or outside the domain"))
}

/// Re-checks a witness against the curve with exact arithmetic.
///
/// Pairs of exact parameters are evaluated directly. Algebraic pairs are
/// checked through their relation `s = -B(t)/A(t)`.
pub fn verify_witness(c: &PlaneCurve, w: &Witness, property: Property) -> bool {
    match (property, w) {
        (Property::Immersion, Witness::Parameter(t)) => {
            t.in_interval(&c.domain) && t.sign_of(&c.x.derivative()) == 0 && t.sign_of(&c.y.derivative()) == 0
        }
        (Property::Injectivity, Witness::Pair { s, t, relation }) => {
            if !s.in_interval(&c.domain) || !t.in_interval(&c.domain) {
                return false;
            }
            match (s.exact(), t.exact(), relation) {
                (Some(s), Some(t), _) => s != t && c.point(s) == c.point(t),
                (_, _, Some((a, b))) => verify_relation(c, a, b, t),
                (Some(e), None, None) => same_image_at(c, t, e),
                (None, Some(e), None) => same_image_at(c, s, e),
                _ => false,
            }
        }
        _ => false,
    }
}

/// `alpha` differs from the rational `e` and has the same image.
fn same_image_at(c: &PlaneCurve, alpha: &RealRoot, e: &Q) -> bool {
    let (xe, ye) = c.point(e);
    alpha.cmp_rational(e) != std::cmp::Ordering::Equal
        && alpha.sign_of(&(&c.x - &Polynomial::constant(xe))) == 0
        && alpha.sign_of(&(&c.y - &Polynomial::constant(ye))) == 0
}

/// `x(-B/A) = x(t)` and `y(-B/A) = y(t)` at the root `t`, with `-B/A != t`.
fn verify_relation(c: &PlaneCurve, a: &Polynomial, b: &Polynomial, t: &RealRoot) -> bool {
    if t.sign_of(a) == 0 {
        return false;
    }
    let diagonal = b + &(a * &Polynomial::t());
    if t.sign_of(&diagonal) == 0 {
        return false;
    }
    let cleared = |f: &Polynomial| -> Polynomial {
        // A^d * (f(t) - f(-B/A)) as a polynomial in t
        let d = f.degree().unwrap_or(0);
        let neg_b = -b;
        let mut sub = Polynomial::zero();
        for (k, coef) in f.coeffs().iter().enumerate() {
            sub = &sub + &(&neg_b.pow(k) * &a.pow(d - k)).scale(coef);
        }
        &(&a.pow(d) * f) - &sub
    };
    t.sign_of(&cleared(&c.x)) == 0 && t.sign_of(&cleared(&c.y)) == 0
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Property {
    Immersion,
    Injectivity,
}

/// Pure monomial curve `t -> (c1 t^a, c2 t^b)` on the whole line, if this is one.
pub fn monomial_exponents(c: &PlaneCurve) -> Option<(u64, u64)> {
    if !c.domain.is_real_line() {
        return None;
    }
    let single = |p: &Polynomial| -> Option<u64> {
        let d = p.degree()?;
        (d >= 1 && p.coeffs()[..d].iter().all(Zero::is_zero)).then_some(d as u64)
    };
    Some((single(&c.x)?, single(&c.y)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::rational::{q, qf};

    fn curve(x: &str, y: &str) -> PlaneCurve {
        PlaneCurve::on_real_line(parse_poly(x).unwrap(), parse_poly(y).unwrap())
    }

    fn positive_half_line() -> Interval {
        Interval::open(Bound::Finite(q(0)), Bound::PosInf).unwrap()
    }

    #[test]
    fn immersion_examples() {
        let cusp = curve("t^3", "t^2");
        let r = immersion_test(&cusp).unwrap();
        assert_eq!(r.value, Truth::False);
        assert_eq!(r.witness, Some(Witness::Parameter(RealRoot::Exact(q(0)))));
        assert!(verify_witness(&cusp, r.witness.as_ref().unwrap(), Property::Immersion));

        assert_eq!(immersion_test(&curve("t", "2*t")).unwrap().value, Truth::True);
        assert_eq!(immersion_test(&curve("t^2", "t^3+t")).unwrap().value, Truth::True);
    }

    #[test]
    fn immersion_respects_domain() {
        let mut cusp = curve("t^3", "t^2");
        cusp.domain = positive_half_line();
        assert_eq!(immersion_test(&cusp).unwrap().value, Truth::True);
    }

    #[test]
    fn degenerate_curves_are_rejected() {
        let c = curve("3", "1/2");
        assert_eq!(immersion_test(&c), Err(Error::DegenerateCurve));
        assert_eq!(injectivity_test(&c, &CurveConfig::default()), Err(Error::DegenerateCurve));
    }

    #[test]
    fn injectivity_examples() {
        let cfg = CurveConfig::default();
        let cusp = curve("t^3", "t^2");
        assert_eq!(injectivity_test(&cusp, &cfg).unwrap().value, Truth::True);

        let even = curve("t^2", "t^4");
        let r = injectivity_test(&even, &cfg).unwrap();
        assert_eq!(r.value, Truth::False);
        let w = r.witness.unwrap();
        assert!(verify_witness(&even, &w, Property::Injectivity));
        match &w {
            Witness::Pair { s, t, .. } => {
                let (s, t) = (s.exact().unwrap(), t.exact().unwrap());
                assert_eq!(s, &-t.clone());
            }
            other => panic!("unexpected witness {other:?}"),
        }

        let mut half = curve("t^2", "t^3");
        half.domain = positive_half_line();
        assert_eq!(injectivity_test(&half, &cfg).unwrap().value, Truth::True);
    }

    #[test]
    fn injectivity_finds_node() {
        // nodal cubic: (t^2 - 1, t^3 - t) meets itself at t = +-1
        let node = curve("t^2 - 1", "t^3 - t");
        let r = injectivity_test(&node, &CurveConfig::default()).unwrap();
        assert_eq!(r.value, Truth::False);
        assert!(verify_witness(&node, r.witness.as_ref().unwrap(), Property::Injectivity));
        // restricted to t > 0 the node disappears
        let mut half = node.clone();
        half.domain = positive_half_line();
        assert_eq!(injectivity_test(&half, &CurveConfig::default()).unwrap().value, Truth::True);
    }

    #[test]
    fn injectivity_irrational_node() {
        // (t^2, t^3 - 2t) crosses itself at t = +-sqrt(2)
        let c = curve("t^2", "t^3 - 2*t");
        let r = injectivity_test(&c, &CurveConfig::default()).unwrap();
        assert_eq!(r.value, Truth::False);
        let w = r.witness.unwrap();
        assert!(verify_witness(&c, &w, Property::Injectivity));
        if let Witness::Pair { s, t, .. } = &w {
            let (mut s, mut t) = (s.clone(), t.clone());
            s.refine_to(&qf(1, 1 << 30));
            t.refine_to(&qf(1, 1 << 30));
            assert!((s.approx() + t.approx()).abs() < 1e-6);
            assert!((t.approx().abs() - 2f64.sqrt()).abs() < 0.1);
        }
    }

    #[test]
    fn injectivity_constant_component() {
        let cfg = CurveConfig::default();
        assert_eq!(injectivity_test(&curve("1", "t^3 + t"), &cfg).unwrap().value, Truth::True);
        let r = injectivity_test(&curve("1", "t^2"), &cfg).unwrap();
        assert_eq!(r.value, Truth::False);
    }

    #[test]
    fn degree_cap() {
        let cfg = CurveConfig { max_degree: 3 };
        assert!(matches!(injectivity_test(&curve("t^4", "t"), &cfg), Err(Error::ResourceLimit(_))));
    }

    #[test]
    fn vanishing_order_examples() {
        use VanishingOrder::*;
        assert_eq!(vanishing_orders(&curve("t^3", "t^2"), &q(0)), (Finite(3), Finite(2)));
        assert_eq!(vanishing_orders(&curve("t", "2*t"), &q(0)), (Finite(1), Finite(1)));
        assert_eq!(vanishing_orders(&curve("t^2", "t^2+t^5"), &q(0)), (Finite(2), Finite(2)));
        assert_eq!(vanishing_orders(&curve("4", "(t-1)^3"), &q(1)), (Infinite, Finite(3)));
    }

    #[test]
    fn monomial_detection() {
        assert_eq!(monomial_exponents(&curve("t^3", "-2*t^2")), Some((3, 2)));
        assert_eq!(monomial_exponents(&curve("t^3 + 1", "t^2")), None);
    }
}
