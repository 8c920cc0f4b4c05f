//! Jet-level reconstruction of `g` from the jets of `g^m` and `g^n`.
//!
//! Both inputs are factored as `t^M * h1` and `t^N * h2`. A smooth `g` forces
//! `M*n == N*m` with `m | M`; the unit of `g` is then `h1^a * h2^b` for the
//! Bezout pair `a*m + b*n == 1`, so no root extraction is needed.

use num_traits::{One, Signed};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::jet::{self, hadamard_split, HadamardSplit, Jet, Valuation};
use crate::numsg::bezout_neg_pos;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum SignSource {
    /// Sign fixed through an odd exponent (Bezout product or odd root).
    OddExponent,
    /// Both inputs flat; the recovered jet is zero.
    Flat,
    /// One exponent is 1, so `g` is read off directly.
    None,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecoveredJet {
    /// Order equals the input order; coefficients above `guaranteed_order` are zero placeholders.
    pub jet: Jet,
    pub guaranteed_order: usize,
    pub sign_source: SignSource,
}

impl RecoveredJet {
    /// The coefficients the input data actually determines.
    pub fn guaranteed(&self) -> Jet {
        self.jet.truncate(self.guaranteed_order)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Consistent,
    Inconsistent,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConsistencyReport {
    pub val_a: Valuation,
    pub val_b: Valuation,
    /// `M*n == N*m`; a flat side passes when the valuation it must have lies beyond the order.
    pub law_holds: bool,
    /// `m | M` and `n | N` on the non-flat sides.
    pub divisibility_holds: bool,
    /// No negative leading coefficient under an even exponent.
    pub sign_holds: bool,
    pub verdict: Verdict,
    pub reason: Option<String>,
}

impl ConsistencyReport {
    pub fn is_consistent(&self) -> bool {
        self.verdict == Verdict::Consistent
    }
}

fn check_exponents(m: u64, n: u64) -> Result<()> {
    bezout_neg_pos(m, n).map(|_| ())
}

fn leading_negative(split: &HadamardSplit) -> bool {
    match split {
        HadamardSplit::Split { unit, .. } => unit.coeffs()[0].is_negative(),
        HadamardSplit::Flat => false,
    }
}

/// Applies the necessary conditions every pair `(g^m, g^n)` satisfies.
pub fn check_consistency(a: &Jet, b: &Jet, m: u64, n: u64) -> Result<ConsistencyReport> {
    check_exponents(m, n)?;
    if a.order() != b.order() {
        return Err(Error::OrderMismatch { left: a.order(), right: b.order() });
    }
    let order = a.order() as u64;
    let (val_a, val_b) = (a.valuation(), b.valuation());
    let mut reasons = Vec::new();

    let (law_holds, divisibility_holds) = match (val_a, val_b) {
        (Valuation::Flat, Valuation::Flat) => (true, true),
        (Valuation::Finite(va), Valuation::Finite(vb)) => {
            let (va, vb) = (va as u64, vb as u64);
            let law = va * n == vb * m;
            if !law {
                reasons.push(format!("valuation law Mn=Nm violated (M={va}, N={vb}, m={m}, n={n})"));
            }
            let div = va % m == 0 && vb % n == 0;
            if !div {
                reasons.push(format!("exponents must divide valuations (M={va}, N={vb}, m={m}, n={n})"));
            }
            (law, div)
        }
        (Valuation::Finite(v), Valuation::Flat) | (Valuation::Flat, Valuation::Finite(v)) => {
            let a_side = matches!(val_a, Valuation::Finite(_));
            let (own, other) = if a_side { (m, n) } else { (n, m) };
            let v = v as u64;
            let div = v.is_multiple_of(own);
            // the flat side must have valuation v*other/own, which has to exceed the order
            let law = div && v * other / own > order;
            if !div {
                reasons.push(format!("exponent {own} does not divide valuation {v}"));
            }
            if div && !law {
                reasons.push(format!(
                    "valuation law Mn=Nm violated (flat side needs valuation {} <= order {order})",
                    v * other / own
                ));
            }
            (law, div)
        }
    };

    let mut sign_holds = true;
    for (jet, e, name) in [(a, m, "A"), (b, n, "B")] {
        if e % 2 == 0 && leading_negative(&hadamard_split(jet)) {
            sign_holds = false;
            reasons.push(format!("{name} has a negative leading coefficient under even exponent {e}"));
        }
    }

    let ok = law_holds && divisibility_holds && sign_holds;
    Ok(ConsistencyReport {
        val_a,
        val_b,
        law_holds,
        divisibility_holds,
        sign_holds,
        verdict: if ok { Verdict::Consistent } else { Verdict::Inconsistent },
        reason: (!reasons.is_empty()).then(|| reasons.join("; ")),
    })
}

/// `f^e` for a possibly negative exponent of a unit jet.
fn unit_signed_pow(u: &Jet, e: i64) -> Result<Jet> {
    let p = jet::pow(u, e.unsigned_abs());
    if e < 0 {
        jet::invert_unit(&p)
    } else {
        Ok(p)
    }
}

/// Reconstructs the jet of `g` from the jets `a = g^m` and `b = g^n`.
pub fn recover_jet(a: &Jet, b: &Jet, m: u64, n: u64) -> Result<RecoveredJet> {
    let report = check_consistency(a, b, m, n)?;
    if !report.is_consistent() {
        return Err(Error::InconsistentPair(report.reason.unwrap_or_default()));
    }
    let order = a.order();
    let (split_a, split_b) = (hadamard_split(a), hadamard_split(b));

    let recovered = match (split_a, split_b) {
        (HadamardSplit::Flat, HadamardSplit::Flat) => RecoveredJet {
            jet: Jet::zero(order),
            guaranteed_order: order / m.min(n) as usize,
            sign_source: SignSource::Flat,
        },
        (HadamardSplit::Split { valuation: va, unit: ha }, HadamardSplit::Split { unit: hb, .. }) => {
            let v = va / m as usize;
            let common = order - m.max(n) as usize * v;
            let (ca, cb) = bezout_neg_pos(m, n)?.coefficients();
            let ua = unit_signed_pow(&ha.truncate(common), ca)?;
            let ub = unit_signed_pow(&hb.truncate(common), cb)?;
            let unit = jet::mul(&ua, &ub)?;
            RecoveredJet {
                jet: unit.shift_up(v, order),
                guaranteed_order: common + v,
                sign_source: if m == 1 || n == 1 { SignSource::None } else { SignSource::OddExponent },
            }
        }
        (HadamardSplit::Split { valuation, unit }, HadamardSplit::Flat)
        | (HadamardSplit::Flat, HadamardSplit::Split { valuation, unit }) => {
            let e = if a.is_flat() { n } else { m };
            if e % 2 == 0 {
                return Err(Error::AmbiguousSign);
            }
            let v = valuation / e as usize;
            let root = jet::root_unit(&unit, e)?;
            RecoveredJet {
                jet: root.shift_up(v, order),
                guaranteed_order: order - valuation + v,
                sign_source: if e == 1 { SignSource::None } else { SignSource::OddExponent },
            }
        }
    };

    verify_repowering(&recovered, a, m)?;
    verify_repowering(&recovered, b, n)?;
    Ok(recovered)
}

/// `recovered^e` must match `target` as far as the guaranteed coefficients determine it.
fn verify_repowering(recovered: &RecoveredJet, target: &Jet, e: u64) -> Result<()> {
    let order = target.order();
    let g = recovered.guaranteed_order;
    let check_to = match recovered.jet.valuation() {
        // g = O(t^(G+1)), so g^e = O(t^(e(G+1)))
        Valuation::Flat => order,
        Valuation::Finite(v) => order.min(g + (e as usize - 1) * v),
    };
    let powered = jet::pow(&recovered.jet, e);
    if !powered.agrees_with(target, check_to) {
        return Err(Error::InconsistentPair(format!(
            "re-powering check failed: g^{e} differs from the input below order {}",
            check_to + 1
        )));
    }
    Ok(())
}

/// Outcome of powering a jet and recovering it again.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoundTrip {
    pub ok: bool,
    pub reason: Option<String>,
}

/// Powers `g` to `g^m`, `g^n`, recovers, and compares up to the guaranteed order.
pub fn recover_roundtrip_check(g: &Jet, m: u64, n: u64) -> RoundTrip {
    let a = jet::pow(g, m);
    let b = jet::pow(g, n);
    match recover_jet(&a, &b, m, n) {
        Ok(r) if r.jet.agrees_with(g, r.guaranteed_order) => RoundTrip { ok: true, reason: None },
        Ok(r) => RoundTrip {
            ok: false,
            reason: Some(format!("recovered {} differs from {} below order {}", r.jet, g, r.guaranteed_order + 1)),
        },
        Err(e) => RoundTrip { ok: false, reason: Some(e.to_string()) },
    }
}

/// The constant-one jet, handy for callers building test data.
pub fn one(order: usize) -> Jet {
    Jet::constant(num_rational::BigRational::one(), order)
}
