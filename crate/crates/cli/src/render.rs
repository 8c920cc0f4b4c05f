//! JSON and text renderings of command results.
//!
//! JSON goes through dedicated serializable views so field order is fixed and
//! every rational is a `"p/q"` string.

use std::fmt::Write;

use jetworks::curves::{CurveConfig, PlaneCurve, ThreeValued, Truth, Witness};
use jetworks::error::Error;
use jetworks::joris::RecoveredJet;
use jetworks::numsg::{BezoutPair, Representation};
use jetworks::probe::PairAnalysis;
use jetworks::rational::{format_rational, qf};
use jetworks::real_roots::RealRoot;
use jetworks::taxonomy::{
    catalog_notes, check_catalog_entry, CatalogCheck, CatalogEntry, CurveClassification, Evidence, FactSet,
};
use serde::Serialize;

#[allow(clippy::large_enum_variant)] // built once per run
pub enum Output {
    Recovered(RecoveredJet),
    Bezout(BezoutPair),
    Frobenius { m: u64, n: u64, frobenius: u64 },
    Represent { m: u64, n: u64, r: u64, found: Option<(Representation, &'static str)> },
    Curve(PlaneCurve, CurveClassification),
    Monomial { a: u64, b: u64, facts: FactSet },
    CatalogList(Vec<CatalogEntry>),
    CatalogCheck(CatalogCheck),
    Probe(PairAnalysis),
}

pub fn check_entry(entry: &CatalogEntry, max_degree: usize) -> Result<CatalogCheck, Error> {
    check_catalog_entry(entry, &CurveConfig { max_degree })
}

#[derive(Serialize)]
struct RecoveredView {
    coeffs: Vec<String>,
    guaranteed_order: usize,
}

#[derive(Serialize)]
struct BezoutView {
    m: u64,
    n: u64,
    a: i64,
    b: i64,
}

#[derive(Serialize)]
struct FrobeniusView {
    m: u64,
    n: u64,
    frobenius: u64,
}

#[derive(Serialize)]
struct RepresentView {
    m: u64,
    n: u64,
    r: u64,
    representable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    c1: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    c2: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    method: Option<&'static str>,
}

#[derive(Serialize)]
#[serde(untagged)]
enum RootView {
    Exact(String),
    Isolated { polynomial: String, lo: String, hi: String, approx: f64 },
}

fn root_view(r: &RealRoot) -> RootView {
    match r {
        RealRoot::Exact(q) => RootView::Exact(format_rational(q)),
        RealRoot::Isolated { .. } => {
            let mut r = r.clone();
            r.refine_to(&qf(1, 1 << 40));
            match &r {
                RealRoot::Exact(q) => RootView::Exact(format_rational(q)),
                RealRoot::Isolated { poly, lo, hi } => RootView::Isolated {
                    polynomial: poly.to_string(),
                    lo: format_rational(lo),
                    hi: format_rational(hi),
                    approx: r.approx(),
                },
            }
        }
    }
}

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum WitnessView {
    Parameter {
        t: RootView,
    },
    Pair {
        s: RootView,
        t: RootView,
        /// `[A, B]` with `s = -B(t)/A(t)`.
        #[serde(skip_serializing_if = "Option::is_none")]
        relation: Option<[String; 2]>,
    },
}

fn witness_view(w: &Witness) -> WitnessView {
    match w {
        Witness::Parameter(t) => WitnessView::Parameter { t: root_view(t) },
        Witness::Pair { s, t, relation } => WitnessView::Pair {
            s: root_view(s),
            t: root_view(t),
            relation: relation.as_ref().map(|(a, b)| [a.to_string(), b.to_string()]),
        },
    }
}

#[derive(Serialize)]
struct TestView {
    value: Truth,
    method: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<WitnessView>,
}

fn test_view(v: &ThreeValued) -> TestView {
    TestView { value: v.value, method: v.method, witness: v.witness.as_ref().map(witness_view) }
}

#[derive(Serialize)]
struct CurveView<'a> {
    x: String,
    y: String,
    domain: String,
    facts: &'a FactSet,
    immersion: TestView,
    injectivity: TestView,
    monomial: Option<(u64, u64)>,
    evidence: &'a [Evidence],
}

#[derive(Serialize)]
struct MonomialView<'a> {
    a: u64,
    b: u64,
    facts: &'a FactSet,
    #[serde(skip_serializing_if = "Option::is_none")]
    injectivity_witness: Option<(i64, i64)>,
}

#[derive(Serialize)]
struct NoteView {
    name: &'static str,
    text: &'static str,
}

#[derive(Serialize)]
struct CatalogView<'a> {
    entries: &'a [CatalogEntry],
    notes: Vec<NoteView>,
}

/// Both exponents even: `t` and `-t` share an image.
fn monomial_witness(a: u64, b: u64) -> Option<(i64, i64)> {
    (a.is_multiple_of(2) && b.is_multiple_of(2)).then_some((-1, 1))
}

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("views serialize")
}

impl Output {
    pub fn to_json(&self) -> String {
        match self {
            Output::Recovered(r) => json(&RecoveredView {
                coeffs: r.guaranteed().coeffs().iter().map(format_rational).collect(),
                guaranteed_order: r.guaranteed_order,
            }),
            Output::Bezout(p) => {
                let (a, b) = p.coefficients();
                let (m, n) = if p.swapped { (p.n, p.m) } else { (p.m, p.n) };
                json(&BezoutView { m, n, a, b })
            }
            Output::Frobenius { m, n, frobenius } => json(&FrobeniusView { m: *m, n: *n, frobenius: *frobenius }),
            Output::Represent { m, n, r, found } => json(&RepresentView {
                m: *m,
                n: *n,
                r: *r,
                representable: found.is_some(),
                c1: found.map(|(rep, _)| rep.c1),
                c2: found.map(|(rep, _)| rep.c2),
                method: found.map(|(_, how)| how),
            }),
            Output::Curve(c, res) => json(&CurveView {
                x: c.x.to_string(),
                y: c.y.to_string(),
                domain: c.domain.to_string(),
                facts: res.closure.as_ref().expect("contradictions are reported as errors"),
                immersion: test_view(&res.immersion),
                injectivity: test_view(&res.injectivity),
                monomial: res.monomial,
                evidence: &res.evidence,
            }),
            Output::Monomial { a, b, facts } => {
                json(&MonomialView { a: *a, b: *b, facts, injectivity_witness: monomial_witness(*a, *b) })
            }
            Output::CatalogList(entries) => json(&CatalogView {
                entries,
                notes: catalog_notes().iter().map(|&(name, text)| NoteView { name, text }).collect(),
            }),
            Output::CatalogCheck(c) => json(c),
            Output::Probe(a) => json(a),
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let w = &mut out;
        match self {
            Output::Recovered(r) => {
                let _ = writeln!(w, "g = {}", r.guaranteed());
                let _ = writeln!(w, "guaranteed order  {}", r.guaranteed_order);
                let _ = writeln!(w, "sign source       {:?}", r.sign_source);
            }
            Output::Bezout(p) => {
                let (a, b) = p.coefficients();
                let (m, n) = if p.swapped { (p.n, p.m) } else { (p.m, p.n) };
                let _ = writeln!(w, "a = {a}, b = {b}    ({a})*{m} + ({b})*{n} = 1");
            }
            Output::Frobenius { frobenius, .. } => {
                let _ = writeln!(w, "{frobenius}");
            }
            Output::Represent { m, n, r, found } => match found {
                Some((rep, how)) => {
                    let _ = writeln!(w, "{r} = {}*{m} + {}*{n}    ({how})", rep.c1, rep.c2);
                }
                None => {
                    let _ = writeln!(w, "{r} is not representable by {m} and {n}");
                }
            },
            Output::Curve(c, res) => {
                let _ = writeln!(w, "curve      t -> ({}, {}) on {}", c.x, c.y, c.domain);
                for (name, v) in [("immersion", &res.immersion), ("injective", &res.injectivity)] {
                    let _ = write!(w, "{name:<10} {} ({})", v.value, v.method);
                    if let Some(wit) = &v.witness {
                        let _ = write!(w, "; witness {wit}");
                    }
                    let _ = writeln!(w);
                }
                if let Some((a, b)) = res.monomial {
                    let _ = writeln!(w, "monomial   exponents ({a}, {b})");
                }
                let _ = writeln!(w);
                let _ = write!(w, "{}", res.closure.as_ref().expect("contradictions are reported as errors"));
            }
            Output::Monomial { a, b, facts } => {
                let _ = writeln!(w, "t -> (t^{a}, t^{b})");
                let _ = write!(w, "{facts}");
                if let Some((s, t)) = monomial_witness(*a, *b) {
                    let _ = writeln!(w, "non-injectivity witness (s, t) = ({s}, {t})");
                }
            }
            Output::CatalogList(entries) => {
                for e in entries {
                    let _ = writeln!(w, "{:<20} {}", e.name, e.description);
                }
                let _ = writeln!(w);
                for (name, text) in catalog_notes() {
                    let _ = writeln!(w, "note {name}: {text}");
                }
            }
            Output::CatalogCheck(c) => {
                let _ = writeln!(w, "{}: {}", c.name, if c.passed { "ok" } else { "FAILED" });
                let _ =
                    writeln!(w, "closure {}", if c.closure_matches { "matches the stored facts" } else { "differs" });
                if let Some(check) = &c.check {
                    let _ = writeln!(w, "check {:?}: {}", check.id, if check.passed { "passed" } else { "failed" });
                    for d in &check.details {
                        let _ = writeln!(w, "  {d}");
                    }
                }
                let _ = writeln!(w);
                if let Some(f) = &c.closure {
                    let _ = write!(w, "{f}");
                }
            }
            Output::Probe(a) => {
                let _ = writeln!(
                    w,
                    "recovered g from g^{} (points {}, residual {:.3e})",
                    a.odd_exponent, a.points, a.recovery_residual
                );
                let _ = writeln!(w, "verdict {}", a.report.verdict);
                let _ = writeln!(
                    w,
                    "{:<6} {:>14} {:>12} {:>12}  blowup",
                    "order", "max|estimate|", "growth 2h", "growth h"
                );
                for row in &a.report.rows {
                    let ratio = |fine: f64, coarse: f64| if coarse > 0.0 { fine / coarse } else { f64::INFINITY };
                    let _ = writeln!(
                        w,
                        "{:<6} {:>14.6e} {:>12.3} {:>12.3}  {}",
                        row.order,
                        row.max_abs_estimate,
                        ratio(row.curvature[1], row.curvature[0]),
                        ratio(row.curvature[2], row.curvature[1]),
                        if row.blowup { "yes" } else { "no" }
                    );
                }
                for note in &a.report.notes {
                    let _ = writeln!(w, "note: {note}");
                }
            }
        }
        out
    }
}
