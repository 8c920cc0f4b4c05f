//! The inclusion lattice between immersions, inductions and their relatives,
//! as a three-valued inference engine, plus a small catalog of classic curves.
//!
//! Every rule is stored as a clause (a disjunction of literals). Closing a
//! fact set is unit propagation: a clause with all literals but one false
//! forces the remaining one, and a clause with every literal false is a
//! contradiction. Forward rules and their contrapositives fall out of the same
//! clauses, so no rule is written twice.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use serde::{Serialize, Serializer};

use crate::curves::{
    immersion_test, injectivity_test, monomial_exponents, CurveConfig, PlaneCurve, ThreeValued, Truth, Witness,
};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Predicate {
    Immersion,
    Injective,
    LocallyInjective,
    PseudoImmersion,
    Induction,
    LocalInduction,
    WeakEmbedding,
    TopologicalEmbedding,
}

impl Predicate {
    pub const ALL: [Predicate; 8] = [
        Predicate::Immersion,
        Predicate::Injective,
        Predicate::LocallyInjective,
        Predicate::PseudoImmersion,
        Predicate::Induction,
        Predicate::LocalInduction,
        Predicate::WeakEmbedding,
        Predicate::TopologicalEmbedding,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Predicate::Immersion => "IMMERSION",
            Predicate::Injective => "INJECTIVE",
            Predicate::LocallyInjective => "LOCALLY_INJECTIVE",
            Predicate::PseudoImmersion => "PSEUDO_IMMERSION",
            Predicate::Induction => "INDUCTION",
            Predicate::LocalInduction => "LOCAL_INDUCTION",
            Predicate::WeakEmbedding => "WEAK_EMBEDDING",
            Predicate::TopologicalEmbedding => "TOPOLOGICAL_EMBEDDING",
        }
    }

    pub fn from_name(name: &str) -> Option<Predicate> {
        Predicate::ALL.into_iter().find(|p| p.name() == name)
    }

    /// Predicates the engine may assign on its own. Topological embedding is
    /// only ever supplied by the caller: the engine has no topology to derive it from.
    fn derivable(self) -> bool {
        self != Predicate::TopologicalEmbedding
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Known truth values; anything absent is UNKNOWN.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FactSet {
    known: BTreeMap<Predicate, bool>,
}

impl FactSet {
    pub fn new() -> FactSet {
        FactSet::default()
    }

    pub fn from_pairs(pairs: &[(Predicate, bool)]) -> FactSet {
        let mut out = FactSet::new();
        for &(p, v) in pairs {
            out.known.insert(p, v);
        }
        out
    }

    pub fn get(&self, p: Predicate) -> Truth {
        match self.known.get(&p) {
            Some(true) => Truth::True,
            Some(false) => Truth::False,
            None => Truth::Unknown,
        }
    }

    pub fn value(&self, p: Predicate) -> Option<bool> {
        self.known.get(&p).copied()
    }

    /// Records a fact; a clash with an existing value is reported, not overwritten.
    pub fn assert(&mut self, p: Predicate, v: bool) -> std::result::Result<(), Contradiction> {
        match self.known.get(&p) {
            Some(&old) if old != v => Err(Contradiction { predicate: p }),
            _ => {
                self.known.insert(p, v);
                Ok(())
            }
        }
    }

    pub fn len(&self) -> usize {
        self.known.len()
    }

    pub fn is_empty(&self) -> bool {
        self.known.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Predicate, bool)> + '_ {
        self.known.iter().map(|(&p, &v)| (p, v))
    }

    /// Every fact of `self` also holds in `other`.
    pub fn is_subset_of(&self, other: &FactSet) -> bool {
        self.iter().all(|(p, v)| other.value(p) == Some(v))
    }
}

/// All eight predicates in a fixed order, UNKNOWN included.
impl Serialize for FactSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = serializer.serialize_map(Some(Predicate::ALL.len()))?;
        for p in Predicate::ALL {
            map.serialize_entry(p.name(), &self.get(p))?;
        }
        map.end()
    }
}

impl fmt::Display for FactSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in Predicate::ALL {
            writeln!(f, "{:<22} {}", p.name(), self.get(p))?;
        }
        Ok(())
    }
}

/// A predicate forced both TRUE and FALSE.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Contradiction {
    pub predicate: Predicate,
}

impl fmt::Display for Contradiction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CONTRADICTION on {}", self.predicate)
    }
}

/// `(p, true)` is the literal `p`, `(p, false)` its negation.
pub type Literal = (Predicate, bool);

/// A rule, with the clauses it contributes.
pub struct Rule {
    pub id: &'static str,
    pub statement: &'static str,
    clauses: &'static [&'static [Literal]],
}

use Predicate::*;

pub static RULES: &[Rule] = &[
    Rule { id: "R1", statement: "INDUCTION => INJECTIVE", clauses: &[&[(Induction, false), (Injective, true)]] },
    Rule {
        id: "R2",
        statement: "INDUCTION => PSEUDO_IMMERSION",
        clauses: &[&[(Induction, false), (PseudoImmersion, true)]],
    },
    Rule {
        id: "R3",
        statement: "IMMERSION => PSEUDO_IMMERSION",
        clauses: &[&[(Immersion, false), (PseudoImmersion, true)]],
    },
    Rule {
        id: "R4",
        statement: "IMMERSION => LOCAL_INDUCTION",
        clauses: &[&[(Immersion, false), (LocalInduction, true)]],
    },
    Rule {
        id: "R5",
        statement: "LOCAL_INDUCTION <=> LOCALLY_INJECTIVE and PSEUDO_IMMERSION",
        clauses: &[
            &[(LocalInduction, false), (LocallyInjective, true)],
            &[(LocalInduction, false), (PseudoImmersion, true)],
            &[(LocallyInjective, false), (PseudoImmersion, false), (LocalInduction, true)],
        ],
    },
    Rule {
        id: "R6",
        statement: "WEAK_EMBEDDING <=> INDUCTION and IMMERSION",
        clauses: &[
            &[(WeakEmbedding, false), (Induction, true)],
            &[(WeakEmbedding, false), (Immersion, true)],
            &[(Induction, false), (Immersion, false), (WeakEmbedding, true)],
        ],
    },
    Rule {
        id: "R7",
        statement: "INJECTIVE => LOCALLY_INJECTIVE",
        clauses: &[&[(Injective, false), (LocallyInjective, true)]],
    },
    Rule {
        id: "R8",
        statement: "TOPOLOGICAL_EMBEDDING and PSEUDO_IMMERSION => INDUCTION",
        clauses: &[&[(TopologicalEmbedding, false), (PseudoImmersion, false), (Induction, true)]],
    },
];

/// Every clause contributed by [`RULES`], in rule order.
pub fn all_clauses() -> Vec<&'static [Literal]> {
    RULES.iter().flat_map(|r| r.clauses.iter().copied()).collect()
}

/// Closes `facts` under the rules, or reports the predicate forced both ways.
pub fn infer_closure(facts: &FactSet) -> std::result::Result<FactSet, Contradiction> {
    close_with(facts, &all_clauses())
}

/// Unit propagation over `clauses`, in the order given.
pub fn close_with(facts: &FactSet, clauses: &[&[Literal]]) -> std::result::Result<FactSet, Contradiction> {
    let mut out = facts.clone();
    loop {
        let mut changed = false;
        for clause in clauses {
            let mut open: Vec<Literal> = Vec::new();
            let mut satisfied = false;
            for &(p, want) in clause.iter() {
                match out.value(p) {
                    Some(v) if v == want => satisfied = true,
                    Some(_) => {}
                    None => open.push((p, want)),
                }
            }
            if satisfied {
                continue;
            }
            match open.as_slice() {
                [] => return Err(Contradiction { predicate: clause[clause.len() - 1].0 }),
                [(p, want)] if p.derivable() => {
                    out.assert(*p, *want)?;
                    changed = true;
                }
                _ => {}
            }
        }
        if !changed {
            return Ok(out);
        }
    }
}

/// Seeds for the monomial curve `t -> (t^a, t^b)` on the real line.
pub fn monomial_seeds(a: u64, b: u64) -> FactSet {
    FactSet::from_pairs(&[
        (Induction, a.gcd(&b) == 1),
        (Immersion, a.min(b) == 1),
        (Injective, a % 2 == 1 || b % 2 == 1),
    ])
}

/// Closed facts for `t -> (t^a, t^b)`; `a, b >= 1`.
pub fn classify_monomial(a: u64, b: u64) -> Result<FactSet> {
    if a == 0 || b == 0 {
        return Err(Error::ZeroExponent);
    }
    // the seeds are always consistent: gcd 1 forces an odd exponent
    Ok(infer_closure(&monomial_seeds(a, b)).expect("monomial seeds are consistent"))
}

/// A check that can be run against a catalog entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckId {
    /// Re-derive the seeds from the polynomial curve with exact tests.
    CurveTests,
    /// Evaluate the map `h` at its two coinciding preimages.
    HNonInjective,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Seed {
    pub predicate: Predicate,
    pub value: bool,
    /// Why the fact holds.
    pub reason: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub description: &'static str,
    pub seeds: Vec<Seed>,
    /// Components in polynomial syntax, when the curve is polynomial.
    pub curve: Option<(&'static str, &'static str)>,
    pub check: Option<CheckId>,
    pub expected: FactSet,
}

impl CatalogEntry {
    pub fn seed_facts(&self) -> FactSet {
        FactSet::from_pairs(&self.seeds.iter().map(|s| (s.predicate, s.value)).collect::<Vec<_>>())
    }

    pub fn plane_curve(&self) -> Option<PlaneCurve> {
        let (x, y) = self.curve?;
        let x = crate::parse::parse_poly(x).ok()?;
        let y = crate::parse::parse_poly(y).ok()?;
        Some(PlaneCurve::on_real_line(x, y))
    }
}

fn seed(predicate: Predicate, value: bool, reason: &'static str) -> Seed {
    Seed { predicate, value, reason }
}

fn expected(trues: &[Predicate], falses: &[Predicate]) -> FactSet {
    let mut out = FactSet::new();
    for &p in trues {
        out.known.insert(p, true);
    }
    for &p in falses {
        out.known.insert(p, false);
    }
    out
}

/// The five reference curves, with hand-computed closures.
pub fn catalog_entries() -> Vec<CatalogEntry> {
    vec![
        CatalogEntry {
            name: "cusp",
            description: "t -> (t^3, t^2) on R, the semicubical cusp x^2 = y^3",
            seeds: vec![
                seed(Induction, true, "Joris: g is smooth iff g^3 and g^2 are, and gcd(3, 2) = 1"),
                seed(Immersion, false, "both derivatives 3t^2 and 2t vanish at t = 0"),
            ],
            curve: Some(("t^3", "t^2")),
            check: Some(CheckId::CurveTests),
            expected: expected(
                &[Induction, Injective, PseudoImmersion, LocallyInjective, LocalInduction],
                &[Immersion, WeakEmbedding],
            ),
        },
        CatalogEntry {
            name: "figure_eight",
            description: "t -> (sin t, sin 2t) for 0 < t < 2pi, a lemniscate traced once",
            seeds: vec![
                seed(Immersion, true, "the velocity (cos t, 2 cos 2t) never vanishes"),
                seed(Injective, true, "the crossing point is reached only at t = pi"),
                seed(Induction, false, "the image near the crossing is not a submanifold of the parameter line"),
            ],
            curve: None,
            check: None,
            expected: expected(
                &[Immersion, Injective, LocallyInjective, PseudoImmersion, LocalInduction],
                &[Induction, WeakEmbedding],
            ),
        },
        CatalogEntry {
            name: "circle",
            description: "t -> (sin t, cos t) on R, winding the circle infinitely often",
            seeds: vec![
                seed(Immersion, true, "unit speed"),
                seed(Injective, false, "2pi-periodic"),
                seed(LocallyInjective, true, "injective on every interval shorter than 2pi"),
            ],
            curve: None,
            check: None,
            expected: expected(
                &[Immersion, LocallyInjective, PseudoImmersion, LocalInduction],
                &[Injective, Induction, WeakEmbedding],
            ),
        },
        CatalogEntry {
            name: "joris_preissmann_h",
            description: "h(x, y) = (x^2, x^3 - x exp(-1/|y|), y) for y != 0 and (x^2, x^3, 0) for y = 0",
            seeds: vec![
                seed(PseudoImmersion, true, "continuous plots through h lift smoothly (Joris-Preissmann)"),
                seed(
                    LocallyInjective,
                    false,
                    "h(e^(-1/2|t|), t) = h(-e^(-1/2|t|), t) with both preimages tending to 0",
                ),
            ],
            curve: None,
            check: Some(CheckId::HNonInjective),
            expected: expected(
                &[PseudoImmersion],
                &[LocallyInjective, LocalInduction, Immersion, Induction, Injective, WeakEmbedding],
            ),
        },
        CatalogEntry {
            name: "irrational_line",
            description: "t -> [t, sqrt(2) t] on the torus R^2/Z^2, a dense irrational winding",
            seeds: vec![seed(WeakEmbedding, true, "an injective immersion onto a diffeological submanifold")],
            curve: None,
            check: None,
            expected: expected(
                &[WeakEmbedding, Induction, Immersion, Injective, PseudoImmersion, LocallyInjective, LocalInduction],
                &[],
            ),
        },
    ]
}

pub fn catalog_entry(name: &str) -> Option<CatalogEntry> {
    catalog_entries().into_iter().find(|e| e.name == name)
}

/// Subsets that illustrate the theory but carry no map-level facts.
pub fn catalog_notes() -> &'static [(&'static str, &'static str)] {
    &[
        (
            "axis_corner",
            "The union of the x-axis and the positive y-axis is a diffeological submanifold whose \
             inclusion is not an immersion at the corner; it is a subset, not a map, so no facts are recorded.",
        ),
        (
            "topologists_sine",
            "The topologist's sine curve is the standard example where the subspace topology and the \
             manifold topology of a submanifold differ; documentation only.",
        ),
    ]
}

/// Outcome of evaluating `h` at the coinciding pair over `(±e^(-1/2t), t)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HReport {
    pub t: f64,
    pub preimages: [[f64; 2]; 2],
    pub images: [[f64; 3]; 2],
    /// Euclidean distance between the two images.
    pub image_distance: f64,
    /// Distance between the two preimages, `2 e^(-1/(2t))`.
    pub preimage_separation: f64,
}

/// `h` off the plane `y = 0`.
pub fn h_map(x: f64, y: f64) -> [f64; 3] {
    if y == 0.0 {
        [x * x, x * x * x, 0.0]
    } else {
        let e = (-1.0 / y.abs()).exp();
        [x * x, x * x * x - x * e, y]
    }
}

pub fn verify_h_noninjective(t: f64) -> Result<HReport> {
    if !(t > 0.0 && t <= 1.0) {
        return Err(Error::InvalidDomain(format!("t must lie in (0, 1], got {t}")));
    }
    let x = (-1.0 / (2.0 * t)).exp();
    let (p, q) = ([x, t], [-x, t]);
    let (hp, hq) = (h_map(p[0], p[1]), h_map(q[0], q[1]));
    let image_distance = hp.iter().zip(&hq).map(|(a, b)| (a - b).powi(2)).sum::<f64>().sqrt();
    Ok(HReport { t, preimages: [p, q], images: [hp, hq], image_distance, preimage_separation: 2.0 * x })
}

/// Parameters at which the `h` identity is checked.
pub const H_CHECK_POINTS: [f64; 4] = [0.1, 0.25, 0.5, 1.0];
/// Allowed distance between the two images of `h`.
pub const H_IMAGE_TOL: f64 = 1e-14;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub id: CheckId,
    pub passed: bool,
    pub details: Vec<String>,
}

/// Result of re-deriving a catalog entry.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CatalogCheck {
    pub name: &'static str,
    /// `None` when the seeds are contradictory.
    pub closure: Option<FactSet>,
    pub expected: FactSet,
    pub closure_matches: bool,
    pub check: Option<CheckOutcome>,
    pub passed: bool,
}

impl CatalogCheck {
    pub fn summary(&self) -> String {
        let mut parts = vec![format!("closure {}", if self.closure_matches { "matches" } else { "differs" })];
        if let Some(c) = &self.check {
            parts.push(format!("{:?} check {}", c.id, if c.passed { "passed" } else { "failed" }));
        }
        parts.join(", ")
    }
}

/// Closes the seeds, compares with the stored closure, and runs the entry's check.
pub fn check_catalog_entry(entry: &CatalogEntry, cfg: &CurveConfig) -> Result<CatalogCheck> {
    let closure = infer_closure(&entry.seed_facts()).ok();
    let closure_matches = closure.as_ref() == Some(&entry.expected);
    let check = match entry.check {
        None => None,
        Some(CheckId::CurveTests) => {
            let curve = entry.plane_curve().ok_or_else(|| Error::Malformed(format!("{} has no curve", entry.name)))?;
            let result = classify_curve(&curve, cfg)?;
            let mut details: Vec<String> =
                result.evidence.iter().map(|e| format!("{} {}: {}", e.predicate, e.value, e.source)).collect();
            let passed = match &result.closure {
                Ok(facts) => {
                    let agrees = facts.is_subset_of(&entry.expected);
                    details.push(format!(
                        "derived facts {} the stored closure",
                        if agrees { "agree with" } else { "conflict with" }
                    ));
                    agrees
                }
                Err(c) => {
                    details.push(c.to_string());
                    false
                }
            };
            Some(CheckOutcome { id: CheckId::CurveTests, passed, details })
        }
        Some(CheckId::HNonInjective) => {
            let mut passed = true;
            let mut details = Vec::new();
            for t in H_CHECK_POINTS {
                let r = verify_h_noninjective(t)?;
                let ok = r.image_distance <= H_IMAGE_TOL && r.preimage_separation > 0.0;
                passed &= ok;
                details.push(format!(
                    "t = {t}: image distance {:.3e}, preimage separation {:.10}",
                    r.image_distance, r.preimage_separation
                ));
            }
            Some(CheckOutcome { id: CheckId::HNonInjective, passed, details })
        }
    };
    let passed = closure_matches && check.as_ref().is_none_or(|c| c.passed);
    Ok(CatalogCheck { name: entry.name, closure, expected: entry.expected.clone(), closure_matches, check, passed })
}

/// Where a seed used by [`classify_curve`] came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Evidence {
    pub predicate: Predicate,
    pub value: bool,
    pub source: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveClassification {
    pub immersion: ThreeValued,
    pub injectivity: ThreeValued,
    pub monomial: Option<(u64, u64)>,
    pub evidence: Vec<Evidence>,
    pub closure: std::result::Result<FactSet, Contradiction>,
}

/// Exact tests, the monomial rule and the affine-component rule, closed under the lattice.
pub fn classify_curve(c: &PlaneCurve, cfg: &CurveConfig) -> Result<CurveClassification> {
    let immersion = immersion_test(c)?;
    let injectivity = injectivity_test(c, cfg)?;
    let mut evidence = Vec::new();
    let mut push = |predicate, value, source: String| evidence.push(Evidence { predicate, value, source });

    match immersion.value {
        Truth::True => push(Immersion, true, immersion.method.to_string()),
        Truth::False => push(Immersion, false, format!("{}: {}", immersion.method, witness_text(&immersion))),
        Truth::Unknown => {}
    }
    match injectivity.value {
        Truth::True => push(Injective, true, injectivity.method.to_string()),
        Truth::False => push(Injective, false, format!("{}: {}", injectivity.method, witness_text(&injectivity))),
        Truth::Unknown => {}
    }
    let monomial = monomial_exponents(c);
    if let Some((a, b)) = monomial {
        push(Induction, a.gcd(&b) == 1, format!("monomial rule with exponents ({a}, {b}), gcd {}", a.gcd(&b)));
    } else if c.x.degree() == Some(1) || c.y.degree() == Some(1) {
        push(Induction, true, "an affine component gives a smooth left inverse".to_string());
    }

    let mut seeds = FactSet::new();
    let mut clash = None;
    for e in &evidence {
        if let Err(err) = seeds.assert(e.predicate, e.value) {
            clash = Some(err);
        }
    }
    let closure = match clash {
        Some(err) => Err(err),
        None => infer_closure(&seeds),
    };
    Ok(CurveClassification { immersion, injectivity, monomial, evidence, closure })
}

fn witness_text(v: &ThreeValued) -> String {
    v.witness.as_ref().map(Witness::to_string).unwrap_or_default()
}
