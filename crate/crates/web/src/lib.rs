//! Browser bindings: each export takes plain strings and numbers and returns JSON.
//!
//! The `*_json` functions hold the logic and run natively too; the
//! `#[wasm_bindgen]` wrappers only convert errors into JS exceptions.

use jetworks::curves::{CurveConfig, PlaneCurve, ThreeValued};
use jetworks::jet::Jet;
use jetworks::joris::recover_jet;
use jetworks::parse::parse_poly;
use jetworks::probe::{joris_demo, DemoFunction, ProbeConfig};
use jetworks::rational::{format_rational, q, to_f64};
use jetworks::real_roots::{Bound, Interval};
use jetworks::taxonomy::classify_curve;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Samples drawn for plotting a curve.
const PLOT_POINTS: usize = 400;
/// Finite parameter window used when the domain is unbounded.
const PLOT_WINDOW: f64 = 2.0;
/// Points of the probe series sent back for plotting.
const PROBE_PLOT_POINTS: usize = 401;

pub fn recover_json(m: u64, n: u64, a: &str, b: &str) -> Result<Value, String> {
    let (a, b) = (Jet::parse(a).map_err(|e| e.to_string())?, Jet::parse(b).map_err(|e| e.to_string())?);
    let order = a.order().min(b.order());
    let r = recover_jet(&a.resize(order), &b.resize(order), m, n).map_err(|e| e.to_string())?;
    Ok(json!({
        "coeffs": r.guaranteed().coeffs().iter().map(format_rational).collect::<Vec<_>>(),
        "guaranteed_order": r.guaranteed_order,
        "text": r.guaranteed().to_string(),
    }))
}

fn verdict(v: &ThreeValued) -> Value {
    json!({
        "value": v.value,
        "method": v.method,
        "witness": v.witness.as_ref().map(|w| w.to_string()),
    })
}

fn plot_range(domain: &Interval) -> (f64, f64) {
    let lo = match &domain.lo {
        Bound::Finite(x) => to_f64(x),
        _ => f64::NEG_INFINITY,
    };
    let hi = match &domain.hi {
        Bound::Finite(x) => to_f64(x),
        _ => f64::INFINITY,
    };
    match (lo.is_finite(), hi.is_finite()) {
        (true, true) => (lo, hi),
        (true, false) => (lo, lo + 2.0 * PLOT_WINDOW),
        (false, true) => (hi - 2.0 * PLOT_WINDOW, hi),
        (false, false) => (-PLOT_WINDOW, PLOT_WINDOW),
    }
}

pub fn classify_json(x: &str, y: &str, domain: &str) -> Result<Value, String> {
    let xp = parse_poly(x).map_err(|e| e.to_string())?;
    let yp = parse_poly(y).map_err(|e| e.to_string())?;
    let domain: Interval = if domain.trim().is_empty() {
        Interval::real_line()
    } else {
        domain.parse().map_err(|e: jetworks::error::Error| e.to_string())?
    };
    let (lo, hi) = plot_range(&domain);
    let curve = PlaneCurve::new(xp, yp, domain);
    let res = classify_curve(&curve, &CurveConfig::default()).map_err(|e| e.to_string())?;
    let facts = res.closure.as_ref().map_err(|c| c.to_string())?;
    let points: Vec<[f64; 2]> = (0..=PLOT_POINTS)
        .map(|i| lo + (hi - lo) * i as f64 / PLOT_POINTS as f64)
        .map(|t| [curve.x.eval_f64(t), curve.y.eval_f64(t)])
        .collect();
    let origin = curve.point(&q(0));
    Ok(json!({
        "facts": facts,
        "immersion": verdict(&res.immersion),
        "injectivity": verdict(&res.injectivity),
        "points": points,
        "domain": curve.domain.to_string(),
        "at_zero": [format_rational(&origin.0), format_rational(&origin.1)],
    }))
}

pub fn probe_json(function: &str, m: u32, n: u32) -> Result<Value, String> {
    let g = match function {
        "identity" => DemoFunction::Identity,
        "abs" => DemoFunction::Abs,
        other => return Err(format!("unknown demo function {other:?}; use identity or abs")),
    };
    let out = joris_demo(&g, m, n, &ProbeConfig::default()).map_err(|e| e.to_string())?;
    let step = (out.recovered.len() - 1) / (PROBE_PLOT_POINTS - 1);
    let recovered: Vec<[f64; 2]> = (0..out.recovered.len())
        .step_by(step.max(1))
        .map(|i| [out.recovered.t(i), out.recovered.values()[i]])
        .collect();
    Ok(json!({
        "verdict": out.analysis.report.verdict.to_string(),
        "smooth": out.analysis.report.is_smooth(),
        "rows": out.analysis.report.rows,
        "notes": out.analysis.report.notes,
        "recovery_error": out.recovery_error,
        "recovered": recovered,
    }))
}

fn to_js(r: Result<Value, String>) -> Result<String, JsError> {
    r.map(|v| v.to_string()).map_err(|e| JsError::new(&e))
}

/// Recovers the jet of `g` from comma-separated jets of `g^m` and `g^n`.
#[wasm_bindgen(js_name = recoverJet)]
pub fn recover_jet_js(m: u32, n: u32, a: &str, b: &str) -> Result<String, JsError> {
    to_js(recover_json(m as u64, n as u64, a, b))
}

/// Immersion and injectivity verdicts, implied facts and plot samples.
#[wasm_bindgen(js_name = classifyCurve)]
pub fn classify_curve_js(x: &str, y: &str, domain: &str) -> Result<String, JsError> {
    to_js(classify_json(x, y, domain))
}

/// Powers `identity` or `abs` to `g^m`, `g^n`, recovers `g` and probes smoothness.
#[wasm_bindgen(js_name = probeDemo)]
pub fn probe_demo_js(function: &str, m: u32, n: u32) -> Result<String, JsError> {
    to_js(probe_json(function, m, n))
}
