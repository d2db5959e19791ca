//! Canonical JSON for exact values and reports. Objects are
//! `serde_json::Map`s backed by a `BTreeMap`, so keys come out sorted.

use serde_json::{json, Map, Value};

use crate::constructions::{ClosedFormCheck, Deduction, FitResult, MatrixCertificate, ThresholdResult};
use crate::error::{Error, Result};
use crate::exact::{
    format_rational, parse_rational, AnyMatrix, ExactMatrix, IsolatingInterval, Poly, QuadExt, Rational,
};
use crate::spectra::{Bipartition, Certificate, Classification, ConditionReport, ExtremeAudit, Spectrum, Verdict};
use crate::verification::{JordanReport, VerificationReport};

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

/// 17 significant digits.
pub fn f64_string(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn rational(r: &Rational) -> Value {
    Value::String(format_rational(r))
}

pub fn quad(q: &QuadExt) -> Value {
    quad_in(q, q.d())
}

/// Serializes with the radicand of the surrounding field, so rational
/// entries of a quadratic matrix report the matrix's `d`.
fn quad_in(q: &QuadExt, d: u64) -> Value {
    json!({"a": rational(q.a()), "b": rational(q.b()), "d": d})
}

pub fn poly(p: &Poly) -> Value {
    Value::Array(p.coeffs().iter().map(rational).collect())
}

pub fn spectrum(sp: &Spectrum) -> Value {
    json!({"values": sp.values().iter().map(rational).collect::<Vec<_>>()})
}

pub fn matrix(m: &AnyMatrix) -> Value {
    match m {
        AnyMatrix::Rational(a) => json!({
            "entries": a.rows().iter().map(|r| r.iter().map(rational).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "field": "rational",
            "n": a.n(),
        }),
        AnyMatrix::Quad { d, matrix } => json!({
            "entries": matrix.rows().iter().map(|r| r.iter().map(|x| quad_in(x, *d)).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "field": {"quad": d},
            "n": matrix.n(),
        }),
    }
}

pub fn interval(iv: &IsolatingInterval) -> Value {
    json!({
        "hi": rational(&iv.hi),
        "lo": rational(&iv.lo),
        "root_count": iv.root_count,
    })
}

fn entry_index((i, j): (usize, usize)) -> Value {
    json!([i + 1, j + 1])
}

pub fn condition_report(r: &ConditionReport) -> Value {
    let witness: Map<String, Value> = r.witness.iter().map(|(k, v)| (k.clone(), rational(v))).collect();
    json!({
        "applicable": r.applicable,
        "condition": r.condition.name(),
        "satisfied": r.satisfied,
        "witness": witness,
    })
}

pub fn verification_report(r: &VerificationReport) -> Value {
    json!({
        "charpoly": r.charpoly.as_ref().map(poly),
        "charpoly_match": r.charpoly_match,
        "diagonalizable": r.diagonalizable,
        "irreducible": r.irreducible,
        "negative_entries": r.negative_entries.iter().map(|&e| entry_index(e)).collect::<Vec<_>>(),
        "nonnegative": r.nonnegative,
        "symmetric": r.symmetric,
        "target": poly(&r.target),
    })
}

pub fn jordan_report(r: &JordanReport) -> Value {
    json!({
        "algebraic_multiplicity": r.algebraic_multiplicity,
        "block_sizes": r.block_sizes,
        "eigenvalue": rational(&r.eigenvalue),
        "rank_sequence": r.rank_sequence,
    })
}

pub fn matrix_certificate(c: &MatrixCertificate) -> Value {
    json!({
        "kind": "matrix",
        "matrix": matrix(&c.matrix),
        "parameter": c.parameter.as_ref().map(rational),
        "source": c.source.to_string(),
        "verification": verification_report(&c.report),
    })
}

pub fn deduction(d: &Deduction) -> Value {
    json!({
        "kind": "deduction",
        "premise": spectrum(&d.premise),
        "premise_certificate": matrix_certificate(&d.premise_certificate),
        "rule": d.rule,
        "shift": rational(&d.shift),
        "spectrum": spectrum(&d.spectrum),
    })
}

pub fn certificate(c: &Certificate) -> Value {
    match c {
        Certificate::Matrix(m) => matrix_certificate(m),
        Certificate::Deduction(d) => deduction(d),
        Certificate::Violated(r) => json!({"kind": "violated_condition", "report": condition_report(r)}),
        Certificate::EmptyPartitionScan { perron_multiplicity, splits_examined } => json!({
            "kind": "empty_partition_scan",
            "perron_multiplicity": perron_multiplicity,
            "splits_examined": splits_examined,
        }),
    }
}

pub fn verdict(v: &Verdict) -> Value {
    json!({
        "certificates": v.certificates.iter().map(certificate).collect::<Vec<_>>(),
        "problem": v.problem.name(),
        "status": v.status.name(),
    })
}

pub fn bipartition(b: &Bipartition) -> Value {
    json!([spectrum(&b.first), spectrum(&b.second)])
}

pub fn classification(c: &Classification) -> Value {
    json!({
        "conditions": c.conditions.iter().map(condition_report).collect::<Vec<_>>(),
        "depth": {"k_max": c.options.k_max, "m_max": c.options.m_max},
        "partition_scan": c.partition_scan.as_ref().map(|v| v.iter().map(bipartition).collect::<Vec<_>>()),
        "spectrum": spectrum(&c.spectrum),
        "verdicts": c.verdicts.iter().map(verdict).collect::<Vec<_>>(),
    })
}

fn closed_form(c: &ClosedFormCheck) -> Value {
    json!({
        "agreeing_places": c.agreeing_places,
        "closed_form_decimal": c.closed_form_decimal,
        "closed_form_matches": c.closed_form_matches,
        "expression": c.expression,
        "quoted_agrees": c.quoted_agrees,
        "quoted_decimal": c.quoted_decimal,
        "quoted_places": c.quoted_places,
        "root_decimal": c.root_decimal,
    })
}

pub fn threshold(r: &ThresholdResult) -> Value {
    json!({
        "closed_form_check": r.closed_form_check.as_ref().map(closed_form),
        "entry_poly": r.entry_poly.as_ref().map(poly),
        "entry_witness": r.entry_witness.map(entry_index),
        "family": r.family,
        "interval": r.interval.as_ref().map(interval),
        "threshold_hi": rational(&r.upper()),
        "threshold_lo": rational(&r.lower()),
    })
}

pub fn fit(r: &FitResult) -> Value {
    let [p, q, w, h] = r.parameters;
    json!({
        "nonnegative": r.nonnegative,
        "nonnegative_tolerance": f64_string(crate::constructions::NONNEG_TOL),
        "parameters": {"h": f64_string(h), "p": f64_string(p), "q": f64_string(q), "w": f64_string(w)},
        "residual": f64_string(r.residual),
        "residual_tolerance": f64_string(crate::constructions::CONVERGED),
        "seed": r.seed,
        "t": f64_string(r.t),
    })
}

pub fn extreme_audit(a: &ExtremeAudit) -> Value {
    json!({
        "difference": f64_string(a.difference),
        "discrepancy": a.discrepancy,
        "polynomial": poly(&a.polynomial),
        "reference": rational(&a.reference),
        "root_estimate": f64_string(a.root_estimate),
        "root_hi": rational(&a.root_hi),
        "root_lo": rational(&a.root_lo),
        "tolerance": f64_string(a.tolerance),
    })
}

/// Deterministic serialization with sorted keys.
pub fn to_canonical_string(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("values serialize")
}

pub fn parse_rational_value(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) if n.is_i64() => Ok(Rational::from_integer(n.as_i64().expect("checked").into())),
        other => Err(parse_err(format!("expected a rational string, got {other}"))),
    }
}

fn parse_quad_value(v: &Value, d: u64) -> Result<QuadExt> {
    match v {
        Value::Object(o) => {
            let a = parse_rational_value(o.get("a").ok_or_else(|| parse_err("quadratic scalar missing \"a\""))?)?;
            let b = parse_rational_value(o.get("b").ok_or_else(|| parse_err("quadratic scalar missing \"b\""))?)?;
            let dd = o.get("d").and_then(Value::as_u64).ok_or_else(|| parse_err("quadratic scalar missing \"d\""))?;
            if dd != d && dd != 0 {
                return Err(parse_err(format!("scalar radicand {dd} differs from matrix radicand {d}")));
            }
            QuadExt::new(a, b, d).map_err(|e| parse_err(e.to_string()))
        }
        other => parse_rational_value(other).map(QuadExt::rational),
    }
}

/// Accepts `{"values": [...]}` or a bare array.
pub fn parse_spectrum(v: &Value) -> Result<Spectrum> {
    let values = match v {
        Value::Object(o) => o.get("values").ok_or_else(|| parse_err("spectrum missing \"values\""))?,
        other => other,
    };
    let arr = values.as_array().ok_or_else(|| parse_err("spectrum values must be an array"))?;
    Spectrum::new(arr.iter().map(parse_rational_value).collect::<Result<_>>()?).map_err(|e| parse_err(e.to_string()))
}

pub fn parse_poly(v: &Value) -> Result<Poly> {
    let arr = v.as_array().ok_or_else(|| parse_err("polynomial must be a coefficient array"))?;
    Ok(Poly::new(arr.iter().map(parse_rational_value).collect::<Result<_>>()?))
}

/// Accepts the shared matrix object; `field` defaults to rational and `n`,
/// when present, must match.
pub fn parse_matrix(v: &Value) -> Result<AnyMatrix> {
    let o = v.as_object().ok_or_else(|| parse_err("matrix must be an object"))?;
    let rows =
        o.get("entries").and_then(Value::as_array).ok_or_else(|| parse_err("matrix missing \"entries\" array"))?;
    let n = rows.len();
    if let Some(declared) = o.get("n") {
        if declared.as_u64() != Some(n as u64) {
            return Err(parse_err(format!("declared n {declared} but {n} rows")));
        }
    }
    let rows: Vec<&Vec<Value>> = rows
        .iter()
        .map(|r| r.as_array().filter(|r| r.len() == n).ok_or_else(|| parse_err("matrix must be square")))
        .collect::<Result<_>>()?;
    let radicand = match o.get("field") {
        None => None,
        Some(Value::String(s)) if s == "rational" => None,
        Some(Value::Object(f)) => Some(
            f.get("quad").and_then(Value::as_u64).ok_or_else(|| parse_err("field object needs an integer \"quad\""))?,
        ),
        Some(other) => return Err(parse_err(format!("unknown field {other}"))),
    };
    if n == 0 {
        return Err(parse_err("matrix must be nonempty"));
    }
    match radicand {
        None => {
            let data = rows
                .iter()
                .map(|r| r.iter().map(parse_rational_value).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?;
            Ok(AnyMatrix::Rational(ExactMatrix::from_rows(data)?))
        }
        Some(d) => {
            QuadExt::sqrt(d).map_err(|e| parse_err(e.to_string()))?;
            let data = rows
                .iter()
                .map(|r| r.iter().map(|x| parse_quad_value(x, d)).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?;
            Ok(AnyMatrix::Quad { d, matrix: ExactMatrix::from_rows(data)? })
        }
    }
}
