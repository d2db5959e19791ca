use std::io::Read;

use nniep::exact::{AnyMatrix, Poly};
use nniep::json::{parse_matrix, parse_poly, parse_spectrum};
use nniep::spectra::Spectrum;
use serde_json::Value;

/// Reads `-` from stdin, text starting with `{` or `[` as inline JSON, and
/// anything else as a file path.
pub fn load(source: &str) -> Result<Value, String> {
    let text = if source == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf).map_err(|e| format!("cannot read standard input: {e}"))?;
        buf
    } else if source.trim_start().starts_with(['{', '[']) {
        source.to_string()
    } else {
        std::fs::read_to_string(source).map_err(|e| format!("cannot read {source}: {e}"))?
    };
    serde_json::from_str(&text).map_err(|e| format!("malformed JSON in {}: {e}", describe(source)))
}

fn describe(source: &str) -> &str {
    match source {
        "-" => "standard input",
        s if s.trim_start().starts_with(['{', '[']) => "inline input",
        s => s,
    }
}

pub fn spectrum(source: &str) -> Result<Spectrum, String> {
    parse_spectrum(&load(source)?).map_err(|e| e.to_string())
}

pub fn matrix(source: &str) -> Result<AnyMatrix, String> {
    parse_matrix(&load(source)?).map_err(|e| e.to_string())
}

pub fn poly(source: &str) -> Result<Poly, String> {
    let v = load(source)?;
    // {"coeffs": [...]} or a bare coefficient array
    let coeffs = match &v {
        Value::Object(o) => o.get("coeffs").ok_or("polynomial object needs \"coeffs\"")?,
        other => other,
    };
    parse_poly(coeffs).map_err(|e| e.to_string())
}
