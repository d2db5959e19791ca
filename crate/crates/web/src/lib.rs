//! String-in, string-out bindings for the static demo page in `www/`.
//! Every function returns a JSON object with either `"ok"` or `"error"`.

use nniep::constructions::{family_by_name, family_nonneg_threshold, meehan_fit};
use nniep::exact::{parse_rational, rat, AnyMatrix};
use nniep::json;
use nniep::spectra::{classify, ClassifyOptions};
use nniep::verification::verify_any;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

fn wrap(r: Result<Value, String>) -> String {
    let v = match r {
        Ok(v) => json!({"ok": v}),
        Err(e) => json!({"error": e}),
    };
    v.to_string()
}

/// Values separated by commas or whitespace, e.g. `"3, 3, -2, -2, -2"`,
/// or a JSON spectrum.
fn parse_values(text: &str) -> Result<nniep::spectra::Spectrum, String> {
    let t = text.trim();
    if t.starts_with(['[', '{']) {
        let v: Value = serde_json::from_str(t).map_err(|e| e.to_string())?;
        return json::parse_spectrum(&v).map_err(|e| e.to_string());
    }
    let parts: Vec<&str> = t.split(|c: char| c == ',' || c.is_whitespace()).filter(|s| !s.is_empty()).collect();
    nniep::spectra::Spectrum::parse(&parts).map_err(|e| e.to_string())
}

pub fn classify_value(values: &str, depth: u32) -> Result<Value, String> {
    if depth == 0 || depth > 40 {
        return Err("depth must be between 1 and 40".into());
    }
    let sp = parse_values(values)?;
    if sp.n() > 12 {
        return Err("at most 12 values in the browser".into());
    }
    let c = classify(&sp, ClassifyOptions { k_max: depth, m_max: depth });
    let mut out = json::classification(&c);
    for (v, r) in out["conditions"].as_array_mut().into_iter().flatten().zip(&c.conditions) {
        v["explain"] = json!(r.condition.rationale());
    }
    Ok(out)
}

pub fn family_value(name: &str, t: &str) -> Result<Value, String> {
    let f = family_by_name(name).ok_or_else(|| format!("unknown family {name:?}"))?;
    let t = parse_rational(t).map_err(|e| e.to_string())?;
    if t < rat(0, 1) {
        return Err("t must be nonnegative".into());
    }
    let th = family_nonneg_threshold(&f, &rat(1, 1_000_000_000)).map_err(|e| e.to_string())?;
    let sp = f.target_at(&t);
    let m = AnyMatrix::from(f.eval(&t));
    let report = verify_any(&m, &sp).map_err(|e| e.to_string())?;
    Ok(json!({
        "matrix": json::matrix(&m),
        "spectrum": json::spectrum(&sp),
        "t": json::rational(&t),
        "threshold": json::threshold(&th),
        "verification": json::verification_report(&report),
    }))
}

pub fn fit_value(t: f64) -> Result<Value, String> {
    meehan_fit(t, 256).map(|f| json::fit(&f)).map_err(|e| e.to_string())
}

#[wasm_bindgen]
pub fn check_spectrum(values: &str, depth: u32) -> String {
    wrap(classify_value(values, depth))
}

#[wasm_bindgen]
pub fn family_at(name: &str, t: &str) -> String {
    wrap(family_value(name, t))
}

#[wasm_bindgen]
pub fn fit_meehan(t: f64) -> String {
    wrap(fit_value(t))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn value_lists() {
        assert_eq!(parse_values("3, 3 -2,-2  -2").unwrap().n(), 5);
        assert_eq!(parse_values(r#"["1/2"]"#).unwrap().n(), 1);
        assert!(parse_values("").is_err());
        assert!(parse_values("a, b").is_err());
    }

    #[test]
    fn bounds() {
        assert!(classify_value("1", 0).is_err());
        assert!(classify_value(&"1 ".repeat(13), 4).is_err());
        assert!(family_value("lm_sigma_hat", "-1").is_err());
        assert!(fit_value(-1.0).is_err());
    }
}
