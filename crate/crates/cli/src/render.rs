//! Human-readable text built only from the JSON report.

use std::fmt::Write;

use serde_json::Value;

fn s(v: &Value) -> String {
    match v {
        Value::String(x) => x.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

fn list(v: &Value) -> String {
    let items: Vec<String> = v.as_array().into_iter().flatten().map(s).collect();
    format!("({})", items.join(", "))
}

fn spectrum(v: &Value) -> String {
    list(&v["values"])
}

fn entry(v: &Value) -> String {
    match v.as_array() {
        Some(ij) if ij.len() == 2 => format!("({}, {})", ij[0], ij[1]),
        _ => "-".into(),
    }
}

fn poly(v: &Value) -> String {
    let coeffs: Vec<String> = v.as_array().into_iter().flatten().map(s).collect();
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, c)| c.as_str() != "0")
        .map(|(k, c)| {
            let var = match k {
                0 => return c.clone(),
                1 => "x".to_string(),
                _ => format!("x^{k}"),
            };
            match c.as_str() {
                "1" => var,
                "-1" => format!("-{var}"),
                _ => format!("{c}*{var}"),
            }
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ").replace("+ -", "- ")
    }
}

fn explain_line(out: &mut String, v: &Value, indent: usize) {
    if let Some(text) = v.get("explain").and_then(Value::as_str) {
        let _ = writeln!(out, "{:indent$}  why: {text}", "");
    }
}

fn witness(v: &Value) -> String {
    v.as_object().into_iter().flatten().map(|(k, x)| format!("{k}={}", s(x))).collect::<Vec<_>>().join(" ")
}

fn certificate(c: &Value) -> String {
    match c["kind"].as_str() {
        Some("matrix") => match &c["parameter"] {
            Value::Null => format!("verified matrix from {}", s(&c["source"])),
            t => format!("verified matrix from {} at t = {}", s(&c["source"]), s(t)),
        },
        Some("deduction") => format!(
            "{} by {} from {} ({})",
            s(&c["rule"]),
            s(&c["shift"]),
            spectrum(&c["premise"]),
            s(&c["premise_certificate"]["source"])
        ),
        Some("violated_condition") => format!("{} violated", s(&c["report"]["condition"])),
        Some("empty_partition_scan") => format!(
            "Perron value repeated {} times and none of {} splits is viable",
            c["perron_multiplicity"], c["splits_examined"]
        ),
        _ => c.to_string(),
    }
}

fn check(r: &Value) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "spectrum {}", spectrum(&r["spectrum"]));
    let _ = writeln!(out, "conditions (depth {}):", r["depth"]["k_max"]);
    for c in r["conditions"].as_array().into_iter().flatten() {
        let state = match (c["applicable"].as_bool(), c["satisfied"].as_bool()) {
            (Some(false), _) => "n/a",
            (_, Some(true)) => "ok",
            _ => "VIOLATED",
        };
        let _ = writeln!(out, "  {:<24} {:<9} {}", s(&c["condition"]), state, witness(&c["witness"]));
        explain_line(&mut out, c, 2);
    }
    match r["partition_scan"].as_array() {
        Some(found) if found.is_empty() => {
            let _ = writeln!(out, "partition scan: no viable split");
        }
        Some(found) => {
            let _ = writeln!(out, "partition scan: {} viable split(s)", found.len());
            for b in found {
                let _ = writeln!(out, "  {} + {}", spectrum(&b[0]), spectrum(&b[1]));
            }
        }
        None => {}
    }
    for v in r["verdicts"].as_array().into_iter().flatten() {
        let _ = writeln!(out, "{:<8} {}", s(&v["problem"]), s(&v["status"]));
        for c in v["certificates"].as_array().into_iter().flatten() {
            let _ = writeln!(out, "  {}", certificate(c));
        }
        explain_line(&mut out, v, 0);
    }
    out
}

fn matrix(m: &Value) -> String {
    let mut out = String::new();
    let cell = |x: &Value| match x {
        Value::Object(q) if s(&q["b"]) != "0" => {
            let root = match s(&q["b"]).as_str() {
                "1" => format!("√{}", q["d"]),
                b => format!("{b}√{}", q["d"]),
            };
            match s(&q["a"]).as_str() {
                "0" => root,
                a => format!("{a}+{root}"),
            }
        }
        Value::Object(q) => s(&q["a"]),
        other => s(other),
    };
    let rows: Vec<Vec<String>> = m["entries"]
        .as_array()
        .into_iter()
        .flatten()
        .map(|r| r.as_array().into_iter().flatten().map(cell).collect())
        .collect();
    let width = rows.iter().flatten().map(|c| c.chars().count()).max().unwrap_or(1);
    for r in rows {
        let cells: Vec<String> = r.iter().map(|c| format!("{c:>width$}")).collect();
        let _ = writeln!(out, "  [{}]", cells.join("  "));
    }
    out
}

fn verification(v: &Value, notes: &Value) -> String {
    let mut out = String::new();
    for key in ["charpoly_match", "nonnegative", "irreducible", "symmetric", "diagonalizable"] {
        let _ = writeln!(out, "  {key:<15} {}", v[key]);
        if let Some(text) = notes.get(key).and_then(Value::as_str) {
            let _ = writeln!(out, "    why: {text}");
        }
    }
    let _ = writeln!(out, "  target          {}", poly(&v["target"]));
    if !v["charpoly_match"].as_bool().unwrap_or(false) {
        let _ = writeln!(
            out,
            "  charpoly        {}",
            match &v["charpoly"] {
                Value::Null => "irrational coefficients".into(),
                p => poly(p),
            }
        );
    }
    let negative: Vec<String> = v["negative_entries"].as_array().into_iter().flatten().map(entry).collect();
    if !negative.is_empty() {
        let _ = writeln!(out, "  negative at     {}", negative.join(" "));
    }
    out
}

fn construct(r: &Value) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} -> {}", s(&r["source"]), spectrum(&r["spectrum"]));
    if !r["parameter"].is_null() {
        let _ = writeln!(out, "t = {}", s(&r["parameter"]));
    }
    out.push_str(&matrix(&r["matrix"]));
    out.push_str(&verification(&r["verification"], &r["explain"]));
    if !r["witness"].is_null() {
        let _ = writeln!(out, "first negative entry {}", entry(&r["witness"]));
    }
    out
}

fn verify(r: &Value) -> String {
    let mut out = verification(&r["verification"], &r["explain"]);
    for j in r["jordan"].as_array().into_iter().flatten() {
        let _ = writeln!(
            out,
            "  eigenvalue {:<8} multiplicity {}  blocks {}  ranks {}",
            s(&j["eigenvalue"]),
            j["algebraic_multiplicity"],
            list(&j["block_sizes"]),
            list(&j["rank_sequence"])
        );
    }
    out
}

fn threshold(r: &Value) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "family {}", s(&r["family"]));
    match &r["interval"] {
        Value::Null => {
            let _ = writeln!(out, "nonnegative for every t >= 0");
        }
        iv => {
            let _ = writeln!(out, "threshold in [{}, {}]", s(&iv["lo"]), s(&iv["hi"]));
            let _ = writeln!(out, "  ~ {}", s(&r["threshold_decimal"]));
            let _ = writeln!(out, "binding entry {}: {}", entry(&r["entry_witness"]), poly(&r["entry_poly"]));
        }
    }
    let cf = &r["closed_form_check"];
    if !cf.is_null() {
        let _ = writeln!(out, "closed form {} = {}", s(&cf["expression"]), s(&cf["closed_form_decimal"]));
        let _ = writeln!(out, "  matches root: {}", cf["closed_form_matches"]);
        let _ = writeln!(
            out,
            "quoted {} agrees on {} places ({} expected): {}",
            s(&cf["quoted_decimal"]),
            cf["agreeing_places"],
            cf["quoted_places"],
            cf["quoted_agrees"]
        );
    }
    explain_line(&mut out, r, 0);
    out
}

fn fit(r: &Value) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "t = {}", s(&r["t"]));
    if r["converged"].as_bool() == Some(true) {
        let p = &r["parameters"];
        for k in ["p", "q", "w", "h"] {
            let _ = writeln!(out, "  {k} = {}", s(&p[k]));
        }
        let _ = writeln!(out, "residual {} (converged below {})", s(&r["residual"]), s(&r["residual_tolerance"]));
        let _ = writeln!(out, "nonnegative {} (tolerance {})", r["nonnegative"], s(&r["nonnegative_tolerance"]));
        let _ = writeln!(out, "seed {}", r["seed"]);
    } else {
        let _ = writeln!(out, "no convergence; best residual {}", s(&r["best_residual"]));
        let _ = writeln!(out, "  best parameters {}", list(&r["best_parameters"]));
    }
    explain_line(&mut out, r, 0);
    out
}

fn roots(r: &Value) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} real root(s)", r["count"]);
    for iv in r["roots"].as_array().into_iter().flatten() {
        let _ = writeln!(out, "  [{}, {}]  ~ {}", s(&iv["lo"]), s(&iv["hi"]), s(&iv["decimal"]));
    }
    explain_line(&mut out, r, 0);
    out
}

pub fn text(report: &Value) -> String {
    let r = &report["result"];
    match report["verb"].as_str() {
        Some("check") => check(r),
        Some("construct") => construct(r),
        Some("verify") => verify(r),
        Some("threshold") => threshold(r),
        Some("fit-meehan") => fit(r),
        Some("roots") => roots(r),
        _ => report.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn polynomial_text() {
        assert_eq!(poly(&json!(["-15", "0", "78", "0", "1"])), "x^4 + 78*x^2 - 15");
        assert_eq!(poly(&json!(["0", "-1"])), "-x");
        assert_eq!(poly(&json!([])), "0");
    }

    #[test]
    fn quadratic_cells() {
        let m = json!({"entries": [[{"a": "0", "b": "1", "d": 6}, {"a": "2", "b": "0", "d": 6}],
                                   [{"a": "1", "b": "-1/2", "d": 6}, {"a": "0", "b": "0", "d": 6}]]});
        let text = matrix(&m);
        assert!(text.contains("√6") && text.contains("1+-1/2√6") && text.contains(" 2"));
    }

    #[test]
    fn certificate_lines() {
        let c = json!({"kind": "empty_partition_scan", "perron_multiplicity": 2, "splits_examined": 15});
        assert_eq!(certificate(&c), "Perron value repeated 2 times and none of 15 splits is viable");
        let c = json!({"kind": "matrix", "source": "family:lm_sigma_hat", "parameter": "3/4"});
        assert_eq!(certificate(&c), "verified matrix from family:lm_sigma_hat at t = 3/4");
    }
}
