use nniep::constructions::{
    catalog, catalog_entry, families, family_by_name, family_nonneg_threshold, meehan_fit, FitResult,
};
use nniep::exact::{isolate_real_roots, parse_rational, to_decimal, AnyMatrix, Rational};
use nniep::json;
use nniep::spectra::{classify, ClassifyOptions, Status};
use nniep::verification::{jordan_structure, verify_any, JordanReport, VerificationReport};
use nniep::Error;
use num_traits::Signed;
use serde_json::{json, Map, Value};

use crate::input;

pub const DEFAULT_DEPTH: u32 = 10;
pub const DEFAULT_EPS: &str = "1/1000000000";
pub const DEFAULT_ATTEMPTS: usize = 256;

pub struct RunReport {
    pub verb: &'static str,
    pub inputs: Value,
    pub result: Value,
    pub exit_code: u8,
}

impl RunReport {
    pub fn to_json(&self) -> Value {
        json!({
            "exit_code": self.exit_code,
            "inputs": self.inputs,
            "result": self.result,
            "verb": self.verb,
        })
    }
}

/// Input the command cannot act on; always exit code 2.
#[derive(Debug)]
pub struct Invalid(pub String);

impl From<String> for Invalid {
    fn from(s: String) -> Self {
        Self(s)
    }
}

impl From<&str> for Invalid {
    fn from(s: &str) -> Self {
        Self(s.to_string())
    }
}

impl From<Error> for Invalid {
    fn from(e: Error) -> Self {
        Self(e.to_string())
    }
}

type Outcome = Result<RunReport, Invalid>;

fn positive_rational(text: &str, what: &str) -> Result<Rational, Invalid> {
    let r = parse_rational(text)?;
    if !r.is_positive() {
        return Err(format!("{what} must be positive, got {text}").into());
    }
    Ok(r)
}

fn status_note(status: Status) -> &'static str {
    match status {
        Status::Realizable => "a certificate for this problem was verified exactly",
        Status::NotRealizable => "a necessary condition for this problem fails",
        Status::Unknown => "no condition fails and no certificate is known",
    }
}

const VERIFICATION_NOTES: [(&str, &str); 5] = [
    ("charpoly_match", "characteristic polynomial equals the product of (x − λ) over the list, exactly"),
    ("nonnegative", "every entry is ≥ 0"),
    ("irreducible", "the digraph of nonzero entries is strongly connected"),
    ("symmetric", "the matrix equals its transpose"),
    ("diagonalizable", "the minimal polynomial is squarefree"),
];

fn verification_notes() -> Value {
    Value::Object(VERIFICATION_NOTES.iter().map(|(k, v)| (k.to_string(), json!(v))).collect())
}

pub fn check(source: &str, depth: u32, explain: bool) -> Outcome {
    if depth == 0 {
        return Err("depth must be at least 1".into());
    }
    let sp = input::spectrum(source)?;
    let opts = ClassifyOptions { k_max: depth, m_max: depth };
    let c = classify(&sp, opts);
    let mut result = json::classification(&c);
    if explain {
        for (v, report) in result["conditions"].as_array_mut().into_iter().flatten().zip(&c.conditions) {
            v["explain"] = json!(report.condition.rationale());
        }
        for (v, verdict) in result["verdicts"].as_array_mut().into_iter().flatten().zip(&c.verdicts) {
            v["explain"] = json!(status_note(verdict.status));
        }
    }
    let failed = c.verdicts.iter().any(|v| v.status == Status::NotRealizable);
    Ok(RunReport {
        verb: "check",
        inputs: json!({"depth": depth, "spectrum": json::spectrum(&sp)}),
        result,
        exit_code: failed as u8,
    })
}

fn construction_result(
    source: String,
    parameter: Option<&Rational>,
    matrix: &AnyMatrix,
    report: &VerificationReport,
    explain: bool,
) -> Value {
    let mut out = Map::new();
    out.insert("source".into(), json!(source));
    out.insert("parameter".into(), parameter.map(json::rational).unwrap_or(Value::Null));
    out.insert("matrix".into(), json::matrix(matrix));
    out.insert("verification".into(), json::verification_report(report));
    out.insert("witness".into(), report.negative_entries.first().map_or(Value::Null, |&(i, j)| json!([i + 1, j + 1])));
    if explain {
        out.insert("explain".into(), verification_notes());
    }
    Value::Object(out)
}

fn known_names() -> String {
    let mut names: Vec<&str> = families().iter().map(|f| f.name).collect();
    names.extend(catalog().iter().map(|e| e.name));
    names.join(", ")
}

pub fn construct(name: &str, t: Option<&str>, explain: bool) -> Outcome {
    if let Some(f) = family_by_name(name) {
        let text = t.ok_or_else(|| format!("family {name} needs --t"))?;
        let t = parse_rational(text)?;
        if t.is_negative() {
            return Err(format!("t must be nonnegative, got {text}").into());
        }
        let sp = f.target_at(&t);
        let matrix = AnyMatrix::from(f.eval(&t));
        let report = verify_any(&matrix, &sp)?;
        let mut result = construction_result(format!("family:{name}"), Some(&t), &matrix, &report, explain);
        result["spectrum"] = json::spectrum(&sp);
        return Ok(RunReport {
            verb: "construct",
            inputs: json!({"name": name, "t": json::rational(&t)}),
            result,
            exit_code: !report.realizes() as u8,
        });
    }
    if let Some(e) = catalog_entry(name) {
        if t.is_some() {
            return Err(format!("catalog entry {name} takes no --t").into());
        }
        let report = verify_any(&e.matrix, &e.spectrum)?;
        let mut result = construction_result(format!("catalog:{name}"), None, &e.matrix, &report, explain);
        result["spectrum"] = json::spectrum(&e.spectrum);
        return Ok(RunReport {
            verb: "construct",
            inputs: json!({"name": name, "t": null}),
            result,
            exit_code: !report.realizes() as u8,
        });
    }
    Err(format!("unknown name {name:?}; known: {}", known_names()).into())
}

fn jordan_reports(m: &AnyMatrix, values: &[Rational]) -> Result<Vec<JordanReport>, Invalid> {
    let mut distinct = values.to_vec();
    distinct.dedup();
    distinct
        .iter()
        .map(|lam| match m {
            AnyMatrix::Rational(a) => jordan_structure(a, lam),
            AnyMatrix::Quad { matrix, .. } => jordan_structure(matrix, lam),
        })
        .collect::<Result<_, _>>()
        .map_err(Invalid::from)
}

pub fn verify(matrix_source: &str, spectrum_source: &str, explain: bool) -> Outcome {
    let m = input::matrix(matrix_source)?;
    let sp = input::spectrum(spectrum_source)?;
    let report = verify_any(&m, &sp)?;
    let jordan = if report.charpoly_match { jordan_reports(&m, sp.values())? } else { Vec::new() };
    let mut result = json!({
        "jordan": jordan.iter().map(json::jordan_report).collect::<Vec<_>>(),
        "verification": json::verification_report(&report),
    });
    if explain {
        result["explain"] = verification_notes();
    }
    Ok(RunReport {
        verb: "verify",
        inputs: json!({"matrix": json::matrix(&m), "spectrum": json::spectrum(&sp)}),
        result,
        exit_code: !report.realizes() as u8,
    })
}

pub fn threshold(family: &str, eps: &str, explain: bool) -> Outcome {
    let f = family_by_name(family).ok_or_else(|| {
        let names: Vec<&str> = families().iter().map(|f| f.name).collect();
        format!("unknown family {family:?}; known: {}", names.join(", "))
    })?;
    let eps_r = positive_rational(eps, "eps")?;
    let th = family_nonneg_threshold(&f, &eps_r)?;
    let mut result = json::threshold(&th);
    if let Some(iv) = &th.interval {
        result["threshold_decimal"] = json!(to_decimal(&iv.midpoint(), 12));
    }
    if explain {
        result["explain"] = json!(
            "smallest t from which every entry polynomial stays nonnegative; the binding entry is the one whose last sign change is largest"
        );
    }
    Ok(RunReport {
        verb: "threshold",
        inputs: json!({"eps": json::rational(&eps_r), "family": family}),
        result,
        exit_code: 0,
    })
}

fn fit_value(fit: &FitResult) -> Value {
    let mut v = json::fit(fit);
    v["converged"] = json!(true);
    v
}

pub fn fit_meehan(t: &str, attempts: usize, explain: bool) -> Outcome {
    let t_r = positive_rational(t, "t")?;
    if attempts == 0 {
        return Err("attempts must be at least 1".into());
    }
    let t_f = nniep::exact::ratio_to_f64(&t_r);
    let (mut result, exit_code) = match meehan_fit(t_f, attempts) {
        Ok(fit) => {
            let ok = fit.nonnegative;
            (fit_value(&fit), !ok as u8)
        }
        Err(Error::Convergence { best_residual, best_parameters }) => (
            json!({
                "best_parameters": best_parameters.iter().map(|x| json::f64_string(*x)).collect::<Vec<_>>(),
                "best_residual": json::f64_string(best_residual),
                "converged": false,
                "t": json::f64_string(t_f),
            }),
            1,
        ),
        Err(e) => return Err(e.into()),
    };
    if explain {
        result["explain"] = json!(
            "damped Newton from a fixed seed grid on the coefficient equations of the four-parameter matrix; nonnegative means every parameter is at least −1e-10"
        );
    }
    Ok(RunReport {
        verb: "fit-meehan",
        inputs: json!({"attempts": attempts, "t": json::f64_string(t_f)}),
        result,
        exit_code,
    })
}

pub fn roots(source: &str, eps: &str, explain: bool) -> Outcome {
    let p = input::poly(source)?;
    if p.is_zero() {
        return Err("the zero polynomial has no isolated roots".into());
    }
    let eps_r = positive_rational(eps, "eps")?;
    let found = isolate_real_roots(&p, &eps_r)?;
    let roots: Vec<Value> = found
        .iter()
        .map(|iv| {
            let mut v = json::interval(iv);
            v["decimal"] = json!(to_decimal(&iv.midpoint(), 12));
            v
        })
        .collect();
    let mut result = json!({"count": roots.len(), "roots": roots});
    if explain {
        result["explain"] =
            json!("Sturm sequences count the real roots in each interval; bisection shrinks every interval to the requested width");
    }
    Ok(RunReport {
        verb: "roots",
        inputs: json!({"eps": json::rational(&eps_r), "poly": json::poly(&p)}),
        result,
        exit_code: 0,
    })
}
