use std::fmt;

use num_traits::{Signed, Zero};

use super::{catalog, companion::suleimanova_companion, families};
use crate::error::{domain, Result};
use crate::exact::{AnyMatrix, Rational};
use crate::spectra::{check_suleimanova, Spectrum};
use crate::verification::{verify_any, VerificationReport};

/// Where a realizing matrix came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    Companion,
    Catalog(&'static str),
    Family(&'static str),
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Companion => f.write_str("suleimanova_companion"),
            Self::Catalog(name) => write!(f, "catalog:{name}"),
            Self::Family(name) => write!(f, "family:{name}"),
        }
    }
}

/// An explicit nonnegative matrix verified to have a given spectrum.
#[derive(Clone, Debug, PartialEq)]
pub struct MatrixCertificate {
    pub source: Source,
    pub parameter: Option<Rational>,
    pub matrix: AnyMatrix,
    pub report: VerificationReport,
}

fn certify(source: Source, parameter: Option<Rational>, matrix: AnyMatrix, sp: &Spectrum) -> Option<MatrixCertificate> {
    let report = verify_any(&matrix, sp).ok()?;
    report.realizes().then_some(MatrixCertificate { source, parameter, matrix, report })
}

/// Every stored or constructible realization of `sp`, each verified
/// exactly: companion first, then families, then catalog entries.
pub fn matrix_certificates(sp: &Spectrum) -> Vec<MatrixCertificate> {
    let mut out = Vec::new();
    let s = check_suleimanova(sp);
    if s.applicable && s.satisfied {
        if let Ok(m) = suleimanova_companion(sp) {
            out.extend(certify(Source::Companion, None, m.into(), sp));
        }
    }
    for f in families() {
        if let Some(t) = f.parameter_for(sp) {
            out.extend(certify(Source::Family(f.name), Some(t.clone()), f.eval(&t).into(), sp));
        }
    }
    for e in catalog() {
        if &e.spectrum == sp {
            out.extend(certify(Source::Catalog(e.name), None, e.matrix, sp));
        }
    }
    out
}

/// A realizability conclusion obtained by shifting a certified list.
#[derive(Clone, Debug, PartialEq)]
pub struct Deduction {
    pub rule: &'static str,
    pub spectrum: Spectrum,
    pub shift: Rational,
    pub premise: Spectrum,
    pub premise_certificate: MatrixCertificate,
}

pub const GUO_RULE: &str = "guo_shift";

/// `(λ₁ + u, λ₂ + u, λ₃, …)` from a certified `(λ₁, λ₂, λ₃, …)`.
pub fn guo_extend(base: &Spectrum, u: &Rational) -> Result<Deduction> {
    if u.is_negative() {
        return Err(domain("shift must be nonnegative"));
    }
    if base.n() < 2 {
        return Err(domain("shift needs at least two values"));
    }
    let premise_certificate = matrix_certificates(base)
        .into_iter()
        .next()
        .ok_or_else(|| domain(format!("{base} has no realizing certificate")))?;
    let v = base.values();
    let spectrum = if u.is_zero() { base.clone() } else { base.with_leading_pair(&v[0] + u, &v[1] + u) };
    Ok(Deduction { rule: GUO_RULE, spectrum, shift: u.clone(), premise: base.clone(), premise_certificate })
}

/// A certified base and shift `u > 0` with `guo_extend(base, u) = sp`.
pub fn guo_deduction(sp: &Spectrum) -> Option<Deduction> {
    if sp.n() < 2 {
        return None;
    }
    let v = sp.values();
    let (a, b) = (&v[0], &v[1]);
    let mut bases: Vec<(Spectrum, Rational)> = Vec::new();
    for f in families() {
        let target = f.target();
        let (p, q) = (&target[0], &target[1]);
        let dslope = &p.slope - &q.slope;
        if dslope.is_zero() {
            continue;
        }
        // a − u = p(s), b − u = q(s)
        let s = (a - b - (&p.constant - &q.constant)) / dslope;
        if s.is_negative() {
            continue;
        }
        let u = a - p.at(&s);
        bases.push((f.target_at(&s), u));
    }
    for e in catalog() {
        let w = e.spectrum.values();
        if w.len() == v.len() {
            bases.push((e.spectrum.clone(), a - &w[0]));
        }
    }
    bases.into_iter().filter(|(_, u)| u.is_positive()).find_map(|(base, u)| {
        let d = guo_extend(&base, &u).ok()?;
        (&d.spectrum == sp).then_some(d)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    #[test]
    fn certificates_in_order() {
        let sp = Spectrum::from_ints(&[4, 2, -2, -2, -2]).unwrap();
        let certs = matrix_certificates(&sp);
        let sources: Vec<String> = certs.iter().map(|c| c.source.to_string()).collect();
        assert_eq!(sources, vec!["family:lm_sigma_hat", "catalog:sym_sigma_hat_t1"]);
        assert!(matrix_certificates(&Spectrum::from_ints(&[3, 3, -2, -2, -2]).unwrap()).is_empty());
        let sp = Spectrum::from_ints(&[3, -1, -1, -1]).unwrap();
        assert_eq!(matrix_certificates(&sp)[0].source, Source::Companion);
    }

    #[test]
    fn guo_examples() {
        let base = Spectrum::new(vec![rat(86, 25), rat(64, 25), int(-2), int(-2), int(-2)]).unwrap();
        let d = guo_extend(&base, &rat(11, 25)).unwrap();
        assert_eq!(d.spectrum, Spectrum::new(vec![rat(97, 25), int(3), int(-2), int(-2), int(-2)]).unwrap());
        assert_eq!(d.premise_certificate.source, Source::Family("lm_sigma_hat"));
        assert_eq!(guo_extend(&base, &int(0)).unwrap().spectrum, base);
        assert!(guo_extend(&Spectrum::from_ints(&[3, 3, -2, -2, -2]).unwrap(), &int(1)).is_err());
        let found = guo_deduction(&d.spectrum).unwrap();
        assert_eq!(found.premise, base);
        assert!(guo_deduction(&Spectrum::from_ints(&[3, 3, -2, -2, -2]).unwrap()).is_none());
    }
}
