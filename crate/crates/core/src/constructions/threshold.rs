use num_traits::{Signed, Zero};

use super::family::{MatrixFamily, QuotedThreshold};
use crate::error::{domain, Result};
use crate::exact::{
    agreeing_decimals, int, isolate_nonneg_roots, parse_rational, refine, sqrt_lower, to_decimal, IsolatingInterval,
    Poly, Rational,
};

/// Where the nonnegativity of a family starts.
#[derive(Clone, Debug, PartialEq)]
pub struct ThresholdResult {
    pub family: &'static str,
    /// `None` when every entry is nonnegative on all of `[0, ∞)`.
    pub interval: Option<IsolatingInterval>,
    /// 0-based entry whose sign change is binding.
    pub entry_witness: Option<(usize, usize)>,
    pub entry_poly: Option<Poly>,
    pub closed_form_check: Option<ClosedFormCheck>,
}

impl ThresholdResult {
    pub fn lower(&self) -> Rational {
        self.interval.as_ref().map_or_else(Rational::zero, |iv| iv.lo.clone())
    }

    pub fn upper(&self) -> Rational {
        self.interval.as_ref().map_or_else(Rational::zero, |iv| iv.hi.clone())
    }
}

/// Decimal comparison between the isolated threshold, its closed form and
/// a quoted truncated decimal.
#[derive(Clone, Debug, PartialEq)]
pub struct ClosedFormCheck {
    pub expression: &'static str,
    /// Closed form truncated to 30 places.
    pub closed_form_decimal: String,
    /// Isolated root truncated to 30 places.
    pub root_decimal: String,
    /// `|root − closed form| < 10⁻²⁵`.
    pub closed_form_matches: bool,
    pub quoted_decimal: &'static str,
    pub quoted_places: usize,
    /// Decimal places on which the root and the quoted value agree.
    pub agreeing_places: usize,
    pub quoted_agrees: bool,
}

const DIGITS: usize = 30;

fn closed_form_value(q: &QuotedThreshold) -> Result<Rational> {
    let k = q.kind;
    let inner = sqrt_lower(&int(k.radicand), DIGITS + 15)?;
    let outer = int(k.outer) * inner - int(k.shift);
    Ok(sqrt_lower(&outer, DIGITS + 10)? / int(k.scale_den))
}

fn check_closed_form(p: &Poly, iv: &IsolatingInterval, q: &QuotedThreshold) -> Result<ClosedFormCheck> {
    let fine = refine(p, iv, &Rational::new(1.into(), num_traits::pow(10.into(), DIGITS + 5)))?;
    let root = fine.midpoint();
    let closed = closed_form_value(q)?;
    let quoted = parse_rational(q.decimal)?;
    let tolerance = Rational::new(1.into(), num_traits::pow(10.into(), 25));
    let agreeing_places = agreeing_decimals(&root, &quoted);
    Ok(ClosedFormCheck {
        expression: q.expression,
        closed_form_decimal: to_decimal(&closed, DIGITS),
        root_decimal: to_decimal(&root, DIGITS),
        closed_form_matches: (&root - &closed).abs() < tolerance,
        quoted_decimal: q.decimal,
        quoted_places: q.places,
        agreeing_places,
        quoted_agrees: agreeing_places >= q.places,
    })
}

/// Largest nonnegative root at which `p` changes sign, isolated to `eps`.
fn last_sign_change(p: &Poly, eps: &Rational) -> Result<Option<IsolatingInterval>> {
    let odd = p
        .squarefree_factors()
        .into_iter()
        .enumerate()
        .filter(|(i, _)| i % 2 == 0)
        .fold(Poly::one(), |acc, (_, f)| &acc * &f);
    if odd.degree().unwrap_or(0) == 0 {
        return Ok(None);
    }
    Ok(isolate_nonneg_roots(&odd, eps)?.pop())
}

/// Left end of the unbounded interval of `t ≥ 0` on which every entry of
/// the family is nonnegative, isolated to width ≤ `eps`.
pub fn family_nonneg_threshold(f: &MatrixFamily, eps: &Rational) -> Result<ThresholdResult> {
    if !eps.is_positive() {
        return Err(domain("precision must be positive"));
    }
    let mut best: Option<(IsolatingInterval, (usize, usize))> = None;
    for i in 0..f.n() {
        for j in 0..f.n() {
            let p = f.entry(i, j);
            match p.leading() {
                None => continue,
                Some(lead) if lead.is_negative() => {
                    return Err(domain(format!(
                        "entry ({}, {}) is eventually negative; no unbounded nonnegative interval",
                        i + 1,
                        j + 1
                    )))
                }
                Some(_) => {}
            }
            if let Some(iv) = last_sign_change(p, eps)? {
                if best.as_ref().is_none_or(|(b, _)| iv.hi > b.hi) {
                    best = Some((iv, (i, j)));
                }
            }
        }
    }
    let Some((interval, (i, j))) = best else {
        return Ok(ThresholdResult {
            family: f.name,
            interval: None,
            entry_witness: None,
            entry_poly: None,
            closed_form_check: None,
        });
    };
    let entry_poly = f.entry(i, j).clone();
    let closed_form_check = f.quoted.as_ref().map(|q| check_closed_form(&entry_poly, &interval, q)).transpose()?;
    Ok(ThresholdResult {
        family: f.name,
        interval: Some(interval),
        entry_witness: Some((i, j)),
        entry_poly: Some(entry_poly),
        closed_form_check,
    })
}
