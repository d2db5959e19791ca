use num_traits::{Signed, Zero};

use crate::error::{domain, Result};
use crate::exact::{int, rat, ExactMatrix, Poly, Rational};
use crate::spectra::Spectrum;

/// An eigenvalue that depends affinely on the family parameter:
/// `constant + slope·t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineValue {
    pub constant: Rational,
    pub slope: Rational,
}

impl AffineValue {
    fn new(constant: Rational, slope: Rational) -> Self {
        Self { constant, slope }
    }

    pub fn at(&self, t: &Rational) -> Rational {
        &self.constant + &self.slope * t
    }
}

/// A threshold value quoted as a closed form and as a truncated decimal.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QuotedThreshold {
    /// Human-readable closed form, e.g. `sqrt(16*sqrt(6) - 39)`.
    pub expression: &'static str,
    pub decimal: &'static str,
    /// Decimal places the quoted value is expected to match.
    pub places: usize,
    pub(crate) kind: ClosedForm,
}

/// `scale · sqrt(outer · sqrt(radicand) − shift)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct ClosedForm {
    pub(crate) scale_den: i64,
    pub(crate) outer: i64,
    pub(crate) radicand: i64,
    pub(crate) shift: i64,
}

/// A square matrix whose entries are polynomials in a parameter `t`, with
/// a claimed spectrum affine in `t`.
#[derive(Clone, Debug, PartialEq)]
pub struct MatrixFamily {
    pub name: &'static str,
    entries: Vec<Vec<Poly>>,
    target: Vec<AffineValue>,
    pub quoted: Option<QuotedThreshold>,
}

impl MatrixFamily {
    pub fn new(name: &'static str, entries: Vec<Vec<Poly>>, target: Vec<AffineValue>) -> Result<Self> {
        let n = entries.len();
        if n == 0 || entries.iter().any(|r| r.len() != n) || target.len() != n {
            return Err(domain("family needs n×n entries and n target values"));
        }
        Ok(Self { name, entries, target, quoted: None })
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    /// 0-based.
    pub fn entry(&self, i: usize, j: usize) -> &Poly {
        &self.entries[i][j]
    }

    pub fn target(&self) -> &[AffineValue] {
        &self.target
    }

    pub fn eval(&self, t: &Rational) -> ExactMatrix {
        ExactMatrix::from_fn(self.n(), |i, j| self.entries[i][j].eval(t))
    }

    pub fn target_at(&self, t: &Rational) -> Spectrum {
        Spectrum::new(self.target.iter().map(|v| v.at(t)).collect()).expect("n >= 1")
    }

    /// Parameter `t ≥ 0` at which the target equals `sp`, if any.
    pub fn parameter_for(&self, sp: &Spectrum) -> Option<Rational> {
        if sp.n() != self.n() {
            return None;
        }
        let lead = self.target.iter().find(|v| !v.slope.is_zero())?;
        // the value that grows fastest with t is the largest for large t
        let steepest =
            self.target.iter().filter(|v| v.slope.is_positive()).max_by(|a, b| a.slope.cmp(&b.slope)).unwrap_or(lead);
        let t = (sp.largest() - &steepest.constant) / &steepest.slope;
        (!t.is_negative() && &self.target_at(&t) == sp).then_some(t)
    }

    /// Entries `(i, j)` that are negative at `t`, 0-based.
    pub fn negative_entries_at(&self, t: &Rational) -> Vec<(usize, usize)> {
        self.eval(t).negative_entries()
    }
}

fn p(coeffs: &[(i64, i64)]) -> Poly {
    Poly::new(coeffs.iter().map(|&(n, d)| rat(n, d)).collect())
}

fn c(v: i64) -> Poly {
    Poly::constant(int(v))
}

fn z() -> Poly {
    Poly::zero()
}

/// `(3+t, 3−t, −2, −2, −2)` realized by a lower-Hessenberg companion-like
/// matrix, nonnegative for `t ≥ sqrt(16·sqrt(6) − 39)`.
pub fn family_lm_sigma_hat() -> MatrixFamily {
    let a21 = p(&[(15, 2), (0, 1), (1, 2)]);
    let entries = vec![
        vec![z(), c(1), z(), z(), z()],
        vec![a21.clone(), z(), c(1), z(), z()],
        vec![z(), z(), z(), c(1), z()],
        vec![z(), z(), z(), z(), c(1)],
        vec![
            p(&[(3, 1), (0, 1), (58, 1), (0, 1), (3, 1)]),
            p(&[(-15, 4), (0, 1), (78, 4), (0, 1), (1, 4)]),
            p(&[(10, 1), (0, 1), (6, 1)]),
            a21,
            z(),
        ],
    ];
    let target = vec![
        AffineValue::new(int(3), int(1)),
        AffineValue::new(int(3), int(-1)),
        AffineValue::new(int(-2), int(0)),
        AffineValue::new(int(-2), int(0)),
        AffineValue::new(int(-2), int(0)),
    ];
    let mut f = MatrixFamily::new("lm_sigma_hat", entries, target).expect("static shape");
    f.quoted = Some(QuotedThreshold {
        expression: "sqrt(16*sqrt(6) - 39)",
        decimal: "0.43799",
        places: 4,
        kind: ClosedForm { scale_den: 1, outer: 16, radicand: 6, shift: 39 },
    });
    f
}

/// `(3+t, 3−t, −19/10, −2, −21/10)`: five distinct eigenvalues for `t > 0`.
pub fn family_perturbed() -> MatrixFamily {
    let a21 = p(&[(1501, 200), (0, 1), (100, 200)]);
    let entries = vec![
        vec![z(), c(1), z(), z(), z()],
        vec![a21.clone(), z(), c(1), z(), z()],
        vec![z(), z(), z(), c(1), z()],
        vec![z(), z(), z(), z(), c(1)],
        vec![
            p(&[(14649, 5000), (0, 1), (289950, 5000), (0, 1), (15000, 5000)]),
            p(&[(-148199, 40000), (0, 1), (779800, 40000), (0, 1), (10000, 40000)]),
            p(&[(249, 25), (0, 1), (150, 25)]),
            a21,
            z(),
        ],
    ];
    let target = vec![
        AffineValue::new(int(3), int(1)),
        AffineValue::new(int(3), int(-1)),
        AffineValue::new(rat(-19, 10), int(0)),
        AffineValue::new(int(-2), int(0)),
        AffineValue::new(rat(-21, 10), int(0)),
    ];
    let mut f = MatrixFamily::new("perturbed", entries, target).expect("static shape");
    f.quoted = Some(QuotedThreshold {
        expression: "sqrt(120*sqrt(1066) - 3899)/10",
        decimal: "0.4354153419",
        places: 10,
        kind: ClosedForm { scale_den: 10, outer: 120, radicand: 1066, shift: 3899 },
    });
    f
}

pub fn families() -> Vec<MatrixFamily> {
    vec![family_lm_sigma_hat(), family_perturbed()]
}

pub fn family_by_name(name: &str) -> Option<MatrixFamily> {
    families().into_iter().find(|f| f.name == name)
}
