use super::{ExactMatrix, Field, Poly, QuadExt, Rational};
use crate::error::Result;

/// A matrix over one of the two supported fields, chosen at run time.
#[derive(Clone, Debug, PartialEq)]
pub enum AnyMatrix {
    Rational(ExactMatrix<Rational>),
    /// Entries in ℚ(√d).
    Quad {
        d: u64,
        matrix: ExactMatrix<QuadExt>,
    },
}

impl AnyMatrix {
    pub fn n(&self) -> usize {
        match self {
            Self::Rational(m) => m.n(),
            Self::Quad { matrix, .. } => matrix.n(),
        }
    }

    /// Radicand of the entry field, `None` over ℚ.
    pub fn radicand(&self) -> Option<u64> {
        match self {
            Self::Rational(_) => None,
            Self::Quad { d, .. } => Some(*d),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        match self {
            Self::Rational(m) => m.is_symmetric(),
            Self::Quad { matrix, .. } => matrix.is_symmetric(),
        }
    }

    pub fn is_nonnegative(&self) -> bool {
        match self {
            Self::Rational(m) => m.is_nonnegative(),
            Self::Quad { matrix, .. } => matrix.is_nonnegative(),
        }
    }

    pub fn negative_entries(&self) -> Vec<(usize, usize)> {
        match self {
            Self::Rational(m) => m.negative_entries(),
            Self::Quad { matrix, .. } => matrix.negative_entries(),
        }
    }

    /// Nonzero pattern, row-major.
    pub fn support(&self) -> Vec<Vec<bool>> {
        fn pattern<F: Field>(m: &ExactMatrix<F>) -> Vec<Vec<bool>> {
            m.rows().iter().map(|r| r.iter().map(|x| !x.is_zero()).collect()).collect()
        }
        match self {
            Self::Rational(m) => pattern(m),
            Self::Quad { matrix, .. } => pattern(matrix),
        }
    }

    /// Characteristic polynomial; must have rational coefficients.
    pub fn charpoly(&self) -> Result<Poly<Rational>> {
        match self {
            Self::Rational(m) => Ok(m.charpoly()),
            Self::Quad { matrix, .. } => matrix.charpoly().to_rational(),
        }
    }

    /// Whether the minimal polynomial is squarefree.
    pub fn minpoly_is_squarefree(&self) -> bool {
        match self {
            Self::Rational(m) => m.minpoly().is_squarefree(),
            Self::Quad { matrix, .. } => matrix.minpoly().is_squarefree(),
        }
    }

    /// Exact traces of `A^k`, `k = 1..=k_max`; these must be rational.
    pub fn power_traces(&self, k_max: u32) -> Result<Vec<Rational>> {
        fn traces<F: Field>(m: &ExactMatrix<F>, k_max: u32) -> Result<Vec<Rational>> {
            let mut p = m.clone();
            let mut out = Vec::new();
            for _ in 0..k_max {
                let t = p.trace();
                out.push(t.to_rational().ok_or_else(|| crate::Error::Field(format!("irrational trace {t:?}")))?);
                p = &p * m;
            }
            Ok(out)
        }
        match self {
            Self::Rational(m) => traces(m, k_max),
            Self::Quad { matrix, .. } => traces(matrix, k_max),
        }
    }

    pub fn to_f64_rows(&self) -> Vec<Vec<f64>> {
        fn conv<F: Field>(m: &ExactMatrix<F>) -> Vec<Vec<f64>> {
            m.rows().iter().map(|r| r.iter().map(Field::to_f64).collect()).collect()
        }
        match self {
            Self::Rational(m) => conv(m),
            Self::Quad { matrix, .. } => conv(matrix),
        }
    }

    pub fn as_rational(&self) -> Option<&ExactMatrix<Rational>> {
        match self {
            Self::Rational(m) => Some(m),
            Self::Quad { .. } => None,
        }
    }
}

impl From<ExactMatrix<Rational>> for AnyMatrix {
    fn from(m: ExactMatrix<Rational>) -> Self {
        Self::Rational(m)
    }
}
