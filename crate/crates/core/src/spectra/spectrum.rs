use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{domain, Result};
use crate::exact::{parse_rational, poly_from_roots, Poly, Rational};

/// A list of exact real values proposed as the eigenvalues of a
/// nonnegative matrix, kept sorted in descending order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Spectrum {
    values: Vec<Rational>,
}

impl Spectrum {
    pub fn new(mut values: Vec<Rational>) -> Result<Self> {
        if values.is_empty() {
            return Err(domain("a spectrum needs at least one value"));
        }
        values.sort_by(|a, b| b.cmp(a));
        Ok(Self { values })
    }

    pub fn from_ints(values: &[i64]) -> Result<Self> {
        Self::new(values.iter().map(|&v| Rational::from_integer(v.into())).collect())
    }

    /// Parses each string with [`parse_rational`].
    pub fn parse<S: AsRef<str>>(values: &[S]) -> Result<Self> {
        Self::new(values.iter().map(|s| parse_rational(s.as_ref())).collect::<Result<Vec<_>>>()?)
    }

    /// Values, largest first.
    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn largest(&self) -> &Rational {
        &self.values[0]
    }

    pub fn sum(&self) -> Rational {
        self.values.iter().fold(Rational::zero(), |acc, v| acc + v)
    }

    /// Exact `Σ λᵢᵏ`, `k ≥ 1`.
    pub fn power_sum(&self, k: u32) -> Result<Rational> {
        if k < 1 {
            return Err(domain("power sums are defined for k >= 1"));
        }
        Ok(self.values.iter().fold(Rational::zero(), |acc, v| acc + num_traits::pow(v.clone(), k as usize)))
    }

    pub fn power_sums(&self, k_max: u32) -> PowerSums {
        let mut s = Vec::with_capacity(k_max as usize);
        let mut powers: Vec<Rational> = self.values.clone();
        for _ in 0..k_max {
            s.push(powers.iter().fold(Rational::zero(), |acc, v| acc + v));
            for (p, v) in powers.iter_mut().zip(&self.values) {
                *p = &*p * v;
            }
        }
        PowerSums { s }
    }

    /// Number of copies of `v`.
    pub fn multiplicity(&self, v: &Rational) -> usize {
        self.values.iter().filter(|x| *x == v).count()
    }

    /// Largest modulus over the list.
    pub fn max_modulus(&self) -> Rational {
        self.values.iter().map(Signed::abs).max().expect("nonempty")
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.values.iter().map(|v| v * c).collect()).expect("nonempty")
    }

    /// Monic polynomial with these roots.
    pub fn target_poly(&self) -> Poly {
        poly_from_roots(&self.values).expect("rational roots")
    }

    /// Values strictly after the two largest.
    pub fn tail(&self) -> &[Rational] {
        self.values.get(2..).unwrap_or(&[])
    }

    pub fn count_positive(&self) -> usize {
        self.values.iter().filter(|v| v.is_positive()).count()
    }

    /// Replaces the two largest values.
    pub(crate) fn with_leading_pair(&self, first: Rational, second: Rational) -> Self {
        let mut values = self.values.clone();
        values[0] = first;
        if values.len() > 1 {
            values[1] = second;
        }
        Self::new(values).expect("nonempty")
    }
}

impl fmt::Display for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// `s[k−1] = Σ λᵢᵏ` for `k = 1..=k_max`.
#[derive(Clone, Debug, PartialEq)]
pub struct PowerSums {
    s: Vec<Rational>,
}

impl PowerSums {
    pub fn k_max(&self) -> u32 {
        self.s.len() as u32
    }

    /// `s_k`, 1-based.
    pub fn get(&self, k: u32) -> &Rational {
        &self.s[k as usize - 1]
    }

    pub fn as_slice(&self) -> &[Rational] {
        &self.s
    }
}
