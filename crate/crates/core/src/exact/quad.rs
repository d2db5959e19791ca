//! Elements `a + b√d` of a real quadratic field ℚ(√d).

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::field::{ratio_to_f64, Field};
use super::{int, Rational};
use crate::error::{Error, Result};

/// `a + b√d` with `d` squarefree and positive.
///
/// Elements with `b = 0` are plain rationals and carry `d = 0`, which acts
/// as a wildcard when combined with elements of a concrete field. Mixing two
/// different nonzero `d` panics: all entries of one matrix share one field.
#[derive(Clone, Debug)]
pub struct QuadExt {
    a: Rational,
    b: Rational,
    d: u64,
}

fn is_squarefree(d: u64) -> bool {
    if d < 2 {
        return false;
    }
    let mut p = 2u64;
    while p * p <= d {
        if d.is_multiple_of(p * p) {
            return false;
        }
        p += 1;
    }
    true
}

impl QuadExt {
    pub fn new(a: Rational, b: Rational, d: u64) -> Result<Self> {
        if b.is_zero() {
            return Ok(Self::rational(a));
        }
        if !is_squarefree(d) {
            return Err(Error::Field(format!("radicand {d} is not a squarefree integer > 1")));
        }
        Ok(Self { a, b, d })
    }

    pub fn rational(a: Rational) -> Self {
        Self { a, b: Rational::zero(), d: 0 }
    }

    /// `√d` itself.
    pub fn sqrt(d: u64) -> Result<Self> {
        Self::new(Rational::zero(), int(1), d)
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    /// The radicand, or 0 for rational elements.
    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn conjugate(&self) -> Self {
        Self { a: self.a.clone(), b: -self.b.clone(), d: self.d }
    }

    /// Field norm `a² − d b²`.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - &self.b * &self.b * int(self.d as i64)
    }

    fn shared_d(&self, other: &Self) -> u64 {
        match (self.d, other.d) {
            (0, d) | (d, 0) => d,
            (x, y) if x == y => x,
            (x, y) => panic!("mixed quadratic fields Q(sqrt {x}) and Q(sqrt {y})"),
        }
    }

    fn normalized(a: Rational, b: Rational, d: u64) -> Self {
        if b.is_zero() {
            Self::rational(a)
        } else {
            Self { a, b, d }
        }
    }
}

impl PartialEq for QuadExt {
    fn eq(&self, other: &Self) -> bool {
        self.a == other.a && self.b == other.b && (self.b.is_zero() || self.d == other.d)
    }
}

impl Eq for QuadExt {}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else {
            write!(f, "{} + {}√{}", self.a, self.b, self.d)
        }
    }
}

impl Add for QuadExt {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let d = self.shared_d(&rhs);
        Self::normalized(self.a + rhs.a, self.b + rhs.b, d)
    }
}

impl Sub for QuadExt {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let d = self.shared_d(&rhs);
        Self::normalized(self.a - rhs.a, self.b - rhs.b, d)
    }
}

impl Mul for QuadExt {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let d = self.shared_d(&rhs);
        let dd = int(d as i64);
        let a = &self.a * &rhs.a + &self.b * &rhs.b * dd;
        let b = &self.a * &rhs.b + &rhs.a * &self.b;
        Self::normalized(a, b, d)
    }
}

impl Neg for QuadExt {
    type Output = Self;
    fn neg(self) -> Self {
        Self { a: -self.a, b: -self.b, d: self.d }
    }
}

fn rational_sign(r: &Rational) -> Ordering {
    <Rational as Field>::sign(r)
}

impl Zero for QuadExt {
    fn zero() -> Self {
        Self::rational(Rational::zero())
    }

    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for QuadExt {
    fn one() -> Self {
        Self::rational(int(1))
    }
}

impl Field for QuadExt {
    fn from_rational(r: Rational) -> Self {
        Self::rational(r)
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        // (a + b√d)⁻¹ = (a − b√d) / (a² − d b²); the norm is nonzero as √d ∉ ℚ
        let norm = self.norm();
        Some(Self::normalized(&self.a / &norm, -(&self.b / &norm), self.d))
    }

    fn sign(&self) -> Ordering {
        let sa = rational_sign(&self.a);
        let sb = rational_sign(&self.b);
        match (sa, sb) {
            (s, Ordering::Equal) => s,
            (Ordering::Equal, s) => s,
            (x, y) if x == y => x,
            // opposite signs: compare a² with d b²
            (x, _) => match (&self.a * &self.a).cmp(&(&self.b * &self.b * int(self.d as i64))) {
                Ordering::Greater => x,
                Ordering::Less => x.reverse(),
                Ordering::Equal => Ordering::Equal,
            },
        }
    }

    fn to_rational(&self) -> Option<Rational> {
        self.b.is_zero().then(|| self.a.clone())
    }

    fn to_f64(&self) -> f64 {
        ratio_to_f64(&self.a) + ratio_to_f64(&self.b) * (self.d as f64).sqrt()
    }
}

impl QuadExt {
    pub fn abs(&self) -> Self {
        if self.is_neg() {
            -self.clone()
        } else {
            self.clone()
        }
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        Field::sign(self) == Ordering::Greater
    }
}

impl PartialOrd for QuadExt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(Field::sign(&(self.clone() - other.clone())))
    }
}

impl From<Rational> for QuadExt {
    fn from(r: Rational) -> Self {
        Self::rational(r)
    }
}
