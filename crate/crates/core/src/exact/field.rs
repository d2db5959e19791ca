use std::cmp::Ordering;
use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Rational;

/// An exact ordered field in which matrix and polynomial kernels run.
///
/// Implemented for [`Rational`] and [`QuadExt`](super::QuadExt). Every
/// implementor contains the rationals, and sign is decidable exactly.
pub trait Field:
    Clone
    + PartialEq
    + Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Zero
    + One
{
    fn from_rational(r: Rational) -> Self;
    /// `None` for zero.
    fn inv(&self) -> Option<Self>;
    /// Exact sign: `Less` for negative values.
    fn sign(&self) -> Ordering;
    /// The value as a rational, when it is one.
    fn to_rational(&self) -> Option<Rational>;
    fn to_f64(&self) -> f64;

    fn from_int(i: i64) -> Self {
        Self::from_rational(Rational::from_integer(i.into()))
    }

    fn is_neg(&self) -> bool {
        self.sign() == Ordering::Less
    }

    fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|inv| self.clone() * inv)
    }
}

impl Field for Rational {
    fn from_rational(r: Rational) -> Self {
        r
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn sign(&self) -> Ordering {
        if Signed::is_negative(self) {
            Ordering::Less
        } else if self.is_zero() {
            Ordering::Equal
        } else {
            Ordering::Greater
        }
    }

    fn to_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }

    fn to_f64(&self) -> f64 {
        ratio_to_f64(self)
    }
}

/// `f64` image of a big rational, robust to numerators and denominators
/// that overflow `f64` on their own.
pub fn ratio_to_f64(r: &Rational) -> f64 {
    if let (Some(n), Some(d)) = (r.numer().to_f64(), r.denom().to_f64()) {
        if n.is_finite() && d.is_finite() {
            return n / d;
        }
    }
    let num = r.numer().abs();
    let den = r.denom();
    // scale so the integer quotient carries ~64 significant bits
    let exp = num.bits() as i64 - den.bits() as i64 - 64;
    let quotient = if exp >= 0 { num / (den << exp as usize) } else { (num << (-exp) as usize) / den };
    let mag = quotient.to_f64().unwrap_or(f64::NAN) * 2f64.powi(exp as i32);
    if r.is_negative() {
        -mag
    } else {
        mag
    }
}
