//! Coefficient traits shared by every module.
//!
//! Linear algebra and Lie brackets only need ring operations plus the
//! ability to invert *units*. Over a field every nonzero element is a unit;
//! over [`ParamPoly`](crate::ParamPoly) only nonzero constants are.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Exact rationals with normalized sign and gcd.
pub type Rational = num_rational::BigRational;

pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
    fn from_rational(q: Rational) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    fn frac(n: i64, d: i64) -> Self {
        Self::from_rational(rat(n, d))
    }

    /// Inverse when `self` is a unit of the ring, `None` otherwise.
    fn unit_inverse(&self) -> Option<Self>;
}

/// A ring in which every nonzero element is a unit.
pub trait Field: Ring + Div<Output = Self> {
    fn inv(&self) -> Self {
        self.unit_inverse().expect("inverse of zero")
    }
}

/// Complex conjugation; the identity on real coefficient types.
pub trait Conjugate {
    fn conj(&self) -> Self;
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

impl Ring for Rational {
    fn from_rational(q: Rational) -> Self {
        q
    }

    fn unit_inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}

impl Field for Rational {}

impl Conjugate for Rational {
    fn conj(&self) -> Self {
        self.clone()
    }
}
