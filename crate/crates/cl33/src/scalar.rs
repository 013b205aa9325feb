//! Coefficient rings.
//!
//! Everything in the crate is generic over one of two rings: exact
//! arbitrary-precision rationals for identity verification, and `f64` for
//! sampled numerics. The two are distinct type parameters, so they can
//! never be mixed inside a single value.

use num::bigint::BigInt;
use num::rational::Ratio;
use num::traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

/// Exact rational scalar.
pub type Rat = Ratio<BigInt>;

/// Build a rational from a numerator/denominator pair.
pub fn rat(num: i64, den: i64) -> Rat {
    Ratio::new(BigInt::from(num), BigInt::from(den))
}

/// Build a rational from an integer.
pub fn rint(n: i64) -> Rat {
    Ratio::from_integer(BigInt::from(n))
}

/// Minimal ring interface: the bound for multivector coefficients.
///
/// Implemented by [`Rat`], `f64` and by trig-polynomials over either.
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Add<Output = Self>
    + Mul<Output = Self>
{
}

impl<T> Ring for T where
    T: Clone
        + PartialEq
        + Debug
        + Zero
        + One
        + Neg<Output = Self>
        + Sub<Output = Self>
        + Add<Output = Self>
        + Mul<Output = Self>
{
}

/// Scalar coefficients usable inside trig-polynomials.
///
/// Beyond the ring operations this needs an exact halving (for
/// product-to-sum rewrites), a total order for canonical term sorting, and
/// a numeric view for evaluation and residual bounds.
pub trait Coeff: Ring + Display {
    /// Exact division by two.
    fn halve(&self) -> Self;

    /// Numeric value (used by evaluation and residual bounds).
    fn to_f64(&self) -> f64;

    /// Total order used only for canonical sorting of terms and phases.
    fn key_cmp(&self, other: &Self) -> Ordering;

    /// Sign test used for phase normalisation.
    fn is_negative_coeff(&self) -> bool;

    fn abs_f64(&self) -> f64 {
        self.to_f64().abs()
    }
}

impl Coeff for Rat {
    fn halve(&self) -> Self {
        self / rint(2)
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).expect("rational out of f64 range")
    }

    fn key_cmp(&self, other: &Self) -> Ordering {
        self.cmp(other)
    }

    fn is_negative_coeff(&self) -> bool {
        self.is_negative()
    }
}

impl Coeff for f64 {
    fn halve(&self) -> Self {
        self / 2.0
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn key_cmp(&self, other: &Self) -> Ordering {
        self.total_cmp(other)
    }

    fn is_negative_coeff(&self) -> bool {
        *self < 0.0
    }
}
