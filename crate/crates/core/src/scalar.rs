//! Scalar contracts and the default exact-rational scalar.
//!
//! Every identity in this crate is exact, so the default scalar is an
//! arbitrary-precision rational kept in lowest terms with a positive
//! denominator. The algebra itself only needs a commutative ring; operations
//! that genuinely divide (versor inversion, the alternating wedge) ask for
//! [`Field`] instead.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::error::Error;

/// Arbitrary-precision rational, always reduced, denominator positive.
pub type Rational = num_rational::BigRational;

/// Commutative ring with decidable equality, the scalar contract for the
/// whole crate.
pub trait Ring:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Zero
    + One
{
    /// The canonical image of an integer under `ℤ → R`.
    fn from_int(n: i64) -> Self;
}

/// Ring in which every nonzero element is invertible.
pub trait Field: Ring + Div<Output = Self> {}

/// Ring with a decidable sign, used for the definiteness check on diagonal
/// forms.
pub trait SignedRing: Ring {
    fn is_positive(&self) -> bool;
    fn is_negative(&self) -> bool;
}

impl Ring for Rational {
    fn from_int(n: i64) -> Self {
        Rational::from_integer(BigInt::from(n))
    }
}

impl Field for Rational {}

impl SignedRing for Rational {
    fn is_positive(&self) -> bool {
        Signed::is_positive(self)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
}

/// Shorthand rational constructor, mostly for tests and tables.
///
/// Panics on a zero denominator.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Parse a rational written as `"3"`, `"-3"`, or `"-3/2"`.
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let bad = || Error::InvalidRational(s.to_string());
    let (numer, denom) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let numer: BigInt = numer.trim().parse().map_err(|_| bad())?;
    let denom: BigInt = match denom {
        Some(d) => d.trim().parse().map_err(|_| bad())?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(numer, denom))
}
