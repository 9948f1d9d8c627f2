//! Exact rational arithmetic helpers.
//!
//! Curvature is rational by construction, so every curvature-level identity
//! in this crate is checked with zero tolerance. `Rational` is an
//! arbitrary-precision fraction kept in reduced form with a positive
//! denominator.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

pub type Rational = BigRational;

/// `n/d` as an exact rational.
pub fn rat(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Integer `n` as an exact rational.
pub fn int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn to_f64(r: &Rational) -> f64 {
    // Exact conversion fails only far outside f64 range, which the
    // quantities here never reach.
    r.to_f64().unwrap_or_else(|| {
        let n = r.numer().to_f64().unwrap_or(f64::NAN);
        let d = r.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

/// Renders `-1/14` style fractions (integers without the `/1`).
pub fn display(r: &Rational) -> String {
    if r.denom() == &BigInt::from(1) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// A value of the form `coeff * sqrt(radicand)` with both parts rational.
///
/// Isoperimetric constants of `(p,q)`-regular tessellations have this shape,
/// so they can be carried symbolically and only flattened to `f64` at the
/// final comparison.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadraticValue {
    pub coeff: Rational,
    pub radicand: Rational,
}

impl QuadraticValue {
    pub fn new(coeff: Rational, radicand: Rational) -> Self {
        assert!(!radicand.is_negative(), "radicand must be nonnegative");
        QuadraticValue { coeff, radicand }
    }

    pub fn to_f64(&self) -> f64 {
        to_f64(&self.coeff) * to_f64(&self.radicand).sqrt()
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero() || self.radicand.is_zero()
    }
}

impl std::fmt::Display for QuadraticValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{}*sqrt({})",
            display(&self.coeff),
            display(&self.radicand)
        )
    }
}
