//! Exact number types: arbitrary-precision rationals and quadratic surds.
//!
//! `Rational` is `num_rational::BigRational`, which already maintains the
//! canonical form this crate relies on (reduced, positive denominator,
//! structural equality). This module adds the pieces the verdict machinery
//! needs on top: exact square-free decomposition of radicands, the
//! [`QuadSurd`] type with exact sign and ordering, and deterministic
//! round-half-even decimal rendering for reports.

mod surd;

pub use surd::{QuadSurd, SurdError};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Exact arbitrary-precision rational in canonical form.
pub type Rational = num_rational::BigRational;

/// Shorthand for an integer-valued rational.
pub fn rat_int<T: Into<BigInt>>(n: T) -> Rational {
    Rational::from_integer(n.into())
}

/// Shorthand for `n/d`. Panics if `d` is zero.
pub fn rat<N: Into<BigInt>, D: Into<BigInt>>(n: N, d: D) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Approximate `f64` value for plotting and display; never used in a
/// verdict.
pub fn rational_to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

/// Exact sign of a rational: -1, 0, or +1.
pub fn rational_sign(r: &Rational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// True if `n` is a perfect square.
pub fn is_perfect_square(n: &BigUint) -> bool {
    let r = n.sqrt();
    &r * &r == *n
}

/// Decompose `n = s^2 * r` with `r` square-free; returns `(s, r)`.
///
/// Trial division runs only up to the cube root of the remaining cofactor;
/// past that point at most two prime factors survive, so the cofactor is
/// square-free unless it is itself a perfect square.
pub fn squarefree_decompose(n: &BigUint) -> (BigUint, BigUint) {
    if n.is_zero() {
        return (BigUint::one(), BigUint::zero());
    }
    let mut square = BigUint::one();
    let mut free = BigUint::one();
    let mut rest = n.clone();
    let mut p: u64 = 2;
    loop {
        let p_big = BigUint::from(p);
        if &p_big * &p_big * &p_big > rest {
            break;
        }
        if (&rest % &p_big).is_zero() {
            let mut count = 0u32;
            while (&rest % &p_big).is_zero() {
                rest /= &p_big;
                count += 1;
            }
            square *= p_big.pow(count / 2);
            if count % 2 == 1 {
                free *= p;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    // rest is 1, a prime, a prime square, or a product of two primes
    let root = rest.sqrt();
    if &root * &root == rest {
        square *= root;
        rest = BigUint::one();
    }
    (square, free * rest)
}

/// Render a rational as a fixed-point decimal string with `digits` places,
/// rounding half to even. Rendering is display-only and never feeds a
/// verdict.
pub fn render_decimal(r: &Rational, digits: u32) -> String {
    let den = r.denom();
    let scaled = r.numer().abs() * BigInt::from(10u32).pow(digits);
    let (mut q, rem) = scaled.div_rem(den);
    let twice = &rem * 2;
    if twice > *den || (twice == *den && q.is_odd()) {
        q += 1;
    }
    let sign = if r.is_negative() && !q.is_zero() {
        "-"
    } else {
        ""
    };
    if digits == 0 {
        return format!("{sign}{q}");
    }
    let scale = BigInt::from(10u32).pow(digits);
    let (int_part, frac_part) = q.div_rem(&scale);
    format!(
        "{sign}{int_part}.{frac:0>width$}",
        frac = frac_part.to_string(),
        width = digits as usize
    )
}

/// An exact value that is either rational or a quadratic surd; the common
/// currency of verdict records.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Rational(Rational),
    Surd(QuadSurd),
}

impl Value {
    /// Canonical exact string: `"43/15"`, `"7488"`, `"(31+sqrt(13))/12"`.
    pub fn exact(&self) -> String {
        match self {
            Value::Rational(r) => {
                if r.is_integer() {
                    r.numer().to_string()
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
            Value::Surd(s) => s.to_string(),
        }
    }

    /// Decimal display string at `digits` places (integers render plain).
    pub fn display(&self, digits: u32) -> String {
        match self {
            Value::Rational(r) => {
                if r.is_integer() {
                    r.numer().to_string()
                } else {
                    render_decimal(r, digits)
                }
            }
            Value::Surd(s) => {
                if let Some(r) = s.as_rational() {
                    if r.is_integer() {
                        r.numer().to_string()
                    } else {
                        render_decimal(&r, digits)
                    }
                } else {
                    s.decimal(digits)
                }
            }
        }
    }

    /// Numerator/denominator strings when the value is rational.
    pub fn as_fraction_strings(&self) -> Option<(String, String)> {
        let r = match self {
            Value::Rational(r) => r.clone(),
            Value::Surd(s) => s.as_rational()?,
        };
        Some((r.numer().to_string(), r.denom().to_string()))
    }
}

impl From<Rational> for Value {
    fn from(r: Rational) -> Self {
        Value::Rational(r)
    }
}

impl From<QuadSurd> for Value {
    fn from(s: QuadSurd) -> Self {
        Value::Surd(s)
    }
}
