//! Quadratic surds `p + q*sqrt(D)` with exact sign, ordering, and equality.
//!
//! Every bound in this problem has a single radical, so the type is fixed to
//! one radicand. Construction normalizes: square factors of `D` move into
//! `q`, and a perfect-square radicand folds the value down to a plain
//! rational (`q = 0`, `D = 0`). After normalization the radicand is
//! square-free and at least 2 whenever the value is irrational, which makes
//! structural equality coincide with value equality and keeps every sign
//! decision a comparison of `p^2` against `q^2 * D`. No floating point
//! anywhere in this module except the display helpers.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{rational_sign, rational_to_f64, render_decimal, squarefree_decompose, Rational};

/// Errors from surd construction and comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SurdError {
    /// Radicand was negative; complex values never arise here.
    NegativeRadicand(BigInt),
    /// Two irrational surds with distinct radicands cannot be combined or
    /// ordered by this representation.
    MixedRadicands(BigUint, BigUint),
}

impl fmt::Display for SurdError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SurdError::NegativeRadicand(d) => write!(f, "negative radicand {d}"),
            SurdError::MixedRadicands(a, b) => {
                write!(f, "unsupported comparison of radicands {a} and {b}")
            }
        }
    }
}

impl std::error::Error for SurdError {}

/// Exact value `p + q*sqrt(d)`, normalized as described in the module docs.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadSurd {
    p: Rational,
    q: Rational,
    d: BigUint,
}

impl QuadSurd {
    /// Construct and normalize `p + q*sqrt(d)`.
    ///
    /// Square factors of `d` are folded into `q`; a perfect-square or zero
    /// radicand (or `q = 0`) collapses to a pure rational. Negative `d` is
    /// rejected.
    pub fn new(p: Rational, q: Rational, d: BigInt) -> Result<QuadSurd, SurdError> {
        match d.sign() {
            Sign::Minus => Err(SurdError::NegativeRadicand(d)),
            _ => Ok(Self::normalize(p, q, d.to_biguint().expect("non-negative"))),
        }
    }

    /// Construct from a radicand already known to be square-free.
    ///
    /// Callers must have established square-freeness exactly (the callers in
    /// `verify` do so via verified factorizations); debug builds re-check.
    pub(crate) fn from_squarefree(p: Rational, q: Rational, d: BigUint) -> QuadSurd {
        debug_assert_eq!(squarefree_decompose(&d).0, BigUint::one());
        if q.is_zero() || d.is_zero() || d.is_one() {
            return Self::from_rational_parts(p, q, d);
        }
        QuadSurd { p, q, d }
    }

    fn normalize(p: Rational, q: Rational, d: BigUint) -> QuadSurd {
        if q.is_zero() || d.is_zero() {
            return QuadSurd::from(p);
        }
        let (square, free) = squarefree_decompose(&d);
        let q = q * Rational::from_integer(BigInt::from(square));
        Self::from_rational_parts(p, q, free)
    }

    fn from_rational_parts(p: Rational, q: Rational, d: BigUint) -> QuadSurd {
        if q.is_zero() || d.is_zero() {
            return QuadSurd::from(p);
        }
        if d.is_one() {
            return QuadSurd::from(p + q);
        }
        QuadSurd { p, q, d }
    }

    /// The rational part `p`.
    pub fn rational_part(&self) -> &Rational {
        &self.p
    }

    /// The radical coefficient `q` (zero iff the value is rational).
    pub fn radical_coeff(&self) -> &Rational {
        &self.q
    }

    /// The square-free radicand (zero iff the value is rational).
    pub fn radicand(&self) -> &BigUint {
        &self.d
    }

    /// True if the value folded to a rational.
    pub fn is_rational(&self) -> bool {
        self.q.is_zero()
    }

    /// The value as a rational, when it is one.
    pub fn as_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.p.clone())
    }

    /// Exact sign of the value: -1, 0, or +1.
    ///
    /// Decided by case analysis on the signs of `p` and `q` and, when they
    /// disagree, by comparing `p^2` with `q^2 * d`.
    pub fn sign(&self) -> i8 {
        if self.q.is_zero() {
            return rational_sign(&self.p);
        }
        if self.p.is_zero() {
            return rational_sign(&self.q);
        }
        let p_pos = self.p.is_positive();
        let q_pos = self.q.is_positive();
        if p_pos && q_pos {
            return 1;
        }
        if !p_pos && !q_pos {
            return -1;
        }
        let p2 = &self.p * &self.p;
        let q2d = &self.q * &self.q * Rational::from_integer(BigInt::from(self.d.clone()));
        // p and q disagree; whichever square dominates decides.
        match p2.cmp(&q2d) {
            Ordering::Greater => rational_sign(&self.p),
            Ordering::Less => rational_sign(&self.q),
            Ordering::Equal => 0, // unreachable for square-free d >= 2
        }
    }

    /// Exact ordering against another surd. Irrational values with distinct
    /// radicands are rejected.
    pub fn try_cmp(&self, other: &QuadSurd) -> Result<Ordering, SurdError> {
        let diff = self.try_sub(other)?;
        Ok(sign_to_ordering(diff.sign()))
    }

    /// Exact ordering against a rational (always decidable).
    pub fn cmp_rational(&self, r: &Rational) -> Ordering {
        let diff = Self::from_rational_parts(&self.p - r, self.q.clone(), self.d.clone());
        sign_to_ordering(diff.sign())
    }

    /// `self + other` when the radicands are compatible.
    pub fn try_add(&self, other: &QuadSurd) -> Result<QuadSurd, SurdError> {
        let d = self.common_radicand(other)?;
        Ok(Self::from_rational_parts(
            &self.p + &other.p,
            &self.q + &other.q,
            d,
        ))
    }

    /// `self - other` when the radicands are compatible.
    pub fn try_sub(&self, other: &QuadSurd) -> Result<QuadSurd, SurdError> {
        let d = self.common_radicand(other)?;
        Ok(Self::from_rational_parts(
            &self.p - &other.p,
            &self.q - &other.q,
            d,
        ))
    }

    /// `self * other` when the radicands are compatible (same-radicand
    /// products stay in the field: `(sqrt(d))^2 = d`).
    pub fn try_mul(&self, other: &QuadSurd) -> Result<QuadSurd, SurdError> {
        let d = self.common_radicand(other)?;
        let d_rat = Rational::from_integer(BigInt::from(d.clone()));
        let p = &self.p * &other.p + &self.q * &other.q * &d_rat;
        let q = &self.p * &other.q + &self.q * &other.p;
        Ok(Self::from_rational_parts(p, q, d))
    }

    /// The square of the value (always well-defined).
    pub fn square(&self) -> QuadSurd {
        self.try_mul(self).expect("same radicand")
    }

    pub fn add_rational(&self, r: &Rational) -> QuadSurd {
        Self::from_rational_parts(&self.p + r, self.q.clone(), self.d.clone())
    }

    pub fn sub_rational(&self, r: &Rational) -> QuadSurd {
        Self::from_rational_parts(&self.p - r, self.q.clone(), self.d.clone())
    }

    pub fn mul_rational(&self, r: &Rational) -> QuadSurd {
        Self::from_rational_parts(&self.p * r, &self.q * r, self.d.clone())
    }

    pub fn neg(&self) -> QuadSurd {
        Self::from_rational_parts(-&self.p, -&self.q, self.d.clone())
    }

    fn common_radicand(&self, other: &QuadSurd) -> Result<BigUint, SurdError> {
        if self.q.is_zero() {
            return Ok(other.d.clone());
        }
        if other.q.is_zero() || self.d == other.d {
            return Ok(self.d.clone());
        }
        Err(SurdError::MixedRadicands(self.d.clone(), other.d.clone()))
    }

    /// Enclosing rational interval `[lo, hi]` with `hi - lo <= |q| * 10^-g`.
    pub fn bounds(&self, guard_digits: u32) -> (Rational, Rational) {
        if self.q.is_zero() {
            return (self.p.clone(), self.p.clone());
        }
        let scale = BigUint::from(10u32).pow(guard_digits);
        let lo_int = BigInt::from((&self.d * &scale * &scale).sqrt());
        let denom = BigInt::from(scale);
        let root_lo = Rational::new(lo_int.clone(), denom.clone());
        let root_hi = Rational::new(lo_int + 1, denom);
        let a = &self.p + &self.q * &root_lo;
        let b = &self.p + &self.q * &root_hi;
        if a <= b {
            (a, b)
        } else {
            (b, a)
        }
    }

    /// Fixed-point decimal display at `digits` places, round half to even.
    ///
    /// The enclosing interval is narrowed until both endpoints render to the
    /// same string; an irrational value never sits on a rounding boundary,
    /// so this terminates. Display-only: verdicts never consume it.
    pub fn decimal(&self, digits: u32) -> String {
        if self.q.is_zero() {
            return render_decimal(&self.p, digits);
        }
        let mut guard = digits + 25;
        loop {
            let (lo, hi) = self.bounds(guard);
            let lo_s = render_decimal(&lo, digits);
            let hi_s = render_decimal(&hi, digits);
            if lo_s == hi_s {
                return lo_s;
            }
            guard *= 2;
        }
    }

    /// Approximate `f64` value for plotting; never used in a verdict.
    pub fn to_f64(&self) -> f64 {
        let p = rational_to_f64(&self.p);
        if self.q.is_zero() {
            return p;
        }
        let d: f64 = self.d.to_string().parse().unwrap_or(f64::NAN);
        p + rational_to_f64(&self.q) * d.sqrt()
    }
}

impl From<Rational> for QuadSurd {
    fn from(p: Rational) -> Self {
        QuadSurd {
            p,
            q: Rational::zero(),
            d: BigUint::zero(),
        }
    }
}

impl From<BigInt> for QuadSurd {
    fn from(n: BigInt) -> Self {
        QuadSurd::from(Rational::from_integer(n))
    }
}

impl fmt::Display for QuadSurd {
    /// Canonical form over a common denominator: `(31+sqrt(13))/12`,
    /// `(407+11*sqrt(17))/156`, `2*sqrt(3)`, `43/15`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q.is_zero() {
            if self.p.is_integer() {
                return write!(f, "{}", self.p.numer());
            }
            return write!(f, "{}/{}", self.p.numer(), self.p.denom());
        }
        let s = self.p.denom().lcm(self.q.denom());
        let a = (&self.p * Rational::from_integer(s.clone())).to_integer();
        let b = (&self.q * Rational::from_integer(s.clone())).to_integer();
        let root = if b.abs().is_one() {
            format!("sqrt({})", self.d)
        } else {
            format!("{}*sqrt({})", b.abs(), self.d)
        };
        let body = if a.is_zero() {
            format!("{}{root}", if b.is_negative() { "-" } else { "" })
        } else {
            format!("{a}{}{root}", if b.is_negative() { "-" } else { "+" })
        };
        if s.is_one() {
            write!(f, "{body}")
        } else if a.is_zero() {
            write!(f, "{body}/{s}")
        } else {
            write!(f, "({body})/{s}")
        }
    }
}

fn sign_to_ordering(sign: i8) -> Ordering {
    match sign {
        1 => Ordering::Greater,
        -1 => Ordering::Less,
        _ => Ordering::Equal,
    }
}
