//! Exact reference bounds on the successive ratio `d_i(m+1)/d_i(m)` and on
//! the central ratio `c_i(m)`.
//!
//! - `T(m,i) = (4m^2+7m+3 + i*sqrt(4m+4i^2+1) - 2i^2) / (2(m-i+1)(m+1))`:
//!   strict upper bound for `1 <= i <= m-1`, exact value at `i = 0` and
//!   `i = m` (where the radicand is a perfect square and the surd folds to a
//!   rational).
//! - `Q(m,i) = (4m^2+7m+i+3) / (2(m+1-i)(m+1))`: lower bound, strict on the
//!   interior.
//! - `F(m,i)`: auxiliary upper bound with radicand `4m+4i^2+5`, stored in
//!   rationalized form so it shares the single-radical surd shape.
//! - `ulc_upper = (m-i+1)(i+1)/((m-i)i)` and
//!   `rulc_lower = ulc_upper * (m+i)/(m+i+1)`: the two-sided bracket on
//!   `c_i(m)`; `u_i(m) = (1+1/i)(1+1/(m-i))` equals `ulc_upper` exactly.

use num_bigint::BigInt;

use crate::exact::{rat, rat_int, QuadSurd, Rational};
use crate::UsageError;

/// The full set of reference quantities at one `(m, i)` cell.
#[derive(Debug, Clone)]
pub struct BoundSet {
    pub m: u32,
    pub i: u32,
    /// Upper ratio bound `T(m,i)`.
    pub t: QuadSurd,
    /// Lower ratio bound `Q(m,i)`.
    pub q: Rational,
    /// Auxiliary upper bound `F(m,i)`, rationalized.
    pub f: QuadSurd,
    /// `u_i(m) = (1+1/i)(1+1/(m-i))`.
    pub u: Rational,
    /// Right side of the reverse-ultra-log-concavity inequality.
    pub ulc_upper: Rational,
    /// Right side of the lower-bound inequality.
    pub rulc_lower: Rational,
}

/// `T(m,i)` for `m >= 1`, `0 <= i <= m`. Folds to a rational at `i = 0`
/// and `i = m`.
pub fn bound_t(m: u32, i: u32) -> QuadSurd {
    assert!(m >= 1 && i <= m, "bound_t requires m >= 1, 0 <= i <= m");
    assert!(m <= crate::MAX_INDEX, "m exceeds MAX_INDEX");
    let (m, i) = (i64::from(m), i64::from(i));
    let denom = 2 * (m - i + 1) * (m + 1);
    QuadSurd::new(
        rat(4 * m * m + 7 * m + 3 - 2 * i * i, denom),
        rat(i, denom),
        BigInt::from(4 * m + 4 * i * i + 1),
    )
    .expect("non-negative radicand")
}

/// `Q(m,i)` for `0 <= i <= m`.
pub fn bound_q(m: u32, i: u32) -> Rational {
    assert!(m >= 1 && i <= m, "bound_q requires m >= 1, 0 <= i <= m");
    assert!(m <= crate::MAX_INDEX, "m exceeds MAX_INDEX");
    let (m, i) = (i64::from(m), i64::from(i));
    rat(4 * m * m + 7 * m + i + 3, 2 * (m + 1 - i) * (m + 1))
}

/// `F(m,i)` for `1 <= i <= m-1`, in rationalized form
/// `(4m+3)(4m^2+9m+5-2i^2 + i*sqrt(4m+4i^2+5)) / (2(m+1)(4m+5)(m-i+1))`.
///
/// Construction asserts the rationalization identity
/// `(4m^2+9m+5-2i^2)^2 - i^2(4m+4i^2+5) = (4m+5)^2 (m+i+1)(m-i+1)`
/// and the positivity of the original denominator as self-checks.
pub fn bound_f(m: u32, i: u32) -> Result<QuadSurd, UsageError> {
    if i == 0 || i >= m {
        return Err(UsageError(format!(
            "bound_f requires 1 <= i <= m-1, got m={m} i={i}"
        )));
    }
    assert!(m <= crate::MAX_INDEX, "m exceeds MAX_INDEX");
    let (m, i) = (i64::from(m), i64::from(i));
    let core = 4 * m * m + 9 * m + 5 - 2 * i * i;
    let radicand = 4 * m + 4 * i * i + 5;
    assert_eq!(
        BigInt::from(core) * core - BigInt::from(i * i) * radicand,
        BigInt::from(4 * m + 5) * (4 * m + 5) * (m + i + 1) * (m - i + 1),
        "rationalization identity failed at m={m} i={i}"
    );
    let original_denom = QuadSurd::new(rat_int(core), rat_int(-i), BigInt::from(radicand))
        .expect("non-negative radicand");
    assert_eq!(original_denom.sign(), 1, "denominator sign at m={m} i={i}");
    let scale = 2 * (m + 1) * (4 * m + 5) * (m - i + 1);
    Ok(QuadSurd::new(
        rat((4 * m + 3) * core, scale),
        rat((4 * m + 3) * i, scale),
        BigInt::from(radicand),
    )
    .expect("non-negative radicand"))
}

/// All reference quantities at `(m, i)` for `1 <= i <= m-1`.
pub fn reference_ratios(m: u32, i: u32) -> Result<BoundSet, UsageError> {
    if i == 0 || i >= m {
        return Err(UsageError(format!(
            "reference_ratios requires 1 <= i <= m-1, got m={m} i={i}"
        )));
    }
    let f = bound_f(m, i)?;
    let (mi, ii) = (i64::from(m), i64::from(i));
    let ulc_upper = rat((mi - ii + 1) * (ii + 1), (mi - ii) * ii);
    let rulc_lower = &ulc_upper * rat(mi + ii, mi + ii + 1);
    let u = (rat_int(1) + rat(1, ii)) * (rat_int(1) + rat(1, mi - ii));
    Ok(BoundSet {
        m,
        i,
        t: bound_t(m, i),
        q: bound_q(m, i),
        f,
        u,
        ulc_upper,
        rulc_lower,
    })
}
