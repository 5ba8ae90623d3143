//! Exact verdicts for every inequality, supporting identity, conjecture,
//! and observation, over ranges of `(m, i)`.
//!
//! Each check reduces to signs and equalities of rationals or
//! single-radicand surds:
//!
//! - Row inequalities: the bracket `rulc_lower < c_i(m) < ulc_upper`, the
//!   `{i! d_i(m)}` log-concavity bound `c_i(m) > (i+1)/i`, and the sandwich
//!   `(m+i)/(m+i+1) < c_i(m)/u_i(m) < 1`.
//! - Ratio bounds: `Q(m,i) < d_i(m+1)/d_i(m) < T(m,i)` strictly on the
//!   interior, with exact equality to `T` at `i = 0` and `i = m`.
//! - The ordering `T(m,i) < F(m,i)`: the radicands differ, so the verdict
//!   follows the difference scheme: with `A^2 = 4m+4i^2+1`,
//!   `B^2 = A^2 + 4`, reduce to the sign of `X - Y` where
//!   `X = (i-4i^3) + i*AB` and
//!   `Y = (4m^2+9m+5-2i^2) A - (4m^2+7m+3-2i^2) B`, then establish `X > 0`
//!   and `X^2 > Y^2`. `X`, `X^2`, and `Y^2` live in the single-radicand
//!   field of `AB`, so every step is one exact surd sign.
//! - Proof identities: discriminant factorizations, the `G^2 - H^2`
//!   factorization, `X^2 - Y^2 = G - H`, coincidence of quadratic roots
//!   with `T` and `Q`, positivity of the induction remainder `R(m,i)`, and
//!   `U^2 - V^2 = 4m^2(4m+5)`.
//! - Conjecture scans over `{d_{i+1} d_{i-1} / d_i^2}`, the Bessel example,
//!   and the monotonicity observation on `c_i(m)/u_i(m)`.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::bounds::{bound_q, bound_t};
use crate::exact::{
    is_perfect_square, rat, rat_int, rational_sign, squarefree_decompose, QuadSurd, Rational, Value,
};
use crate::report::{CellVerdict, CheckId, ConfigEcho, ScanReport};
use crate::rows::{residual_lowering, residual_three_row, CoeffRow, RowCache};
use crate::UsageError;

/// Classification of a finite nonnegative sequence against the
/// log-concavity hierarchy. Each flag is computed independently from its
/// defining inequality; none is inferred from another.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SequenceClass {
    /// The binomial parameter (sequence length minus one).
    pub n: u32,
    /// `a_k^2 >= a_{k+1} a_{k-1}` for `1 <= k <= n-1`.
    pub log_concave: bool,
    /// `k(n-k) a_k^2 - (n-k+1)(k+1) a_{k-1} a_{k+1} >= 0` for all interior k.
    pub ultra_lc: bool,
    /// The same quantity `<= 0` for all interior k.
    pub reverse_ultra_lc: bool,
}

/// Classify `a` (length `n+1`, nonnegative entries) exactly.
pub fn classify_sequence(a: &[Rational], n: u32) -> Result<SequenceClass, UsageError> {
    if a.len() != n as usize + 1 {
        return Err(UsageError(format!(
            "sequence length {} does not match n={n}",
            a.len()
        )));
    }
    if let Some(k) = a.iter().position(|x| x.is_negative()) {
        return Err(UsageError(format!("entry {k} is negative")));
    }
    let mut class = SequenceClass {
        n,
        log_concave: true,
        ultra_lc: true,
        reverse_ultra_lc: true,
    };
    for k in 1..n as usize {
        let sq = &a[k] * &a[k];
        let cross = &a[k - 1] * &a[k + 1];
        if sq < cross {
            class.log_concave = false;
        }
        let (ki, ni) = (k as i64, i64::from(n));
        let ultra = rat_int(ki * (ni - ki)) * &sq - rat_int((ni - ki + 1) * (ki + 1)) * &cross;
        match rational_sign(&ultra) {
            1 => class.reverse_ultra_lc = false,
            -1 => class.ultra_lc = false,
            _ => {}
        }
    }
    Ok(class)
}

fn strict_less(check: CheckId, m: u32, i: u32, lhs: Value, rhs: Value, margin: i8) -> CellVerdict {
    CellVerdict {
        check,
        m,
        i: Some(i),
        pass: margin > 0,
        strict: margin > 0,
        vacuous: false,
        lhs: Some(lhs),
        rhs: Some(rhs),
        margin_sign: margin,
    }
}

fn equality(
    check: CheckId,
    m: u32,
    i: Option<u32>,
    lhs: Value,
    rhs: Value,
    margin: i8,
) -> CellVerdict {
    CellVerdict {
        check,
        m,
        i,
        pass: margin == 0,
        strict: false,
        vacuous: false,
        lhs: Some(lhs),
        rhs: Some(rhs),
        margin_sign: margin,
    }
}

fn cmp_to_sign(ord: Ordering) -> i8 {
    match ord {
        Ordering::Less => -1,
        Ordering::Equal => 0,
        Ordering::Greater => 1,
    }
}

/// The four row-inequality verdicts at every interior `i` of row `m`:
/// reverse-ULC upper bound, the lower bound, the `{i! d_i}` log-concavity
/// bound, and the sandwich on `c_i/u_i`.
pub fn verify_row_inequalities(
    m: u32,
    cache: &mut RowCache,
) -> Result<Vec<CellVerdict>, UsageError> {
    if m < 2 {
        return Err(UsageError(format!(
            "verify_row_inequalities requires m >= 2, got {m}"
        )));
    }
    let mut out = Vec::with_capacity(4 * (m as usize - 1));
    for i in 1..m {
        let c = cache.ratio_c(m, i)?;
        let (mi, ii) = (i64::from(m), i64::from(i));
        let upper = rat((mi - ii + 1) * (ii + 1), (mi - ii) * ii);
        let lower = &upper * rat(mi + ii, mi + ii + 1);
        let u = (rat_int(1) + rat(1, ii)) * (rat_int(1) + rat(1, mi - ii));

        let margin = cmp_to_sign(upper.cmp(&c));
        out.push(strict_less(
            CheckId::Rulc,
            m,
            i,
            Value::from(c.clone()),
            Value::from(upper),
            margin,
        ));

        let margin = cmp_to_sign(c.cmp(&lower));
        out.push(strict_less(
            CheckId::Lower,
            m,
            i,
            Value::from(lower),
            Value::from(c.clone()),
            margin,
        ));

        let factorial_bound = rat(ii + 1, ii);
        let margin = cmp_to_sign(c.cmp(&factorial_bound));
        out.push(strict_less(
            CheckId::FactorialLc,
            m,
            i,
            Value::from(factorial_bound),
            Value::from(c.clone()),
            margin,
        ));

        let ratio = &c / &u;
        let sandwich_lo = rat(mi + ii, mi + ii + 1);
        let slack_lo = &ratio - &sandwich_lo;
        let slack_hi = rat_int(1) - &ratio;
        let margin = rational_sign(if slack_lo < slack_hi {
            &slack_lo
        } else {
            &slack_hi
        });
        out.push(strict_less(
            CheckId::Sandwich,
            m,
            i,
            Value::from(sandwich_lo),
            Value::from(ratio),
            margin,
        ));
    }
    Ok(out)
}

/// Ratio-bound verdicts for row `m`: boundary equalities at `i = 0` and
/// `i = m`, strict `Q` and `T` bounds on the interior.
pub fn verify_ratio_bounds(m: u32, cache: &mut RowCache) -> Vec<CellVerdict> {
    assert!(m >= 1, "verify_ratio_bounds requires m >= 1");
    let mut out = Vec::with_capacity(2 * m as usize);
    for i in [0, m] {
        let ratio = cache.ratio_successive(m, i).expect("i <= m");
        let t = bound_t(m, i)
            .as_rational()
            .expect("boundary radicand is a perfect square");
        let margin = cmp_to_sign(t.cmp(&ratio));
        out.push(equality(
            CheckId::RatioBoundary,
            m,
            Some(i),
            Value::from(ratio),
            Value::from(t),
            margin,
        ));
    }
    for i in 1..m {
        let ratio = cache.ratio_successive(m, i).expect("i <= m");
        let q = bound_q(m, i);
        let margin = cmp_to_sign(ratio.cmp(&q));
        out.push(strict_less(
            CheckId::RatioLower,
            m,
            i,
            Value::from(q),
            Value::from(ratio.clone()),
            margin,
        ));
        let t = bound_t(m, i);
        let margin = cmp_to_sign(t.cmp_rational(&ratio));
        out.push(strict_less(
            CheckId::RatioUpper,
            m,
            i,
            Value::from(ratio),
            Value::from(t),
            margin,
        ));
    }
    out.sort_by_key(|v| (v.check, v.i));
    out
}

fn bi(v: i64) -> BigInt {
    BigInt::from(v)
}

fn big_rat(n: BigInt, d: BigInt) -> Rational {
    Rational::new(n, d)
}

/// Powers of `m` and `i` as big integers, shared by the identity checks.
struct Cell {
    m: BigInt,
    i: BigInt,
    m2: BigInt,
    m3: BigInt,
    m4: BigInt,
    m5: BigInt,
    i2: BigInt,
    i3: BigInt,
    i4: BigInt,
}

impl Cell {
    fn new(m: u32, i: u32) -> Cell {
        let m = BigInt::from(m);
        let i = BigInt::from(i);
        let m2 = &m * &m;
        let i2 = &i * &i;
        Cell {
            m3: &m2 * &m,
            m4: &m2 * &m2,
            m5: &m2 * &m2 * &m,
            i3: &i2 * &i,
            i4: &i2 * &i2,
            m2,
            i2,
            m,
            i,
        }
    }

    /// Radicand of `T`: `A^2 = 4m + 4i^2 + 1`.
    fn da(&self) -> BigInt {
        bi(4) * &self.m + bi(4) * &self.i2 + bi(1)
    }

    /// Radicand of `F`: `B^2 = 4m + 4i^2 + 5`.
    fn db(&self) -> BigInt {
        self.da() + bi(4)
    }
}

/// The `T(m,i) < F(m,i)` verdicts for `1 <= i <= m-1`.
///
/// Per cell the verdict is the conjunction of three exact signs: the
/// rationalized denominator of `F - T` is positive, `X > 0`, and
/// `X^2 - Y^2 > 0`; together these force `X > Y` and hence `T < F`.
pub fn verify_lemma_tf(m: u32) -> Vec<CellVerdict> {
    assert!(m >= 2, "verify_lemma_tf requires m >= 2");
    let mut out = Vec::with_capacity(m as usize - 1);
    for i in 1..m {
        let cell = Cell::new(m, i);
        let (x2_minus_y2, x, denom) = tf_difference_parts(&cell);
        let pass = denom.sign() == 1 && x.sign() == 1 && x2_minus_y2.sign() == 1;
        let margin = x2_minus_y2.sign();
        out.push(CellVerdict {
            check: CheckId::LemmaTf,
            m,
            i: Some(i),
            pass,
            strict: pass,
            vacuous: false,
            lhs: Some(Value::from(bound_t(m, i))),
            rhs: Some(Value::from(
                crate::bounds::bound_f(m, i).expect("interior i"),
            )),
            margin_sign: margin,
        });
    }
    out
}

/// Build `X^2 - Y^2`, `X`, and the `F - T` denominator surd of the
/// difference scheme, all over the square-free part of `A^2 B^2`.
fn tf_difference_parts(cell: &Cell) -> (QuadSurd, QuadSurd, QuadSurd) {
    let da = cell.da();
    let db = cell.db();
    // A^2 and B^2 are odd and differ by 4, hence coprime: the square-free
    // part of their product is the product of their square-free parts.
    let (sa, ra) = squarefree_decompose(da.magnitude());
    let (sb, rb) = squarefree_decompose(db.magnitude());
    let e_free = &ra * &rb;
    let e_scale = BigInt::from(&sa * &sb);

    let x = QuadSurd::from_squarefree(
        Rational::from_integer(&cell.i - bi(4) * &cell.i3),
        Rational::from_integer(&cell.i * &e_scale),
        e_free.clone(),
    );
    let p_coeff = bi(4) * &cell.m2 + bi(9) * &cell.m + bi(5) - bi(2) * &cell.i2;
    let r_coeff = bi(4) * &cell.m2 + bi(7) * &cell.m + bi(3) - bi(2) * &cell.i2;
    let y_squared = QuadSurd::from_squarefree(
        Rational::from_integer(&p_coeff * &p_coeff * &da + &r_coeff * &r_coeff * &db),
        Rational::from_integer(bi(-2) * &p_coeff * &r_coeff * &e_scale),
        e_free,
    );
    let x2_minus_y2 = x.square().try_sub(&y_squared).expect("same radicand");
    let denom = QuadSurd::from_squarefree(
        Rational::from_integer(p_coeff),
        Rational::from_integer(-&cell.i * BigInt::from(sb)),
        rb,
    );
    (x2_minus_y2, x, denom)
}

/// The per-cell proof identities at `(m, i)`, `1 <= i <= m-1`: both
/// discriminant factorizations, the `G^2 - H^2` factorization, the
/// `X^2 - Y^2 = G - H` identity, both root coincidences, and the
/// `R(m,i)` closed form with positivity.
pub fn verify_proof_identities(m: u32, i: u32) -> Result<Vec<CellVerdict>, UsageError> {
    if m < 2 || i == 0 || i >= m {
        return Err(UsageError(format!(
            "verify_proof_identities requires m >= 2, 1 <= i <= m-1, got m={m} i={i}"
        )));
    }
    let cell = Cell::new(m, i);
    let mut out = Vec::with_capacity(7);

    // Upper-bound quadratic in the successive ratio:
    // a x^2 + b x + c with its discriminant factorization.
    let a_up = bi(4) * (&cell.m - &cell.i + bi(1)).pow(2) * (&cell.m + bi(1)).pow(2);
    let b_up = bi(-4)
        * (&cell.m - &cell.i + bi(1))
        * (&cell.m + bi(1))
        * (bi(4) * &cell.m2 - bi(2) * &cell.i2 + bi(7) * &cell.m + bi(3));
    let c_up =
        -(bi(32) * &cell.m * &cell.i2 - bi(56) * &cell.m3 - bi(73) * &cell.m2 - bi(42) * &cell.m
            + bi(13) * &cell.i2
            - bi(9)
            - bi(16) * &cell.m4
            + bi(16) * &cell.i2 * &cell.m2);
    let disc_up = &b_up * &b_up - bi(4) * &a_up * &c_up;
    let disc_up_formula = bi(16)
        * &cell.i2
        * (&cell.m + bi(1)).pow(2)
        * (bi(4) * &cell.i2 + bi(4) * &cell.m + bi(1))
        * (&cell.m - &cell.i + bi(1)).pow(2);
    let margin = cmp_to_sign(disc_up_formula.cmp(&disc_up));
    out.push(equality(
        CheckId::DeltaRulc,
        m,
        Some(i),
        Value::from(Rational::from_integer(disc_up.clone())),
        Value::from(Rational::from_integer(disc_up_formula)),
        margin,
    ));

    // Lower-bound quadratic. The constant term comes from eliminating
    // d_{i-1} and d_{i+1} with the generating and lowering recurrences:
    // (m+i+1)((m-i+1)(4m+3)^2 - 4i^2).
    let a_lo = a_up.clone();
    let b_lo = b_up.clone();
    let c_lo = (&cell.m + &cell.i + bi(1))
        * ((&cell.m - &cell.i + bi(1)) * (bi(4) * &cell.m + bi(3)).pow(2) - bi(4) * &cell.i2);
    let disc_lo = &b_lo * &b_lo - bi(4) * &a_lo * &c_lo;
    let disc_lo_formula = bi(16)
        * &cell.i2
        * (bi(2) * &cell.i + bi(1)).pow(2)
        * (&cell.m + bi(1)).pow(2)
        * (&cell.m - &cell.i + bi(1)).pow(2);
    let margin = cmp_to_sign(disc_lo_formula.cmp(&disc_lo));
    out.push(equality(
        CheckId::DeltaLower,
        m,
        Some(i),
        Value::from(Rational::from_integer(disc_lo.clone())),
        Value::from(Rational::from_integer(disc_lo_formula)),
        margin,
    ));

    // G^2 - H^2 factorization, with positivity of G, H, and the product.
    let da = cell.da();
    let db = cell.db();
    let e_full = &da * &db;
    let g = bi(32) * &cell.m4 - bi(32) * &cell.m2 * &cell.i2 + bi(128) * &cell.m3
        - bi(64) * &cell.m * &cell.i2
        + bi(190) * &cell.m2
        - bi(30) * &cell.i2
        + bi(124) * &cell.m
        + bi(30);
    let h = bi(128) * &cell.m5
        + bi(608) * &cell.m4
        + bi(1128) * &cell.m3
        + bi(1014) * &cell.m2
        + bi(436) * &cell.m
        + bi(128) * &cell.m4 * &cell.i2
        + bi(384) * &cell.m3 * &cell.i2
        + bi(408) * &cell.m2 * &cell.i2
        - bi(128) * &cell.m2 * &cell.i4
        + bi(200) * &cell.m * &cell.i2
        - bi(256) * &cell.m * &cell.i4
        - bi(120) * &cell.i4
        + bi(50) * &cell.i2
        + bi(70);
    let g2h2 = &e_full * &g * &g - &h * &h;
    let g2h2_formula = bi(16)
        * (bi(4) * &cell.m + bi(5)).pow(2)
        * (bi(16) * &cell.m * &cell.i2 + bi(12) * &cell.i2 - bi(1))
        * (&cell.m + &cell.i + bi(1)).pow(2)
        * (&cell.m - &cell.i + bi(1)).pow(2);
    let pass = g2h2 == g2h2_formula && g2h2.is_positive() && g.is_positive() && h.is_positive();
    out.push(CellVerdict {
        check: CheckId::G2H2,
        m,
        i: Some(i),
        pass,
        strict: pass,
        vacuous: false,
        lhs: Some(Value::from(Rational::from_integer(g2h2.clone()))),
        rhs: Some(Value::from(Rational::from_integer(g2h2_formula))),
        margin_sign: rational_sign(&Rational::from_integer(g2h2)),
    });

    // X^2 - Y^2 = G - H in the single-radicand field of AB.
    let (x2_minus_y2, _, _) = tf_difference_parts(&cell);
    let (s_full, r_full) = squarefree_decompose(e_full.magnitude());
    let expected = QuadSurd::from_squarefree(
        Rational::from_integer(-&h),
        Rational::from_integer(&g * BigInt::from(s_full)),
        r_full,
    );
    let margin = match x2_minus_y2.try_sub(&expected) {
        Ok(diff) => diff.sign(),
        Err(_) => -1,
    };
    out.push(equality(
        CheckId::Xy,
        m,
        Some(i),
        Value::from(x2_minus_y2),
        Value::from(expected),
        margin,
    ));

    // Larger root of the upper-bound quadratic coincides with T(m,i):
    // the discriminant factors as (4i(m+1)(m-i+1))^2 * A^2.
    let root_scale = bi(4) * &cell.i * (&cell.m + bi(1)) * (&cell.m - &cell.i + bi(1));
    let structure_ok = disc_up == &root_scale * &root_scale * &da;
    let x2_up = QuadSurd::new(
        big_rat(-&b_up, bi(2) * &a_up),
        big_rat(root_scale, bi(2) * &a_up),
        da,
    )
    .expect("non-negative radicand");
    let t = bound_t(m, i);
    let pass = structure_ok && x2_up == t;
    out.push(CellVerdict {
        check: CheckId::X2T,
        m,
        i: Some(i),
        pass,
        strict: false,
        vacuous: false,
        lhs: Some(Value::from(x2_up)),
        rhs: Some(Value::from(t)),
        margin_sign: if pass { 0 } else { -1 },
    });

    // Larger root of the lower-bound quadratic coincides with Q(m,i):
    // here the discriminant is a perfect square and the root is rational.
    let q = bound_q(m, i);
    let (pass, x2_lo) = if disc_lo.is_negative() || !is_perfect_square(disc_lo.magnitude()) {
        (false, Rational::zero())
    } else {
        let root = BigInt::from(disc_lo.magnitude().sqrt());
        let x2 = big_rat(-&b_lo + root, bi(2) * &a_lo);
        (x2 == q, x2)
    };
    out.push(CellVerdict {
        check: CheckId::X2Q,
        m,
        i: Some(i),
        pass,
        strict: false,
        vacuous: false,
        lhs: Some(Value::from(x2_lo)),
        rhs: Some(Value::from(q)),
        margin_sign: if pass { 0 } else { -1 },
    });

    // Induction remainder R(m,i): its closed form over sqrt(B^2) and its
    // strict positivity.
    let scale = bi(2) * (&cell.m - &cell.i + bi(2)) * (&cell.m + bi(2));
    let p_coeff = bi(4) * &cell.m2 + bi(9) * &cell.m + bi(5) - bi(2) * &cell.i2;
    let closed = QuadSurd::new(
        big_rat(p_coeff, scale.clone()),
        big_rat(-&cell.i, scale.clone()),
        db,
    )
    .expect("non-negative radicand");
    let lead = big_rat(
        bi(8) * &cell.m2 + bi(24) * &cell.m + bi(19) - bi(4) * &cell.i2,
        scale,
    );
    let derived = QuadSurd::from(lead)
        .try_sub(&bound_t(m + 1, i))
        .expect("same radicand");
    let pass = derived == closed && closed.sign() == 1;
    out.push(CellVerdict {
        check: CheckId::RPos,
        m,
        i: Some(i),
        pass,
        strict: pass,
        vacuous: false,
        lhs: Some(Value::from(closed)),
        rhs: Some(Value::from(derived)),
        margin_sign: if pass { 1 } else { -1 },
    });

    Ok(out)
}

/// The `i = m` induction step at `m`: `U = (2m^2+3m) sqrt(4m^2+4m+5)`
/// exceeds `V = 4m^3+8m^2+5m` because `U^2 - V^2 = 4m^2(4m+5) > 0`.
pub fn verify_identity_uv(m: u32) -> CellVerdict {
    assert!(m >= 1, "verify_identity_uv requires m >= 1");
    let cell = Cell::new(m, 0);
    let u_coeff = bi(2) * &cell.m2 + bi(3) * &cell.m;
    let u_radicand = bi(4) * &cell.m2 + bi(4) * &cell.m + bi(5);
    let v = bi(4) * &cell.m3 + bi(8) * &cell.m2 + bi(5) * &cell.m;
    let u2_minus_v2 = &u_coeff * &u_coeff * &u_radicand - &v * &v;
    let target = bi(4) * &cell.m2 * (bi(4) * &cell.m + bi(5));
    let u_surd = QuadSurd::new(
        Rational::zero(),
        Rational::from_integer(u_coeff),
        u_radicand,
    )
    .expect("non-negative radicand");
    let v_rat = Rational::from_integer(v);
    let margin = cmp_to_sign(u_surd.cmp_rational(&v_rat));
    let pass = u2_minus_v2 == target && u2_minus_v2.is_positive() && margin == 1;
    CellVerdict {
        check: CheckId::Uv,
        m,
        i: None,
        pass,
        strict: pass,
        vacuous: false,
        lhs: Some(Value::from(u_surd)),
        rhs: Some(Value::from(v_rat)),
        margin_sign: margin,
    }
}

fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Coefficients of the degree-`n` Bessel polynomial:
/// `(n+k)! / (2^k k! (n-k)!)` for `k = 0..=n`.
pub fn bessel_row(n: u32) -> Vec<Rational> {
    let n = u64::from(n);
    (0..=n)
        .map(|k| {
            Rational::new(
                factorial(n + k),
                BigInt::from(2u32).pow(k as u32) * factorial(k) * factorial(n - k),
            )
        })
        .collect()
}

/// Check that each Bessel row for `2 <= n <= n_max` is log-concave and
/// reverse ultra log-concave.
pub fn verify_bessel(n_max: u32) -> Result<ScanReport, UsageError> {
    if n_max < 2 {
        return Err(UsageError(format!(
            "verify_bessel requires n_max >= 2, got {n_max}"
        )));
    }
    let mut verdicts = Vec::new();
    for n in 2..=n_max {
        let class = classify_sequence(&bessel_row(n), n)?;
        let pass = class.log_concave && class.reverse_ultra_lc;
        verdicts.push(CellVerdict {
            check: CheckId::Bessel,
            m: n,
            i: None,
            pass,
            strict: pass,
            vacuous: false,
            lhs: None,
            rhs: None,
            margin_sign: if pass { 1 } else { -1 },
        });
    }
    Ok(ScanReport::from_verdicts(
        ConfigEcho {
            command: "bessel".into(),
            m_min: 2,
            m_max: n_max,
            checks: vec![CheckId::Bessel.name().into()],
            float_digits: 6,
            ..Default::default()
        },
        verdicts,
    ))
}

/// One row of the ratio table: exact `c_i(m)`, `u_i(m)`, and their quotient.
#[derive(Debug, Clone)]
pub struct TableRow {
    pub i: u32,
    pub c: Rational,
    pub u: Rational,
    pub ratio: Rational,
}

/// The `c_i(m)/u_i(m)` table for `1 <= i <= m-1` (requires `m >= 2`).
pub fn table_rows(m: u32, cache: &mut RowCache) -> Result<Vec<TableRow>, UsageError> {
    if m < 2 {
        return Err(UsageError(format!("table requires m >= 2, got {m}")));
    }
    (1..m)
        .map(|i| {
            let c = cache.ratio_c(m, i)?;
            let (mi, ii) = (i64::from(m), i64::from(i));
            let u = (rat_int(1) + rat(1, ii)) * (rat_int(1) + rat(1, mi - ii));
            let ratio = &c / &u;
            Ok(TableRow { i, c, u, ratio })
        })
        .collect()
}

/// Monotonicity verdicts for `c_i(m)/u_i(m)` in `i` at fixed `m`. This is
/// an observation, not a theorem: failures are reported as findings.
pub fn monotonicity_verdicts(m: u32, cache: &mut RowCache) -> Result<Vec<CellVerdict>, UsageError> {
    if m < 2 {
        return Err(UsageError(format!("monotonicity requires m >= 2, got {m}")));
    }
    if m == 2 {
        return Ok(vec![CellVerdict::vacuous(CheckId::Mono, m)]);
    }
    let rows = table_rows(m, cache)?;
    Ok(rows
        .windows(2)
        .map(|w| {
            let margin = cmp_to_sign(w[1].ratio.cmp(&w[0].ratio));
            strict_less(
                CheckId::Mono,
                m,
                w[0].i,
                Value::from(w[0].ratio.clone()),
                Value::from(w[1].ratio.clone()),
                margin,
            )
        })
        .collect())
}

/// Monotonicity observation report for one `m`.
pub fn monotonicity_report(m: u32, cache: &mut RowCache) -> Result<ScanReport, UsageError> {
    let verdicts = monotonicity_verdicts(m, cache)?;
    Ok(ScanReport::from_verdicts(
        ConfigEcho {
            command: "mono".into(),
            m_min: m,
            m_max: m,
            checks: vec![CheckId::Mono.name().into()],
            float_digits: 6,
            ..Default::default()
        },
        verdicts,
    ))
}

/// Scan both conjectures on `{d_{i+1}(m) d_{i-1}(m) / d_i(m)^2}` for
/// `2 <= i <= m-2`, reindexed to positions `k = i-2` with binomial
/// parameter `n = m-4` (overridable). Rows with no interior position are
/// vacuous passes.
pub fn scan_conjectures(
    m_min: u32,
    m_max: u32,
    cache: &mut RowCache,
    n_override: Option<u32>,
) -> Result<ScanReport, UsageError> {
    if m_min < 2 || m_min > m_max {
        return Err(UsageError(format!(
            "scan requires 2 <= m_min <= m_max, got {m_min}..{m_max}"
        )));
    }
    let mut verdicts = Vec::new();
    for m in m_min..=m_max {
        let seq: Vec<Rational> = if m < 4 {
            Vec::new()
        } else {
            let row = cache.row(m);
            (2..=m - 2)
                .map(|i| row.coeff(i + 1) * row.coeff(i - 1) / (row.coeff(i) * row.coeff(i)))
                .collect()
        };
        if seq.len() < 3 {
            verdicts.push(CellVerdict::vacuous(CheckId::Conj1, m));
            verdicts.push(CellVerdict::vacuous(CheckId::Conj2, m));
            continue;
        }
        let n = i64::from(n_override.unwrap_or(m - 4));
        for k in 1..seq.len() - 1 {
            let original_i = k as u32 + 2;
            let sq = &seq[k] * &seq[k];
            let cross = &seq[k - 1] * &seq[k + 1];
            let margin = cmp_to_sign(sq.cmp(&cross));
            verdicts.push(CellVerdict {
                check: CheckId::Conj1,
                m,
                i: Some(original_i),
                pass: margin >= 0,
                strict: margin > 0,
                vacuous: false,
                lhs: Some(Value::from(cross.clone())),
                rhs: Some(Value::from(sq.clone())),
                margin_sign: margin,
            });
            let ki = k as i64;
            let ultra = rat_int(ki * (n - ki)) * &sq - rat_int((n - ki + 1) * (ki + 1)) * &cross;
            let margin = rational_sign(&ultra);
            verdicts.push(CellVerdict {
                check: CheckId::Conj2,
                m,
                i: Some(original_i),
                pass: margin <= 0,
                strict: margin < 0,
                vacuous: false,
                lhs: Some(Value::from(ultra)),
                rhs: Some(Value::from(Rational::zero())),
                margin_sign: margin,
            });
        }
    }
    Ok(ScanReport::from_verdicts(
        ConfigEcho {
            command: "scan".into(),
            m_min,
            m_max,
            checks: vec![CheckId::Conj1.name().into(), CheckId::Conj2.name().into()],
            float_digits: 6,
            cache_path: cache.path().map(|p| p.display().to_string()),
            conjecture_n: Some(match n_override {
                Some(n) => n.to_string(),
                None => "m-4".to_string(),
            }),
        },
        verdicts,
    ))
}

/// Options for the aggregate check runner.
#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub m_min: u32,
    pub m_max: u32,
    pub checks: Vec<CheckId>,
    pub float_digits: u32,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            m_min: 2,
            m_max: 100,
            checks: default_verify_checks(),
            float_digits: 6,
        }
    }
}

/// The checks the `verify` command runs when no filter is given: the
/// theorem, corollary, and lemma suites, the proof-identity grid, and the
/// monotonicity observation.
pub fn default_verify_checks() -> Vec<CheckId> {
    let mut checks = vec![
        CheckId::Rulc,
        CheckId::Lower,
        CheckId::FactorialLc,
        CheckId::Sandwich,
        CheckId::RatioUpper,
        CheckId::RatioLower,
        CheckId::RatioBoundary,
        CheckId::LemmaTf,
    ];
    checks.extend_from_slice(CheckId::identities());
    checks.push(CheckId::Mono);
    checks
}

/// Checks accepted by the `verify` command (conjecture and Bessel scans
/// have their own commands).
pub fn verify_check_set() -> Vec<CheckId> {
    let mut checks = default_verify_checks();
    checks.extend_from_slice(&[
        CheckId::RecLowering,
        CheckId::RecThreeRow,
        CheckId::CrossPath,
    ]);
    checks
}

/// Parse a comma-separated check list. `default`, `all`, and `identities`
/// expand to groups; unknown names are rejected before any computation.
pub fn parse_check_list(names: &str) -> Result<Vec<CheckId>, UsageError> {
    let allowed = verify_check_set();
    let mut checks: Vec<CheckId> = Vec::new();
    let push = |c: CheckId, checks: &mut Vec<CheckId>| {
        if !checks.contains(&c) {
            checks.push(c);
        }
    };
    for name in names.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        match name {
            "default" => {
                for c in default_verify_checks() {
                    push(c, &mut checks);
                }
            }
            "all" => {
                for &c in &allowed {
                    push(c, &mut checks);
                }
            }
            "identities" => {
                for &c in CheckId::identities() {
                    push(c, &mut checks);
                }
            }
            other => match CheckId::parse(other) {
                Some(c) if allowed.contains(&c) => push(c, &mut checks),
                _ => return Err(UsageError(format!("unknown check name {other:?}"))),
            },
        }
    }
    if checks.is_empty() {
        return Err(UsageError("empty check list".into()));
    }
    Ok(checks)
}

/// Run the selected checks over `m_min..=m_max`, producing one report.
pub fn run_checks(opts: &VerifyOptions, cache: &mut RowCache) -> Result<ScanReport, UsageError> {
    if opts.m_min < 2 || opts.m_min > opts.m_max {
        return Err(UsageError(format!(
            "verify requires 2 <= m_min <= m_max, got {}..{}",
            opts.m_min, opts.m_max
        )));
    }
    let want = |c: CheckId| opts.checks.contains(&c);
    let row_checks = [
        CheckId::Rulc,
        CheckId::Lower,
        CheckId::FactorialLc,
        CheckId::Sandwich,
    ];
    let ratio_checks = [
        CheckId::RatioUpper,
        CheckId::RatioLower,
        CheckId::RatioBoundary,
    ];
    let cell_identities = [
        CheckId::DeltaRulc,
        CheckId::DeltaLower,
        CheckId::G2H2,
        CheckId::Xy,
        CheckId::X2T,
        CheckId::X2Q,
        CheckId::RPos,
    ];
    let mut verdicts = Vec::new();
    for m in opts.m_min..=opts.m_max {
        if row_checks.iter().any(|&c| want(c)) {
            verdicts.extend(
                verify_row_inequalities(m, cache)?
                    .into_iter()
                    .filter(|v| want(v.check)),
            );
        }
        if ratio_checks.iter().any(|&c| want(c)) {
            verdicts.extend(
                verify_ratio_bounds(m, cache)
                    .into_iter()
                    .filter(|v| want(v.check)),
            );
        }
        if want(CheckId::LemmaTf) {
            verdicts.extend(verify_lemma_tf(m));
        }
        if cell_identities.iter().any(|&c| want(c)) {
            for i in 1..m {
                verdicts.extend(
                    verify_proof_identities(m, i)?
                        .into_iter()
                        .filter(|v| want(v.check)),
                );
            }
        }
        if want(CheckId::Uv) {
            verdicts.push(verify_identity_uv(m));
        }
        if want(CheckId::RecLowering) {
            let rowm = cache.row(m).clone();
            let rowm1 = cache.row(m + 1).clone();
            for i in 0..=m + 1 {
                let residual = residual_lowering(&rowm, &rowm1, i).expect("consecutive rows");
                verdicts.push(residual_verdict(CheckId::RecLowering, m, i, residual));
            }
        }
        if want(CheckId::RecThreeRow) {
            let rowm = cache.row(m).clone();
            let rowm1 = cache.row(m + 1).clone();
            let rowm2 = cache.row(m + 2).clone();
            for i in 0..=m + 2 {
                let residual =
                    residual_three_row(&rowm, &rowm1, &rowm2, i).expect("consecutive rows");
                verdicts.push(residual_verdict(CheckId::RecThreeRow, m, i, residual));
            }
        }
        if want(CheckId::CrossPath) {
            let closed = CoeffRow::closed_form(m);
            let rec = cache.row(m);
            let mismatch = closed
                .coeffs()
                .iter()
                .zip(rec.coeffs())
                .enumerate()
                .find(|(_, (a, b))| a != b);
            let verdict = match mismatch {
                None => CellVerdict {
                    check: CheckId::CrossPath,
                    m,
                    i: None,
                    pass: true,
                    strict: false,
                    vacuous: false,
                    lhs: None,
                    rhs: None,
                    margin_sign: 0,
                },
                Some((idx, (a, b))) => CellVerdict {
                    check: CheckId::CrossPath,
                    m,
                    i: Some(idx as u32),
                    pass: false,
                    strict: false,
                    vacuous: false,
                    lhs: Some(Value::from(a.clone())),
                    rhs: Some(Value::from(b.clone())),
                    margin_sign: cmp_to_sign(b.cmp(a)),
                },
            };
            verdicts.push(verdict);
        }
        if want(CheckId::Mono) {
            verdicts.extend(monotonicity_verdicts(m, cache)?);
        }
    }
    Ok(ScanReport::from_verdicts(
        ConfigEcho {
            command: "verify".into(),
            m_min: opts.m_min,
            m_max: opts.m_max,
            checks: opts.checks.iter().map(|c| c.name().to_string()).collect(),
            float_digits: opts.float_digits,
            cache_path: cache.path().map(|p| p.display().to_string()),
            conjecture_n: None,
        },
        verdicts,
    ))
}

fn residual_verdict(check: CheckId, m: u32, i: u32, residual: Rational) -> CellVerdict {
    let margin = -rational_sign(&residual);
    equality(
        check,
        m,
        Some(i),
        Value::from(residual),
        Value::from(Rational::zero()),
        margin,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_pass(verdicts: &[CellVerdict]) -> bool {
        verdicts.iter().all(|v| v.pass)
    }

    #[test]
    fn classify_examples() {
        // Bessel y_2 = [1, 3, 3]
        let class = classify_sequence(&[rat_int(1), rat_int(3), rat_int(3)], 2).unwrap();
        assert!(class.log_concave && class.reverse_ultra_lc && !class.ultra_lc);
        // row m=2
        let class = classify_sequence(&[rat(21, 8), rat(15, 4), rat(3, 2)], 2).unwrap();
        assert!(class.log_concave && class.reverse_ultra_lc && !class.ultra_lc);
        // constant sequence: 1*1*1 - 2*2*1 = -3 <= 0
        let class = classify_sequence(&[rat_int(1), rat_int(1), rat_int(1)], 2).unwrap();
        assert!(class.log_concave && class.reverse_ultra_lc && !class.ultra_lc);
        // length mismatch
        assert!(classify_sequence(&[rat_int(1)], 2).is_err());
        // negative entry
        assert!(classify_sequence(&[rat_int(1), rat_int(-1), rat_int(1)], 2).is_err());
    }

    #[test]
    fn row_inequalities_base_case() {
        let mut cache = RowCache::new();
        let verdicts = verify_row_inequalities(2, &mut cache).unwrap();
        assert_eq!(verdicts.len(), 4);
        assert!(all_pass(&verdicts));
        // c_1(2) = 25/7 sits strictly inside (3, 4); c/u = 25/28
        let rulc = verdicts.iter().find(|v| v.check == CheckId::Rulc).unwrap();
        assert_eq!(rulc.lhs.as_ref().unwrap().exact(), "25/7");
        assert_eq!(rulc.rhs.as_ref().unwrap().exact(), "4");
        let sandwich = verdicts
            .iter()
            .find(|v| v.check == CheckId::Sandwich)
            .unwrap();
        assert_eq!(sandwich.lhs.as_ref().unwrap().exact(), "3/4");
        assert_eq!(sandwich.rhs.as_ref().unwrap().exact(), "25/28");
        assert!(verify_row_inequalities(1, &mut cache).is_err());
    }

    #[test]
    fn row_inequalities_match_table_values() {
        let mut cache = RowCache::new();
        let rows = table_rows(8, &mut cache).unwrap();
        assert_eq!(rows[0].ratio.to_string(), "7700349223/8049762870");
        assert_eq!(crate::exact::render_decimal(&rows[0].ratio, 6), "0.956593");
        assert_eq!(crate::exact::render_decimal(&rows[6].ratio, 6), "0.992445");
    }

    #[test]
    fn ratio_bounds_base_case() {
        let mut cache = RowCache::new();
        let verdicts = verify_ratio_bounds(2, &mut cache);
        assert!(all_pass(&verdicts));
        // interior: 17/6 < 43/15 < (31+sqrt(13))/12
        let q = verdicts
            .iter()
            .find(|v| v.check == CheckId::RatioLower)
            .unwrap();
        assert_eq!(q.lhs.as_ref().unwrap().exact(), "17/6");
        assert_eq!(q.rhs.as_ref().unwrap().exact(), "43/15");
        let t = verdicts
            .iter()
            .find(|v| v.check == CheckId::RatioUpper)
            .unwrap();
        assert_eq!(t.rhs.as_ref().unwrap().exact(), "(31+sqrt(13))/12");
        // boundaries are exact equalities, flagged non-strict
        for v in verdicts
            .iter()
            .filter(|v| v.check == CheckId::RatioBoundary)
        {
            assert!(v.pass && !v.strict && v.margin_sign == 0);
        }
    }

    #[test]
    fn ratio_boundary_at_m_five() {
        let mut cache = RowCache::new();
        let verdicts = verify_ratio_bounds(5, &mut cache);
        let boundary: Vec<_> = verdicts
            .iter()
            .filter(|v| v.check == CheckId::RatioBoundary)
            .collect();
        assert_eq!(boundary.len(), 2);
        assert_eq!(boundary[1].rhs.as_ref().unwrap().exact(), "143/12");
        assert!(all_pass(&verdicts));
    }

    #[test]
    fn ratio_bounds_hold_up_to_sixty() {
        let mut cache = RowCache::new();
        for m in 2..=60 {
            assert!(all_pass(&verify_ratio_bounds(m, &mut cache)), "m={m}");
        }
    }

    #[test]
    fn lemma_tf_cells() {
        let verdicts = verify_lemma_tf(2);
        assert_eq!(verdicts.len(), 1);
        assert!(verdicts[0].pass && verdicts[0].strict);
        // decimal shadows of the exact verdict
        assert_eq!(verdicts[0].lhs.as_ref().unwrap().display(4), "2.8838");
        assert_eq!(verdicts[0].rhs.as_ref().unwrap().display(4), "2.8997");
        assert!(all_pass(&verify_lemma_tf(10)));
        for m in 2..=40 {
            assert!(all_pass(&verify_lemma_tf(m)), "m={m}");
        }
    }

    #[test]
    fn proof_identities_base_cell() {
        let verdicts = verify_proof_identities(2, 1).unwrap();
        assert_eq!(verdicts.len(), 7);
        assert!(all_pass(&verdicts));
        let delta = verdicts
            .iter()
            .find(|v| v.check == CheckId::DeltaRulc)
            .unwrap();
        assert_eq!(delta.lhs.as_ref().unwrap().exact(), "7488");
        let delta5 = verdicts
            .iter()
            .find(|v| v.check == CheckId::DeltaLower)
            .unwrap();
        assert_eq!(delta5.lhs.as_ref().unwrap().exact(), "5184");
        let x2q = verdicts.iter().find(|v| v.check == CheckId::X2Q).unwrap();
        assert_eq!(x2q.lhs.as_ref().unwrap().exact(), "17/6");
        assert!(verify_proof_identities(2, 0).is_err());
        assert!(verify_proof_identities(2, 2).is_err());
    }

    #[test]
    fn proof_identities_grid() {
        for m in 2..=20u32 {
            for i in 1..m {
                assert!(
                    all_pass(&verify_proof_identities(m, i).unwrap()),
                    "m={m} i={i}"
                );
            }
        }
    }

    #[test]
    fn uv_identity() {
        let v = verify_identity_uv(2);
        assert!(v.pass);
        assert_eq!(v.lhs.as_ref().unwrap().exact(), "14*sqrt(29)");
        assert_eq!(v.rhs.as_ref().unwrap().exact(), "74");
        for m in 1..=50 {
            assert!(verify_identity_uv(m).pass, "m={m}");
        }
    }

    #[test]
    fn bessel_rows_and_scan() {
        assert_eq!(bessel_row(1), vec![rat_int(1), rat_int(1)]);
        assert_eq!(bessel_row(2), vec![rat_int(1), rat_int(3), rat_int(3)]);
        assert_eq!(
            bessel_row(3),
            vec![rat_int(1), rat_int(6), rat_int(15), rat_int(15)]
        );
        let report = verify_bessel(20).unwrap();
        assert!(report.all_passed());
        assert_eq!(report.counts[&CheckId::Bessel].cells, 19);
        assert!(verify_bessel(1).is_err());
    }

    #[test]
    fn conjecture_scan_small() {
        let mut cache = RowCache::new();
        let report = scan_conjectures(2, 12, &mut cache, None).unwrap();
        assert!(report.all_passed());
        // m = 2..5 are vacuous for both conjectures
        assert_eq!(report.counts[&CheckId::Conj1].vacuous, 4);
        assert_eq!(report.counts[&CheckId::Conj2].vacuous, 4);
        // m = 6 contributes exactly one interior cell per conjecture
        let m6: Vec<_> = report
            .counts
            .iter()
            .map(|(c, n)| (c.name(), n.cells))
            .collect();
        assert_eq!(m6, vec![("conj1", 4 + 28), ("conj2", 4 + 28)]);
        assert_eq!(report.config.conjecture_n.as_deref(), Some("m-4"));
    }

    #[test]
    fn conjecture_scan_override_matches_default_at_m_minus_four() {
        let mut cache = RowCache::new();
        let default = scan_conjectures(9, 9, &mut cache, None).unwrap();
        let explicit = scan_conjectures(9, 9, &mut cache, Some(5)).unwrap();
        assert_eq!(
            default.counts[&CheckId::Conj2].passes,
            explicit.counts[&CheckId::Conj2].passes
        );
        assert_eq!(explicit.config.conjecture_n.as_deref(), Some("5"));
    }

    #[test]
    fn conjecture_matches_classifier_on_default_convention() {
        let mut cache = RowCache::new();
        for m in 6..=30u32 {
            let row = cache.row(m).clone();
            let seq: Vec<Rational> = (2..=m - 2)
                .map(|i| row.coeff(i + 1) * row.coeff(i - 1) / (row.coeff(i) * row.coeff(i)))
                .collect();
            let class = classify_sequence(&seq, m - 4).unwrap();
            let report = scan_conjectures(m, m, &mut cache, None).unwrap();
            assert_eq!(
                class.log_concave,
                report.counts[&CheckId::Conj1].failures == 0,
                "m={m}"
            );
            assert_eq!(
                class.reverse_ultra_lc,
                report.counts[&CheckId::Conj2].failures == 0,
                "m={m}"
            );
        }
    }

    #[test]
    fn monotonicity_observation() {
        let mut cache = RowCache::new();
        let report = monotonicity_report(8, &mut cache).unwrap();
        assert!(report.all_passed());
        assert_eq!(report.counts[&CheckId::Mono].cells, 6);
        let vac = monotonicity_report(2, &mut cache).unwrap();
        assert_eq!(vac.counts[&CheckId::Mono].vacuous, 1);
        assert!(vac.all_passed());
        let three = monotonicity_report(3, &mut cache).unwrap();
        assert_eq!(three.counts[&CheckId::Mono].cells, 1);
    }

    #[test]
    fn boros_moll_rows_classify_as_reverse_ulc() {
        let mut cache = RowCache::new();
        for m in 2..=30 {
            let class = classify_sequence(cache.row(m).coeffs(), m).unwrap();
            assert!(class.log_concave, "m={m}");
            assert!(class.reverse_ultra_lc, "m={m}");
            assert!(!class.ultra_lc, "m={m}");
        }
    }

    #[test]
    fn brute_force_reverse_ulc_agrees_with_central_ratio_route() {
        // Independent route: compare i(m-i) d_i^2 against (m-i+1)(i+1)
        // d_{i-1} d_{i+1} directly on row coefficients, no division.
        let mut cache = RowCache::new();
        for m in 2..=40u32 {
            let row = cache.row(m).clone();
            let verdicts = verify_row_inequalities(m, &mut cache).unwrap();
            for i in 1..m {
                let (mi, ii) = (i64::from(m), i64::from(i));
                let direct = rat_int(ii * (mi - ii)) * row.coeff(i) * row.coeff(i)
                    - rat_int((mi - ii + 1) * (ii + 1)) * row.coeff(i - 1) * row.coeff(i + 1);
                let brute_pass = direct.is_negative();
                let via_c = verdicts
                    .iter()
                    .find(|v| v.check == CheckId::Rulc && v.i == Some(i))
                    .unwrap();
                assert_eq!(brute_pass, via_c.pass, "m={m} i={i}");
            }
        }
    }

    #[test]
    fn run_checks_counts() {
        let mut cache = RowCache::new();
        let opts = VerifyOptions {
            m_min: 2,
            m_max: 10,
            checks: vec![
                CheckId::Rulc,
                CheckId::Lower,
                CheckId::RatioUpper,
                CheckId::RatioLower,
            ],
            float_digits: 6,
        };
        let report = run_checks(&opts, &mut cache).unwrap();
        assert!(report.all_passed());
        let expected: u64 = (2..=10u64).map(|m| m - 1).sum();
        for check in &opts.checks {
            assert_eq!(report.counts[check].cells, expected, "{}", check.name());
        }
        assert!(report.tallies_consistent());
    }

    #[test]
    fn run_checks_detects_corrupt_cache_rows() {
        let mut cache = RowCache::new();
        let good = cache.row(3).clone();
        let mut bad = good.coeffs().to_vec();
        bad[1] += rat_int(1);
        let mut corrupted = RowCache::new();
        corrupted.insert_for_tests(CoeffRow::from_parts(
            3,
            bad,
            crate::rows::RowSource::CacheFile,
        ));
        let opts = VerifyOptions {
            m_min: 2,
            m_max: 3,
            checks: vec![CheckId::RecLowering, CheckId::CrossPath],
            float_digits: 6,
        };
        let report = run_checks(&opts, &mut corrupted).unwrap();
        assert!(!report.all_passed());
        assert!(report
            .failures
            .iter()
            .any(|v| v.check == CheckId::CrossPath && v.m == 3));
    }

    #[test]
    fn recurrence_residual_checks_over_range() {
        let mut cache = RowCache::new();
        let opts = VerifyOptions {
            m_min: 2,
            m_max: 25,
            checks: vec![
                CheckId::RecLowering,
                CheckId::RecThreeRow,
                CheckId::CrossPath,
            ],
            float_digits: 6,
        };
        let report = run_checks(&opts, &mut cache).unwrap();
        assert!(report.all_passed());
        // lowering-residual cells per m: i = 0..=m+1
        let expected: u64 = (2..=25u64).map(|m| m + 2).sum();
        assert_eq!(report.counts[&CheckId::RecLowering].cells, expected);
    }

    #[test]
    fn run_checks_rejects_bad_range() {
        let mut cache = RowCache::new();
        let opts = VerifyOptions {
            m_min: 1,
            m_max: 5,
            checks: vec![CheckId::Rulc],
            float_digits: 6,
        };
        assert!(run_checks(&opts, &mut cache).is_err());
    }
}
