//! Floating-point cross-check of the quartic-integral identity
//! `int_0^inf dx/(x^4+2ax^2+1)^(m+1) = pi * P_m(a) / (2^(m+3/2) (a+1)^(m+1/2))`.
//!
//! The left side is integrated numerically with the substitution
//! `x = t/(1-t)`, which maps `[0, inf)` to `[0, 1)` and keeps the integrand
//! smooth (it decays like `x^(-4(m+1))`), using adaptive Simpson refinement.
//! The right side evaluates the exact coefficient row in double precision.
//! This is an oracle for the row pipeline only; no exact verdict ever
//! consumes a floating-point value.

use num_traits::ToPrimitive;

use crate::rows::RowCache;
use crate::UsageError;

/// Quadrature controls. Defaults: 1e-10 internal tolerance, depth 48.
#[derive(Debug, Clone)]
pub struct QuadratureConfig {
    pub abs_tol: f64,
    pub max_depth: u32,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        QuadratureConfig {
            abs_tol: 1e-10,
            max_depth: 48,
        }
    }
}

/// Outcome of one integral cross-check.
#[derive(Debug, Clone)]
pub struct IntegralCheck {
    pub m: u32,
    pub a: f64,
    /// Adaptive-quadrature estimate of the integral.
    pub quadrature: f64,
    /// Closed form `pi * P_m(a) / (2^(m+3/2) (a+1)^(m+1/2))`.
    pub closed_form: f64,
    /// Relative difference between the two.
    pub residual: f64,
    pub evaluations: u64,
    /// False when refinement hit the depth limit somewhere; the result is
    /// then reported as inconclusive rather than as a failure.
    pub converged: bool,
}

/// Evaluate `P_m(a)` in double precision from the exact row.
pub fn polynomial_value(m: u32, a: f64, cache: &mut RowCache) -> f64 {
    let row = cache.row(m);
    row.coeffs()
        .iter()
        .rev()
        .fold(0.0, |acc, c| acc * a + c.to_f64().unwrap_or(f64::NAN))
}

/// Run the cross-check at `(m, a)`. Requires `a > -1` so the closed form
/// (and the integrand's denominator) stays positive.
pub fn integral_residual(
    m: u32,
    a: f64,
    config: &QuadratureConfig,
    cache: &mut RowCache,
) -> Result<IntegralCheck, UsageError> {
    if !a.is_finite() || a <= -1.0 {
        return Err(UsageError(format!(
            "integral_residual requires finite a > -1, got a={a}"
        )));
    }
    let power = -(f64::from(m) + 1.0);
    let integrand = |t: f64| -> f64 {
        if t >= 1.0 {
            return 0.0;
        }
        let x = t / (1.0 - t);
        let x2 = x * x;
        (x2 * x2 + 2.0 * a * x2 + 1.0).powf(power) / ((1.0 - t) * (1.0 - t))
    };

    let mut state = SimpsonState {
        evaluations: 0,
        converged: true,
        max_depth: config.max_depth,
    };
    let quadrature = adaptive_simpson(&integrand, 0.0, 1.0, config.abs_tol, &mut state);

    let p = polynomial_value(m, a, cache);
    let closed_form = std::f64::consts::PI * p
        / (2f64.powf(f64::from(m) + 1.5) * (a + 1.0).powf(f64::from(m) + 0.5));
    let residual = (quadrature - closed_form).abs() / closed_form.abs();
    Ok(IntegralCheck {
        m,
        a,
        quadrature,
        closed_form,
        residual,
        evaluations: state.evaluations,
        converged: state.converged,
    })
}

struct SimpsonState {
    evaluations: u64,
    converged: bool,
    max_depth: u32,
}

fn adaptive_simpson(
    f: &dyn Fn(f64) -> f64,
    a: f64,
    b: f64,
    tol: f64,
    state: &mut SimpsonState,
) -> f64 {
    let fa = f(a);
    let fm = f(0.5 * (a + b));
    let fb = f(b);
    state.evaluations += 3;
    let whole = simpson(a, b, fa, fm, fb);
    refine(f, a, b, fa, fm, fb, whole, tol, state.max_depth, state)
}

fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

#[allow(clippy::too_many_arguments)]
fn refine(
    f: &dyn Fn(f64) -> f64,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
    state: &mut SimpsonState,
) -> f64 {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    state.evaluations += 2;
    let left = simpson(a, m, fa, flm, fm);
    let right = simpson(m, b, fm, frm, fb);
    let delta = left + right - whole;
    if delta.abs() <= 15.0 * tol {
        return left + right + delta / 15.0;
    }
    if depth == 0 {
        state.converged = false;
        return left + right + delta / 15.0;
    }
    refine(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1, state)
        + refine(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1, state)
}
