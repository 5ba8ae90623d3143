//! Browser bindings for the demo page in `www/`.
//!
//! Three operations, each returning a JSON string the page renders
//! directly: one coefficient row with its sequence classification, the
//! `c_i(m)/u_i(m)` ratio table with its bracket, and an exact verification
//! scan over an m-range. All verdicts are exact; the `plot` fields are
//! `f64` shadows for drawing only.

use wasm_bindgen::prelude::wasm_bindgen;

use bmoll::exact::{rational_to_f64, render_decimal};
use bmoll::rows::RowCache;
use bmoll::verify;

const MAX_ROW_M: u32 = 400;
const MAX_VERIFY_M: u32 = 200;

fn error_json(msg: &str) -> String {
    serde_json::json!({ "error": msg }).to_string()
}

/// Exact coefficient row `d_0(m)..d_m(m)` plus its classification.
#[wasm_bindgen]
pub fn coeff_row(m: u32) -> String {
    if m > MAX_ROW_M {
        return error_json(&format!("m must be at most {MAX_ROW_M}"));
    }
    let mut cache = RowCache::new();
    let row = cache.row(m).clone();
    let class = match verify::classify_sequence(row.coeffs(), m) {
        Ok(c) => c,
        Err(e) => return error_json(&e.to_string()),
    };
    let coefficients: Vec<serde_json::Value> = row
        .coeffs()
        .iter()
        .enumerate()
        .map(|(i, c)| {
            serde_json::json!({
                "i": i,
                "numerator": c.numer().to_string(),
                "denominator": c.denom().to_string(),
                "display": render_decimal(c, 6),
                "plot": rational_to_f64(c),
            })
        })
        .collect();
    serde_json::json!({
        "m": m,
        "coefficients": coefficients,
        "classification": {
            "log_concave": class.log_concave,
            "ultra_lc": class.ultra_lc,
            "reverse_ultra_lc": class.reverse_ultra_lc,
        },
    })
    .to_string()
}

/// The `c_i(m)/u_i(m)` table with the exact sandwich bracket
/// `(m+i)/(m+i+1) < c_i/u_i < 1` and the monotonicity observation.
#[wasm_bindgen]
pub fn ratio_table(m: u32, digits: u32) -> String {
    if !(2..=MAX_ROW_M).contains(&m) {
        return error_json(&format!("m must be in 2..={MAX_ROW_M}"));
    }
    let digits = digits.clamp(1, 30);
    let mut cache = RowCache::new();
    let rows = match verify::table_rows(m, &mut cache) {
        Ok(r) => r,
        Err(e) => return error_json(&e.to_string()),
    };
    let mono = match verify::monotonicity_verdicts(m, &mut cache) {
        Ok(v) => v,
        Err(e) => return error_json(&e.to_string()),
    };
    let table: Vec<serde_json::Value> = rows
        .iter()
        .map(|row| {
            let (mi, ii) = (f64::from(m), f64::from(row.i));
            serde_json::json!({
                "i": row.i,
                "display": render_decimal(&row.ratio, digits),
                "plot": rational_to_f64(&row.ratio),
                "bracket_low": (mi + ii) / (mi + ii + 1.0),
            })
        })
        .collect();
    serde_json::json!({
        "m": m,
        "rows": table,
        "strictly_increasing": mono.iter().all(|v| v.pass),
    })
    .to_string()
}

/// Run exact verification checks over `m_min..=m_max` and return the full
/// scan report (summary, failures with exact witnesses, findings).
#[wasm_bindgen]
pub fn verify_range(m_min: u32, m_max: u32, checks: &str) -> String {
    if m_max > MAX_VERIFY_M {
        return error_json(&format!("m_max must be at most {MAX_VERIFY_M}"));
    }
    let checks = match verify::parse_check_list(checks) {
        Ok(c) => c,
        Err(e) => return error_json(&e.to_string()),
    };
    let mut cache = RowCache::new();
    let opts = verify::VerifyOptions {
        m_min,
        m_max,
        checks,
        float_digits: 6,
    };
    match verify::run_checks(&opts, &mut cache) {
        Ok(report) => report.to_json(),
        Err(e) => error_json(&e.to_string()),
    }
}
