//! Browser-facing operations over the `clf-core` sequences.
//!
//! Every export returns a JSON string so the page needs no generated
//! TypeScript types; big integers travel as decimal strings.

use clf_core::exact_arith::{frac, ord_int, Rational};
use clf_core::sequences::{clf_p, clf_s, franel, log_convexity, SequenceId};
use clf_core::theorem_checks::check_thm_3_1;
use num_traits::ToPrimitive;
use serde::Serialize;
use wasm_bindgen::prelude::wasm_bindgen;

/// Largest index the page may request; keeps a stray input from freezing the tab.
pub const INDEX_LIMIT: u32 = 2000;

fn bounded(n: u32) -> Result<usize, String> {
    if n > INDEX_LIMIT {
        return Err(format!("index {n} exceeds the page limit {INDEX_LIMIT}"));
    }
    Ok(n as usize)
}

#[derive(Serialize)]
struct Term {
    n: usize,
    value: String,
    digits: usize,
}

/// Terms `0..=n_max` of `P`, `S` or `F`.
#[wasm_bindgen]
pub fn sequence_table(id: &str, n_max: u32) -> Result<String, String> {
    let id: SequenceId = id.parse()?;
    let n_max = bounded(n_max)?;
    let rows: Vec<Term> = (0..=n_max)
        .map(|n| {
            let v = match id {
                SequenceId::P => clf_p(n),
                SequenceId::S => clf_s(n),
                SequenceId::F => franel(n),
            }
            .map_err(|e| e.to_string())?;
            let value = v.to_string();
            let digits = value.trim_start_matches('-').len();
            Ok(Term { n, value, digits })
        })
        .collect::<Result<_, String>>()?;
    serde_json::to_string(&rows).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct GridCell {
    n: u64,
    required: i64,
    achieved: String,
    ord_s_n: String,
    holds: bool,
}

/// `ord_p(S_{np} − S_n)` against the required exponent, for `n = 1..=n_max`.
#[wasm_bindgen]
pub fn valuation_grid(p: u32, n_max: u32) -> Result<String, String> {
    bounded(n_max.saturating_mul(p).saturating_add(1))?;
    let p = u64::from(p);
    let cells: Vec<GridCell> = (1..=u64::from(n_max))
        .map(|n| {
            let o = check_thm_3_1(n, p).map_err(|e| e.to_string())?;
            let s_n = clf_s(n as usize).map_err(|e| e.to_string())?;
            Ok(GridCell {
                n,
                required: o.required_valuation,
                achieved: o.achieved_valuation.to_string(),
                ord_s_n: ord_int(&s_n, p).map_err(|e| e.to_string())?.to_string(),
                holds: o.holds,
            })
        })
        .collect::<Result<_, String>>()?;
    serde_json::to_string(&cells).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct CurvePoint {
    m: usize,
    /// `(S_{m+1} S_{m−1} / S_m^2 − 1) · m(m−1)`, strictly inside (0, 1).
    scaled_gap: f64,
    lower_strict: bool,
    upper_strict: bool,
}

/// The normalized log-convexity gap for `m = 2..=m_max`.
#[wasm_bindgen]
pub fn log_convexity_curve(m_max: u32) -> Result<String, String> {
    let m_max = bounded(m_max)?;
    let points: Vec<CurvePoint> = (2..=m_max)
        .map(|m| {
            let err = |e: clf_core::Error| e.to_string();
            let bounds = log_convexity(m).map_err(err)?;
            let ratio = Rational::new(
                clf_s(m + 1).map_err(err)? * clf_s(m - 1).map_err(err)?,
                clf_s(m).map_err(err)?.pow(2),
            );
            let scaled = (ratio - frac(1, 1)) * frac((m * (m - 1)) as u64, 1);
            Ok(CurvePoint {
                m,
                scaled_gap: scaled.to_f64().unwrap_or(f64::NAN),
                lower_strict: bounds.lower_strict,
                upper_strict: bounds.upper_strict,
            })
        })
        .collect::<Result<_, String>>()?;
    serde_json::to_string(&points).map_err(|e| e.to_string())
}
