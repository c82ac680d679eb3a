//! Text output: locale-independent number formatting, 4-decimal truncation
//! (not rounding) for table comparison, scalar parsing for CLI arguments,
//! and the CSV emitters.

use crate::error::{Error, Result};
use crate::line::{TableRow, TradeoffPoint};
use crate::scalar::{int, pow_int, ratio, Scalar};

/// Truncates toward zero to the given number of decimals, with one guard:
/// values within 1e-5 decimal units of the truncation grid snap to it first,
/// so solver noise below a grid point (1.8999999999999997 for 1.9) cannot
/// flip a printed digit. Genuine half-grid values (0.09375) are far outside
/// the snap window and truncate as written.
pub fn truncate_decimals(value: f64, places: u32) -> String {
    let p10 = 10f64.powi(places as i32);
    let scaled = value * p10;
    if !(scaled.abs() < 9.0e15) {
        return format!("{value:.0$}", places as usize);
    }
    let nearest = scaled.round();
    let snapped = if (scaled - nearest).abs() < 1e-5 { nearest } else { scaled.trunc() };
    let q = snapped as i64;
    let sign = if q < 0 { "-" } else { "" };
    let div = 10i64.pow(places);
    let int_part = q.abs() / div;
    let frac = q.abs() % div;
    format!("{sign}{int_part}.{frac:00$}", places as usize)
}

/// Fixed 6-decimal formatting with −0.0 normalized to 0.0.
pub fn fmt6(value: f64) -> String {
    let v = if value == 0.0 { 0.0 } else { value };
    format!("{v:.6}")
}

/// Parses "17/12", "1.5", "-0.25", "1e-8", "2.5e3" into any scalar.
/// Decimal forms are parsed exactly (so rational mode gets true tenths,
/// not float approximations).
pub fn parse_scalar<T: Scalar>(text: &str) -> Result<T> {
    let s = text.trim();
    let bad = |msg: &str| Error::InvalidInput(format!("cannot parse {text:?} as a number: {msg}"));
    if s.is_empty() {
        return Err(bad("empty"));
    }
    if let Some((num, den)) = s.split_once('/') {
        let n: i64 = num.trim().parse().map_err(|_| bad("bad fraction numerator"))?;
        let d: i64 = den.trim().parse().map_err(|_| bad("bad fraction denominator"))?;
        if d == 0 {
            return Err(bad("zero denominator"));
        }
        return Ok(ratio(n, d));
    }
    let (mantissa_text, exp) = match s.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<i32>().map_err(|_| bad("bad exponent"))?),
        None => (s, 0),
    };
    let negative = mantissa_text.starts_with('-');
    let unsigned = mantissa_text.trim_start_matches(['+', '-']);
    let (int_part, frac_part) = unsigned.split_once('.').unwrap_or((unsigned, ""));
    let digits: String = format!("{int_part}{frac_part}");
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad("expected digits"));
    }
    if digits.len() > 18 {
        return Err(bad("more than 18 significant digits"));
    }
    let mut mantissa: i64 = digits.parse().map_err(|_| bad("bad mantissa"))?;
    if negative {
        mantissa = -mantissa;
    }
    let scale = exp - frac_part.len() as i32;
    let base: T = int(mantissa);
    let shift = pow_int(&int::<T>(10), scale.unsigned_abs() as usize);
    Ok(if scale >= 0 { base * shift } else { base / shift })
}

/// λ/strategy/dual convergence table. One comment line per failed row.
pub fn table1_csv(rows: &[(usize, Result<TableRow>)]) -> String {
    let mut out = String::from("n,lambda,lambda_trunc,x1,x2,x3,x4,x5,y1,y2,y3,y4,y5\n");
    for (n, row) in rows {
        match row {
            Ok(r) => {
                out.push_str(&format!("{},{},{}", r.n, fmt6(r.lambda), r.lambda_truncated));
                for i in 0..5 {
                    out.push(',');
                    if let Some(cell) = r.xs_truncated.get(i) {
                        out.push_str(cell);
                    }
                }
                for i in 0..5 {
                    out.push(',');
                    if let Some(cell) = r.ys_truncated.get(i) {
                        out.push_str(cell);
                    }
                }
                out.push('\n');
            }
            Err(e) => out.push_str(&format!("# n={n} error: {e}\n")),
        }
    }
    out
}

pub fn tradeoff_csv<T: Scalar>(points: &[TradeoffPoint<T>]) -> String {
    let mut out = String::from("c,n,lower_bound,extrapolated\n");
    for p in points {
        out.push_str(&format!(
            "{},{},{},{}\n",
            fmt6(p.c.to_f64()),
            p.n,
            fmt6(p.lower_bound.to_f64()),
            fmt6(p.extrapolated.to_f64())
        ));
    }
    out
}

/// One LP-convergence record for a ray count: λ_n, its Richardson estimate,
/// and the closed-form limit M − m.
#[derive(Clone, Debug, PartialEq)]
pub struct StarConvergenceRow {
    pub m: usize,
    pub n: usize,
    pub lambda: f64,
    pub extrapolated: f64,
    pub limit: f64,
}

pub fn star_convergence_csv(rows: &[StarConvergenceRow]) -> String {
    let mut out = String::from("m,n,lambda,extrapolated,limit\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            r.m,
            r.n,
            fmt6(r.lambda),
            fmt6(r.extrapolated),
            fmt6(r.limit)
        ));
    }
    out
}

/// Dual values as (index, shortest-round-trip decimal, exact fraction).
/// The exact column is empty in float mode.
pub fn dual_sequence_csv<T: Scalar>(values: &[T]) -> String {
    let mut out = String::from("j,y,exact\n");
    for (idx, v) in values.iter().enumerate() {
        let exact = v.exact_string().unwrap_or_default();
        out.push_str(&format!("{},{},{}\n", idx + 1, v.to_f64(), exact));
    }
    out
}
