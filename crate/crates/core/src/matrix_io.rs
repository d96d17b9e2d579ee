//! JSON matrix format: row-major arrays of `[re, im]` pairs.
//!
//! Accepted shapes are nested (`[[[re, im], ...], ...]`) or flat
//! (`[[re, im], ...]` with 4 or 16 entries). A bare number is read as a real
//! entry.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::matcore::{Complex64, Mat2, Mat4, Unitary2, Unitary4};

fn entry(v: &Value) -> Result<Complex64> {
    let num = |x: &Value| {
        x.as_f64()
            .ok_or_else(|| Error::MatrixFormat(format!("expected a number, got {x}")))
    };
    match v {
        Value::Number(_) => Ok(Complex64::new(num(v)?, 0.0)),
        Value::Array(pair) if pair.len() == 2 => Ok(Complex64::new(num(&pair[0])?, num(&pair[1])?)),
        _ => Err(Error::MatrixFormat(format!("expected [re, im], got {v}"))),
    }
}

/// Parses a square matrix; returns its dimension and row-major entries.
pub fn parse_entries(v: &Value) -> Result<(usize, Vec<Complex64>)> {
    let rows = v
        .as_array()
        .ok_or_else(|| Error::MatrixFormat("matrix must be a JSON array".into()))?;
    let nested = rows
        .first()
        .and_then(Value::as_array)
        .is_some_and(|r| r.first().is_some_and(Value::is_array));
    let flat: Vec<&Value> = if nested {
        let n = rows.len();
        let mut out = Vec::with_capacity(n * n);
        for r in rows {
            let r = r
                .as_array()
                .filter(|r| r.len() == n)
                .ok_or_else(|| Error::MatrixFormat(format!("every row must have {n} entries")))?;
            out.extend(r);
        }
        out
    } else {
        rows.iter().collect()
    };
    let dim = match flat.len() {
        4 => 2,
        16 => 4,
        k => return Err(Error::MatrixFormat(format!("expected 2x2 or 4x4, got {k} entries"))),
    };
    let entries = flat.into_iter().map(entry).collect::<Result<Vec<_>>>()?;
    if entries.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(Error::NonFinite);
    }
    Ok((dim, entries))
}

fn parse_text(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| Error::MatrixFormat(e.to_string()))
}

pub fn unitary4_from_value(v: &Value, unitarity_tol: f64) -> Result<Unitary4> {
    match parse_entries(v)? {
        (4, e) => Unitary4::new(Mat4::from_row_slice(&e), unitarity_tol),
        (d, _) => Err(Error::MatrixFormat(format!("expected 4x4, got {d}x{d}"))),
    }
}

pub fn unitary2_from_value(v: &Value, unitarity_tol: f64) -> Result<Unitary2> {
    match parse_entries(v)? {
        (2, e) => Unitary2::new(Mat2::from_row_slice(&e), unitarity_tol),
        (d, _) => Err(Error::MatrixFormat(format!("expected 2x2, got {d}x{d}"))),
    }
}

pub fn parse_unitary4(text: &str, unitarity_tol: f64) -> Result<Unitary4> {
    unitary4_from_value(&parse_text(text)?, unitarity_tol)
}

pub fn parse_unitary2(text: &str, unitarity_tol: f64) -> Result<Unitary2> {
    unitary2_from_value(&parse_text(text)?, unitarity_tol)
}

fn rows_value<const N: usize>(rows: [[Complex64; N]; N]) -> Value {
    Value::Array(
        rows.iter()
            .map(|r| Value::Array(r.iter().map(|z| json!([z.re, z.im])).collect()))
            .collect(),
    )
}

/// Nested row-major form.
pub fn unitary4_to_value(u: &Unitary4) -> Value {
    rows_value(u.rows())
}

pub fn unitary2_to_value(u: &Unitary2) -> Value {
    rows_value(u.rows())
}
