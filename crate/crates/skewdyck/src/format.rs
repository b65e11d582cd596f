//! Text and JSON renderings of exact values.
//!
//! Numbers are written as decimal strings (`"3852"`, or `"p/q"` for a
//! non-integral rational) so JSON consumers never see a rounded float.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;
use serde_json::Value;

use skewdyck_core::{TPoly, ZSeries};

pub fn rational_string(q: &BigRational) -> String {
    if q.is_integer() {
        q.to_integer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn tpoly_strings(p: &TPoly<BigRational>) -> Vec<String> {
    if p.coeffs().is_empty() {
        return vec!["0".into()];
    }
    p.coeffs().iter().map(rational_string).collect()
}

pub fn int_tpoly_strings(p: &TPoly<BigInt>) -> Vec<String> {
    if p.coeffs().is_empty() {
        return vec!["0".into()];
    }
    p.coeffs().iter().map(BigInt::to_string).collect()
}

/// `["1", "1", "2", ...]`.
pub fn series_json(s: &ZSeries<BigRational>) -> Value {
    Value::Array(
        s.coeffs()
            .iter()
            .map(|c| Value::String(rational_string(c)))
            .collect(),
    )
}

/// One array of `t`-coefficient strings per power of `z`.
pub fn track_series_json(s: &ZSeries<TPoly<BigRational>>) -> Value {
    Value::Array(
        s.coeffs()
            .iter()
            .map(|p| Value::Array(tpoly_strings(p).into_iter().map(Value::String).collect()))
            .collect(),
    )
}

pub fn sequence_json(seq: &[BigInt]) -> Value {
    Value::Array(seq.iter().map(|c| Value::String(c.to_string())).collect())
}

/// Payload of the sequence-producing subcommands.
#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct SequencePayload {
    pub sequence: Value,
    /// `"z"` for full length, `"z(half)"` for half-length.
    pub variable: &'static str,
    pub t_mode: String,
}

/// Space-separated coefficients.
pub fn series_text(s: &ZSeries<BigRational>) -> String {
    s.coeffs()
        .iter()
        .map(rational_string)
        .collect::<Vec<_>>()
        .join(" ")
}

/// One line per power of `z`, each the space-separated `t` coefficients.
pub fn track_series_text(s: &ZSeries<TPoly<BigRational>>) -> String {
    s.coeffs()
        .iter()
        .map(|p| tpoly_strings(p).join(" "))
        .collect::<Vec<_>>()
        .join("\n")
}

/// `d.dddddde+N` from a natural logarithm; works far past `f64` range.
pub fn scientific_from_ln(ln: f64) -> String {
    let log10 = ln / std::f64::consts::LN_10;
    let mut exponent = log10.floor();
    let mut mantissa = 10f64.powf(log10 - exponent);
    if mantissa >= 9.999_999_5 {
        mantissa /= 10.0;
        exponent += 1.0;
    }
    format!("{mantissa:.6}e{}", exponent as i64)
}
