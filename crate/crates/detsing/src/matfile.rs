//! Matrix input files: one row per line, entries `p/q` or integers separated by
//! whitespace or commas; `#` starts a comment. A JSON array of rows is also accepted.

use std::str::FromStr;

use detsing_core::{Error, QMatrix, Rational};
use num_bigint::BigInt;
use serde_json::Value;

pub fn parse_rational(tok: &str) -> Result<Rational, Error> {
    let bad = || Error::Parse(format!("not a rational number: {tok:?}"));
    let (num, den) = match tok.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (tok.trim(), "1"),
    };
    let p = BigInt::from_str(num).map_err(|_| bad())?;
    let q = BigInt::from_str(den).map_err(|_| bad())?;
    if q == BigInt::from(0) {
        return Err(Error::Parse(format!("zero denominator in {tok:?}")));
    }
    Ok(Rational::new(p, q))
}

fn from_rows(rows: Vec<Vec<Rational>>) -> Result<QMatrix, Error> {
    if let Some(first) = rows.first() {
        let w = first.len();
        if let Some((k, _)) = rows.iter().enumerate().find(|(_, r)| r.len() != w) {
            return Err(Error::Parse(format!("row {} has {} entries, expected {w}", k + 1, rows[k].len())));
        }
    }
    Ok(QMatrix::from_rows(rows))
}

fn json_entry(v: &Value) -> Result<Rational, Error> {
    match v {
        Value::Number(n) => parse_rational(&n.to_string()),
        Value::String(s) => parse_rational(s),
        other => Err(Error::Parse(format!("unexpected matrix entry {other}"))),
    }
}

pub fn parse_matrix(text: &str) -> Result<QMatrix, Error> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('[') {
        let value: Value = serde_json::from_str(trimmed).map_err(|e| Error::Parse(e.to_string()))?;
        let Value::Array(rows) = value else { unreachable!("starts with '['") };
        let rows = rows
            .iter()
            .map(|row| match row {
                Value::Array(entries) => entries.iter().map(json_entry).collect(),
                other => Err(Error::Parse(format!("expected a row array, got {other}"))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        return from_rows(rows);
    }
    let rows = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .map(|l| l.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()).map(parse_rational).collect())
        .collect::<Result<Vec<_>, _>>()?;
    from_rows(rows)
}
