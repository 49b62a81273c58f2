//! Exact JSON encodings: rationals as numerator/denominator pairs, polynomials as
//! term lists, matrices as sparse triplets.

use detsing_core::{PolyMatrix, QMatrix, Rational, RingContext, SparsePoly};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

/// Small integers as JSON numbers, anything larger as a decimal string.
pub fn int(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(v) => json!(v),
        None => Value::String(n.to_string()),
    }
}

pub fn rational(q: &Rational) -> Value {
    json!({ "num": int(q.numer()), "den": int(q.denom()) })
}

pub fn variable_name(i: usize, j: usize) -> String {
    if i >= 10 || j >= 10 {
        format!("x_{i}_{j}")
    } else {
        format!("x_{i}{j}")
    }
}

/// `[{coeff_num, coeff_den, exponents: {"x_ij": e}}]`, in monomial order.
pub fn poly(ctx: &RingContext, p: &SparsePoly) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .map(|(mono, c)| {
            let mut exps = Map::new();
            for (v, &e) in mono.exponents().iter().enumerate() {
                if e > 0 {
                    let (i, j) = ctx.var_indices(v);
                    exps.insert(variable_name(i, j), json!(e));
                }
            }
            json!({ "coeff_num": int(c.numer()), "coeff_den": int(c.denom()), "exponents": exps })
        })
        .collect();
    Value::Array(terms)
}

/// `{rows, cols, entries: [[row, col, poly]]}` with 0-based indices.
pub fn poly_matrix(mat: &PolyMatrix) -> Value {
    let ctx = mat.ctx();
    let entries: Vec<Value> = mat.triplets().into_iter().map(|(r, c, p)| json!([r, c, poly(&ctx, p)])).collect();
    json!({ "rows": mat.rows(), "cols": mat.cols(), "entries": entries })
}

pub fn q_matrix(mat: &QMatrix) -> Value {
    let mut entries = Vec::new();
    for r in 0..mat.rows() {
        for c in 0..mat.cols() {
            let v = mat.get(r, c);
            if !num_traits::Zero::is_zero(v) {
                entries.push(json!([r, c, rational(v)]));
            }
        }
    }
    json!({ "rows": mat.rows(), "cols": mat.cols(), "entries": entries })
}

/// The common envelope `{params, rows, provenance}`.
pub fn table(params: Value, rows: Vec<Value>, provenance: &str) -> Value {
    json!({ "params": params, "rows": rows, "provenance": { "source": provenance } })
}
