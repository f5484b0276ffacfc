//! Matrix-direct input: a JSON document
//!
//! ```json
//! { "n": 2, "A": [["3", "-2"], ["4", "-1"]], "f": ["3", "-1"], "b": "0", "c": ["0", "0"] }
//! ```
//!
//! `A` may also be a flat row-major array. Entries are integers or strings
//! `p` / `p/q`. `b` and `c` default to zero.

use serde_json::Value;

use super::system::AffineSystem;
use crate::arith::{parse_rational, Rational};
use crate::error::{Error, Result};
use crate::matrix::QMatrix;

pub fn parse_matrix_document(text: &str) -> Result<AffineSystem> {
    let doc: Value = serde_json::from_str(text).map_err(|e| bad(format!("invalid JSON: {e}")))?;
    let obj = doc
        .as_object()
        .ok_or_else(|| bad("expected a JSON object".into()))?;
    let n = obj
        .get("n")
        .and_then(Value::as_u64)
        .ok_or_else(|| bad("missing positive integer field `n`".into()))? as usize;
    if n == 0 {
        return Err(bad("`n` must be positive".into()));
    }

    let a_val = obj
        .get("A")
        .ok_or_else(|| bad("missing field `A`".into()))?;
    let a_arr = a_val
        .as_array()
        .ok_or_else(|| bad("`A` must be an array".into()))?;
    let entries: Vec<Rational> = if a_arr.iter().all(Value::is_array) {
        if a_arr.len() != n {
            return Err(bad(format!("`A` has {} rows, expected {n}", a_arr.len())));
        }
        let mut out = Vec::with_capacity(n * n);
        for (i, row) in a_arr.iter().enumerate() {
            let row = vector(row, &format!("A[{i}]"))?;
            if row.len() != n {
                return Err(bad(format!(
                    "`A[{i}]` has {} entries, expected {n}",
                    row.len()
                )));
            }
            out.extend(row);
        }
        out
    } else {
        let flat = vector(a_val, "A")?;
        if flat.len() != n * n {
            return Err(bad(format!(
                "`A` has {} entries, expected {}",
                flat.len(),
                n * n
            )));
        }
        flat
    };

    let f = vector(
        obj.get("f")
            .ok_or_else(|| bad("missing field `f`".into()))?,
        "f",
    )?;
    if f.len() != n {
        return Err(bad(format!("`f` has {} entries, expected {n}", f.len())));
    }
    let b = match obj.get("b") {
        None | Some(Value::Null) => Rational::from_integer(0.into()),
        Some(v) => scalar(v, "b")?,
    };
    let c = match obj.get("c") {
        None | Some(Value::Null) => vec![Rational::from_integer(0.into()); n],
        Some(v) => {
            let c = vector(v, "c")?;
            if c.len() != n {
                return Err(bad(format!("`c` has {} entries, expected {n}", c.len())));
            }
            c
        }
    };
    Ok(AffineSystem {
        variables: (1..=n).map(|i| format!("x{i}")).collect(),
        a: QMatrix::new(n, n, entries),
        c,
        f: QMatrix::new(1, n, f),
        b: vec![b],
        strict: vec![true],
    })
}

fn bad(message: String) -> Error {
    Error::MatrixDocument(message)
}

fn scalar(v: &Value, what: &str) -> Result<Rational> {
    match v {
        Value::String(s) => parse_rational(s).map_err(|e| bad(format!("`{what}`: {e}"))),
        Value::Number(num) => match num.as_i64() {
            Some(i) => Ok(Rational::from_integer(i.into())),
            None => Err(bad(format!(
                "`{what}`: {num} is not an integer; write non-integers as \"p/q\" strings"
            ))),
        },
        _ => Err(bad(format!("`{what}` must be a number or string"))),
    }
}

fn vector(v: &Value, what: &str) -> Result<Vec<Rational>> {
    v.as_array()
        .ok_or_else(|| bad(format!("`{what}` must be an array")))?
        .iter()
        .enumerate()
        .map(|(i, e)| scalar(e, &format!("{what}[{i}]")))
        .collect()
}
